/*
 Copyright 2026 The birkhoff-lab Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

#include "birkhoff/core.hpp"

#include <functional>
#include <map>
#include <random>

namespace fx {

using namespace birkhoff;

inline Sft full2() { return Sft::full_shift(2); }
inline Sft golden() { return Sft::validate(2, {{1, 1}, {1, 0}}); }
// 0->0,1; 1->1,2; 2->0,2
inline Sft cyclic3() { return Sft::validate(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}); }

inline std::vector<std::vector<int>> matrix(const Sft& s) { return s.transitions(); }

// x0 + x1 - 1 on the full 2-shift.
inline Observable shift32() {
    return Observable::exact_from(full2(), 2, [](std::string_view w) {
        return FieldValue((w[0] - '0') + (w[1] - '0') - 1);
    });
}

inline FieldValue alpha() { return FieldValue::alpha(2); }

inline Rational small_rational(std::mt19937_64& rng, int num = 6, int den = 4) {
    std::uniform_int_distribution<int> n(-num, num), d(1, den);
    Rational q(n(rng), d(rng));
    q.canonicalize();
    return q;
}

inline FieldValue small_field(std::mt19937_64& rng, bool irrational = true) {
    Rational r = small_rational(rng);
    Rational s = irrational ? small_rational(rng, 3, 3) : Rational(0);
    return FieldValue(r, s, 2);
}

inline std::map<Word, FieldValue> random_table(const Sft& sft, int window, std::mt19937_64& rng, bool irrational) {
    std::map<Word, FieldValue> t;
    for (const auto& w : sft.admissible_words(window)) t.emplace(w, small_field(rng, irrational));
    return t;
}

inline Observable random_observable(const Sft& sft, int window, std::mt19937_64& rng, bool irrational = true) {
    return Observable::exact(sft, window, random_table(sft, window, rng, irrational));
}

/// u o sigma - u for a potential on words of length window-1 (window >= 2).
inline Observable coboundary(const Sft& sft, int window, const std::map<Word, FieldValue>& u) {
    return Observable::exact_from(sft, window, [&](std::string_view w) {
        return u.at(Word(w.substr(1))) - u.at(Word(w.substr(0, w.size() - 1)));
    });
}

inline std::map<Word, FieldValue> random_potential(const Sft& sft, int len, std::mt19937_64& rng) {
    return random_table(sft, len, rng, true);
}

}  // namespace fx
