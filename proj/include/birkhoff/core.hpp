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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace birkhoff {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorCode {
    InvalidInput,
    NotStronglyConnected,
    DeadSymbol,
    DivisionByZero,
    BudgetExceeded,
    IrrationalRatio,
    NotFound,
    PreconditionFailed,
    StabilizationNotReached,
    NonPositiveRoof,
    CoverageGap,
    NoDistinctAverages,
    IoFailure,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);  // always "p/q"

/// Exact element r + s*sqrt(D) of the real quadratic field Q(sqrt D).
///
/// D is square-free and >= 2, so sqrt(D) is irrational and every equality,
/// ordering and rationality question on these values is decidable. Values
/// with s == 0 are compatible with any radicand; two values with nonzero
/// irrational parts must share D.
class FieldValue {
public:
    static constexpr std::uint32_t kDefaultRadicand = 2;

    FieldValue() = default;
    FieldValue(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
    FieldValue(int v) : rat_(v) {}   // NOLINT(google-explicit-constructor)
    FieldValue(Rational rat, Rational irr = 0,
               std::uint32_t radicand = kDefaultRadicand);

    /// sqrt(D) itself.
    static FieldValue alpha(std::uint32_t radicand = kDefaultRadicand);

    /// Parses "p/q+r/s*a" and the relaxed forms "p/q", "r/s*a", "-a", "3-2*a".
    static FieldValue parse(std::string_view text,
                            std::uint32_t radicand = kDefaultRadicand);

    const Rational& rat_part() const noexcept { return rat_; }
    const Rational& irr_part() const noexcept { return irr_; }
    std::uint32_t radicand() const noexcept { return radicand_; }

    bool is_rational() const { return sgn(irr_) == 0; }
    bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }
    int sign() const;

    FieldValue abs() const { return sign() < 0 ? -*this : *this; }
    /// Largest integer <= value, computed exactly with an integer square root.
    Integer floor() const;
    /// value - floor(value), in [0, 1).
    FieldValue frac() const { return *this - FieldValue(Rational(floor())); }
    double to_double() const;

    /// Canonical "p/q+r/s*a" form; both parts always present.
    std::string to_string() const;

    FieldValue operator-() const;
    FieldValue& operator+=(const FieldValue& o);
    FieldValue& operator-=(const FieldValue& o);
    FieldValue& operator*=(const FieldValue& o);
    FieldValue& operator/=(const FieldValue& o);

    friend FieldValue operator+(FieldValue a, const FieldValue& b) { return a += b; }
    friend FieldValue operator-(FieldValue a, const FieldValue& b) { return a -= b; }
    friend FieldValue operator*(FieldValue a, const FieldValue& b) { return a *= b; }
    friend FieldValue operator/(FieldValue a, const FieldValue& b) { return a /= b; }

    friend bool operator==(const FieldValue& a, const FieldValue& b) {
        return a.rat_ == b.rat_ && a.irr_ == b.irr_;
    }
    friend std::strong_ordering operator<=>(const FieldValue& a, const FieldValue& b);

private:
    std::uint32_t merged_radicand(const FieldValue& o) const;

    Rational rat_{0};
    Rational irr_{0};
    std::uint32_t radicand_ = kDefaultRadicand;
};

bool is_square_free(std::uint32_t d);

/// Result of deciding whether x/y is rational: the lowest-terms witness l/k
/// with k > 0 when it is.
struct RatioDecision {
    bool rational = false;
    std::optional<Rational> witness;
};

RatioDecision ratio_is_rational(const FieldValue& x, const FieldValue& y);

// ---------------------------------------------------------------------------
// Symbols and words

/// Symbols 0..61 are spelled '0'-'9', 'A'-'Z', 'a'-'z' so that character
/// order equals symbol order.
constexpr int kMaxAlphabet = 62;
using Word = std::string;

char symbol_char(int symbol);
int symbol_index(char c);  // -1 when not a symbol character

/// Strongly connected 0/1 transition graph on the alphabet.
class Sft {
public:
    /// Validates and builds. Throws NotStronglyConnected or DeadSymbol.
    static Sft validate(int alphabet_size, const std::vector<std::vector<int>>& transitions);
    static Sft full_shift(int alphabet_size);

    int alphabet_size() const noexcept { return n_; }
    bool allowed(int from, int to) const { return adj_[static_cast<std::size_t>(from * n_ + to)] != 0; }
    bool allowed(char from, char to) const { return allowed(symbol_index(from), symbol_index(to)); }
    std::vector<std::vector<int>> transitions() const;

    /// Every adjacent pair allowed (non-cyclic).
    bool admissible(std::string_view word) const;
    /// Every adjacent pair plus the wrap-around pair allowed.
    bool cyclically_admissible(std::string_view word) const;
    /// All admissible words of the given length, in lexicographic order.
    std::vector<Word> admissible_words(int length) const;

    friend bool operator==(const Sft&, const Sft&) = default;

private:
    Sft(int n, std::vector<std::uint8_t> adj) : n_(n), adj_(std::move(adj)) {}
    int n_ = 0;
    std::vector<std::uint8_t> adj_;
};

enum class ValueMode { Exact, Float };

/// Locally constant function x -> table[x_0 .. x_{w-1}].
class Observable {
public:
    static Observable exact(const Sft& sft, int window, const std::map<Word, FieldValue>& values);
    static Observable floating(const Sft& sft, int window, const std::map<Word, double>& values);

    /// Builds an exact table by evaluating fn on every admissible window.
    template <typename Fn>
    static Observable exact_from(const Sft& sft, int window, Fn&& fn) {
        std::map<Word, FieldValue> values;
        for (auto& w : sft.admissible_words(window)) values.emplace(w, fn(std::string_view(w)));
        return exact(sft, window, values);
    }

    template <typename Fn>
    static Observable floating_from(const Sft& sft, int window, Fn&& fn) {
        std::map<Word, double> values;
        for (auto& w : sft.admissible_words(window)) values.emplace(w, fn(std::string_view(w)));
        return floating(sft, window, values);
    }

    int window() const noexcept { return window_; }
    int alphabet_size() const noexcept { return alphabet_; }
    ValueMode mode() const noexcept { return mode_; }
    bool is_exact() const noexcept { return mode_ == ValueMode::Exact; }

    /// Mixed-radix code of a window word; the table is indexed by it.
    std::size_t code(std::string_view window_word) const;
    const FieldValue& value(std::string_view window_word) const;
    double float_value(std::string_view window_word) const;
    const FieldValue& value_at(std::size_t code) const { return exact_[code]; }
    double float_value_at(std::size_t code) const { return float_[code]; }

    /// Admissible window words and their exact (or float) values.
    std::map<Word, FieldValue> exact_table() const;
    std::map<Word, double> float_table() const;

    /// Max minus min over the table (float mode uses float values).
    double spread() const;

    /// f - c (exact mode only).
    Observable shifted(const FieldValue& c) const;
    /// Same values as a window-w' table, w' >= w.
    Observable widened(const Sft& sft, int new_window) const;

private:
    Observable() = default;
    int window_ = 1;
    int alphabet_ = 1;
    ValueMode mode_ = ValueMode::Exact;
    std::vector<Word> words_;              // admissible windows (sorted)
    std::vector<FieldValue> exact_;        // indexed by code
    std::vector<double> float_;            // indexed by code
    std::vector<std::uint8_t> defined_;    // indexed by code
};

/// Roof function of a suspension flow; values strictly positive.
class Roof {
public:
    /// Throws NonPositiveRoof.
    explicit Roof(Observable table);
    const Observable& table() const noexcept { return table_; }

private:
    Observable table_;
};

/// Primitive admissible cyclic word in canonical (lexicographically least)
/// rotation. The period is the word length.
class PeriodicOrbit {
public:
    /// Canonicalizes; throws InvalidInput when the word is a proper power or
    /// not cyclically admissible.
    static PeriodicOrbit from_word(const Sft& sft, std::string_view word);
    /// Trusted constructor for words already known to be canonical.
    static PeriodicOrbit from_canonical(Word word) { return PeriodicOrbit(std::move(word)); }

    const Word& word() const noexcept { return word_; }
    int period() const noexcept { return static_cast<int>(word_.size()); }

    friend bool operator==(const PeriodicOrbit&, const PeriodicOrbit&) = default;
    /// (period, word) order.
    friend std::strong_ordering operator<=>(const PeriodicOrbit& a, const PeriodicOrbit& b) {
        if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
        return a.word_.compare(b.word_) <=> 0;
    }

private:
    explicit PeriodicOrbit(Word w) : word_(std::move(w)) {}
    Word word_;
};

Word canonical_rotation(std::string_view word);
bool is_primitive(std::string_view word);
/// Shortest u with word = u^k.
Word primitive_root(std::string_view word);

/// Eventually periodic bi-infinite sequence: ...past past | middle | future future...
/// Coordinate 0 is middle[origin]; before middle the past block repeats
/// leftwards (its last symbol sits just left of middle), after middle the
/// future block repeats.
struct BiInfiniteWord {
    Word past;
    Word middle;
    Word future;
    int origin = 0;

    static BiInfiniteWord periodic(Word block) { return {block, "", block, 0}; }
    char at(long k) const;
};

struct CylinderDistance {
    Rational partial_sum;  // exact sum over |k| <= radius
    Rational tail_bound;   // 4 * 2^-radius
};

/// sum_{|k| <= radius} 2^{-|k|} [x_k != y_k], plus a bound on the rest.
CylinderDistance cylinder_distance(const BiInfiniteWord& a, const BiInfiniteWord& b, int radius);

}  // namespace birkhoff
