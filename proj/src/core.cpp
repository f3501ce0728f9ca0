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

#include "birkhoff/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>

namespace birkhoff {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::DeadSymbol: return "DeadSymbol";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::IrrationalRatio: return "IrrationalRatio";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::StabilizationNotReached: return "StabilizationNotReached";
    case ErrorCode::NonPositiveRoof: return "NonPositiveRoof";
    case ErrorCode::CoverageGap: return "CoverageGap";
    case ErrorCode::NoDistinctAverages: return "NoDistinctAverages";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Rationals

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

[[noreturn]] void bad_value(std::string_view text, const char* why) {
    throw Error(ErrorCode::InvalidInput, "cannot parse value \"" + std::string(text) + "\": " + why);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    auto num = trim(s.substr(0, slash));
    auto den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den)) bad_value(text, "expected p/q");
    std::string n(num), d(den);
    if (n.front() == '+') n.erase(0, 1);
    if (d.front() == '+') d.erase(0, 1);
    Integer zn(n, 10), zd(d, 10);
    if (sgn(zd) == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in \"" + std::string(text) + "\"");
    Rational q(zn, zd);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------------------
// FieldValue

bool is_square_free(std::uint32_t d) {
    if (d < 2) return false;
    for (std::uint64_t p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

FieldValue::FieldValue(Rational rat, Rational irr, std::uint32_t radicand)
    : rat_(std::move(rat)), irr_(std::move(irr)), radicand_(radicand) {
    rat_.canonicalize();
    irr_.canonicalize();
    if (!is_square_free(radicand_))
        throw Error(ErrorCode::InvalidInput, "radicand " + std::to_string(radicand_) + " is not a square-free integer >= 2");
}

FieldValue FieldValue::alpha(std::uint32_t radicand) { return FieldValue(0, 1, radicand); }

FieldValue FieldValue::parse(std::string_view text, std::uint32_t radicand) {
    auto s = trim(text);
    if (s.empty()) bad_value(text, "empty");
    // Split into signed terms at top-level '+'/'-' not directly after '/' or '*'.
    std::vector<std::string> terms;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        bool sign_char = c == '+' || c == '-';
        bool starts_term = sign_char && !cur.empty() && cur.back() != '/' && cur.back() != '*' &&
                           cur.back() != '+' && cur.back() != '-';
        if (starts_term) {
            terms.push_back(cur);
            cur.clear();
        }
        cur.push_back(c);
    }
    terms.push_back(cur);
    if (terms.size() > 2) bad_value(text, "too many terms");

    Rational rat = 0, irr = 0;
    bool have_rat = false, have_irr = false;
    for (auto term : terms) {
        // A leading '+' of a second term may be followed by an explicit sign: "1/2+-3/4*a".
        if (term.size() > 1 && term[0] == '+' && (term[1] == '-' || term[1] == '+')) term.erase(0, 1);
        std::string_view t(term);
        bool irrational = !t.empty() && t.back() == 'a';
        if (irrational) {
            if (have_irr) bad_value(text, "two irrational terms");
            have_irr = true;
            t.remove_suffix(1);
            if (!t.empty() && t.back() == '*') t.remove_suffix(1);
            if (t.empty() || t == "+") irr = 1;
            else if (t == "-") irr = -1;
            else irr = parse_rational(t);
        } else {
            if (have_rat) bad_value(text, "two rational terms");
            have_rat = true;
            rat = parse_rational(t);
        }
    }
    return FieldValue(rat, irr, radicand);
}

std::uint32_t FieldValue::merged_radicand(const FieldValue& o) const {
    if (sgn(o.irr_) == 0) return radicand_;
    if (sgn(irr_) == 0) return o.radicand_;
    if (radicand_ != o.radicand_)
        throw Error(ErrorCode::InvalidInput, "mixing values over sqrt(" + std::to_string(radicand_) +
                                                 ") and sqrt(" + std::to_string(o.radicand_) + ")");
    return radicand_;
}

int FieldValue::sign() const {
    int r = sgn(rat_), s = sgn(irr_);
    if (s == 0) return r;
    if (r == 0 || r == s) return s;
    // Opposite signs: compare rat^2 against irr^2 * D; equality is impossible.
    Rational lhs = rat_ * rat_;
    Rational rhs = irr_ * irr_ * radicand_;
    return lhs > rhs ? r : s;
}

Integer FieldValue::floor() const {
    Integer out;
    if (sgn(irr_) == 0) {
        mpz_fdiv_q(out.get_mpz_t(), rat_.get_num_mpz_t(), rat_.get_den_mpz_t());
        return out;
    }
    // value = (N + sign(s) * sqrt(M^2 D)) / den with integers N, M > 0, den > 0.
    Integer den = rat_.get_den() * irr_.get_den();
    Integer N = rat_.get_num() * irr_.get_den();
    Integer M = ::abs(irr_.get_num()) * rat_.get_den();
    Integer radicand_sq = M * M * radicand_;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), radicand_sq.get_mpz_t());  // floor(t), t irrational
    Integer numer = sgn(irr_) > 0 ? Integer(N + root) : Integer(N - root - 1);
    mpz_fdiv_q(out.get_mpz_t(), numer.get_mpz_t(), den.get_mpz_t());
    return out;
}

double FieldValue::to_double() const {
    return rat_.get_d() + irr_.get_d() * std::sqrt(static_cast<double>(radicand_));
}

std::string FieldValue::to_string() const {
    return format_rational(rat_) + "+" + format_rational(irr_) + "*a";
}

FieldValue FieldValue::operator-() const {
    FieldValue out = *this;
    out.rat_ = -out.rat_;
    out.irr_ = -out.irr_;
    return out;
}

FieldValue& FieldValue::operator+=(const FieldValue& o) {
    radicand_ = merged_radicand(o);
    rat_ += o.rat_;
    irr_ += o.irr_;
    return *this;
}

FieldValue& FieldValue::operator-=(const FieldValue& o) {
    radicand_ = merged_radicand(o);
    rat_ -= o.rat_;
    irr_ -= o.irr_;
    return *this;
}

FieldValue& FieldValue::operator*=(const FieldValue& o) {
    radicand_ = merged_radicand(o);
    if (sgn(irr_) == 0 && sgn(o.irr_) == 0) {
        rat_ *= o.rat_;
        return *this;
    }
    Rational r = rat_ * o.rat_ + irr_ * o.irr_ * radicand_;
    Rational s = rat_ * o.irr_ + irr_ * o.rat_;
    rat_ = std::move(r);
    irr_ = std::move(s);
    return *this;
}

FieldValue& FieldValue::operator/=(const FieldValue& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    radicand_ = merged_radicand(o);
    if (sgn(o.irr_) == 0) {
        rat_ /= o.rat_;
        irr_ /= o.rat_;
        return *this;
    }
    // Multiply by the conjugate: (c - d a) / (c^2 - d^2 D).
    Rational norm = o.rat_ * o.rat_ - o.irr_ * o.irr_ * radicand_;
    FieldValue conj(o.rat_ / norm, -o.irr_ / norm, radicand_);
    return *this *= conj;
}

std::strong_ordering operator<=>(const FieldValue& a, const FieldValue& b) {
    int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

RatioDecision ratio_is_rational(const FieldValue& x, const FieldValue& y) {
    if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "ratio with zero denominator");
    FieldValue q = x / y;
    if (!q.is_rational()) return {false, std::nullopt};
    return {true, q.rat_part()};
}

// ---------------------------------------------------------------------------
// Symbols, SFT

char symbol_char(int symbol) {
    if (symbol < 0 || symbol >= kMaxAlphabet) throw Error(ErrorCode::InvalidInput, "symbol out of range");
    if (symbol < 10) return static_cast<char>('0' + symbol);
    if (symbol < 36) return static_cast<char>('A' + symbol - 10);
    return static_cast<char>('a' + symbol - 36);
}

int symbol_index(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    if (c >= 'a' && c <= 'z') return c - 'a' + 36;
    return -1;
}

namespace {

std::vector<bool> reachable(int n, const std::vector<std::uint8_t>& adj, int start, bool reverse) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::deque<int> queue{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < n; ++v) {
            auto e = reverse ? adj[static_cast<std::size_t>(v * n + u)] : adj[static_cast<std::size_t>(u * n + v)];
            if (e && !seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                queue.push_back(v);
            }
        }
    }
    return seen;
}

}  // namespace

Sft Sft::validate(int alphabet_size, const std::vector<std::vector<int>>& transitions) {
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabet)
        throw Error(ErrorCode::InvalidInput, "alphabet size must be in 1.." + std::to_string(kMaxAlphabet));
    if (static_cast<int>(transitions.size()) != alphabet_size)
        throw Error(ErrorCode::InvalidInput, "transition matrix must be " + std::to_string(alphabet_size) + "x" +
                                                 std::to_string(alphabet_size));
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(alphabet_size * alphabet_size), 0);
    for (int i = 0; i < alphabet_size; ++i) {
        const auto& row = transitions[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != alphabet_size)
            throw Error(ErrorCode::InvalidInput, "transition matrix row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < alphabet_size; ++j) {
            int v = row[static_cast<std::size_t>(j)];
            if (v != 0 && v != 1) throw Error(ErrorCode::InvalidInput, "transition entries must be 0 or 1");
            adj[static_cast<std::size_t>(i * alphabet_size + j)] = static_cast<std::uint8_t>(v);
        }
    }
    auto fwd = reachable(alphabet_size, adj, 0, false);
    auto bwd = reachable(alphabet_size, adj, 0, true);
    for (int v = 0; v < alphabet_size; ++v) {
        if (!fwd[static_cast<std::size_t>(v)])
            throw Error(ErrorCode::NotStronglyConnected,
                        "not strongly connected: symbol " + std::to_string(v) + " unreachable from symbol 0 (witness pair 0," +
                            std::to_string(v) + ")");
        if (!bwd[static_cast<std::size_t>(v)])
            throw Error(ErrorCode::NotStronglyConnected,
                        "not strongly connected: symbol 0 unreachable from symbol " + std::to_string(v) + " (witness pair " +
                            std::to_string(v) + ",0)");
    }
    for (int v = 0; v < alphabet_size; ++v) {
        bool out = false, in = false;
        for (int u = 0; u < alphabet_size; ++u) {
            out = out || adj[static_cast<std::size_t>(v * alphabet_size + u)];
            in = in || adj[static_cast<std::size_t>(u * alphabet_size + v)];
        }
        if (!out || !in)
            throw Error(ErrorCode::DeadSymbol, "dead symbol " + std::to_string(v) + ": every symbol needs an in-edge and an out-edge");
    }
    return Sft(alphabet_size, std::move(adj));
}

Sft Sft::full_shift(int alphabet_size) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(alphabet_size),
                                    std::vector<int>(static_cast<std::size_t>(alphabet_size), 1));
    return validate(alphabet_size, t);
}

std::vector<std::vector<int>> Sft::transitions() const {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = allowed(i, j) ? 1 : 0;
    return t;
}

bool Sft::admissible(std::string_view word) const {
    for (char c : word) {
        int s = symbol_index(c);
        if (s < 0 || s >= n_) return false;
    }
    for (std::size_t i = 1; i < word.size(); ++i)
        if (!allowed(word[i - 1], word[i])) return false;
    return true;
}

bool Sft::cyclically_admissible(std::string_view word) const {
    return !word.empty() && admissible(word) && allowed(word.back(), word.front());
}

std::vector<Word> Sft::admissible_words(int length) const {
    std::vector<Word> out;
    if (length <= 0) {
        out.emplace_back();
        return out;
    }
    Word cur;
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (int s = 0; s < n_; ++s) {
            if (!cur.empty() && !allowed(symbol_index(cur.back()), s)) continue;
            cur.push_back(symbol_char(s));
            self(self);
            cur.pop_back();
        }
    };
    extend(extend);
    return out;
}

// ---------------------------------------------------------------------------
// Observable

namespace {

std::size_t table_size(int alphabet, int window) {
    std::size_t size = 1;
    for (int i = 0; i < window; ++i) {
        if (size > (std::size_t{1} << 26) / static_cast<std::size_t>(alphabet))
            throw Error(ErrorCode::BudgetExceeded, "observable table too large (alphabet^window > 2^26)");
        size *= static_cast<std::size_t>(alphabet);
    }
    return size;
}

}  // namespace

std::size_t Observable::code(std::string_view w) const {
    if (static_cast<int>(w.size()) != window_)
        throw Error(ErrorCode::InvalidInput, "window word \"" + std::string(w) + "\" has length " +
                                                 std::to_string(w.size()) + ", expected " + std::to_string(window_));
    std::size_t c = 0;
    for (char ch : w) {
        int s = symbol_index(ch);
        if (s < 0 || s >= alphabet_) throw Error(ErrorCode::InvalidInput, "unknown symbol in \"" + std::string(w) + "\"");
        c = c * static_cast<std::size_t>(alphabet_) + static_cast<std::size_t>(s);
    }
    return c;
}

Observable Observable::exact(const Sft& sft, int window, const std::map<Word, FieldValue>& values) {
    if (window < 1) throw Error(ErrorCode::InvalidInput, "window must be >= 1");
    Observable f;
    f.window_ = window;
    f.alphabet_ = sft.alphabet_size();
    f.mode_ = ValueMode::Exact;
    auto size = table_size(f.alphabet_, window);
    f.exact_.assign(size, FieldValue());
    f.defined_.assign(size, 0);
    for (const auto& [w, v] : values) {
        if (!sft.admissible(w) || static_cast<int>(w.size()) != window)
            throw Error(ErrorCode::InvalidInput, "observable key \"" + w + "\" is not an admissible window of length " +
                                                     std::to_string(window));
        auto c = f.code(w);
        f.exact_[c] = v;
        f.defined_[c] = 1;
    }
    f.words_ = sft.admissible_words(window);
    for (const auto& w : f.words_)
        if (!f.defined_[f.code(w)])
            throw Error(ErrorCode::InvalidInput, "observable table is not total: missing window \"" + w + "\"");
    return f;
}

Observable Observable::floating(const Sft& sft, int window, const std::map<Word, double>& values) {
    if (window < 1) throw Error(ErrorCode::InvalidInput, "window must be >= 1");
    Observable f;
    f.window_ = window;
    f.alphabet_ = sft.alphabet_size();
    f.mode_ = ValueMode::Float;
    auto size = table_size(f.alphabet_, window);
    f.float_.assign(size, 0.0);
    f.defined_.assign(size, 0);
    for (const auto& [w, v] : values) {
        if (!sft.admissible(w) || static_cast<int>(w.size()) != window)
            throw Error(ErrorCode::InvalidInput, "observable key \"" + w + "\" is not an admissible window of length " +
                                                     std::to_string(window));
        if (!std::isfinite(v)) throw Error(ErrorCode::InvalidInput, "observable value for \"" + w + "\" is not finite");
        auto c = f.code(w);
        f.float_[c] = v;
        f.defined_[c] = 1;
    }
    f.words_ = sft.admissible_words(window);
    for (const auto& w : f.words_)
        if (!f.defined_[f.code(w)])
            throw Error(ErrorCode::InvalidInput, "observable table is not total: missing window \"" + w + "\"");
    return f;
}

const FieldValue& Observable::value(std::string_view w) const {
    if (!is_exact()) throw Error(ErrorCode::InvalidInput, "exact value requested from a float-mode observable");
    auto c = code(w);
    if (!defined_[c]) throw Error(ErrorCode::InvalidInput, "window \"" + std::string(w) + "\" is not admissible");
    return exact_[c];
}

double Observable::float_value(std::string_view w) const {
    auto c = code(w);
    if (!defined_[c]) throw Error(ErrorCode::InvalidInput, "window \"" + std::string(w) + "\" is not admissible");
    return is_exact() ? exact_[c].to_double() : float_[c];
}

std::map<Word, FieldValue> Observable::exact_table() const {
    std::map<Word, FieldValue> out;
    for (const auto& w : words_) out.emplace(w, value(w));
    return out;
}

std::map<Word, double> Observable::float_table() const {
    std::map<Word, double> out;
    for (const auto& w : words_) out.emplace(w, float_value(w));
    return out;
}

double Observable::spread() const {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& w : words_) {
        double v = float_value(w);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return words_.empty() ? 0.0 : hi - lo;
}

Observable Observable::shifted(const FieldValue& c) const {
    if (!is_exact()) throw Error(ErrorCode::InvalidInput, "shift requires an exact-mode observable");
    Observable g = *this;
    for (const auto& w : words_) g.exact_[code(w)] -= c;
    return g;
}

Observable Observable::widened(const Sft& sft, int new_window) const {
    if (new_window < window_) throw Error(ErrorCode::InvalidInput, "cannot narrow an observable");
    if (is_exact()) {
        return exact_from(sft, new_window, [&](std::string_view w) { return value(w.substr(0, static_cast<std::size_t>(window_))); });
    }
    return floating_from(sft, new_window,
                         [&](std::string_view w) { return float_value(w.substr(0, static_cast<std::size_t>(window_))); });
}

Roof::Roof(Observable table) : table_(std::move(table)) {
    for (const auto& [w, v] : table_.float_table()) {
        bool positive = table_.is_exact() ? table_.value(w).sign() > 0 : v > 0;
        if (!positive) throw Error(ErrorCode::NonPositiveRoof, "roof value at \"" + w + "\" is not strictly positive");
    }
}

// ---------------------------------------------------------------------------
// Words and orbits

Word canonical_rotation(std::string_view word) {
    // Booth's least rotation.
    const std::size_t n = word.size();
    if (n == 0) return Word();
    std::string s(word);
    s += word;
    std::vector<long> fail(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        char sj = s[j];
        long i = fail[j - k - 1];
        while (i != -1 && sj != s[k + static_cast<std::size_t>(i) + 1]) {
            if (sj < s[k + static_cast<std::size_t>(i) + 1]) k = j - static_cast<std::size_t>(i) - 1;
            i = fail[static_cast<std::size_t>(i)];
        }
        if (sj != s[k + static_cast<std::size_t>(i) + 1]) {
            if (sj < s[k]) k = j;
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return s.substr(k, n);
}

Word primitive_root(std::string_view word) {
    const std::size_t n = word.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = word[i] == word[i - d];
        if (ok) return Word(word.substr(0, d));
    }
    return Word(word);
}

bool is_primitive(std::string_view word) { return !word.empty() && primitive_root(word).size() == word.size(); }

PeriodicOrbit PeriodicOrbit::from_word(const Sft& sft, std::string_view word) {
    if (word.empty()) throw Error(ErrorCode::InvalidInput, "periodic orbit word is empty");
    if (!sft.cyclically_admissible(word))
        throw Error(ErrorCode::InvalidInput, "word \"" + std::string(word) + "\" is not cyclically admissible");
    if (!is_primitive(word))
        throw Error(ErrorCode::InvalidInput, "word \"" + std::string(word) + "\" is a proper power, not a primitive orbit");
    return PeriodicOrbit(canonical_rotation(word));
}

char BiInfiniteWord::at(long k) const {
    long idx = k + origin;
    long mid = static_cast<long>(middle.size());
    if (idx >= 0 && idx < mid) return middle[static_cast<std::size_t>(idx)];
    if (idx >= mid) {
        if (future.empty()) throw Error(ErrorCode::InvalidInput, "bi-infinite word has no future block");
        return future[static_cast<std::size_t>((idx - mid) % static_cast<long>(future.size()))];
    }
    if (past.empty()) throw Error(ErrorCode::InvalidInput, "bi-infinite word has no past block");
    long p = static_cast<long>(past.size());
    long back = (-idx - 1) % p;  // 0 = last symbol of past
    return past[static_cast<std::size_t>(p - 1 - back)];
}

CylinderDistance cylinder_distance(const BiInfiniteWord& a, const BiInfiniteWord& b, int radius) {
    if (radius < 0) throw Error(ErrorCode::InvalidInput, "radius must be >= 0");
    CylinderDistance out;
    out.partial_sum = 0;
    for (long k = -radius; k <= radius; ++k) {
        if (a.at(k) == b.at(k)) continue;
        Integer pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(std::labs(k)));
        out.partial_sum += Rational(Integer(1), pow2);
    }
    Integer pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(radius));
    out.tail_bound = Rational(Integer(4), pow2);
    out.tail_bound.canonicalize();
    out.partial_sum.canonicalize();
    return out;
}

}  // namespace birkhoff
