#pragma once

// Exact integer Laurent polynomials. The library computes in the bracket
// variable A; t and q are display/parse substitutions with
//   t^(1/2) = A^-2,   q = -A^-2   (so q = -t^(1/2)).

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaussforge/error.hpp"

namespace gaussforge {

class LaurentPoly {
public:
    using Coeff = std::int64_t;

    LaurentPoly() = default;
    LaurentPoly(Coeff constant) {  // NOLINT(google-explicit-constructor)
        if (constant != 0) terms_[0] = constant;
    }

    static LaurentPoly monomial(Coeff c, int exponent) {
        LaurentPoly p;
        if (c != 0) p.terms_[exponent] = c;
        return p;
    }

    /// Sorted (exponent, coefficient) pairs; no zero coefficients.
    const std::map<int, Coeff>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Coeff coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? 0 : it->second;
    }
    int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    void add_term(int exponent, Coeff c) {
        if (c == 0) return;
        Coeff& slot = terms_[exponent];
        slot += c;
        if (slot == 0) terms_.erase(exponent);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [e1, c1] : a.terms_) {
            for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
        }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Multiplication by x^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    /// x -> x^factor (factor may be negative).
    LaurentPoly substituted_power(int factor) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.add_term(e * factor, c);
        return r;
    }

    /// x -> x^-1.
    LaurentPoly inverted() const { return substituted_power(-1); }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::map<int, Coeff> terms_;
};

inline LaurentPoly pow(const LaurentPoly& base, unsigned k) {
    LaurentPoly r(1);
    for (unsigned i = 0; i < k; ++i) r *= base;
    return r;
}

enum class Variable { A, t, q };

/// Rewrites a polynomial in A with even exponents as a polynomial in q.
inline LaurentPoly a_to_q(const LaurentPoly& in_a) {
    LaurentPoly r;
    for (const auto& [e, c] : in_a.terms()) {
        if (e % 2 != 0) throw Error(Errc::MalformedPolynomial, "odd power of A has no q form");
        const int k = -e / 2;  // A^e = (A^-2)^k = (-q)^k
        r.add_term(k, (k % 2 == 0) ? c : -c);
    }
    return r;
}

inline LaurentPoly q_to_a(const LaurentPoly& in_q) {
    LaurentPoly r;
    for (const auto& [k, c] : in_q.terms()) r.add_term(-2 * k, (k % 2 == 0) ? c : -c);
    return r;
}

namespace detail {

inline void append_term(std::string& out, LaurentPoly::Coeff c, const std::string& power) {
    const bool negative = c < 0;
    const auto mag = negative ? -c : c;
    if (out.empty()) {
        if (negative) out += '-';
    } else {
        out += negative ? " - " : " + ";
    }
    if (power.empty()) {
        out += std::to_string(mag);
    } else {
        if (mag != 1) out += std::to_string(mag) + "*";
        out += power;
    }
}

// Power string for var^(num/den), den in {1, 2}.
inline std::string power_string(char var, int num, int den) {
    if (num == 0) return {};
    if (den == 2 && num % 2 == 0) {
        num /= 2;
        den = 1;
    }
    if (den == 1 && num == 1) return std::string(1, var);
    std::string s(1, var);
    s += '^';
    s += std::to_string(num);
    if (den == 2) s += "/2";
    return s;
}

}  // namespace detail

/// Renders a polynomial whose exponents are already in `var` (integer powers).
inline std::string render_plain(const LaurentPoly& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) detail::append_term(out, c, detail::power_string(var, e, 1));
    return out;
}

/// Renders a polynomial in A as A, t or q. Terms ascend in the displayed
/// variable.
inline std::string render(const LaurentPoly& in_a, Variable v) {
    switch (v) {
        case Variable::A:
            return render_plain(in_a, 'A');
        case Variable::q:
            return render_plain(a_to_q(in_a), 'q');
        case Variable::t: {
            if (in_a.is_zero()) return "0";
            std::string out;
            // A^e = t^(-e/4) = t^((-e/2)/2); ascending t means descending e.
            for (auto it = in_a.terms().rbegin(); it != in_a.terms().rend(); ++it) {
                if (it->first % 2 != 0) throw Error(Errc::MalformedPolynomial, "odd power of A has no t form");
                detail::append_term(out, it->second, detail::power_string('t', -it->first / 2, 2));
            }
            return out;
        }
    }
    return {};
}

/// Exponent/coefficient pairs in the displayed variable. For t the exponent
/// is doubled (t^(k/2) is reported as k) so the pairs stay integral.
inline std::vector<std::pair<int, LaurentPoly::Coeff>> exponent_pairs(const LaurentPoly& in_a, Variable v) {
    std::vector<std::pair<int, LaurentPoly::Coeff>> out;
    if (v == Variable::A) {
        for (const auto& [e, c] : in_a.terms()) out.emplace_back(e, c);
    } else if (v == Variable::q) {
        const LaurentPoly in_q = a_to_q(in_a);
        for (const auto& [e, c] : in_q.terms()) out.emplace_back(e, c);
    } else {
        for (auto it = in_a.terms().rbegin(); it != in_a.terms().rend(); ++it) {
            out.emplace_back(-it->first / 2, it->second);
        }
    }
    return out;
}

/// Parses sums of terms like "t^-2 + t^-3/2 - 2*t^{1/2} + 3" in the given
/// variable and returns the polynomial in A. Half-integer exponents are only
/// allowed for t.
inline LaurentPoly parse_polynomial(std::string_view raw, Variable v) {
    std::string text;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        // U+2212 MINUS SIGN
        if (i + 2 < raw.size() && static_cast<unsigned char>(raw[i]) == 0xE2 &&
            static_cast<unsigned char>(raw[i + 1]) == 0x88 && static_cast<unsigned char>(raw[i + 2]) == 0x92) {
            text += '-';
            i += 2;
        } else if (!std::isspace(static_cast<unsigned char>(raw[i]))) {
            text += raw[i];
        }
    }
    const char var = v == Variable::A ? 'A' : (v == Variable::t ? 't' : 'q');
    auto fail = [&](const std::string& why) -> LaurentPoly {
        throw Error(Errc::MalformedPolynomial, why + " in '" + std::string(raw) + "'");
    };
    if (text.empty()) fail("empty polynomial");

    LaurentPoly out;
    std::size_t i = 0;
    auto read_int = [&](long& value) {
        const std::size_t s = i;
        long acc = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            acc = acc * 10 + (text[i++] - '0');
            if (acc > 1'000'000'000L) fail("number too large");
        }
        if (i == s) return false;
        value = acc;
        return true;
    };
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail("expected + or -");
        }
        first = false;
        long coeff = 1;
        const bool has_coeff = read_int(coeff);
        if (has_coeff && i < text.size() && text[i] == '*') ++i;
        int num = 0;
        int den = 1;
        if (i < text.size() && text[i] == var) {
            ++i;
            num = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                const bool brace = i < text.size() && (text[i] == '{' || text[i] == '(');
                if (brace) ++i;
                int esign = 1;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) esign = text[i++] == '-' ? -1 : 1;
                long n = 0;
                if (!read_int(n)) fail("missing exponent");
                long d = 1;
                if (i < text.size() && text[i] == '/') {
                    ++i;
                    if (!read_int(d) || d == 0) fail("bad exponent denominator");
                }
                if (brace) {
                    if (i >= text.size() || (text[i] != '}' && text[i] != ')')) fail("unclosed exponent");
                    ++i;
                }
                num = static_cast<int>(esign * n);
                den = static_cast<int>(d);
            }
        } else if (!has_coeff) {
            fail("expected a term");
        }
        // Normalise to A exponents.
        int a_exp = 0;
        LaurentPoly::Coeff c = sign * coeff;
        if (v == Variable::A) {
            if (den != 1) fail("fractional power of A");
            a_exp = num;
        } else if (v == Variable::q) {
            if (den != 1) fail("fractional power of q");
            a_exp = -2 * num;
            if (num % 2 != 0) c = -c;
        } else {
            // t^(num/den) = A^(-4 num/den)
            if ((4 * num) % den != 0 || ((4 * num) / den) % 2 != 0) fail("t exponent must be a multiple of 1/2");
            a_exp = -(4 * num) / den;
        }
        out.add_term(a_exp, c);
    }
    return out;
}

}  // namespace gaussforge
