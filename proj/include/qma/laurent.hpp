#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "qma/errors.hpp"

namespace qma {

using Int = boost::multiprecision::cpp_int;

/// Element of Z[q,q^-1], stored as a sparse exponent -> coefficient map.
/// No zero coefficients are ever stored, so equal polynomials have
/// identical term maps.
class LaurentPoly {
public:
    LaurentPoly() = default;

    explicit LaurentPoly(const Int& constant) {
        if (constant != 0) terms_[0] = constant;
    }

    explicit LaurentPoly(long long constant) : LaurentPoly(Int(constant)) {}

    static LaurentPoly term(const Int& coeff, int exponent) {
        LaurentPoly p;
        if (coeff != 0) p.terms_[exponent] = coeff;
        return p;
    }

    // q^k
    static LaurentPoly q(int k = 1) { return term(1, k); }
    static LaurentPoly one() { return LaurentPoly(Int(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }

    const std::map<int, Int>& terms() const { return terms_; }

    Int coefficient(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Int(0) : it->second;
    }

    int min_exponent() const { return terms_.begin()->first; }  // undefined on zero
    int max_exponent() const { return terms_.rbegin()->first; }

    /// The single term (exponent, coefficient) if the polynomial is a monomial.
    std::optional<std::pair<int, Int>> single_term() const {
        if (terms_.size() != 1) return std::nullopt;
        return std::make_pair(terms_.begin()->first, terms_.begin()->second);
    }

    LaurentPoly& operator+=(const LaurentPoly& r) {
        for (const auto& [e, c] : r.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& r) {
        for (const auto& [e, c] : r.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    LaurentPoly operator-() const {
        LaurentPoly p;
        for (const auto& [e, c] : terms_) p.terms_[e] = -c;
        return p;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly p;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) p.add_term(add_exponents(ea, eb), ca * cb);
        return p;
    }

    LaurentPoly& operator*=(const LaurentPoly& r) { return *this = *this * r; }

    bool operator==(const LaurentPoly& r) const { return terms_ == r.terms_; }
    bool operator!=(const LaurentPoly& r) const { return !(*this == r); }

    /// Multiply by q^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly p;
        for (const auto& [e, c] : terms_) p.terms_[add_exponents(e, k)] = c;
        return p;
    }

    /// q -> q^-1.
    LaurentPoly bar() const {
        LaurentPoly p;
        for (const auto& [e, c] : terms_) p.terms_[-e] = c;
        return p;
    }

    bool is_bar_skew() const { return bar() == -*this; }
    bool has_even_support() const {
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (e % 2 != 0) return false;
        }
        return true;
    }

    /// True iff every term has strictly positive even exponent, i.e. the
    /// polynomial lies in q^2 Z[q^2].
    bool in_q2_Zq2() const {
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (e <= 0 || e % 2 != 0) return false;
        }
        return true;
    }

    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) {
            (void)e;
            s += c;
        }
        return s;
    }

    /// Exact division by q^k.
    LaurentPoly divided_by_q_power(int k) const { return shifted(-k); }

    /// If *this == q^(2*lambda) * r for a single integer lambda, return lambda.
    std::optional<int> even_shift_of(const LaurentPoly& r) const {
        if (is_zero() || r.is_zero()) return std::nullopt;
        if (terms_.size() != r.terms_.size()) return std::nullopt;
        int shift = min_exponent() - r.min_exponent();
        if (shift % 2 != 0) return std::nullopt;
        if (*this != r.shifted(shift)) return std::nullopt;
        return shift / 2;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Int a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (a != 1 || e == 0) os << a.str();
            if (e != 0) {
                os << "q";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

    /// Exact inverse of str().  Accepts e.g. "-q^-2 + q^2", "1 - 3q", "0".
    static LaurentPoly parse(const std::string& text) {
        LaurentPoly p;
        size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && text[i] == ' ') ++i;
        };
        skip_ws();
        if (i >= text.size()) throw error(errc::config_error, "empty Laurent polynomial");
        bool first = true;
        while (i < text.size()) {
            skip_ws();
            int sign = 1;
            if (text[i] == '+' || text[i] == '-') {
                if (first && text[i] == '+')
                    throw error(errc::config_error, "leading + in Laurent polynomial");
                sign = text[i] == '-' ? -1 : 1;
                ++i;
                skip_ws();
            }
            Int coeff = 1;
            bool have_digits = false;
            std::string digits;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                digits += text[i++];
            if (!digits.empty()) {
                coeff = Int(digits);
                have_digits = true;
            }
            int exponent = 0;
            if (i < text.size() && text[i] == 'q') {
                ++i;
                exponent = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    bool neg = false;
                    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                        neg = text[i] == '-';
                        ++i;
                    }
                    std::string ed;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                        ed += text[i++];
                    if (ed.empty()) throw error(errc::config_error, "missing exponent digits");
                    exponent = std::stoi(ed);
                    if (neg) exponent = -exponent;
                }
            } else if (!have_digits) {
                throw error(errc::config_error, "bad term in Laurent polynomial: " + text);
            }
            p.add_term(exponent, sign * coeff);
            first = false;
            skip_ws();
            if (i < text.size() && text[i] != '+' && text[i] != '-')
                throw error(errc::config_error, "unexpected character in Laurent polynomial: " +
                                                     std::string(1, text[i]));
        }
        return p;
    }

private:
    static int add_exponents(int a, int b) {
        long long s = static_cast<long long>(a) + b;
        if (s > (1 << 28) || s < -(1 << 28))
            throw error(errc::internal, "q-exponent overflow");
        return static_cast<int>(s);
    }

    void add_term(int e, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<int, Int> terms_;
};

/// For bar-skew h supported on even exponents, return h+ in q^2 Z[q^2] with
/// h = h+ - bar(h+): the restriction of h to strictly positive exponents.
inline LaurentPoly skew_decompose(const LaurentPoly& h) {
    if (!h.has_even_support()) throw error(errc::odd_exponent, "support not even: " + h.str());
    if (!h.is_bar_skew()) throw error(errc::not_skew, "bar(h) != -h: " + h.str());
    LaurentPoly plus;
    for (const auto& [e, c] : h.terms())
        if (e > 0) plus += LaurentPoly::term(c, e);
    return plus;
}

// q^2 - q^-2, the coefficient of the quantum matrix straightening relation.
inline const LaurentPoly& q2_minus_q2inv() {
    static const LaurentPoly c = LaurentPoly::q(2) - LaurentPoly::q(-2);
    return c;
}

}  // namespace qma
