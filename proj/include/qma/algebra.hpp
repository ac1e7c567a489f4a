#pragma once

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qma/exponent.hpp"
#include "qma/laurent.hpp"

namespace qma {

/// Row-major position index of a generator; the PBW order lists factors by
/// increasing position ((1,1) first).
inline int position_index(Shape sh, int i, int j) { return (i - 1) * sh.cols + (j - 1); }
inline int position_index(Shape sh, Point p) { return position_index(sh, p.row, p.col); }

/// Finite Z[q,q^-1]-linear combination of PBW monomials Z^A, kept in
/// canonical form: factors of each monomial in row-column lex order, no zero
/// coefficients.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(Shape shape) : shape_(shape) {}

    static AlgebraElement zero(Shape shape) { return AlgebraElement(shape); }

    static AlgebraElement monomial(const ExponentMatrix& a,
                                   const LaurentPoly& c = LaurentPoly::one()) {
        AlgebraElement x(a.shape());
        x.add_term(a, c);
        return x;
    }

    static AlgebraElement one(Shape shape) { return monomial(ExponentMatrix(shape)); }

    static AlgebraElement generator(Shape shape, int i, int j) {
        return monomial(ExponentMatrix::unit(shape, i, j));
    }

    Shape shape() const { return shape_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExponentMatrix, LaurentPoly, LexLess>& terms() const { return terms_; }

    LaurentPoly coefficient(const ExponentMatrix& a) const {
        auto it = terms_.find(a);
        return it == terms_.end() ? LaurentPoly() : it->second;
    }

    /// Lex-largest exponent matrix with nonzero coefficient.
    const ExponentMatrix& leading_index() const {
        if (is_zero()) throw error(errc::internal, "leading_index of zero element");
        return terms_.rbegin()->first;
    }

    const LaurentPoly& leading_coefficient() const {
        if (is_zero()) throw error(errc::internal, "leading_coefficient of zero element");
        return terms_.rbegin()->second;
    }

    void add_term(const ExponentMatrix& a, const LaurentPoly& c) {
        if (c.is_zero()) return;
        require_same_shape(a.shape());
        auto it = terms_.find(a);
        if (it == terms_.end()) {
            terms_.emplace(a, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& r) {
        require_same_shape(r.shape_);
        for (const auto& [a, c] : r.terms_) add_term(a, c);
        return *this;
    }

    AlgebraElement& operator-=(const AlgebraElement& r) {
        require_same_shape(r.shape_);
        for (const auto& [a, c] : r.terms_) add_term(a, -c);
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    AlgebraElement operator-() const {
        AlgebraElement x(shape_);
        for (const auto& [a, c] : terms_) x.terms_.emplace(a, -c);
        return x;
    }

    friend AlgebraElement operator*(const LaurentPoly& c, const AlgebraElement& x) {
        AlgebraElement out(x.shape_);
        for (const auto& [a, v] : x.terms_) out.add_term(a, c * v);
        return out;
    }

    bool operator==(const AlgebraElement& r) const {
        return shape_ == r.shape_ && terms_ == r.terms_;
    }
    bool operator!=(const AlgebraElement& r) const { return !(*this == r); }

private:
    void require_same_shape(Shape s) const {
        if (!(shape_ == s)) throw error(errc::shape_mismatch, "algebra elements of different shape");
    }

    Shape shape_;
    std::map<ExponentMatrix, LaurentPoly, LexLess> terms_;
};

namespace detail {

/// Last nonzero position of A in row-major order, or -1.
inline int last_nonzero_position(const ExponentMatrix& a) {
    Shape sh = a.shape();
    for (int i = sh.rows; i >= 1; --i)
        for (int j = sh.cols; j >= 1; --j)
            if (a.at(i, j) > 0) return position_index(sh, i, j);
    return -1;
}

/// Append k copies of the generator at position p to every monomial.  Valid
/// only when every monomial's support lies strictly before p; checked.
inline AlgebraElement append_power(const AlgebraElement& x, Point p, int k) {
    if (k == 0) return x;
    AlgebraElement out(x.shape());
    for (const auto& [a, c] : x.terms()) {
        if (last_nonzero_position(a) >= position_index(x.shape(), p))
            throw error(errc::internal, "append_power: support reaches past insertion point");
        ExponentMatrix b = a;
        b.at(p.row, p.col) += k;
        out.add_term(b, c);
    }
    return out;
}

// sum_{r=0}^{k-1} q^{-4r}
inline LaurentPoly geometric_q4(int k) {
    LaurentPoly s;
    for (int r = 0; r < k; ++r) s += LaurentPoly::q(-4 * r);
    return s;
}

}  // namespace detail

AlgebraElement mul_generator(const AlgebraElement& x, int s, int t);

/// Z^A * Z_{st} in PBW form, by pushing Z_{st} left through the tail of A
/// with the defining relations.
inline AlgebraElement pbw_times_generator(const ExponentMatrix& a, int s, int t) {
    Shape sh = a.shape();
    if (!sh.contains(s, t))
        throw error(errc::index_out_of_range, "generator outside shape " + sh.str());
    int target = position_index(sh, s, t);
    int last = detail::last_nonzero_position(a);
    if (last <= target) {
        ExponentMatrix b = a;
        b.at(s, t) += 1;
        return AlgebraElement::monomial(b);
    }
    Point p{last / sh.cols + 1, last % sh.cols + 1};
    int k = a.at(p.row, p.col);
    ExponentMatrix head = a;
    head.at(p.row, p.col) = 0;

    if (p.row == s) {  // same row, p.col > t
        AlgebraElement rec = pbw_times_generator(head, s, t);
        return LaurentPoly::q(-2 * k) * detail::append_power(rec, p, k);
    }
    if (p.col == t) {  // same column, p.row > s
        AlgebraElement rec = pbw_times_generator(head, s, t);
        return LaurentPoly::q(-2 * k) * detail::append_power(rec, p, k);
    }
    if (p.col < t) {  // p.row > s: the two generators commute
        AlgebraElement rec = pbw_times_generator(head, s, t);
        return detail::append_power(rec, p, k);
    }
    // p.row > s, p.col > t:
    //   Z_p^k Z_{st} = Z_{st} Z_p^k - (q^2-q^-2)(sum_r q^{-4r}) Z_{s,p.col} Z_{p.row,t} Z_p^{k-1}
    AlgebraElement straightened = detail::append_power(pbw_times_generator(head, s, t), p, k);
    AlgebraElement correction = pbw_times_generator(head, s, p.col);
    correction = mul_generator(correction, p.row, t);
    correction = detail::append_power(correction, p, k - 1);
    LaurentPoly c = q2_minus_q2inv() * detail::geometric_q4(k);
    return straightened - c * correction;
}

inline AlgebraElement mul_generator(const AlgebraElement& x, int s, int t) {
    AlgebraElement out(x.shape());
    for (const auto& [a, c] : x.terms()) out += c * pbw_times_generator(a, s, t);
    return out;
}

/// Product in PBW form; bilinear extension of the straightening relations.
inline AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
    if (!(x.shape() == y.shape()))
        throw error(errc::shape_mismatch, "product of elements of different shape");
    AlgebraElement out(x.shape());
    for (const auto& [b, c] : y.terms()) {
        AlgebraElement cur = x;
        for (Point l : b.word()) cur = mul_generator(cur, l.row, l.col);
        out += c * cur;
    }
    return out;
}

inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    return mul(x, y);
}

/// The bar anti-automorphism: fixes every Z_{ij}, sends q -> q^-1; computed
/// by reversing each PBW word, conjugating coefficients and re-straightening.
inline AlgebraElement bar(const AlgebraElement& x) {
    AlgebraElement out(x.shape());
    for (const auto& [a, c] : x.terms()) {
        AlgebraElement rev = AlgebraElement::one(x.shape());
        auto w = a.word();
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            rev = mul_generator(rev, it->row, it->col);
        out += c.bar() * rev;
    }
    return out;
}

/// Z(A) = N(A) Z^A, the normalized form.
inline AlgebraElement normalized_monomial(const ExponentMatrix& a) {
    return AlgebraElement::monomial(a, LaurentPoly::q(a.normalization_exponent()));
}

/// A word in the generators with a scalar, the input form for straightening.
struct GeneratorWord {
    Shape shape;
    std::vector<Point> letters;
    LaurentPoly scalar = LaurentPoly::one();
};

namespace detail {

inline ExponentMatrix matrix_of_sorted_word(Shape sh, const std::vector<Point>& w) {
    ExponentMatrix a(sh);
    for (Point p : w) a.at(p.row, p.col) += 1;
    return a;
}

}  // namespace detail

/// Straighten an arbitrary generator word to PBW normal form by repeated
/// local rewrites of adjacent out-of-order pairs.  `pick` selects which
/// admissible position to rewrite (given the list of out-of-order adjacent
/// positions); the default picks the leftmost.  Any strategy terminates and
/// all yield the same element; the randomized suite exercises exactly that.
inline AlgebraElement straighten(
    const GeneratorWord& w,
    const std::function<size_t(size_t)>& pick = [](size_t) { return size_t(0); }) {
    Shape sh = w.shape;
    for (Point p : w.letters)
        if (!sh.contains(p.row, p.col))
            throw error(errc::index_out_of_range, "word letter outside shape " + sh.str());

    AlgebraElement out(sh);
    std::map<std::vector<Point>, LaurentPoly> active;
    if (!w.scalar.is_zero()) active[w.letters] = w.scalar;

    while (!active.empty()) {
        auto node = active.begin();
        std::vector<Point> word = node->first;
        LaurentPoly coeff = node->second;
        active.erase(node);
        if (coeff.is_zero()) continue;

        std::vector<size_t> bad;
        for (size_t p = 0; p + 1 < word.size(); ++p)
            if (position_index(sh, word[p]) > position_index(sh, word[p + 1])) bad.push_back(p);

        if (bad.empty()) {
            out.add_term(detail::matrix_of_sorted_word(sh, word), coeff);
            continue;
        }

        size_t p = bad[pick(bad.size()) % bad.size()];
        Point a = word[p], b = word[p + 1];
        auto push = [&](std::vector<Point>&& wd, const LaurentPoly& c) {
            auto [it, fresh] = active.emplace(std::move(wd), c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) active.erase(it);
            }
        };

        std::vector<Point> swapped = word;
        std::swap(swapped[p], swapped[p + 1]);
        if (a.row == b.row || a.col == b.col) {
            push(std::move(swapped), coeff * LaurentPoly::q(-2));
        } else if (a.col < b.col) {  // a.row > b.row: plain commutation
            push(std::move(swapped), coeff);
        } else {  // a.row > b.row, a.col > b.col
            push(std::move(swapped), coeff);
            std::vector<Point> repl = word;
            repl[p] = Point{b.row, a.col};
            repl[p + 1] = Point{a.row, b.col};
            push(std::move(repl), -(coeff * q2_minus_q2inv()));
        }
    }
    return out;
}

inline AlgebraElement straighten_randomized(const GeneratorWord& w, std::mt19937_64& rng) {
    return straighten(w, [&rng](size_t n) {
        return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
    });
}

// ---------------------------------------------------------------------------
// text form: "q^2 * Z[1,1]^2 Z[2,3] + ..." with factors in row-column lex
// order and terms in descending lex order.

inline std::string render_monomial(const ExponentMatrix& a) {
    Shape sh = a.shape();
    std::ostringstream os;
    bool first = true;
    for (int i = 1; i <= sh.rows; ++i)
        for (int j = 1; j <= sh.cols; ++j) {
            int e = a.at(i, j);
            if (e == 0) continue;
            if (!first) os << " ";
            os << "Z[" << i << "," << j << "]";
            if (e > 1) os << "^" << e;
            first = false;
        }
    return os.str();
}

inline std::string render(const AlgebraElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        const ExponentMatrix& a = it->first;
        LaurentPoly c = it->second;
        std::string mono = render_monomial(a);
        bool negative = false;
        std::string cs;
        if (c.terms().size() > 1) {
            cs = "(" + c.str() + ")";
        } else {
            auto [e, coeff] = *c.single_term();
            if (coeff < 0) {
                negative = true;
                c = -c;
            }
            cs = c.str();
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (mono.empty())
            os << cs;
        else if (cs == "1")
            os << mono;
        else
            os << cs << " * " << mono;
        first = false;
    }
    return os.str();
}

/// Exact inverse of render().
inline AlgebraElement parse_element(Shape sh, const std::string& text) {
    AlgebraElement out(sh);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip_ws();
    if (text.substr(i) == "0") return out;
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (first && text[i] == '+') throw error(errc::config_error, "leading +");
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        }
        LaurentPoly coeff = LaurentPoly::one();
        if (i < text.size() && text[i] == '(') {
            size_t close = text.find(')', i);
            if (close == std::string::npos) throw error(errc::config_error, "unbalanced (");
            coeff = LaurentPoly::parse(text.substr(i + 1, close - i - 1));
            i = close + 1;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        } else if (i < text.size() && text[i] != 'Z') {
            size_t star = i;
            while (star < text.size()) {
                char ch = text[star];
                if (ch == '*') break;
                // a '-' right after '^' belongs to the coefficient (q^-2)
                if ((ch == '+' || ch == '-') && !(star > i && text[star - 1] == '^')) break;
                ++star;
            }
            coeff = LaurentPoly::parse(text.substr(i, star - i));
            i = star;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        ExponentMatrix a(sh);
        while (i < text.size() && text[i] == 'Z') {
            ++i;
            if (i >= text.size() || text[i] != '[') throw error(errc::config_error, "expected [");
            size_t close = text.find(']', i);
            if (close == std::string::npos) throw error(errc::config_error, "unbalanced [");
            std::string inner = text.substr(i + 1, close - i - 1);
            size_t comma = inner.find(',');
            if (comma == std::string::npos) throw error(errc::config_error, "expected i,j");
            int gi = std::stoi(inner.substr(0, comma));
            int gj = std::stoi(inner.substr(comma + 1));
            i = close + 1;
            int e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::string digits;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    digits += text[i++];
                if (digits.empty()) throw error(errc::config_error, "missing power digits");
                e = std::stoi(digits);
            }
            if (!sh.contains(gi, gj))
                throw error(errc::index_out_of_range, "generator outside shape");
            a.at(gi, gj) += e;
            skip_ws();
        }
        out.add_term(a, sign == 1 ? coeff : -coeff);
        first = false;
        skip_ws();
    }
    return out;
}

}  // namespace qma
