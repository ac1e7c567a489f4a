#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qma/errors.hpp"

namespace qma {

struct Shape {
    int rows = 0;
    int cols = 0;

    auto operator<=>(const Shape&) const = default;

    bool contains(int i, int j) const { return 1 <= i && i <= rows && 1 <= j && j <= cols; }

    std::string str() const { return std::to_string(rows) + "x" + std::to_string(cols); }
};

struct Point {
    int row = 0;
    int col = 0;

    bool operator==(const Point&) const = default;
    auto operator<=>(const Point&) const = default;

    std::string str() const { return "(" + std::to_string(row) + "," + std::to_string(col) + ")"; }
};

/// Exponent matrix A of a PBW monomial Z^A: an m x n array of nonnegative
/// integers.  Entries are addressed 1-based, matching the generator indices.
class ExponentMatrix {
public:
    ExponentMatrix() = default;

    explicit ExponentMatrix(Shape shape) : shape_(shape), a_(size_t(shape.rows) * shape.cols, 0) {}

    static ExponentMatrix unit(Shape shape, int i, int j) {
        ExponentMatrix e(shape);
        e.at(i, j) = 1;
        return e;
    }

    static ExponentMatrix identity(Shape shape) {
        if (shape.rows != shape.cols)
            throw error(errc::shape_not_square, "identity exponent matrix needs m == n");
        ExponentMatrix e(shape);
        for (int i = 1; i <= shape.rows; ++i) e.at(i, i) = 1;
        return e;
    }

    Shape shape() const { return shape_; }

    int& at(int i, int j) {
        check_index(i, j);
        return a_[size_t(i - 1) * shape_.cols + (j - 1)];
    }

    int at(int i, int j) const {
        check_index(i, j);
        return a_[size_t(i - 1) * shape_.cols + (j - 1)];
    }

    bool operator==(const ExponentMatrix&) const = default;

    ExponentMatrix& operator+=(const ExponentMatrix& r) {
        require_same_shape(r);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += r.a_[k];
        return *this;
    }

    friend ExponentMatrix operator+(ExponentMatrix a, const ExponentMatrix& b) { return a += b; }

    /// Entrywise subtraction; fails if any entry would go negative.
    std::optional<ExponentMatrix> try_subtract(const ExponentMatrix& r) const {
        require_same_shape(r);
        ExponentMatrix out(shape_);
        for (size_t k = 0; k < a_.size(); ++k) {
            out.a_[k] = a_[k] - r.a_[k];
            if (out.a_[k] < 0) return std::nullopt;
        }
        return out;
    }

    ExponentMatrix scaled(int c) const {
        ExponentMatrix out(shape_);
        for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * c;
        return out;
    }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](int v) { return v == 0; });
    }

    int entry_sum() const {
        int s = 0;
        for (int v : a_) s += v;
        return s;
    }

    std::vector<int> row_sums() const {
        std::vector<int> r(shape_.rows, 0);
        for (int i = 1; i <= shape_.rows; ++i)
            for (int j = 1; j <= shape_.cols; ++j) r[i - 1] += at(i, j);
        return r;
    }

    std::vector<int> col_sums() const {
        std::vector<int> c(shape_.cols, 0);
        for (int i = 1; i <= shape_.rows; ++i)
            for (int j = 1; j <= shape_.cols; ++j) c[j - 1] += at(i, j);
        return c;
    }

    /// Exponent of q in the normalization factor N(A).
    int normalization_exponent() const {
        int s = 0;
        // within-row pairs of distinct columns, within-column pairs of distinct rows
        for (int i = 1; i <= shape_.rows; ++i)
            for (int j = 2; j <= shape_.cols; ++j)
                for (int k = 1; k < j; ++k) s += at(i, j) * at(i, k);
        for (int j = 1; j <= shape_.cols; ++j)
            for (int i = 2; i <= shape_.rows; ++i)
                for (int k = 1; k < i; ++k) s += at(i, j) * at(k, j);
        return -s;
    }

    /// Exponent of q in E(A), the leading coefficient of bar(Z^A).
    int bar_leading_exponent() const { return 2 * normalization_exponent(); }

    /// Generator letters of Z^A in PBW order ((1,1) block first).
    std::vector<Point> word() const {
        std::vector<Point> w;
        w.reserve(size_t(entry_sum()));
        for (int i = 1; i <= shape_.rows; ++i)
            for (int j = 1; j <= shape_.cols; ++j)
                for (int r = 0; r < at(i, j); ++r) w.push_back({i, j});
        return w;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (int i = 1; i <= shape_.rows; ++i) {
            if (i > 1) os << ";";
            for (int j = 1; j <= shape_.cols; ++j) {
                if (j > 1) os << ",";
                os << at(i, j);
            }
        }
        os << "]";
        return os.str();
    }

    /// Parse "a,b;c,d" (rows separated by ';') against a fixed shape.
    static ExponentMatrix parse(Shape shape, const std::string& text) {
        ExponentMatrix out(shape);
        int i = 1, j = 1;
        std::string cur;
        auto flush = [&] {
            if (cur.empty()) throw error(errc::config_error, "bad matrix literal: " + text);
            if (!shape.contains(i, j))
                throw error(errc::config_error, "matrix literal does not fit shape " + shape.str());
            out.at(i, j) = std::stoi(cur);
            cur.clear();
        };
        for (char ch : text) {
            if (ch == ' ' || ch == '[' || ch == ']') continue;
            if (ch == ',') {
                flush();
                ++j;
            } else if (ch == ';') {
                flush();
                ++i;
                j = 1;
            } else {
                cur += ch;
            }
        }
        flush();
        if (i != shape.rows || j != shape.cols)
            throw error(errc::config_error, "matrix literal does not fill shape " + shape.str());
        return out;
    }

private:
    void check_index(int i, int j) const {
        if (!shape_.contains(i, j))
            throw error(errc::index_out_of_range,
                        "(" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                            shape_.str());
    }

    void require_same_shape(const ExponentMatrix& r) const {
        if (!(shape_ == r.shape_)) throw error(errc::shape_mismatch, "exponent matrix shapes differ");
    }

    Shape shape_;
    std::vector<int> a_;
};

/// The lexicographic order used throughout: positions scanned
/// (1,1),(1,2),...,(1,n),(2,1),...; at the first differing position the
/// matrix with the larger entry is the larger one.
inline int lex_compare(const ExponentMatrix& a, const ExponentMatrix& b) {
    if (!(a.shape() == b.shape())) throw error(errc::shape_mismatch, "lex_compare shapes differ");
    for (int i = 1; i <= a.shape().rows; ++i)
        for (int j = 1; j <= a.shape().cols; ++j) {
            int d = a.at(i, j) - b.at(i, j);
            if (d != 0) return d > 0 ? 1 : -1;
        }
    return 0;
}

struct LexLess {
    bool operator()(const ExponentMatrix& a, const ExponentMatrix& b) const {
        return lex_compare(a, b) < 0;
    }
};

namespace detail {

/// All E_{i,j,s,t} = E_ij + E_st - E_it - E_sj with i<s, j<t, as (+,+,-,-)
/// position quadruples.
inline std::vector<std::array<Point, 4>> level_moves(Shape shape) {
    std::vector<std::array<Point, 4>> out;
    for (int i = 1; i <= shape.rows; ++i)
        for (int s = i + 1; s <= shape.rows; ++s)
            for (int j = 1; j <= shape.cols; ++j)
                for (int t = j + 1; t <= shape.cols; ++t)
                    out.push_back({Point{i, j}, Point{s, t}, Point{i, t}, Point{s, j}});
    return out;
}

inline int level_search(const ExponentMatrix& a, const std::vector<std::array<Point, 4>>& moves,
                        std::map<ExponentMatrix, int, LexLess>& memo) {
    auto it = memo.find(a);
    if (it != memo.end()) return it->second;
    int best = 0;
    for (const auto& mv : moves) {
        if (a.at(mv[0].row, mv[0].col) > 0 && a.at(mv[1].row, mv[1].col) > 0) {
            ExponentMatrix next = a;
            next.at(mv[0].row, mv[0].col) -= 1;
            next.at(mv[1].row, mv[1].col) -= 1;
            next.at(mv[2].row, mv[2].col) += 1;
            next.at(mv[3].row, mv[3].col) += 1;
            best = std::max(best, 1 + level_search(next, moves, memo));
        }
    }
    memo[a] = best;
    return best;
}

}  // namespace detail

/// Level L(A): the maximal number of summands E_{i,j,s,t} that can be
/// subtracted from A while keeping all entries nonnegative.
inline int level(const ExponentMatrix& a) {
    auto moves = detail::level_moves(a.shape());
    std::map<ExponentMatrix, int, LexLess> memo;
    return detail::level_search(a, moves, memo);
}

}  // namespace qma
