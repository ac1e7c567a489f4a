#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "qma/exponent.hpp"
#include "qma/minors.hpp"

namespace qma {

/// A broken line: monotone staircase from (1,n) to (m,1), alternating
/// horizontal segments (decreasing column) and vertical segments (increasing
/// row).  Stored as its corner list; the point set and region partition are
/// derived views.
struct BrokenLine {
    Shape grid;
    std::vector<Point> corners;

    bool operator==(const BrokenLine&) const = default;
    auto operator<=>(const BrokenLine&) const = default;
};

enum class Region { above, line, below };  // S_L, L, T_L

namespace detail {

/// Corner list of a unit-step path (sequence of lattice points).
inline std::vector<Point> corners_of_path(const std::vector<Point>& path) {
    std::vector<Point> corners;
    corners.push_back(path.front());
    for (size_t t = 1; t + 1 < path.size(); ++t) {
        bool in_vertical = path[t].col == path[t - 1].col;
        bool out_vertical = path[t + 1].col == path[t].col;
        if (in_vertical != out_vertical) corners.push_back(path[t]);
    }
    if (path.size() > 1) corners.push_back(path.back());
    return corners;
}

}  // namespace detail

inline BrokenLine line_from_path(Shape grid, const std::vector<Point>& path) {
    if (path.empty() || !(path.front() == Point{1, grid.cols}) ||
        !(path.back() == Point{grid.rows, 1}))
        throw error(errc::invalid_spec, "path must run from (1,n) to (m,1)");
    for (size_t t = 1; t < path.size(); ++t) {
        bool down = path[t].row == path[t - 1].row + 1 && path[t].col == path[t - 1].col;
        bool left = path[t].col == path[t - 1].col - 1 && path[t].row == path[t - 1].row;
        if (!down && !left) throw error(errc::invalid_spec, "path must move down or left");
    }
    return BrokenLine{grid, detail::corners_of_path(path)};
}

/// All lattice points of the line, ordered from (1,n) to (m,1).
inline std::vector<Point> line_path(const BrokenLine& l) {
    std::vector<Point> path;
    path.push_back(l.corners.front());
    for (size_t t = 1; t < l.corners.size(); ++t) {
        Point a = l.corners[t - 1], b = l.corners[t];
        if (a.col == b.col) {
            if (b.row <= a.row) throw error(errc::invalid_spec, "vertical segment must descend");
            for (int r = a.row + 1; r <= b.row; ++r) path.push_back({r, a.col});
        } else if (a.row == b.row) {
            if (b.col >= a.col)
                throw error(errc::invalid_spec, "horizontal segment must move left");
            for (int c = a.col - 1; c >= b.col; --c) path.push_back({a.row, c});
        } else {
            throw error(errc::invalid_spec, "corners must share a row or a column");
        }
    }
    return path;
}

inline void validate_line(const BrokenLine& l) {
    if (l.corners.empty() || !(l.corners.front() == Point{1, l.grid.cols}) ||
        !(l.corners.back() == Point{l.grid.rows, 1}))
        throw error(errc::invalid_spec, "line must run from (1,n) to (m,1)");
    auto path = line_path(l);  // validates monotonicity
    // corners must be exactly the turning points
    if (!(detail::corners_of_path(path) == l.corners))
        throw error(errc::invalid_spec, "corner list not canonical");
}

/// Region of every grid point relative to the line, 1-based [i][j] access
/// through the helper below.
struct RegionPartition {
    Shape grid;
    std::vector<Region> cells;

    Region at(int i, int j) const { return cells[size_t(i - 1) * grid.cols + (j - 1)]; }
    Region at(Point p) const { return at(p.row, p.col); }
};

inline RegionPartition region_partition(const BrokenLine& l) {
    RegionPartition out{l.grid, std::vector<Region>(size_t(l.grid.rows) * l.grid.cols)};
    std::vector<int> rmin(l.grid.cols + 1, l.grid.rows + 1), rmax(l.grid.cols + 1, 0);
    for (Point p : line_path(l)) {
        rmin[p.col] = std::min(rmin[p.col], p.row);
        rmax[p.col] = std::max(rmax[p.col], p.row);
    }
    for (int i = 1; i <= l.grid.rows; ++i)
        for (int j = 1; j <= l.grid.cols; ++j) {
            Region r = i < rmin[j] ? Region::above : (i > rmax[j] ? Region::below : Region::line);
            out.cells[size_t(i - 1) * l.grid.cols + (j - 1)] = r;
        }
    return out;
}

inline std::vector<Point> region_points(const BrokenLine& l, Region which) {
    auto part = region_partition(l);
    std::vector<Point> out;
    for (int i = 1; i <= l.grid.rows; ++i)
        for (int j = 1; j <= l.grid.cols; ++j)
            if (part.at(i, j) == which) out.push_back({i, j});
    return out;
}

inline std::vector<BrokenLine> enumerate_lines(int m, int n) {
    if (m < 1 || n < 1) throw error(errc::invalid_spec, "grid needs m,n >= 1");
    Shape grid{m, n};
    std::vector<BrokenLine> out;
    std::vector<Point> path = {{1, n}};
    auto rec = [&](auto&& self) -> void {
        Point cur = path.back();
        if (cur == Point{m, 1}) {
            out.push_back(line_from_path(grid, path));
            return;
        }
        if (cur.row < m) {
            path.push_back({cur.row + 1, cur.col});
            self(self);
            path.pop_back();
        }
        if (cur.col > 1) {
            path.push_back({cur.row, cur.col - 1});
            self(self);
            path.pop_back();
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

inline BrokenLine maximal_line(Shape grid) {  // (1,n) -> (1,1) -> (m,1)
    std::vector<Point> path;
    for (int c = grid.cols; c >= 1; --c) path.push_back({1, c});
    for (int r = 2; r <= grid.rows; ++r) path.push_back({r, 1});
    return line_from_path(grid, path);
}

inline BrokenLine minimal_line(Shape grid) {  // (1,n) -> (m,n) -> (m,1)
    std::vector<Point> path;
    for (int r = 1; r <= grid.rows; ++r) path.push_back({r, grid.cols});
    for (int c = grid.cols - 1; c >= 1; --c) path.push_back({grid.rows, c});
    return line_from_path(grid, path);
}

/// L1 <= L2 iff S_{L2} is contained in S_{L1}.
inline bool leq(const BrokenLine& l1, const BrokenLine& l2) {
    if (!(l1.grid == l2.grid)) throw error(errc::grid_mismatch, "lines on different grids");
    auto p1 = region_partition(l1), p2 = region_partition(l2);
    for (int i = 1; i <= l1.grid.rows; ++i)
        for (int j = 1; j <= l1.grid.cols; ++j)
            if (p2.at(i, j) == Region::above && p1.at(i, j) != Region::above) return false;
    return true;
}

/// Convex corners: the line arrives vertically and leaves horizontally.
inline std::vector<Point> convex_corners(const BrokenLine& l) {
    auto path = line_path(l);
    std::vector<Point> out;
    for (size_t t = 1; t + 1 < path.size(); ++t)
        if (path[t - 1] == Point{path[t].row - 1, path[t].col} &&
            path[t + 1] == Point{path[t].row, path[t].col - 1})
            out.push_back(path[t]);
    return out;
}

/// Concave corners: the line arrives horizontally and leaves vertically.
inline std::vector<Point> concave_corners(const BrokenLine& l) {
    auto path = line_path(l);
    std::vector<Point> out;
    for (size_t t = 1; t + 1 < path.size(); ++t)
        if (path[t - 1] == Point{path[t].row, path[t].col + 1} &&
            path[t + 1] == Point{path[t].row + 1, path[t].col})
            out.push_back(path[t]);
    return out;
}

namespace detail {

inline BrokenLine toggle_corner(const BrokenLine& l, Point remove, Point add) {
    std::set<Point> pts;
    for (Point p : line_path(l)) pts.insert(p);
    pts.erase(remove);
    pts.insert(add);
    // walk the new point set from (1,n) to (m,1)
    std::vector<Point> path = {{1, l.grid.cols}};
    while (!(path.back() == Point{l.grid.rows, 1})) {
        Point cur = path.back();
        Point down{cur.row + 1, cur.col}, left{cur.row, cur.col - 1};
        if (pts.count(down)) path.push_back(down);
        else if (pts.count(left)) path.push_back(left);
        else throw error(errc::internal, "corner move produced a broken path");
    }
    if (path.size() != pts.size()) throw error(errc::internal, "corner move left stray points");
    return line_from_path(l.grid, path);
}

}  // namespace detail

/// The closest bigger line obtained by cutting the convex corner (c,d):
/// the corner point moves to (c-1,d-1).
inline BrokenLine up_move(const BrokenLine& l, int c, int d) {
    auto cs = convex_corners(l);
    if (std::find(cs.begin(), cs.end(), Point{c, d}) == cs.end())
        throw error(errc::not_a_corner, Point{c, d}.str() + " is not a convex corner");
    return detail::toggle_corner(l, {c, d}, {c - 1, d - 1});
}

/// The closest smaller line obtained by filling the concave corner (c,d):
/// the corner point moves to (c+1,d+1).
inline BrokenLine down_move(const BrokenLine& l, int c, int d) {
    auto cs = concave_corners(l);
    if (std::find(cs.begin(), cs.end(), Point{c, d}) == cs.end())
        throw error(errc::not_a_corner, Point{c, d}.str() + " is not a concave corner");
    return detail::toggle_corner(l, {c, d}, {c + 1, d + 1});
}

// ---------------------------------------------------------------------------
// the quantum-minor family V_L

struct LineFamily {
    BrokenLine line;
    // one entry per grid point, row-major
    std::vector<std::pair<Point, MinorSpec>> members;

    const MinorSpec& at(int i, int j) const {
        return members[size_t(i - 1) * line.grid.cols + (j - 1)].second;
    }
    const MinorSpec& at(Point p) const { return at(p.row, p.col); }
};

/// Biggest solid minor with bottom-right corner (i,j) inside T_L u L.
inline MinorSpec family_member_below(const RegionPartition& part, int i, int j) {
    int smax = std::min(i, j);
    for (int s = smax; s >= 1; --s) {
        bool fits = true;
        for (int a = i - s + 1; a <= i && fits; ++a)
            for (int b = j - s + 1; b <= j && fits; ++b)
                if (part.at(a, b) == Region::above) fits = false;
        if (fits) return MinorSpec::contiguous(i - s + 1, j - s + 1, s);
    }
    throw error(errc::internal, "no minor at a point on or below the line");
}

/// Biggest solid minor with (i,j) as its upper-left corner.
inline MinorSpec family_member_above(Shape grid, int i, int j) {
    int s = std::min(grid.rows - i, grid.cols - j) + 1;
    return MinorSpec::contiguous(i, j, s);
}

inline LineFamily family(const BrokenLine& l) {
    auto part = region_partition(l);
    LineFamily f{l, {}};
    for (int i = 1; i <= l.grid.rows; ++i)
        for (int j = 1; j <= l.grid.cols; ++j) {
            MinorSpec spec = part.at(i, j) == Region::above
                                 ? family_member_above(l.grid, i, j)
                                 : family_member_below(part, i, j);
            f.members.emplace_back(Point{i, j}, std::move(spec));
        }
    return f;
}

/// Alternative characterization for points on or below the line: the biggest
/// solid minor with bottom-right corner (i,j) avoiding S_L and meeting L.
/// Kept for the construction-reading agreement test.
inline std::optional<MinorSpec> family_member_below_alt(const RegionPartition& part, int i,
                                                        int j) {
    int smax = std::min(i, j);
    for (int s = smax; s >= 1; --s) {
        bool no_s = true, meets_line = false;
        for (int a = i - s + 1; a <= i; ++a)
            for (int b = j - s + 1; b <= j; ++b) {
                if (part.at(a, b) == Region::above) no_s = false;
                if (part.at(a, b) == Region::line) meets_line = true;
            }
        if (no_s && meets_line) return MinorSpec::contiguous(i - s + 1, j - s + 1, s);
    }
    return std::nullopt;
}

enum class PointKind { attractive, repulsive };

/// Classification of a position on or below the line by the existence of
/// companions inside T_L u L.
inline PointKind classify_point(const BrokenLine& l, int c, int d) {
    auto part = region_partition(l);
    if (part.at(c, d) == Region::above)
        throw error(errc::point_above_line, Point{c, d}.str() + " lies above the line");
    auto in_tl = [&](int i, int j) {
        return l.grid.contains(i, j) && part.at(i, j) != Region::above;
    };
    bool north = false, east = false, south = false, west = false;
    for (int i = 1; c - i >= 1; ++i) north = north || in_tl(c - i, d);
    for (int j = 1; d + j <= l.grid.cols; ++j) east = east || in_tl(c, d + j);
    for (int i = 1; c + i <= l.grid.rows; ++i) south = south || in_tl(c + i, d);
    for (int j = 1; d - j >= 1; ++j) west = west || in_tl(c, d - j);
    return (north && east) || (south && west) ? PointKind::attractive : PointKind::repulsive;
}

/// The m+n-1 family members sitting at the points of the minimal line
/// (right column and bottom row); non-mutable in the seed of O_q(T_L u L).
inline std::vector<std::pair<Point, MinorSpec>> covariant_set(const BrokenLine& l) {
    LineFamily f = family(l);
    std::vector<std::pair<Point, MinorSpec>> out;
    for (int i = 1; i <= l.grid.rows; ++i)
        out.emplace_back(Point{i, l.grid.cols}, f.at(i, l.grid.cols));
    for (int j = l.grid.cols - 1; j >= 1; --j)
        out.emplace_back(Point{l.grid.rows, j}, f.at(l.grid.rows, j));
    return out;
}

// ---------------------------------------------------------------------------
// order-theoretic helpers

/// Number of S_L cells in each column; decreasing, determines the line.
inline std::vector<int> region_counts(const BrokenLine& l) {
    auto part = region_partition(l);
    std::vector<int> s(l.grid.cols + 1, 0);
    for (int j = 1; j <= l.grid.cols; ++j)
        for (int i = 1; i <= l.grid.rows; ++i)
            if (part.at(i, j) == Region::above) ++s[j];
    return s;
}

inline BrokenLine line_from_region_counts(Shape grid, const std::vector<int>& s) {
    if (s[grid.cols] != 0 || s[1] > grid.rows - 1)
        throw error(errc::invalid_spec, "region counts out of range");
    std::vector<Point> path;
    int row = 1;
    for (int j = grid.cols; j >= 1; --j) {
        int bottom = (j == 1) ? grid.rows : s[j - 1] + 1;
        if (bottom < row) throw error(errc::invalid_spec, "region counts not decreasing");
        for (int r = row; r <= bottom; ++r) path.push_back({r, j});
        row = bottom;
    }
    return line_from_path(grid, path);
}

inline BrokenLine meet(const BrokenLine& a, const BrokenLine& b) {
    if (!(a.grid == b.grid)) throw error(errc::grid_mismatch, "meet of lines on different grids");
    auto sa = region_counts(a), sb = region_counts(b);
    std::vector<int> s(sa.size());
    for (size_t j = 0; j < s.size(); ++j) s[j] = std::max(sa[j], sb[j]);
    return line_from_region_counts(a.grid, s);
}

/// Saturated chain of up-moves from `from` up to `to` (requires from <= to).
/// Returns the full sequence of lines including both ends.
inline std::vector<BrokenLine> up_chain(const BrokenLine& from, const BrokenLine& to) {
    if (!leq(from, to)) throw error(errc::invalid_spec, "up_chain needs from <= to");
    std::vector<BrokenLine> chain = {from};
    BrokenLine cur = from;
    while (!(cur == to)) {
        auto pc = region_partition(cur);
        auto pt = region_partition(to);
        // removable cell of S_cur outside S_to: maximal row, then maximal column
        std::optional<Point> cell;
        for (int i = 1; i <= cur.grid.rows; ++i)
            for (int j = 1; j <= cur.grid.cols; ++j)
                if (pc.at(i, j) == Region::above && pt.at(i, j) != Region::above) {
                    if (!cell || i > cell->row || (i == cell->row && j > cell->col))
                        cell = Point{i, j};
                }
        if (!cell) throw error(errc::internal, "up_chain stalled");
        cur = up_move(cur, cell->row + 1, cell->col + 1);
        chain.push_back(cur);
    }
    return chain;
}

// ---------------------------------------------------------------------------
// text forms

inline std::string render_line(const BrokenLine& l) {
    std::string s;
    for (size_t t = 0; t < l.corners.size(); ++t) {
        if (t) s += "->";
        s += l.corners[t].str();
    }
    return s;
}

inline BrokenLine parse_line(Shape grid, const std::string& text) {
    std::vector<Point> corners;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == '-' || text[i] == '>' || text[i] == ' ')) ++i;
        if (i >= text.size()) break;
        if (text[i] != '(') throw error(errc::config_error, "expected ( in line literal");
        size_t close = text.find(')', i);
        if (close == std::string::npos) throw error(errc::config_error, "unbalanced ( in line");
        std::string inner = text.substr(i + 1, close - i - 1);
        size_t comma = inner.find(',');
        if (comma == std::string::npos) throw error(errc::config_error, "expected r,c in line");
        corners.push_back(
            {std::stoi(inner.substr(0, comma)), std::stoi(inner.substr(comma + 1))});
        i = close + 1;
    }
    BrokenLine l{grid, corners};
    validate_line(l);
    return l;
}

inline std::string ascii_regions(const BrokenLine& l) {
    auto part = region_partition(l);
    std::string out;
    for (int i = 1; i <= l.grid.rows; ++i) {
        for (int j = 1; j <= l.grid.cols; ++j) {
            Region r = part.at(i, j);
            out += r == Region::above ? 'S' : (r == Region::line ? 'L' : 'T');
        }
        out += '\n';
    }
    return out;
}

}  // namespace qma
