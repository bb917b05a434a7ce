#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "rpconf/cyclic.hpp"
#include "rpconf/errors.hpp"
#include "rpconf/linalg.hpp"

namespace rpconf {

struct ProjectivePoint {
    Vec3 v;
    ProjectivePoint() : v{Rat(0), Rat(0), Rat(1)} {}
    ProjectivePoint(Rat x0, Rat x1, Rat x2) : v{std::move(x0), std::move(x1), std::move(x2)} {
        if (is_zero(v)) throw Error("projective point (0:0:0)");
    }
    explicit ProjectivePoint(Vec3 w) : v(std::move(w)) {
        if (is_zero(v)) throw Error("projective point (0:0:0)");
    }
    bool operator==(const ProjectivePoint& o) const { return proportional(v, o.v); }
    bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }
};

struct ProjectiveLine {
    Vec3 v;
    ProjectiveLine() : v{Rat(0), Rat(0), Rat(1)} {}
    ProjectiveLine(Rat a0, Rat a1, Rat a2) : v{std::move(a0), std::move(a1), std::move(a2)} {
        if (is_zero(v)) throw Error("projective line (0:0:0)");
    }
    explicit ProjectiveLine(Vec3 w) : v(std::move(w)) {
        if (is_zero(v)) throw Error("projective line (0:0:0)");
    }
    bool operator==(const ProjectiveLine& o) const { return proportional(v, o.v); }
    bool operator!=(const ProjectiveLine& o) const { return !(*this == o); }
};

using Point = ProjectivePoint;
using Line = ProjectiveLine;

inline bool incident(const Line& l, const Point& p) { return sign(dot(l.v, p.v)) == 0; }

inline bool collinear(const Point& p, const Point& q, const Point& r) {
    return sign(det3(p.v, q.v, r.v)) == 0;
}

inline Line line_through(const Point& p, const Point& q) {
    Vec3 c = cross(p.v, q.v);
    if (is_zero(c)) throw IdenticalInputs("line_through: identical points");
    return Line(std::move(c));
}

inline Point meet(const Line& l1, const Line& l2) {
    Vec3 c = cross(l1.v, l2.v);
    if (is_zero(c)) throw IdenticalInputs("meet: identical lines");
    return Point(std::move(c));
}

// A point of the projective parameter line, kept as t = num or the point at
// infinity. Values are compared along the circle R u {inf}.
struct RP1 {
    Rat t;
    bool inf = false;
    bool operator==(const RP1& o) const { return inf == o.inf && (inf || t == o.t); }
    bool operator<(const RP1& o) const {
        if (inf != o.inf) return !inf;  // finite values precede infinity
        return !inf && t < o.t;
    }
};

inline RP1 rp1(const Rat& alpha, const Rat& beta) {
    if (sign(beta) == 0) {
        if (sign(alpha) == 0) throw Error("rp1: (0:0)");
        return {Rat(0), true};
    }
    return {alpha / beta, false};
}

// Sorts labelled RP1 values along the circle and returns the cyclic word.
// Throws SharedDirection if two values coincide.
inline CyclicWord cyclic_sort_rp1(std::vector<std::pair<RP1, Label>> items) {
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < items.size(); ++i)
        if (items[i].first == items[i + 1].first)
            throw SharedDirection("coincident positions on the parameter circle");
    std::vector<Label> w;
    w.reserve(items.size());
    for (auto& it : items) w.push_back(it.second);
    return CyclicWord(std::move(w));
}

// Basis pair of the pencil of lines through a point; every line through the
// center is alpha*first + beta*second.
struct LinePencilBasis {
    Vec3 l1, l2;
};

inline LinePencilBasis line_pencil_basis(const Point& c) {
    const Vec3 e[3] = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    std::vector<Vec3> got;
    for (int i = 0; i < 3 && got.size() < 2; ++i) {
        Vec3 cand = cross(c.v, e[i]);
        if (is_zero(cand)) continue;
        if (got.size() == 1 && proportional(got[0], cand)) continue;
        got.push_back(cand);
    }
    return {got[0], got[1]};
}

// Coordinate of a line through the basis center in the pencil.
inline RP1 pencil_coordinate_of_line(const LinePencilBasis& b, const Vec3& line) {
    // line = alpha*l1 + beta*l2: pick an invertible 2x2 minor.
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            Rat d = b.l1[i] * b.l2[j] - b.l1[j] * b.l2[i];
            if (sign(d) == 0) continue;
            Rat alpha = (line[i] * b.l2[j] - line[j] * b.l2[i]) / d;
            Rat beta = (b.l1[i] * line[j] - b.l1[j] * line[i]) / d;
            return rp1(alpha, beta);
        }
    }
    throw Error("degenerate line pencil basis");
}

inline RP1 pencil_direction(const Point& center, const LinePencilBasis& b, const Point& p) {
    Vec3 l = cross(center.v, p.v);
    if (is_zero(l)) throw CoincidentWithCenter("pencil_direction: point equals center");
    return pencil_coordinate_of_line(b, l);
}

// Cyclic order of the lines center->p_i on the pencil of lines through the
// center. Labels are 1-based positions unless given explicitly.
inline CyclicWord cyclic_order_in_line_pencil(const Point& center, const std::vector<Point>& pts,
                                              const std::vector<Label>& labels = {}) {
    LinePencilBasis b = line_pencil_basis(center);
    std::vector<std::pair<RP1, Label>> items;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Label l = labels.empty() ? static_cast<Label>(i + 1) : labels[i];
        items.emplace_back(pencil_direction(center, b, pts[i]), l);
    }
    return cyclic_sort_rp1(std::move(items));
}

// Coordinates adapted to a base triangle: T maps the standard frame onto the
// base points.
inline Point cremona_transform(const std::array<Point, 3>& base, const Point& p) {
    if (collinear(base[0], base[1], base[2]))
        throw CollinearBase("cremona_transform: collinear base points");
    for (const auto& b : base)
        if (p == b) throw BasePointInput("cremona_transform: point is a base point");
    Vec3 y = solve3(base[0].v, base[1].v, base[2].v, p.v);
    Vec3 img = {y[1] * y[2], y[0] * y[2], y[0] * y[1]};
    if (is_zero(img)) throw BasePointInput("cremona_transform: image undefined");
    // back through T
    Vec3 out = {base[0].v[0] * img[0] + base[1].v[0] * img[1] + base[2].v[0] * img[2],
                base[0].v[1] * img[0] + base[1].v[1] * img[1] + base[2].v[1] * img[2],
                base[0].v[2] * img[0] + base[1].v[2] * img[1] + base[2].v[2] * img[2]};
    return Point(std::move(out));
}

// First line from a deterministic candidate list that avoids all points.
inline Line find_chart_line(const std::vector<Point>& pts) {
    auto avoids = [&](const Line& l) {
        for (const auto& p : pts)
            if (incident(l, p)) return false;
        return true;
    };
    const Line axes[3] = {Line(Rat(0), Rat(0), Rat(1)), Line(Rat(0), Rat(1), Rat(0)),
                          Line(Rat(1), Rat(0), Rat(0))};
    for (const auto& l : axes)
        if (avoids(l)) return l;
    for (int n = 1; n <= 12; ++n) {
        for (int a = -n; a <= n; ++a)
            for (int b = -n; b <= n; ++b)
                for (int c = -n; c <= n; ++c) {
                    if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != n) continue;
                    if (a == 0 && b == 0 && c == 0) continue;
                    Line l{Rat(a), Rat(b), Rat(c)};
                    if (avoids(l)) return l;
                }
    }
    throw Error("find_chart_line: no candidate avoids the points");
}

// Affine coordinates in the chart complementing `chart`.
inline std::pair<Rat, Rat> chart_coords(const Line& chart, const Point& p) {
    Rat w = dot(chart.v, p.v);
    if (sign(w) == 0) throw ChartThroughPoint("chart line passes through a point");
    // complete chart.v to a basis of the dual space with two standard covectors
    int skip = 0;
    Rat best = abs(chart.v[0]);
    for (int i = 1; i < 3; ++i)
        if (abs(chart.v[i]) > best) { best = abs(chart.v[i]); skip = i; }
    int i1 = (skip + 1) % 3, i2 = (skip + 2) % 3;
    return {p.v[static_cast<std::size_t>(i1)] / w, p.v[static_cast<std::size_t>(i2)] / w};
}

inline int orient2(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b,
                   const std::pair<Rat, Rat>& c) {
    return sign((b.first - a.first) * (c.second - a.second) -
                (b.second - a.second) * (c.first - a.first));
}

// Every point a vertex of the convex hull of the chart images.
inline bool convex_position_in_chart(const std::vector<Point>& pts, const Line& chart) {
    std::vector<std::pair<Rat, Rat>> a;
    a.reserve(pts.size());
    for (const auto& p : pts) a.push_back(chart_coords(chart, p));
    const std::size_t n = a.size();
    if (n < 3) return true;
    // p is a hull vertex iff it is not inside/on a triangle of three others
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t x = 0; x < n; ++x) {
            if (x == i) continue;
            for (std::size_t y = x + 1; y < n; ++y) {
                if (y == i) continue;
                for (std::size_t z = y + 1; z < n; ++z) {
                    if (z == i) continue;
                    int o1 = orient2(a[x], a[y], a[i]);
                    int o2 = orient2(a[y], a[z], a[i]);
                    int o3 = orient2(a[z], a[x], a[i]);
                    if (o1 >= 0 && o2 >= 0 && o3 >= 0) return false;
                    if (o1 <= 0 && o2 <= 0 && o3 <= 0) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace rpconf
