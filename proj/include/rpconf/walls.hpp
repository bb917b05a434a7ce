#pragma once

// Wall reachability: moving a single point along a straight segment until it
// lands on a line through two of the other points, without crossing any
// collinearity or coconicity wall on the way.

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "rpconf/conic.hpp"
#include "rpconf/poly.hpp"
#include "rpconf/projective.hpp"

namespace rpconf {

namespace detail {

// det((1-s)p + s q, a, b) as a polynomial in s.
inline Poly segment_poly_line(const Vec3& p, const Vec3& q, const Vec3& a, const Vec3& b) {
    Rat d0 = det3(p, a, b);
    Rat d1 = det3(q, a, b);
    return Poly{{d0, d1 - d0}};
}

// C((1-s)p + s q) as a polynomial in s.
inline Poly segment_poly_conic(const Vec3& p, const Vec3& q, const ConicForm& c) {
    auto m = c.matrix();
    Rat cp = c.eval(Point(p));
    Rat cq = c.eval(Point(q));
    Rat b = dot(Vec3{dot(m[0], p), dot(m[1], p), dot(m[2], p)}, q);  // p^T M q
    return Poly{{cp, 2 * (b - cp), cp - 2 * b + cq}};
}

// True if f has no root in the open interval (0,1). Requires f(0) != 0 and
// f(1) != 0.
inline bool no_root_in_unit_interval(const Poly& f) {
    Poly g = f;
    g.trim();
    if (g.degree() < 1) return true;
    Poly sf = g;
    Poly gc = poly_gcd(g, g.derivative());
    if (gc.degree() >= 1) sf = divide_exact(g, gc);  // keep Sturm counts clean
    auto sturm = sturm_sequence(sf);
    return count_roots(sturm, Rat(0), Rat(1)) == 0;
}

// Exact square root of a rational, if it is a perfect square.
inline bool rational_sqrt(const Rat& x, Rat* out) {
    if (sign(x) < 0) return false;
    mpz_class n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    *out = Rat(rn) / Rat(rd);
    return true;
}

// Coordinates (a : b) of a point x in the span of p and q.
inline std::pair<Rat, Rat> span_coords(const Vec3& p, const Vec3& q, const Vec3& x) {
    for (int k = 0; k < 3; ++k) {
        Vec3 e{};
        e[static_cast<std::size_t>(k)] = 1;
        if (sign(det3(p, q, e)) != 0) {
            Vec3 sol = solve3(p, q, e, x);
            return {sol[0], sol[1]};
        }
    }
    throw UnexpectedRank("span_coords: p and q are proportional");
}

}  // namespace detail

// Degeneracy test for a candidate position of one point against the others:
// true when `x` is collinear with some pair or coconic with some five.
inline bool lands_on_wall(const std::vector<Point>& others, const Point& x) {
    const std::size_t n = others.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (others[k] == x) return true;
        for (std::size_t l = k + 1; l < n; ++l)
            if (collinear(x, others[k], others[l])) return true;
    }
    if (n >= 5) {
        std::vector<std::size_t> idx(n);
        for (std::size_t k = 0; k < n; ++k) idx[k] = k;
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + 5, true);
        do {
            std::array<Point, 5> five{x, x, x, x, x};
            std::size_t w = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (pick[k]) five[w++] = others[k];
            if (sign(conic_through_five(five).eval(x)) == 0) return true;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return false;
}

// True if the open segment from `from` to `to` (for this choice of
// representatives) crosses no collinearity or coconicity wall of the moving
// point against `others`. Both endpoints must be off the walls themselves,
// except that `to` may satisfy exactly the collinearities with pairs listed
// in `allowed_pairs`.
inline bool segment_clear(const std::vector<Point>& others, const Vec3& from, const Vec3& to,
                          const std::vector<std::pair<std::size_t, std::size_t>>& allowed_pairs) {
    const std::size_t n = others.size();
    auto allowed = [&](std::size_t k, std::size_t l) {
        for (const auto& pr : allowed_pairs)
            if ((pr.first == k && pr.second == l) || (pr.first == l && pr.second == k))
                return true;
        return false;
    };
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
            Poly f = detail::segment_poly_line(from, to, others[k].v, others[l].v);
            if (allowed(k, l)) continue;  // vanishes exactly at s = 1, nowhere else
            if (sign(f.eval(Rat(1))) == 0 || sign(f.eval(Rat(0))) == 0) return false;
            if (!detail::no_root_in_unit_interval(f)) return false;
        }
    if (n >= 5) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + 5, true);
        do {
            std::array<Point, 5> five{Point(from), Point(from), Point(from), Point(from),
                                      Point(from)};
            std::size_t w = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (pick[k]) five[w++] = others[k];
            ConicForm c = conic_through_five(five);
            Poly f = detail::segment_poly_conic(from, to, c);
            if (sign(f.eval(Rat(1))) == 0 || sign(f.eval(Rat(0))) == 0) return false;
            if (!detail::no_root_in_unit_interval(f)) return false;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return true;
}

// Rational sample parameters on the line spanned by p and q, one inside each
// interval cut out by the critical parameters where a moving point on the
// line hits a wall against `others`. Criticals are the line's intersections
// with pair-lines (rational) and with five-point conics (isolated
// algebraically).
inline std::vector<Rat> line_sample_parameters(const std::vector<Point>& others, const Point& p,
                                               const Point& q) {
    std::vector<Rat> rationals{Rat(0)};  // the base point p itself
    std::vector<std::pair<Rat, Rat>> intervals;
    std::vector<std::vector<Poly>> sturms;
    const std::size_t n = others.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
            Vec3 L = cross(others[k].v, others[l].v);
            Vec3 x = cross(cross(p.v, q.v), L);
            if (is_zero(x)) continue;  // the pair-line is the moving line itself
            auto [a, b] = detail::span_coords(p.v, q.v, x);
            if (sign(a) != 0) rationals.push_back(b / a);
        }
    if (n >= 5) {
        std::vector<std::string> seen;
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + 5, true);
        do {
            std::array<Point, 5> five{p, p, p, p, p};
            std::size_t w = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (pick[k]) five[w++] = others[k];
            ConicForm c = conic_through_five(five);
            // distinct five-point subsets share at least four points, so
            // identical conics are literally equal; skip duplicates
            Rat scale(0);
            for (const Rat& v : c.c)
                if (sign(v) != 0) {
                    scale = v;
                    break;
                }
            std::string key;
            for (const Rat& v : c.c) key += to_string(v / scale) + ",";
            if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
            seen.push_back(key);
            // c(p + t q) as a polynomial in t
            auto m = c.matrix();
            Rat cp = c.eval(p), cq = c.eval(q);
            Rat bb = dot(Vec3{dot(m[0], p.v), dot(m[1], p.v), dot(m[2], p.v)}, q.v);
            Poly f{{cp, 2 * bb, cq}};
            f.trim();
            if (f.degree() < 1) continue;
            if (f.degree() == 1) {
                rationals.push_back(-f.c[0] / f.c[1]);
                continue;
            }
            Rat disc = f.c[1] * f.c[1] - 4 * f.c[2] * f.c[0];
            int ds = sign(disc);
            if (ds < 0) continue;
            Rat sq;
            if (ds == 0) {
                rationals.push_back(-f.c[1] / (2 * f.c[2]));
            } else if (detail::rational_sqrt(disc, &sq)) {
                rationals.push_back((-f.c[1] + sq) / (2 * f.c[2]));
                rationals.push_back((-f.c[1] - sq) / (2 * f.c[2]));
            } else {
                // the two roots are irrational, never equal to a rational
                // breakpoint, so interval refinement below terminates
                for (auto iv : isolate_roots(f)) {
                    intervals.push_back(iv);
                    sturms.push_back(sturm_sequence(f));
                }
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    // shrink isolating intervals until they avoid every rational critical
    // and each other
    for (std::size_t it = 0; it < intervals.size(); ++it) {
        auto refine = [&](std::size_t idx) {
            auto& iv = intervals[idx];
            Rat mid = (iv.first + iv.second) / 2;
            if (count_roots(sturms[idx], iv.first, mid) == 1)
                iv.second = mid;
            else
                iv.first = mid;
        };
        bool again = true;
        while (again) {
            again = false;
            for (const Rat& r : rationals)
                if (intervals[it].first < r && r < intervals[it].second) {
                    refine(it);
                    again = true;
                }
            for (std::size_t jt = 0; jt < it; ++jt)
                if (intervals[it].first < intervals[jt].second &&
                    intervals[jt].first < intervals[it].second) {
                    refine(it);
                    refine(jt);
                    again = true;
                }
        }
    }
    std::vector<Rat> breaks = rationals;
    for (const auto& iv : intervals) {
        breaks.push_back(iv.first);
        breaks.push_back(iv.second);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::vector<Rat> out;
    out.push_back(breaks.front() - 1);
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k)
        out.push_back((breaks[k] + breaks[k + 1]) / 2);
    out.push_back(breaks.back() + 1);
    return out;
}

namespace detail {

struct Landing {
    Vec3 from;  // representative of the mover's position
    Vec3 to;    // oriented representative of the landing point on the line
};

}  // namespace detail

// Search a straight wall-free segment taking point `mover` onto the line
// through points `i` and `j`. All indices are 0-based into `pts`.
inline std::optional<detail::Landing> find_clear_landing(const std::vector<Point>& pts,
                                                         std::size_t mover, std::size_t i,
                                                         std::size_t j) {
    if (mover == i || mover == j) throw Error("find_clear_landing: mover spans the target line");
    std::vector<Point> others;
    std::size_t oi = 0, oj = 0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k == mover) continue;
        if (k == i) oi = others.size();
        if (k == j) oj = others.size();
        others.push_back(pts[k]);
    }
    const Point& p = pts[i];
    const Point& q = pts[j];
    for (const Rat& t : line_sample_parameters(others, p, q)) {
        Vec3 xv{p.v[0] + t * q.v[0], p.v[1] + t * q.v[1], p.v[2] + t * q.v[2]};
        Point x(xv);
        // the target must be generic except for the single collinearity
        bool bad = false;
        for (std::size_t k = 0; k < others.size() && !bad; ++k) {
            if (others[k] == x) bad = true;
            for (std::size_t l = k + 1; l < others.size() && !bad; ++l) {
                if ((k == oi && l == oj) || (k == oj && l == oi)) continue;
                if (collinear(x, others[k], others[l])) bad = true;
            }
        }
        if (!bad && others.size() >= 5) {
            std::vector<bool> pick(others.size(), false);
            std::fill(pick.begin(), pick.begin() + 5, true);
            do {
                std::array<Point, 5> five{x, x, x, x, x};
                std::size_t w = 0;
                for (std::size_t k = 0; k < others.size(); ++k)
                    if (pick[k]) five[w++] = others[k];
                if (sign(conic_through_five(five).eval(x)) == 0) {
                    bad = true;
                    break;
                }
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        if (bad) continue;
        for (int orient = 0; orient < 2; ++orient) {
            Vec3 to = xv;
            if (orient)
                for (auto& v : to) v = -v;
            if (segment_clear(others, pts[mover].v, to, {{oi, oj}}))
                return detail::Landing{pts[mover].v, to};
        }
    }
    return std::nullopt;
}

// All clear landings of `mover` on the line through `i` and `j`, one per
// sample interval (first passing orientation). Distinct landings may lie in
// different chambers of the wall.
inline std::vector<detail::Landing> find_clear_landings(const std::vector<Point>& pts,
                                                        std::size_t mover, std::size_t i,
                                                        std::size_t j) {
    if (mover == i || mover == j) throw Error("find_clear_landings: mover spans the target line");
    std::vector<Point> others;
    std::size_t oi = 0, oj = 0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k == mover) continue;
        if (k == i) oi = others.size();
        if (k == j) oj = others.size();
        others.push_back(pts[k]);
    }
    const Point& p = pts[i];
    const Point& q = pts[j];
    std::vector<detail::Landing> out;
    for (const Rat& t : line_sample_parameters(others, p, q)) {
        Vec3 xv{p.v[0] + t * q.v[0], p.v[1] + t * q.v[1], p.v[2] + t * q.v[2]};
        Point x(xv);
        bool bad = false;
        for (std::size_t k = 0; k < others.size() && !bad; ++k) {
            if (others[k] == x) bad = true;
            for (std::size_t l = k + 1; l < others.size() && !bad; ++l) {
                if ((k == oi && l == oj) || (k == oj && l == oi)) continue;
                if (collinear(x, others[k], others[l])) bad = true;
            }
        }
        if (!bad && others.size() >= 5) {
            std::vector<bool> pick(others.size(), false);
            std::fill(pick.begin(), pick.begin() + 5, true);
            do {
                std::array<Point, 5> five{x, x, x, x, x};
                std::size_t w = 0;
                for (std::size_t k = 0; k < others.size(); ++k)
                    if (pick[k]) five[w++] = others[k];
                if (sign(conic_through_five(five).eval(x)) == 0) {
                    bad = true;
                    break;
                }
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        if (bad) continue;
        for (int orient = 0; orient < 2; ++orient) {
            Vec3 to = xv;
            if (orient)
                for (auto& v : to) v = -v;
            if (segment_clear(others, pts[mover].v, to, {{oi, oj}})) {
                out.push_back(detail::Landing{pts[mover].v, to});
                break;
            }
        }
    }
    return out;
}

// Can point `mover` reach the line through points `i` and `j` along a
// straight segment without crossing any wall? On success, *out_target (if
// given) receives a landing position.
inline bool can_reach_line(const std::vector<Point>& pts, std::size_t mover, std::size_t i,
                           std::size_t j, Point* out_target = nullptr) {
    auto landing = find_clear_landing(pts, mover, i, j);
    if (!landing) return false;
    if (out_target) *out_target = Point(landing->to);
    return true;
}

// Move point `mover` across the line through points `i` and `j`: land on the
// wall and continue on the same straight path into the adjacent chamber.
// Returns the full point set with the mover displaced, or nullopt when no
// wall-free segment onto the line exists.
inline std::optional<std::vector<Point>> cross_wall_at(const std::vector<Point>& pts,
                                                       std::size_t mover, std::size_t i,
                                                       std::size_t j,
                                                       const detail::Landing& landing_in) {
    std::optional<detail::Landing> landing = landing_in;
    std::vector<Point> others;
    for (std::size_t k = 0; k < pts.size(); ++k)
        if (k != mover) others.push_back(pts[k]);
    Rat eps(1, 4);
    for (int tries = 0; tries < 200; ++tries, eps /= 2) {
        Rat s = 1 + eps;
        Vec3 y{(1 - s) * landing->from[0] + s * landing->to[0],
               (1 - s) * landing->from[1] + s * landing->to[1],
               (1 - s) * landing->from[2] + s * landing->to[2]};
        Point Y(y);
        if (lands_on_wall(others, Y)) continue;
        // nothing else may vanish on (1, s]: the crossed line is linear in s
        // with its only root at s = 1, and every other wall polynomial is
        // nonzero at both endpoints
        bool clear = true;
        for (std::size_t k = 0; k < others.size() && clear; ++k)
            for (std::size_t l = k + 1; l < others.size() && clear; ++l) {
                if ((k == (i < mover ? i : i - 1) && l == (j < mover ? j : j - 1)) ||
                    (l == (i < mover ? i : i - 1) && k == (j < mover ? j : j - 1)))
                    continue;
                Poly f = detail::segment_poly_line(landing->from, landing->to, others[k].v,
                                                   others[l].v);
                auto sturm = sturm_sequence(f);
                if (count_roots(sturm, Rat(1), s) != 0) clear = false;
            }
        if (clear && others.size() >= 5) {
            std::vector<bool> pick(others.size(), false);
            std::fill(pick.begin(), pick.begin() + 5, true);
            do {
                std::array<Point, 5> five{Y, Y, Y, Y, Y};
                std::size_t w = 0;
                for (std::size_t k = 0; k < others.size(); ++k)
                    if (pick[k]) five[w++] = others[k];
                Poly f = detail::segment_poly_conic(landing->from, landing->to,
                                                    conic_through_five(five));
                f.trim();
                if (f.degree() < 1) continue;
                auto sturm = sturm_sequence(f);
                if (count_roots(sturm, Rat(1), s) != 0) {
                    clear = false;
                    break;
                }
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        if (!clear) continue;
        std::vector<Point> out = pts;
        out[mover] = Y;
        return out;
    }
    return std::nullopt;
}

inline std::optional<std::vector<Point>> cross_wall(const std::vector<Point>& pts,
                                                    std::size_t mover, std::size_t i,
                                                    std::size_t j) {
    auto landing = find_clear_landing(pts, mover, i, j);
    if (!landing) return std::nullopt;
    return cross_wall_at(pts, mover, i, j, *landing);
}

namespace detail {

// Second intersection of the conic with the line through `a` (on the conic)
// and `m`: x = c(m)·a − 2(aᵀM m)·m.
inline Vec3 chord_point(const ConicForm& c, const Vec3& a, const Vec3& m) {
    auto mat = c.matrix();
    Rat cm = c.eval(Point(m));
    Rat am = dot(Vec3{dot(mat[0], a), dot(mat[1], a), dot(mat[2], a)}, m);
    Vec3 x;
    for (int k = 0; k < 3; ++k)
        x[static_cast<std::size_t>(k)] =
            cm * a[static_cast<std::size_t>(k)] - 2 * am * m[static_cast<std::size_t>(k)];
    return x;
}

// Rational chart of a conic: t -> second intersection of the chord from the
// base point `a` through m0 + t·m1.
struct ConicChart {
    ConicForm c;
    Vec3 a, m0, m1;

    Vec3 at(const Rat& t) const {
        Vec3 m{m0[0] + t * m1[0], m0[1] + t * m1[1], m0[2] + t * m1[2]};
        return chord_point(c, a, m);
    }
    // chart parameter of a point p on the conic; false when the chord a–p is
    // the line m0 m1 direction at infinity of the chart
    bool t_of(const Vec3& p, Rat* out) const {
        Vec3 L;
        if (is_zero(cross(a, p))) {
            auto mat = c.matrix();
            L = Vec3{dot(mat[0], a), dot(mat[1], a), dot(mat[2], a)};  // tangent at a
        } else {
            L = cross(a, p);
        }
        Rat d = dot(L, m1);
        if (sign(d) == 0) return false;
        *out = -dot(L, m0) / d;
        return true;
    }
};

}  // namespace detail

// Search a straight wall-free segment taking point `mover` onto the conic
// through the five points `five` (0-based indices into `pts`). Every critical
// position on the conic is rational in the chord chart, so sampling the
// midpoints of the parameter intervals is exhaustive.
inline std::optional<detail::Landing> find_clear_conic_landing(
    const std::vector<Point>& pts, std::size_t mover, const std::array<std::size_t, 5>& five) {
    std::vector<Point> others;
    std::vector<std::size_t> five_o;  // indices of the conic's points in others-space
    std::vector<std::size_t> extra;   // the remaining others
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k == mover) continue;
        if (std::find(five.begin(), five.end(), k) != five.end())
            five_o.push_back(others.size());
        else
            extra.push_back(others.size());
        others.push_back(pts[k]);
    }
    if (five_o.size() != 5) throw Error("find_clear_conic_landing: bad subset");
    std::array<Point, 5> base{others[five_o[0]], others[five_o[1]], others[five_o[2]],
                              others[five_o[3]], others[five_o[4]]};
    detail::ConicChart ch{conic_through_five(base), base[0].v, base[1].v, base[2].v};
    // critical chart parameters: the five base points, and for each extra
    // point the second intersections of its chords through the base points
    std::vector<Rat> ts;
    Rat t;
    for (const Point& b : base)
        if (ch.t_of(b.v, &t)) ts.push_back(t);
    for (std::size_t e : extra)
        for (const Point& b : base) {
            Vec3 x = detail::chord_point(ch.c, b.v, others[e].v);
            if (!is_zero(x) && ch.t_of(x, &t)) ts.push_back(t);
        }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<Rat> samples;
    samples.push_back(ts.front() - 1);
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) samples.push_back((ts[k] + ts[k + 1]) / 2);
    samples.push_back(ts.back() + 1);
    auto other_root_outside = [](const Poly& f, const Rat& lo, const Rat& hi) {
        // f vanishes at s = 1; the remaining root must avoid (lo, hi]
        Poly g = f;
        g.trim();
        if (g.degree() < 2) return true;
        Rat r = g.c[0] / g.c[2];  // product of roots, one of them 1
        return !(lo < r && r <= hi);  // r == 1 (tangency) is rejected too
    };
    for (const Rat& s : samples) {
        Vec3 xv = ch.at(s);
        if (is_zero(xv)) continue;
        Point x(xv);
        // the target must be generic except for the single coconicity
        bool bad = false;
        for (std::size_t k = 0; k < others.size() && !bad; ++k) {
            if (others[k] == x) bad = true;
            for (std::size_t l = k + 1; l < others.size() && !bad; ++l)
                if (collinear(x, others[k], others[l])) bad = true;
        }
        if (!bad && !extra.empty()) {
            std::vector<bool> pick(others.size(), false);
            std::fill(pick.begin(), pick.begin() + 5, true);
            do {
                std::array<Point, 5> fv{x, x, x, x, x};
                std::size_t w = 0;
                std::size_t in_five = 0;
                for (std::size_t k = 0; k < others.size(); ++k)
                    if (pick[k]) {
                        fv[w++] = others[k];
                        if (std::find(five_o.begin(), five_o.end(), k) != five_o.end())
                            ++in_five;
                    }
                if (in_five == 5) continue;  // the target conic itself
                if (sign(conic_through_five(fv).eval(x)) == 0) {
                    bad = true;
                    break;
                }
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        if (bad) continue;
        for (int orient = 0; orient < 2; ++orient) {
            Vec3 to = xv;
            if (orient)
                for (auto& v : to) v = -v;
            const Vec3& from = pts[mover].v;
            bool clear = true;
            for (std::size_t k = 0; k < others.size() && clear; ++k)
                for (std::size_t l = k + 1; l < others.size() && clear; ++l) {
                    Poly f = detail::segment_poly_line(from, to, others[k].v, others[l].v);
                    if (sign(f.eval(Rat(0))) == 0 || sign(f.eval(Rat(1))) == 0 ||
                        !detail::no_root_in_unit_interval(f))
                        clear = false;
                }
            if (clear) {
                std::vector<bool> pick(others.size(), false);
                std::fill(pick.begin(), pick.begin() + 5, true);
                do {
                    std::array<Point, 5> fv{x, x, x, x, x};
                    std::size_t w = 0;
                    std::size_t in_five = 0;
                    for (std::size_t k = 0; k < others.size(); ++k)
                        if (pick[k]) {
                            fv[w++] = others[k];
                            if (std::find(five_o.begin(), five_o.end(), k) != five_o.end())
                                ++in_five;
                        }
                    Poly f = detail::segment_poly_conic(from, to, conic_through_five(fv));
                    if (in_five == 5) {
                        // the target wall: vanishes at s = 1 and nowhere else
                        if (sign(f.eval(Rat(0))) == 0 ||
                            !other_root_outside(f, Rat(0), Rat(1))) {
                            clear = false;
                            break;
                        }
                        continue;
                    }
                    if (sign(f.eval(Rat(0))) == 0 || sign(f.eval(Rat(1))) == 0 ||
                        !detail::no_root_in_unit_interval(f)) {
                        clear = false;
                        break;
                    }
                } while (std::prev_permutation(pick.begin(), pick.end()));
            }
            if (clear) return detail::Landing{from, to};
        }
    }
    return std::nullopt;
}

// Move point `mover` across the conic through the five points `five`: land
// on the wall and continue into the adjacent chamber.
inline std::optional<std::vector<Point>> cross_conic(const std::vector<Point>& pts,
                                                     std::size_t mover,
                                                     const std::array<std::size_t, 5>& five) {
    auto landing = find_clear_conic_landing(pts, mover, five);
    if (!landing) return std::nullopt;
    std::vector<Point> others;
    std::vector<std::size_t> five_o;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k == mover) continue;
        if (std::find(five.begin(), five.end(), k) != five.end())
            five_o.push_back(others.size());
        others.push_back(pts[k]);
    }
    Rat eps(1, 4);
    for (int tries = 0; tries < 200; ++tries, eps /= 2) {
        Rat s = 1 + eps;
        Vec3 y{(1 - s) * landing->from[0] + s * landing->to[0],
               (1 - s) * landing->from[1] + s * landing->to[1],
               (1 - s) * landing->from[2] + s * landing->to[2]};
        Point Y(y);
        if (lands_on_wall(others, Y)) continue;
        bool clear = true;
        for (std::size_t k = 0; k < others.size() && clear; ++k)
            for (std::size_t l = k + 1; l < others.size() && clear; ++l) {
                Poly f =
                    detail::segment_poly_line(landing->from, landing->to, others[k].v, others[l].v);
                auto sturm = sturm_sequence(f);
                if (count_roots(sturm, Rat(1), s) != 0) clear = false;
            }
        if (clear) {
            std::vector<bool> pick(others.size(), false);
            std::fill(pick.begin(), pick.begin() + 5, true);
            do {
                std::array<Point, 5> fv{Y, Y, Y, Y, Y};
                std::size_t w = 0;
                std::size_t in_five = 0;
                for (std::size_t k = 0; k < others.size(); ++k)
                    if (pick[k]) {
                        fv[w++] = others[k];
                        if (std::find(five_o.begin(), five_o.end(), k) != five_o.end()) ++in_five;
                    }
                Poly f = detail::segment_poly_conic(landing->from, landing->to,
                                                    conic_through_five(fv));
                f.trim();
                if (f.degree() < 1) continue;
                if (in_five == 5) {
                    // crossed wall: root at s = 1; the other root must avoid (1, s]
                    if (f.degree() == 2) {
                        Rat r = f.c[0] / f.c[2];
                        if (Rat(1) < r && r <= s) {
                            clear = false;
                            break;
                        }
                    }
                    continue;
                }
                auto sturm = sturm_sequence(f);
                if (count_roots(sturm, Rat(1), s) != 0) {
                    clear = false;
                    break;
                }
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        if (!clear) continue;
        std::vector<Point> out = pts;
        out[mover] = Y;
        return out;
    }
    return std::nullopt;
}

// Move point `mover`, currently lying on exactly one coconicity wall and no
// other wall, straight towards `toward`, stopping inside the adjacent
// chamber before hitting anything.
inline Point leave_conic(const std::vector<Point>& pts, std::size_t mover, const Vec3& toward) {
    std::vector<Point> others;
    for (std::size_t k = 0; k < pts.size(); ++k)
        if (k != mover) others.push_back(pts[k]);
    const Vec3& from = pts[mover].v;
    std::vector<Poly> polys;
    for (std::size_t k = 0; k < others.size(); ++k)
        for (std::size_t l = k + 1; l < others.size(); ++l) {
            Poly f = detail::segment_poly_line(from, toward, others[k].v, others[l].v);
            if (sign(f.eval(Rat(0))) == 0)
                throw MultipleDegeneracies("leave_conic: mover collinear with a pair");
            polys.push_back(f);
        }
    if (others.size() >= 5) {
        std::vector<bool> pick(others.size(), false);
        std::fill(pick.begin(), pick.begin() + 5, true);
        do {
            std::array<Point, 5> five{pts[mover], pts[mover], pts[mover], pts[mover],
                                      pts[mover]};
            std::size_t w = 0;
            for (std::size_t k = 0; k < others.size(); ++k)
                if (pick[k]) five[w++] = others[k];
            Poly f = detail::segment_poly_conic(from, toward, conic_through_five(five));
            f.trim();
            if (!f.is_zero() && sign(f.c[0]) == 0) {
                // the wall conic itself; divide out the root at s = 0
                f.c.erase(f.c.begin());
                f.trim();
                if (f.is_zero() || sign(f.eval(Rat(0))) == 0)
                    throw MultipleDegeneracies("leave_conic: direction tangent to the wall");
            }
            polys.push_back(f);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    Rat s(1, 4);
    for (int tries = 0; tries < 200; ++tries, s /= 2) {
        bool clear = true;
        for (const Poly& f : polys) {
            if (f.degree() < 1) continue;
            if (sign(f.eval(s)) == 0) {
                clear = false;
                break;
            }
            auto sturm = sturm_sequence(f);
            if (count_roots(sturm, Rat(0), s) != 0) {
                clear = false;
                break;
            }
        }
        if (clear)
            return Point(Vec3{(1 - s) * from[0] + s * toward[0], (1 - s) * from[1] + s * toward[1],
                              (1 - s) * from[2] + s * toward[2]});
    }
    throw Error("leave_conic: could not find a clear step");
}

// All triples {a,b,c} (1-based labels) such that one of the three points can
// reach the line through the other two without crossing a wall.
inline std::vector<std::array<Label, 3>> admissible_triples(const std::vector<Point>& pts) {
    std::vector<std::array<Label, 3>> out;
    const std::size_t n = pts.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                if (can_reach_line(pts, a, b, c) || can_reach_line(pts, b, a, c) ||
                    can_reach_line(pts, c, a, b))
                    out.push_back({static_cast<Label>(a + 1), static_cast<Label>(b + 1),
                                   static_cast<Label>(c + 1)});
            }
    return out;
}

}  // namespace rpconf
