#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "rpconf/errors.hpp"
#include "rpconf/linalg.hpp"
#include "rpconf/projective.hpp"

namespace rpconf {

enum class Side { Interior, On, Exterior };

// Ternary symmetric quadratic form, coefficient order
//   a*x0^2 + b*x1^2 + c*x2^2 + d*x0*x1 + e*x0*x2 + f*x1*x2.
// When signature-normalized, det of the matrix is negative and the form is
// negative on interior points.
struct ConicForm {
    std::array<Rat, 6> c{};
    bool normalized = false;

    Rat eval(const Point& p) const {
        const Rat &x = p.v[0], &y = p.v[1], &z = p.v[2];
        return c[0] * x * x + c[1] * y * y + c[2] * z * z + c[3] * x * y + c[4] * x * z +
               c[5] * y * z;
    }

    // Symmetric matrix rows.
    std::array<Vec3, 3> matrix() const {
        Rat h(1, 2);
        return {Vec3{c[0], c[3] * h, c[4] * h}, Vec3{c[3] * h, c[1], c[5] * h},
                Vec3{c[4] * h, c[5] * h, c[2]}};
    }

    Rat det() const {
        auto m = matrix();
        return det3(m[0], m[1], m[2]);
    }

    // Gradient line at a point of the conic (polar line).
    Line tangent_at(const Point& p) const {
        auto m = matrix();
        Vec3 g = {dot(m[0], p.v), dot(m[1], p.v), dot(m[2], p.v)};
        if (is_zero(g)) throw DegenerateConic("tangent at a singular point");
        return Line(std::move(g));
    }
};

inline std::array<Rat, 6> conic_row(const Point& p) {
    const Rat &x = p.v[0], &y = p.v[1], &z = p.v[2];
    return {x * x, y * y, z * z, x * y, x * z, y * z};
}

// Signature normalization: det < 0, interior = negative values.
inline ConicForm signature_normalized(ConicForm q) {
    Rat d = q.det();
    if (sign(d) == 0) throw DegenerateConic("signature_normalized: singular form");
    if (sign(d) > 0)
        for (auto& x : q.c) x = -x;
    q.normalized = true;
    return q;
}

inline ConicForm conic_through_five(const std::array<Point, 5>& pts) {
    Matrix m;
    for (const auto& p : pts) {
        auto row = conic_row(p);
        m.emplace_back(row.begin(), row.end());
    }
    auto ns = null_space(std::move(m));
    if (ns.size() != 1) throw DegenerateConic("conic_through_five: interpolation rank drop");
    ConicForm q;
    for (int i = 0; i < 6; ++i) q.c[static_cast<std::size_t>(i)] = ns[0][static_cast<std::size_t>(i)];
    return signature_normalized(q);  // throws DegenerateConic if the form factors
}

inline Side conic_side(const ConicForm& q, const Point& p) {
    if (!q.normalized) throw NotNormalized("conic_side: form lacks signature normalization");
    int s = sign(q.eval(p));
    if (s < 0) return Side::Interior;
    if (s > 0) return Side::Exterior;
    return Side::On;
}

// Order of points along the conic (a topological circle): project from the
// first point; the tangent direction there is its own slot.
inline CyclicWord cyclic_order_on_conic(const ConicForm& q, const std::vector<Point>& pts,
                                        const std::vector<Label>& labels = {}) {
    if (pts.size() < 3) throw Error("cyclic_order_on_conic: need at least 3 points");
    for (const auto& p : pts)
        if (sign(q.eval(p)) != 0) throw PointNotOnConic("cyclic_order_on_conic: point off conic");
    const Point& center = pts[0];
    LinePencilBasis b = line_pencil_basis(center);
    std::vector<std::pair<RP1, Label>> items;
    auto label_of = [&](std::size_t i) {
        return labels.empty() ? static_cast<Label>(i + 1) : labels[i];
    };
    items.emplace_back(pencil_coordinate_of_line(b, q.tangent_at(center).v), label_of(0));
    for (std::size_t i = 1; i < pts.size(); ++i)
        items.emplace_back(pencil_direction(center, b, pts[i]), label_of(i));
    return cyclic_sort_rp1(std::move(items));
}

// Rational parametrization of a smooth conic from one of its rational points:
// the residual intersection of the line through `base` with pencil direction t.
inline Point conic_point_at(const ConicForm& q, const Point& base, const LinePencilBasis& b,
                            const RP1& t) {
    // Direction vector of the line alpha*l1+beta*l2 through the base point.
    Vec3 line = t.inf ? b.l1 : Vec3{t.t * b.l1[0] + b.l2[0], t.t * b.l1[1] + b.l2[1],
                                    t.t * b.l1[2] + b.l2[2]};
    // Second basis point of the line: base x line direction.
    Vec3 u = cross(line, base.v);
    // Q(base + s u) = Q(base) + s B(base,u)*2 + s^2 Q(u), Q(base)=0.
    auto m = ConicForm(q).matrix();
    Vec3 mu = {dot(m[0], u), dot(m[1], u), dot(m[2], u)};
    Rat bil = dot(base.v, mu);   // B(base, u)
    Rat quu = dot(u, mu);        // Q(u)
    if (sign(quu) == 0) {
        if (sign(bil) == 0) throw DegenerateConic("conic_point_at: line inside conic");
        // residual point at infinity of the chart: s = infinity -> point u
        return Point(u);
    }
    Rat s = -2 * bil / quu;
    if (sign(s) == 0) return Point(base.v);  // tangent line: residual equals base
    Vec3 out = {base.v[0] + s * u[0], base.v[1] + s * u[1], base.v[2] + s * u[2]};
    return Point(std::move(out));
}

struct GenericityReport {
    std::vector<std::array<Label, 3>> collinear_triples;
    std::vector<std::vector<Label>> coconic_sextuples;
    bool fully_generic = false;
};

inline GenericityReport genericity_report(const std::vector<Point>& pts) {
    GenericityReport rep;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (collinear(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)],
                              pts[static_cast<std::size_t>(k)]))
                    rep.collinear_triples.push_back({i + 1, j + 1, k + 1});
    if (n >= 6) {
        std::vector<int> idx(6);
        // all C(n,6) sextuples
        std::vector<int> comb;
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == 6) {
                Matrix m;
                for (int id : comb) {
                    auto row = conic_row(pts[static_cast<std::size_t>(id)]);
                    m.emplace_back(row.begin(), row.end());
                }
                if (rank(std::move(m)) < 6) {
                    std::vector<Label> labels;
                    for (int id : comb) labels.push_back(id + 1);
                    rep.coconic_sextuples.push_back(std::move(labels));
                }
                return;
            }
            for (int i = start; i < n; ++i) {
                comb.push_back(i);
                rec(i + 1, depth + 1);
                comb.pop_back();
            }
        };
        rec(0, 0);
    }
    rep.fully_generic = rep.collinear_triples.empty() && rep.coconic_sextuples.empty();
    return rep;
}

}  // namespace rpconf
