#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rpconf/conic.hpp"
#include "rpconf/errors.hpp"
#include "rpconf/linalg.hpp"
#include "rpconf/poly.hpp"
#include "rpconf/projective.hpp"

namespace rpconf {

namespace detail {
// Monomial exponents of a ternary cubic, fixed coefficient order.
inline constexpr int kCubicExp[10][3] = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                                         {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};

inline int cubic_index(int a, int b, int c) {
    for (int i = 0; i < 10; ++i)
        if (kCubicExp[i][0] == a && kCubicExp[i][1] == b && kCubicExp[i][2] == c) return i;
    return -1;
}

inline Rat power(const Rat& x, int e) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}
}  // namespace detail

// Ternary cubic form, ten rational coefficients up to scale.
struct CubicForm {
    std::array<Rat, 10> c{};

    bool is_zero() const {
        for (const auto& x : c)
            if (sign(x) != 0) return false;
        return true;
    }

    Rat eval(const Point& p) const {
        Rat acc(0);
        for (int i = 0; i < 10; ++i) {
            const auto* e = detail::kCubicExp[i];
            acc += c[static_cast<std::size_t>(i)] * detail::power(p.v[0], e[0]) *
                   detail::power(p.v[1], e[1]) * detail::power(p.v[2], e[2]);
        }
        return acc;
    }

    Vec3 gradient(const Point& p) const {
        Vec3 g{Rat(0), Rat(0), Rat(0)};
        for (int i = 0; i < 10; ++i) {
            const auto* e = detail::kCubicExp[i];
            for (int k = 0; k < 3; ++k) {
                if (e[k] == 0) continue;
                Rat term = c[static_cast<std::size_t>(i)] * e[k];
                for (int v = 0; v < 3; ++v) term *= detail::power(p.v[v], e[v] - (v == k ? 1 : 0));
                g[static_cast<std::size_t>(k)] += term;
            }
        }
        return g;
    }

    // Hessian matrix (rows) at a point; entries are linear in the point.
    std::array<Vec3, 3> hessian(const Point& p) const {
        std::array<Vec3, 3> h{Vec3{Rat(0), Rat(0), Rat(0)}, Vec3{Rat(0), Rat(0), Rat(0)},
                              Vec3{Rat(0), Rat(0), Rat(0)}};
        for (int i = 0; i < 10; ++i) {
            const auto* e = detail::kCubicExp[i];
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    int mult = e[k] * (k == l ? e[k] - 1 : e[l]);
                    if (mult == 0) continue;
                    Rat term = c[static_cast<std::size_t>(i)] * mult;
                    for (int v = 0; v < 3; ++v) {
                        int exp = e[v] - (v == k ? 1 : 0) - (v == l ? 1 : 0);
                        term *= detail::power(p.v[v], exp);
                    }
                    h[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] += term;
                }
        }
        return h;
    }

    // F(a + t b) as a univariate polynomial in t, degree <= 3.
    Poly restrict_to_line(const Vec3& a, const Vec3& b) const {
        Poly out;
        out.c.assign(4, Rat(0));
        for (int i = 0; i < 10; ++i) {
            if (sign(c[static_cast<std::size_t>(i)]) == 0) continue;
            const auto* e = detail::kCubicExp[i];
            // expand prod_v (a_v + t b_v)^{e_v}
            Poly term;
            term.c = {c[static_cast<std::size_t>(i)]};
            for (int v = 0; v < 3; ++v)
                for (int rep = 0; rep < e[v]; ++rep) {
                    Poly next;
                    next.c.assign(term.c.size() + 1, Rat(0));
                    for (std::size_t j = 0; j < term.c.size(); ++j) {
                        next.c[j] += term.c[j] * a[static_cast<std::size_t>(v)];
                        next.c[j + 1] += term.c[j] * b[static_cast<std::size_t>(v)];
                    }
                    term = std::move(next);
                }
            for (std::size_t j = 0; j < term.c.size(); ++j) out.c[j] += term.c[j];
        }
        out.trim();
        return out;
    }
};

inline std::vector<Rat> cubic_eval_row(const Point& p) {
    std::vector<Rat> row(10);
    for (int i = 0; i < 10; ++i) {
        const auto* e = detail::kCubicExp[i];
        row[static_cast<std::size_t>(i)] = detail::power(p.v[0], e[0]) *
                                           detail::power(p.v[1], e[1]) *
                                           detail::power(p.v[2], e[2]);
    }
    return row;
}

inline std::vector<Rat> cubic_partial_row(const Point& p, int k) {
    std::vector<Rat> row(10, Rat(0));
    for (int i = 0; i < 10; ++i) {
        const auto* e = detail::kCubicExp[i];
        if (e[k] == 0) continue;
        Rat term(e[k]);
        for (int v = 0; v < 3; ++v) term *= detail::power(p.v[v], e[v] - (v == k ? 1 : 0));
        row[static_cast<std::size_t>(i)] = term;
    }
    return row;
}

// Product of a linear and a quadratic form.
inline CubicForm line_times_conic(const Line& l, const ConicForm& q) {
    // conic monomial exponents in the same order as ConicForm::c
    static constexpr int qexp[6][3] = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2},
                                       {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    CubicForm out;
    for (int i = 0; i < 3; ++i) {
        if (sign(l.v[static_cast<std::size_t>(i)]) == 0) continue;
        for (int j = 0; j < 6; ++j) {
            if (sign(q.c[static_cast<std::size_t>(j)]) == 0) continue;
            int e[3] = {qexp[j][0], qexp[j][1], qexp[j][2]};
            e[i] += 1;
            int idx = detail::cubic_index(e[0], e[1], e[2]);
            out.c[static_cast<std::size_t>(idx)] +=
                l.v[static_cast<std::size_t>(i)] * q.c[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

// g(y) = f(y0*cols[0] + y1*cols[1] + y2*cols[2]).
inline CubicForm cubic_compose(const CubicForm& f, const std::array<Vec3, 3>& cols) {
    // trivariate polynomials of degree <= 3, indexed by exponent triple
    using Key = std::array<int, 3>;
    std::map<Key, Rat> acc;
    for (int i = 0; i < 10; ++i) {
        if (sign(f.c[static_cast<std::size_t>(i)]) == 0) continue;
        const auto* e = detail::kCubicExp[i];
        std::map<Key, Rat> term{{Key{0, 0, 0}, f.c[static_cast<std::size_t>(i)]}};
        for (int v = 0; v < 3; ++v)
            for (int rep = 0; rep < e[v]; ++rep) {
                // multiply by the linear form x_v(y)
                std::map<Key, Rat> next;
                for (const auto& [k, coef] : term)
                    for (int j = 0; j < 3; ++j) {
                        const Rat& a = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)];
                        if (sign(a) == 0) continue;
                        Key nk = k;
                        ++nk[static_cast<std::size_t>(j)];
                        next[nk] += coef * a;
                    }
                term = std::move(next);
            }
        for (const auto& [k, coef] : term) acc[k] += coef;
    }
    CubicForm g;
    for (const auto& [k, coef] : acc)
        g.c[static_cast<std::size_t>(detail::cubic_index(k[0], k[1], k[2]))] = coef;
    return g;
}

// Pencil of nodal cubics based at six points with node at one of them.
struct PencilOfCubics {
    CubicForm c0, c1;
    Label node = 0;                  // 1-based label of the node
    std::vector<Label> base_labels;  // the six labels, in input order

    CubicForm member(const Rat& lambda, const Rat& mu) const {
        CubicForm m;
        for (int i = 0; i < 10; ++i)
            m.c[static_cast<std::size_t>(i)] = lambda * c0.c[static_cast<std::size_t>(i)] +
                                               mu * c1.c[static_cast<std::size_t>(i)];
        return m;
    }
};

// Null space of the incidence + node-singularity system; must be 2-dimensional.
inline PencilOfCubics nodal_pencil_basis(const std::vector<Point>& pts, Label node,
                                         const std::vector<Label>& labels = {}) {
    if (pts.size() != 6) throw Error("nodal_pencil_basis: need six points");
    std::vector<Label> lab = labels;
    if (lab.empty())
        for (int i = 1; i <= 6; ++i) lab.push_back(i);
    std::size_t node_idx = static_cast<std::size_t>(
        std::find(lab.begin(), lab.end(), node) - lab.begin());
    if (node_idx >= 6) throw Error("nodal_pencil_basis: node label not among points");

    Matrix m;
    for (const auto& p : pts) m.push_back(cubic_eval_row(p));
    for (int k = 0; k < 3; ++k) m.push_back(cubic_partial_row(pts[node_idx], k));
    auto ns = null_space(std::move(m));
    if (ns.size() != 2)
        throw UnexpectedRank("nodal_pencil_basis: null space dimension " +
                             std::to_string(ns.size()));
    PencilOfCubics pen;
    pen.node = node;
    pen.base_labels = lab;
    for (int i = 0; i < 10; ++i) {
        pen.c0.c[static_cast<std::size_t>(i)] = ns[0][static_cast<std::size_t>(i)];
        pen.c1.c[static_cast<std::size_t>(i)] = ns[1][static_cast<std::size_t>(i)];
    }
    return pen;
}

// Unique nodal cubic through seven points with node at one of them.
inline CubicForm seven_point_nodal_cubic(const std::vector<Point>& pts, Label node) {
    if (pts.size() != 7) throw Error("seven_point_nodal_cubic: need seven points");
    Matrix m;
    for (const auto& p : pts) m.push_back(cubic_eval_row(p));
    for (int k = 0; k < 3; ++k)
        m.push_back(cubic_partial_row(pts[static_cast<std::size_t>(node - 1)], k));
    auto ns = null_space(std::move(m));
    if (ns.size() != 1)
        throw UnexpectedRank("seven_point_nodal_cubic: null space dimension " +
                             std::to_string(ns.size()));
    CubicForm out;
    for (int i = 0; i < 10; ++i) out.c[static_cast<std::size_t>(i)] = ns[0][static_cast<std::size_t>(i)];
    return out;
}

// Position of a member inside the pencil, as a point of the parameter line.
inline RP1 pencil_coordinate(const PencilOfCubics& pen, const CubicForm& member) {
    Matrix m(10, std::vector<Rat>(3));
    for (int i = 0; i < 10; ++i) {
        m[static_cast<std::size_t>(i)][0] = pen.c0.c[static_cast<std::size_t>(i)];
        m[static_cast<std::size_t>(i)][1] = pen.c1.c[static_cast<std::size_t>(i)];
        m[static_cast<std::size_t>(i)][2] = member.c[static_cast<std::size_t>(i)];
    }
    auto ns = null_space(std::move(m));
    if (ns.size() != 1 || sign(ns[0][2]) == 0)
        throw NotInPencil("pencil_coordinate: member not in the span of the basis");
    return rp1(ns[0][0], ns[0][1]);
}

// Reducible member "node-m line union conic through the other five". The
// topological type needs more than the conic word: the side of m with respect
// to the conic component, and the position of the second intersection of the
// line with the conic (marked 0 in the extended word).
struct CombinatorialReducibleCubic {
    Label node = 0;    // the node of the pencil (on the conic component)
    Label m = 0;       // the label paired with the node on the line component
    CyclicWord word;   // cyclic order of node + remaining four on the conic
    CyclicWord marked; // same plus the residual line-conic intersection, as 0
    bool m_inside = false;  // m interior to the conic component

    bool operator==(const CombinatorialReducibleCubic& o) const { return key() == o.key(); }

    // The residual marker may slide across the node's slot on the conic
    // while the line pivots through the tangent direction at the node; no
    // collinearity or coconicity among the six points occurs then, so the
    // marked word only carries class information modulo that swap.
    CyclicWord marked_normalized() const {
        const std::vector<Label>& w = marked.labels();
        const std::size_t n = w.size();
        std::size_t z = 0;
        while (z < n && w[z] != 0) ++z;
        if (z == n) return marked;
        const Label left = w[(z + n - 1) % n];
        const Label right = w[(z + 1) % n];
        if (left != node && right != node) return marked;
        std::vector<Label> swapped = w;
        std::swap(swapped[z], swapped[left == node ? (z + n - 1) % n : (z + 1) % n]);
        CyclicWord other(std::move(swapped));
        return other < marked ? other : marked;
    }

    std::string key() const {
        return std::to_string(m) + (m_inside ? "<" : ">") + word.str() + "|" +
               marked_normalized().str();
    }
};

struct ReducibleMember {
    CombinatorialReducibleCubic comb;
    RP1 coord;
    CubicForm form;
};

inline std::vector<ReducibleMember> reducible_members(const std::vector<Point>& pts, Label node,
                                                      const std::vector<Label>& labels = {}) {
    std::vector<Label> lab = labels;
    if (lab.empty())
        for (int i = 1; i <= 6; ++i) lab.push_back(i);
    PencilOfCubics pen = nodal_pencil_basis(pts, node, lab);
    auto at = [&](Label l) -> const Point& {
        return pts[static_cast<std::size_t>(std::find(lab.begin(), lab.end(), l) - lab.begin())];
    };
    std::vector<ReducibleMember> out;
    for (Label m : lab) {
        if (m == node) continue;
        Line l = line_through(at(node), at(m));
        std::array<Point, 5> conic_pts;
        std::vector<Label> conic_labels;
        conic_pts[0] = at(node);
        conic_labels.push_back(node);
        std::size_t k = 1;
        for (Label o : lab) {
            if (o == node || o == m) continue;
            conic_pts[k++] = at(o);
            conic_labels.push_back(o);
        }
        ConicForm q = conic_through_five(conic_pts);
        ReducibleMember rm;
        rm.form = line_times_conic(l, q);
        rm.coord = pencil_coordinate(pen, rm.form);
        rm.comb.node = node;
        rm.comb.m = m;
        rm.comb.word = cyclic_order_on_conic(
            q, std::vector<Point>(conic_pts.begin(), conic_pts.end()), conic_labels);
        rm.comb.m_inside = conic_side(q, at(m)) == Side::Interior;
        // second intersection of the line component with the conic component
        LinePencilBasis b = line_pencil_basis(at(node));
        Point res = conic_point_at(q, at(node), b, pencil_direction(at(node), b, at(m)));
        if (res == at(node))
            throw SharedDirection("reducible_members: line tangent to the conic at the node");
        std::vector<Point> marked_pts(conic_pts.begin(), conic_pts.end());
        marked_pts.push_back(res);
        std::vector<Label> marked_labels = conic_labels;
        marked_labels.push_back(0);
        rm.comb.marked = cyclic_order_on_conic(q, marked_pts, marked_labels);
        out.push_back(std::move(rm));
    }
    return out;
}

// Cyclic sequence of five combinatorial reducible cubics, up to rotation and
// reversal.
struct CombinatorialPencil {
    Label node = 0;
    std::vector<CombinatorialReducibleCubic> seq;  // canonical rotation/orientation

    std::string key() const {
        std::string s;
        for (const auto& e : seq) s += e.key() + ";";
        return s;
    }
    bool operator==(const CombinatorialPencil& o) const { return key() == o.key(); }
    bool operator!=(const CombinatorialPencil& o) const { return !(*this == o); }

    static std::vector<CombinatorialReducibleCubic> canonical(
        std::vector<CombinatorialReducibleCubic> s) {
        const std::size_t n = s.size();
        std::vector<CombinatorialReducibleCubic> best;
        std::string best_key;
        for (int dir = 0; dir < 2; ++dir) {
            for (std::size_t r = 0; r < n; ++r) {
                std::vector<CombinatorialReducibleCubic> cand(n);
                std::string k;
                for (std::size_t i = 0; i < n; ++i) {
                    cand[i] = s[(r + i) % n];
                    k += cand[i].key() + ";";
                }
                if (best_key.empty() || k < best_key) {
                    best_key = std::move(k);
                    best = std::move(cand);
                }
            }
            std::reverse(s.begin(), s.end());
        }
        return best;
    }

    CombinatorialPencil relabeled(const std::vector<Label>& perm) const {
        CombinatorialPencil out;
        out.node = perm[static_cast<std::size_t>(node)];
        std::vector<CombinatorialReducibleCubic> s;
        for (const auto& e : seq) {
            CombinatorialReducibleCubic r;
            r.node = perm[static_cast<std::size_t>(e.node)];
            r.m = perm[static_cast<std::size_t>(e.m)];
            r.word = e.word.relabeled(perm);
            r.marked = e.marked.relabeled(perm);  // the 0 marker must stay fixed
            r.m_inside = e.m_inside;
            s.push_back(std::move(r));
        }
        out.seq = canonical(std::move(s));
        return out;
    }
};

inline CombinatorialPencil combinatorial_pencil(const std::vector<Point>& pts, Label node,
                                                const std::vector<Label>& labels = {}) {
    auto members = reducible_members(pts, node, labels);
    std::vector<std::pair<RP1, std::size_t>> order;
    for (std::size_t i = 0; i < members.size(); ++i) order.emplace_back(members[i].coord, i);
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (order[i].first == order[i + 1].first)
            throw UnexpectedRank("combinatorial_pencil: coincident pencil coordinates");
    CombinatorialPencil out;
    out.node = node;
    std::vector<CombinatorialReducibleCubic> s;
    for (const auto& [coord, idx] : order) s.push_back(members[idx].comb);
    out.seq = CombinatorialPencil::canonical(std::move(s));
    return out;
}

}  // namespace rpconf
