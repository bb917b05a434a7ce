#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "rpconf/cubic.hpp"
#include "rpconf/errors.hpp"
#include "rpconf/poly.hpp"

namespace rpconf {

enum class NodeType { Crunode, Acnode };

// Topological type of a nodal cubic relative to labelled points on it: node
// type, cyclic order of the points around the node (line-pencil order), and
// the subset of points sitting on the loop. A crunode whose loop carries no
// labelled point is normalized to an acnode.
struct NodalCubicDescriptor {
    Label node = 0;
    NodeType type = NodeType::Acnode;
    CyclicWord word;          // the other labels around the node
    std::vector<Label> loop;  // sorted; empty for acnode

    std::string str() const {
        std::string s = (type == NodeType::Crunode ? "x" : "o");
        s += std::to_string(node) + ":" + word.str() + "/";
        for (std::size_t i = 0; i < loop.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(loop[i]);
        }
        return s;
    }
    bool operator==(const NodalCubicDescriptor& o) const { return str() == o.str(); }
    bool operator!=(const NodalCubicDescriptor& o) const { return !(*this == o); }

    NodalCubicDescriptor relabeled(const std::vector<Label>& perm) const {
        NodalCubicDescriptor out;
        out.node = perm[static_cast<std::size_t>(node)];
        out.type = type;
        out.word = word.relabeled(perm);
        for (Label l : loop) out.loop.push_back(perm[static_cast<std::size_t>(l)]);
        std::sort(out.loop.begin(), out.loop.end());
        return out;
    }
};

namespace detail {

// Tangent-cone quadratic q(s,t) of f at the node, in the frame (node, u, v).
struct TangentCone {
    std::array<Vec3, 3> cols;  // node, u, v
    Rat a, b, c;               // q(s,t) = a s^2 + b s t + c t^2

    // q evaluated at the direction of p as seen from the node
    Rat at_direction(const Point& p) const {
        Vec3 y = solve3(cols[0], cols[1], cols[2], p.v);
        return a * y[1] * y[1] + b * y[1] * y[2] + c * y[2] * y[2];
    }
};

inline TangentCone tangent_cone(const CubicForm& f, const Point& node) {
    const Vec3 e[3] = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    TangentCone tc;
    tc.cols[0] = node.v;
    bool found = false;
    for (int i = 0; i < 3 && !found; ++i)
        for (int j = i + 1; j < 3 && !found; ++j)
            if (sign(det3(node.v, e[i], e[j])) != 0) {
                tc.cols[1] = e[i];
                tc.cols[2] = e[j];
                found = true;
            }
    CubicForm g = cubic_compose(f, tc.cols);
    // singular at (1:0:0) in the new frame: cubic and quadratic y0-terms vanish
    if (sign(g.c[static_cast<std::size_t>(cubic_index(3, 0, 0))]) != 0 ||
        sign(g.c[static_cast<std::size_t>(cubic_index(2, 1, 0))]) != 0 ||
        sign(g.c[static_cast<std::size_t>(cubic_index(2, 0, 1))]) != 0)
        throw UnexpectedRank("tangent_cone: cubic not singular at the node");
    tc.a = g.c[static_cast<std::size_t>(cubic_index(1, 2, 0))];
    tc.b = g.c[static_cast<std::size_t>(cubic_index(1, 1, 1))];
    tc.c = g.c[static_cast<std::size_t>(cubic_index(1, 0, 2))];
    return tc;
}

// Which tangent-cone sign class is the loop: slice the cubic with a chart
// line avoiding the node and count real intersections per class; the loop, a
// null-homotopic oval, meets the line an even number of times.
inline int loop_sign(const CubicForm& f, const Point& node, const TangentCone& tc) {
    auto try_line = [&](const Vec3& l) -> int {
        if (sign(dot(l, node.v)) == 0) return 0;  // line through the node
        // two points spanning the line
        const Vec3 e[3] = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)},
                           {Rat(0), Rat(0), Rat(1)}};
        std::vector<Vec3> span;
        for (int i = 0; i < 3 && span.size() < 2; ++i) {
            Vec3 cand = cross(l, e[i]);
            if (is_zero(cand)) continue;
            if (span.size() == 1 && proportional(span[0], cand)) continue;
            span.push_back(cand);
        }
        const Vec3 &pa = span[0], &pb = span[1];
        Poly cut = f.restrict_to_line(pa, pb);
        if (cut.degree() != 3) return 0;  // intersection escapes the chart
        if (poly_gcd(cut, cut.derivative()).degree() >= 1) return 0;  // tangency
        // tangent-cone value along the line, quadratic in the parameter
        Vec3 ya = solve3(tc.cols[0], tc.cols[1], tc.cols[2], pa);
        Vec3 yb = solve3(tc.cols[0], tc.cols[1], tc.cols[2], pb);
        Poly s{{ya[1], yb[1]}}, t{{ya[2], yb[2]}};
        Poly q;
        q.c.assign(3, Rat(0));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                q.c[static_cast<std::size_t>(i + j)] +=
                    tc.a * s.c[static_cast<std::size_t>(i)] * s.c[static_cast<std::size_t>(j)] +
                    tc.b * s.c[static_cast<std::size_t>(i)] * t.c[static_cast<std::size_t>(j)] +
                    tc.c * t.c[static_cast<std::size_t>(i)] * t.c[static_cast<std::size_t>(j)];
        q.trim();
        int pos = 0, neg = 0;
        try {
            for (const auto& iv : isolate_roots(cut)) {
                int sgn = sign_at_root(cut, iv, q);
                (sgn > 0 ? pos : neg) += 1;
            }
        } catch (const Error&) {
            return 0;  // intersection on a tangent-cone line; try another slice
        }
        return pos % 2 == 0 ? 1 : -1;
    };
    const Vec3 axes[3] = {{Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)},
                          {Rat(1), Rat(0), Rat(0)}};
    for (const auto& l : axes)
        if (int r = try_line(l)) return r;
    for (int n = 1; n <= 24; ++n)
        for (int a = -n; a <= n; ++a)
            for (int b = -n; b <= n; ++b)
                for (int c = -n; c <= n; ++c) {
                    if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != n) continue;
                    if (int r = try_line(Vec3{Rat(a), Rat(b), Rat(c)})) return r;
                }
    throw Error("loop_sign: no admissible slicing line found");
}

}  // namespace detail

inline NodalCubicDescriptor nodal_cubic_descriptor(const CubicForm& f, const Point& node,
                                                   const std::vector<Point>& others,
                                                   Label node_label = 0,
                                                   const std::vector<Label>& labels = {}) {
    std::vector<Label> lab = labels;
    if (lab.empty())
        for (std::size_t i = 0; i < others.size(); ++i) lab.push_back(static_cast<Label>(i + 1));
    for (const auto& p : others) {
        if (p == node) throw CoincidentWithCenter("nodal_cubic_descriptor: point equals node");
        if (sign(f.eval(p)) != 0) throw PointOffCubic("nodal_cubic_descriptor: point off cubic");
    }
    if (!is_zero(f.gradient(node)))
        throw UnexpectedRank("nodal_cubic_descriptor: cubic not singular at the node");

    NodalCubicDescriptor out;
    out.node = node_label;
    out.word = cyclic_order_in_line_pencil(node, others, lab);

    detail::TangentCone tc = detail::tangent_cone(f, node);
    Rat disc = tc.b * tc.b - 4 * tc.a * tc.c;
    int d = sign(disc);
    if (d == 0) throw Cusp("nodal_cubic_descriptor: vanishing tangent-cone discriminant");
    if (d < 0) {
        out.type = NodeType::Acnode;
        return out;
    }
    int ls = detail::loop_sign(f, node, tc);
    for (std::size_t i = 0; i < others.size(); ++i) {
        int s = sign(tc.at_direction(others[i]));
        if (s == 0)
            throw UnexpectedRank("nodal_cubic_descriptor: point direction on the tangent cone");
        if (s == ls) out.loop.push_back(lab[i]);
    }
    std::sort(out.loop.begin(), out.loop.end());
    // a loop through no labelled point is assimilated to an isolated node
    out.type = out.loop.empty() ? NodeType::Acnode : NodeType::Crunode;
    return out;
}

}  // namespace rpconf
