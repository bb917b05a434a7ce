#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rpconf/conic.hpp"
#include "rpconf/cubic.hpp"
#include "rpconf/errors.hpp"
#include "rpconf/projective.hpp"

namespace rpconf {

// Member of the pencil of conics obtained from a pencil of nodal cubics by a
// quadratic transformation based at the node and two further points: either a
// line pair (node paired with one label, the remaining two on the other line)
// or a smooth conic passing through one of the former base points.
struct ConicPencilMember {
    bool line_pair = false;
    std::array<Label, 2> pair1{};  // line through the node; node first
    std::array<Label, 2> pair2{};  // complementary pair, sorted
    Label through = 0;             // smooth member: former base label on it
    CyclicWord word;               // smooth member: order of its five labels
    RP1 coord{};

    std::string key() const {
        if (line_pair)
            return std::to_string(pair1[0]) + std::to_string(pair1[1]) + "|" +
                   std::to_string(pair2[0]) + std::to_string(pair2[1]);
        return "(" + word.str() + ")";
    }
};

// Cyclic sequence of the five distinguished members, up to rotation and
// reversal.
struct ConicPencilSequence {
    Label node = 0;
    std::array<Label, 3> base{};
    std::vector<ConicPencilMember> seq;

    std::string key() const {
        std::string s;
        for (const auto& e : seq) s += e.key() + ";";
        return s;
    }

    static std::vector<ConicPencilMember> canonical(std::vector<ConicPencilMember> s) {
        const std::size_t n = s.size();
        std::vector<ConicPencilMember> best;
        std::string best_key;
        for (int dir = 0; dir < 2; ++dir) {
            for (std::size_t r = 0; r < n; ++r) {
                std::vector<ConicPencilMember> cand(n);
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
};

namespace detail {

inline ConicForm line_times_line(const Line& l1, const Line& l2) {
    ConicForm q;
    const Vec3 &a = l1.v, &b = l2.v;
    q.c = {a[0] * b[0], a[1] * b[1], a[2] * b[2], a[0] * b[1] + a[1] * b[0],
           a[0] * b[2] + a[2] * b[0], a[1] * b[2] + a[2] * b[1]};
    return q;
}

inline RP1 conic_pencil_coordinate(const ConicForm& c0, const ConicForm& c1,
                                   const ConicForm& member) {
    Matrix m(6, std::vector<Rat>(3));
    for (std::size_t i = 0; i < 6; ++i) {
        m[i][0] = c0.c[i];
        m[i][1] = c1.c[i];
        m[i][2] = member.c[i];
    }
    auto ns = null_space(std::move(m));
    if (ns.size() != 1 || sign(ns[0][2]) == 0)
        throw NotInPencil("conic_pencil_coordinate: member not in the span");
    return rp1(ns[0][0], ns[0][1]);
}

}  // namespace detail

// The paper's construction route for a combinatorial pencil: transform by the
// quadratic map based at the node and two other points, then read the pencil
// of conics through the node and the images of the three non-base points.
// Its five distinguished members are the three line pairs and the two conics
// through the former base points.
inline ConicPencilSequence conic_pencil_after_cremona(const std::vector<Point>& pts, Label node,
                                                      const std::array<Label, 3>& base,
                                                      const std::vector<Label>& labels = {}) {
    if (pts.size() != 6) throw Error("conic_pencil_after_cremona: need six points");
    std::vector<Label> lab = labels;
    if (lab.empty())
        for (int i = 1; i <= 6; ++i) lab.push_back(i);
    auto at = [&](Label l) -> const Point& {
        auto it = std::find(lab.begin(), lab.end(), l);
        if (it == lab.end()) throw Error("conic_pencil_after_cremona: unknown label");
        return pts[static_cast<std::size_t>(it - lab.begin())];
    };
    if (std::find(base.begin(), base.end(), node) == base.end())
        throw Error("conic_pencil_after_cremona: node must be a base label");

    std::array<Point, 3> base_pts = {at(base[0]), at(base[1]), at(base[2])};
    std::vector<Label> non_base, other_base;
    for (Label l : lab)
        if (std::find(base.begin(), base.end(), l) == base.end()) non_base.push_back(l);
    for (Label l : base)
        if (l != node) other_base.push_back(l);

    // images: the node stays put, non-base labels map through the involution
    std::map<Label, Point> img;
    img[node] = at(node);
    for (Label l : non_base) img[l] = cremona_transform(base_pts, at(l));

    // pencil of conics through the node and the three images
    Matrix rows;
    std::vector<Label> pencil_labels{node};
    for (Label l : non_base) pencil_labels.push_back(l);
    for (Label l : pencil_labels) {
        auto row = conic_row(img.at(l));
        rows.emplace_back(row.begin(), row.end());
    }
    auto ns = null_space(std::move(rows));
    if (ns.size() != 2)
        throw UnexpectedRank("conic_pencil_after_cremona: pencil rank " +
                             std::to_string(ns.size()));
    ConicForm c0, c1;
    for (std::size_t i = 0; i < 6; ++i) {
        c0.c[i] = ns[0][i];
        c1.c[i] = ns[1][i];
    }

    std::vector<ConicPencilMember> members;
    // line pairs: the node paired with each non-base label
    for (std::size_t i = 0; i < 3; ++i) {
        Label m = non_base[i];
        Label y = non_base[(i + 1) % 3], z = non_base[(i + 2) % 3];
        if (y > z) std::swap(y, z);
        ConicPencilMember e;
        e.line_pair = true;
        e.pair1 = {node, m};
        e.pair2 = {y, z};
        ConicForm form = detail::line_times_line(line_through(img.at(node), img.at(m)),
                                                 line_through(img.at(y), img.at(z)));
        e.coord = detail::conic_pencil_coordinate(c0, c1, form);
        members.push_back(std::move(e));
    }
    // smooth members through the two former base points
    for (Label b : other_base) {
        const Point& p = at(b);
        Rat lambda = c1.eval(p), mu = -c0.eval(p);
        if (sign(lambda) == 0 && sign(mu) == 0)
            throw UnexpectedRank("conic_pencil_after_cremona: base point on every member");
        ConicForm form;
        for (std::size_t i = 0; i < 6; ++i) form.c[i] = lambda * c0.c[i] + mu * c1.c[i];
        ConicPencilMember e;
        e.through = b;
        std::vector<Point> on = {img.at(node)};
        std::vector<Label> on_labels = {node};
        for (Label l : non_base) {
            on.push_back(img.at(l));
            on_labels.push_back(l);
        }
        on.push_back(p);
        on_labels.push_back(b);
        e.word = cyclic_order_on_conic(form, on, on_labels);
        e.coord = detail::conic_pencil_coordinate(c0, c1, form);
        members.push_back(std::move(e));
    }

    std::vector<std::pair<RP1, std::size_t>> order;
    for (std::size_t i = 0; i < members.size(); ++i) order.emplace_back(members[i].coord, i);
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (order[i].first == order[i + 1].first)
            throw UnexpectedRank("conic_pencil_after_cremona: coincident coordinates");

    ConicPencilSequence out;
    out.node = node;
    out.base = base;
    std::vector<ConicPencilMember> s;
    for (const auto& [coord, idx] : order) s.push_back(members[idx]);
    out.seq = ConicPencilSequence::canonical(std::move(s));
    return out;
}

}  // namespace rpconf
