#pragma once

// Classification of wall configurations: seven points with exactly one
// collinear triple (line-walls, refined line-walls) or exactly one coconic
// sextuple (conic-walls).

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rpconf/catalog.hpp"
#include "rpconf/conic.hpp"
#include "rpconf/fingerprint.hpp"
#include "rpconf/projective.hpp"
#include "rpconf/walls.hpp"

namespace rpconf {

enum class Degeneracy { Generic, OneCollinearTriple, OneCoconicSextuple, Other };

struct DegeneracyReport {
    Degeneracy kind = Degeneracy::Generic;
    std::array<Label, 3> triple{};          // for OneCollinearTriple
    std::vector<Label> sextuple;            // for OneCoconicSextuple
};

inline DegeneracyReport degeneracy_detect(const std::vector<Point>& pts) {
    GenericityReport rep = genericity_report(pts);
    DegeneracyReport out;
    if (rep.collinear_triples.empty() && rep.coconic_sextuples.empty()) {
        out.kind = Degeneracy::Generic;
    } else if (rep.collinear_triples.size() == 1 && rep.coconic_sextuples.empty()) {
        out.kind = Degeneracy::OneCollinearTriple;
        out.triple = rep.collinear_triples.front();
    } else if (rep.collinear_triples.empty() && rep.coconic_sextuples.size() == 1) {
        out.kind = Degeneracy::OneCoconicSextuple;
        out.sextuple = rep.coconic_sextuples.front();
    } else {
        out.kind = Degeneracy::Other;
    }
    return out;
}

namespace detail {

// A symbol on the wall line: one of the aligned point labels, or the
// intersection with the line through an off-line pair.
struct WallSymbol {
    bool is_point = false;
    Label a = 0, b = 0;  // point: a only; pair: a < b
};

struct LineWallData {
    std::array<Label, 3> aligned{};
    std::vector<Label> off;
    std::vector<WallSymbol> seq;  // cyclic order on the wall line
};

inline LineWallData line_wall_data(const std::vector<Point>& pts,
                                   const std::array<Label, 3>& triple) {
    LineWallData d;
    d.aligned = triple;
    for (Label l = 1; l <= static_cast<Label>(pts.size()); ++l)
        if (l != triple[0] && l != triple[1] && l != triple[2]) d.off.push_back(l);
    const Point& p = pts[static_cast<std::size_t>(triple[0] - 1)];
    const Point& q = pts[static_cast<std::size_t>(triple[1] - 1)];
    Vec3 L = cross(p.v, q.v);
    // RP1 coordinate on the line, as (finite value, at_infinity) pairs
    struct Entry {
        bool inf = false;
        Rat t;
        WallSymbol sym;
    };
    std::vector<Entry> entries;
    auto coord = [&](const Vec3& x, const WallSymbol& s) {
        auto [a, b] = span_coords(p.v, q.v, x);
        Entry e;
        e.sym = s;
        if (sign(a) == 0)
            e.inf = true;
        else
            e.t = b / a;
        entries.push_back(e);
    };
    for (Label l : triple) {
        WallSymbol s;
        s.is_point = true;
        s.a = l;
        coord(pts[static_cast<std::size_t>(l - 1)].v, s);
    }
    for (std::size_t i = 0; i < d.off.size(); ++i)
        for (std::size_t j = i + 1; j < d.off.size(); ++j) {
            Vec3 m = cross(pts[static_cast<std::size_t>(d.off[i] - 1)].v,
                           pts[static_cast<std::size_t>(d.off[j] - 1)].v);
            Vec3 x = cross(L, m);
            if (is_zero(x))
                throw MultipleDegeneracies("line_wall: off-pair line equals the wall line");
            WallSymbol s;
            s.a = d.off[i];
            s.b = d.off[j];
            coord(x, s);
        }
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        if (x.inf != y.inf) return !x.inf;
        if (x.inf) return false;
        if (x.t != y.t) return x.t < y.t;
        // ties: only disjoint off-pairs may coincide; fixed resolution
        return std::array<Label, 2>{x.sym.a, x.sym.b} < std::array<Label, 2>{y.sym.a, y.sym.b};
    });
    // a point symbol may never coincide with anything else
    for (std::size_t k = 0; k + 1 < entries.size(); ++k) {
        const Entry& x = entries[k];
        const Entry& y = entries[k + 1];
        if ((x.inf && y.inf) || (!x.inf && !y.inf && x.t == y.t))
            if (x.sym.is_point || y.sym.is_point)
                throw MultipleDegeneracies("line_wall: aligned point meets an off-pair line");
    }
    for (const Entry& e : entries) d.seq.push_back(e.sym);
    return d;
}

inline std::string wall_token(const WallSymbol& s, const std::vector<Label>& perm) {
    if (s.is_point) return "*";
    Label a = perm.empty() ? s.a : perm[static_cast<std::size_t>(s.a)];
    Label b = perm.empty() ? s.b : perm[static_cast<std::size_t>(s.b)];
    if (a > b) std::swap(a, b);
    return std::to_string(a) + std::to_string(b);
}

inline std::string labeled_token(const WallSymbol& s, const std::vector<Label>& perm) {
    Label a = perm.empty() ? s.a : perm[static_cast<std::size_t>(s.a)];
    if (s.is_point) return std::to_string(a);
    Label b = perm.empty() ? s.b : perm[static_cast<std::size_t>(s.b)];
    if (a > b) std::swap(a, b);
    return std::to_string(a) + std::to_string(b);
}

inline std::string min_cyclic(std::vector<std::string> toks) {
    const std::size_t n = toks.size();
    std::string best;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t r = 0; r < n; ++r) {
            std::string s;
            for (std::size_t k = 0; k < n; ++k) s += toks[(r + k) % n] + ",";
            if (best.empty() || s < best) best = s;
        }
        std::reverse(toks.begin(), toks.end());
    }
    return best;
}

// Orbit of the symbol sequence under the wall-preserving move: two cyclically
// adjacent intersections of lines through disjoint off-pairs may swap.
inline std::vector<std::vector<WallSymbol>> swap_orbit(const std::vector<WallSymbol>& start) {
    auto key = [](const std::vector<WallSymbol>& s) {
        std::string k;
        for (const auto& sym : s) k += labeled_token(sym, {}) + (sym.is_point ? "p," : ",");
        return k;
    };
    std::vector<std::vector<WallSymbol>> orbit{start};
    std::set<std::string> seen{key(start)};
    for (std::size_t h = 0; h < orbit.size(); ++h) {
        const auto cur = orbit[h];
        const std::size_t n = cur.size();
        for (std::size_t k = 0; k < n; ++k) {
            const WallSymbol& x = cur[k];
            const WallSymbol& y = cur[(k + 1) % n];
            if (x.is_point || y.is_point) continue;
            if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) continue;
            auto next = cur;
            std::swap(next[k], next[(k + 1) % n]);
            if (seen.insert(key(next)).second) orbit.push_back(next);
        }
    }
    return orbit;
}

}  // namespace detail

// Canonical key of the (unlabeled) line-wall class: minimum over the swap
// orbit, relabelings of the off-line points, rotation and reversal. The three
// aligned points are anonymous.
inline std::string line_wall_key(const std::vector<Point>& pts,
                                 const std::array<Label, 3>& triple) {
    detail::LineWallData d = detail::line_wall_data(pts, triple);
    std::string best;
    std::vector<Label> offp = d.off;
    std::sort(offp.begin(), offp.end());
    do {
        std::vector<Label> perm(pts.size() + 1, 0);
        for (std::size_t k = 0; k < d.off.size(); ++k)
            perm[static_cast<std::size_t>(offp[k])] = static_cast<Label>(k + 1);
        for (const auto& s : detail::swap_orbit(d.seq)) {
            std::vector<std::string> toks;
            for (const auto& sym : s) toks.push_back(detail::wall_token(sym, perm));
            std::string cand = detail::min_cyclic(std::move(toks));
            if (best.empty() || cand < best) best = cand;
        }
    } while (std::next_permutation(offp.begin(), offp.end()));
    return best;
}

inline std::string line_wall_key(const std::vector<Point>& pts) {
    DegeneracyReport rep = degeneracy_detect(pts);
    if (rep.kind != Degeneracy::OneCollinearTriple)
        throw MultipleDegeneracies("line_wall_key: need exactly one collinear triple");
    return line_wall_key(pts, rep.triple);
}

// Canonical key of a refined line-wall: the labeled sequence on the wall
// line together with every defined point-versus-conic side, minimized over
// all relabelings and rotation/reversal.
inline std::string refined_wall_key(const std::vector<Point>& pts) {
    DegeneracyReport rep = degeneracy_detect(pts);
    if (rep.kind != Degeneracy::OneCollinearTriple)
        throw MultipleDegeneracies("refined_wall_key: need exactly one collinear triple");
    detail::LineWallData d = detail::line_wall_data(pts, rep.triple);
    const std::size_t n = pts.size();
    // side of point p w.r.t. the conic through the five others, for every
    // five-point subset avoiding the full aligned triple
    std::map<std::pair<std::vector<Label>, Label>, char> bits;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + 5, true);
    do {
        std::vector<Label> sub;
        for (std::size_t k = 0; k < n; ++k)
            if (pick[k]) sub.push_back(static_cast<Label>(k + 1));
        int aligned_in = 0;
        for (Label l : rep.triple)
            if (std::find(sub.begin(), sub.end(), l) != sub.end()) ++aligned_in;
        if (aligned_in == 3) continue;
        std::array<Point, 5> five{pts[0], pts[0], pts[0], pts[0], pts[0]};
        for (std::size_t k = 0; k < 5; ++k)
            five[k] = pts[static_cast<std::size_t>(sub[k] - 1)];
        ConicForm c = conic_through_five(five);
        for (std::size_t k = 0; k < n; ++k) {
            Label l = static_cast<Label>(k + 1);
            if (std::find(sub.begin(), sub.end(), l) != sub.end()) continue;
            bits[{sub, l}] = conic_side(c, pts[k]) == Side::Interior ? '<' : '>';
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));

    std::vector<Label> names(n);
    for (std::size_t k = 0; k < n; ++k) names[k] = static_cast<Label>(k + 1);
    std::string best;
    std::vector<Label> perm(n + 1, 0);
    // moving the wall line across the intersection of two chord-lines stays
    // inside the stratum and swaps the two symbols, so quotient by that move
    const std::vector<std::vector<detail::WallSymbol>> orbit = detail::swap_orbit(d.seq);
    do {
        for (std::size_t k = 0; k < n; ++k) perm[static_cast<std::size_t>(k + 1)] = names[k];
        std::string seq_min;
        for (const auto& s : orbit) {
            std::vector<std::string> toks;
            for (const auto& sym : s) toks.push_back(detail::labeled_token(sym, perm));
            std::string m = detail::min_cyclic(std::move(toks));
            if (seq_min.empty() || m < seq_min) seq_min = m;
        }
        std::string cand = seq_min + "|";
        std::map<std::pair<std::vector<Label>, Label>, char> mapped;
        for (const auto& [k, v] : bits) {
            std::vector<Label> sub;
            for (Label l : k.first) sub.push_back(perm[static_cast<std::size_t>(l)]);
            std::sort(sub.begin(), sub.end());
            mapped[{sub, perm[static_cast<std::size_t>(k.second)]}] = v;
        }
        for (const auto& [k, v] : mapped) cand += v;
        if (best.empty() || cand < best) best = cand;
    } while (std::next_permutation(names.begin(), names.end()));
    return best;
}

// Canonical key of a conic-wall (six coconic points plus an apex): the two
// cyclic words of the sextuple on the conic and in the line pencil at the
// apex, the side of the apex, and the six-point classes of the generic
// sub-arrangements, minimized over relabelings of the sextuple.
inline std::string conic_wall_key(const std::vector<Point>& pts) {
    DegeneracyReport rep = degeneracy_detect(pts);
    if (rep.kind != Degeneracy::OneCoconicSextuple)
        throw MultipleDegeneracies("conic_wall_key: need exactly one coconic sextuple");
    const std::vector<Label>& sext = rep.sextuple;
    Label apex = 0;
    for (Label l = 1; l <= static_cast<Label>(pts.size()); ++l)
        if (std::find(sext.begin(), sext.end(), l) == sext.end()) apex = l;
    std::vector<Point> six;
    for (Label l : sext) six.push_back(pts[static_cast<std::size_t>(l - 1)]);
    std::array<Point, 5> five{six[0], six[1], six[2], six[3], six[4]};
    ConicForm c = conic_through_five(five);
    const Point& ap = pts[static_cast<std::size_t>(apex - 1)];
    CyclicWord conic_word = cyclic_order_on_conic(c, six, sext);
    CyclicWord pencil_word = cyclic_order_in_line_pencil(ap, six, sext);
    char bit = conic_side(c, ap) == Side::Interior ? '<' : '>';
    // six-point class of each sub-arrangement dropping one sextuple point
    std::map<Label, char> subclass;
    for (std::size_t k = 0; k < sext.size(); ++k) {
        std::vector<Point> sub;
        for (std::size_t m = 0; m < sext.size(); ++m)
            if (m != k) sub.push_back(six[m]);
        sub.push_back(ap);
        subclass[sext[k]] = six_class_name(six_class(sub))[0];
    }
    std::vector<Label> order = sext;
    std::sort(order.begin(), order.end());
    std::string best;
    std::vector<Label> names = order;
    do {
        std::vector<Label> perm(pts.size() + 1, 0);
        for (std::size_t k = 0; k < order.size(); ++k)
            perm[static_cast<std::size_t>(order[k])] = names[k];
        std::string cand = conic_word.relabeled(perm).str() + "/" +
                           pencil_word.relabeled(perm).str() + "/" + bit + "/";
        std::map<Label, char> mapped;
        for (const auto& [l, v] : subclass) mapped[perm[static_cast<std::size_t>(l)]] = v;
        for (const auto& [l, v] : mapped) cand += v;
        if (best.empty() || cand < best) best = cand;
    } while (std::next_permutation(names.begin(), names.end()));
    return best;
}

}  // namespace rpconf
