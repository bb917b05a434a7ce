#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "rpconf/conic.hpp"
#include "rpconf/cubic.hpp"
#include "rpconf/descriptor.hpp"
#include "rpconf/errors.hpp"

namespace rpconf {

// Canonical invariant of a labelled configuration: a byte string unchanged by
// relabelings and projective transformations.
struct Fingerprint {
    std::string bytes;
    int arity = 0;

    bool operator==(const Fingerprint& o) const { return arity == o.arity && bytes == o.bytes; }
    bool operator!=(const Fingerprint& o) const { return !(*this == o); }
    bool operator<(const Fingerprint& o) const {
        return arity != o.arity ? arity < o.arity : bytes < o.bytes;
    }
};

namespace detail {

// conic through the five points excluding `skip` (0-based indices kept)
inline ConicForm conic_excluding(const std::vector<Point>& pts, std::size_t skip,
                                 std::size_t skip2 = static_cast<std::size_t>(-1)) {
    std::array<Point, 5> five;
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i == skip || i == skip2) continue;
        if (k == 5) throw Error("conic_excluding: too many points");
        five[k++] = pts[i];
    }
    if (k != 5) throw Error("conic_excluding: need five points");
    return conic_through_five(five);
}

inline void permutations(int n, const std::function<void(const std::vector<Label>&)>& fn) {
    std::vector<Label> perm(static_cast<std::size_t>(n + 1));
    std::vector<Label> tail(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) tail[static_cast<std::size_t>(i)] = i + 1;
    do {
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i + 1)] = tail[static_cast<std::size_t>(i)];
        fn(perm);
    } while (std::next_permutation(tail.begin(), tail.end()));
}

}  // namespace detail

// Six combinatorial pencils (one per node) plus the interior/exterior bit of
// each point against the conic through the other five; canonicalized as the
// lexicographic minimum over all 720 relabelings.
inline Fingerprint six_fingerprint(const std::vector<Point>& pts) {
    if (pts.size() != 6) throw Error("six_fingerprint: need six points");
    std::vector<CombinatorialPencil> pencils;
    std::string bits(6, '?');
    for (Label n = 1; n <= 6; ++n) {
        pencils.push_back(combinatorial_pencil(pts, n));
        Side s = conic_side(detail::conic_excluding(pts, static_cast<std::size_t>(n - 1)),
                            pts[static_cast<std::size_t>(n - 1)]);
        if (s == Side::On) throw UnexpectedRank("six_fingerprint: six points on a conic");
        bits[static_cast<std::size_t>(n - 1)] = s == Side::Interior ? '<' : '>';
    }
    std::string best;
    detail::permutations(6, [&](const std::vector<Label>& perm) {
        // perm maps old labels to new; entry order follows the new labels
        std::string enc(6, '?');
        std::vector<std::string> keys(6);
        for (Label old = 1; old <= 6; ++old) {
            Label nw = perm[static_cast<std::size_t>(old)];
            enc[static_cast<std::size_t>(nw - 1)] = bits[static_cast<std::size_t>(old - 1)];
            keys[static_cast<std::size_t>(nw - 1)] =
                pencils[static_cast<std::size_t>(old - 1)].relabeled(perm).key();
        }
        if (!best.empty() && enc > best.substr(0, 6)) return;
        for (const auto& k : keys) enc += "#" + k;
        if (best.empty() || enc < best) best = enc;
    });
    return Fingerprint{best, 6};
}

// Interior-point count (against the five-point conics).
inline int interior_count(const std::vector<Point>& pts) {
    int n = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (conic_side(detail::conic_excluding(pts, i), pts[i]) == Side::Interior) ++n;
    return n;
}

// Raw per-node data of a seven-point configuration.
struct SevenData {
    std::vector<NodalCubicDescriptor> descriptors;  // node = 1..7
    std::vector<std::string> sub;                   // canonical six-sub-fingerprints
    std::array<std::array<char, 8>, 8> bit{};       // bit[i][j], i on conic excluding i,j
};

inline SevenData seven_data(const std::vector<Point>& pts) {
    if (pts.size() != 7) throw Error("seven_data: need seven points");
    SevenData d;
    for (Label n = 1; n <= 7; ++n) {
        CubicForm f = seven_point_nodal_cubic(pts, n);
        std::vector<Point> others;
        std::vector<Label> labels;
        std::vector<Point> sub_pts;
        for (Label l = 1; l <= 7; ++l) {
            if (l == n) continue;
            others.push_back(pts[static_cast<std::size_t>(l - 1)]);
            labels.push_back(l);
            sub_pts.push_back(pts[static_cast<std::size_t>(l - 1)]);
        }
        d.descriptors.push_back(
            nodal_cubic_descriptor(f, pts[static_cast<std::size_t>(n - 1)], others, n, labels));
        d.sub.push_back(six_fingerprint(sub_pts).bytes);
    }
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) {
            if (i == j) continue;
            Side s = conic_side(detail::conic_excluding(pts, i, j), pts[i]);
            if (s == Side::On) throw UnexpectedRank("seven_data: six points on a conic");
            d.bit[i + 1][j + 1] = s == Side::Interior ? '<' : '>';
        }
    return d;
}

// Lexicographic minimum over the 5040 relabelings of: the point-conic bits,
// the seven nodal-cubic descriptors, and the seven six-point sub-fingerprints.
inline Fingerprint seven_fingerprint_from_data(const SevenData& d) {
    std::string best;
    detail::permutations(7, [&](const std::vector<Label>& perm) {
        std::vector<Label> inv(8);
        for (Label old = 1; old <= 7; ++old) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(old)])] = old;
        std::string enc;
        enc.reserve(64);
        for (Label i = 1; i <= 7; ++i)
            for (Label j = 1; j <= 7; ++j) {
                if (i == j) continue;
                enc += d.bit[static_cast<std::size_t>(inv[static_cast<std::size_t>(i)])]
                            [static_cast<std::size_t>(inv[static_cast<std::size_t>(j)])];
            }
        if (!best.empty() && enc > best.substr(0, enc.size())) return;
        for (Label i = 1; i <= 7; ++i)
            enc += "#" +
                   d.descriptors[static_cast<std::size_t>(inv[static_cast<std::size_t>(i)] - 1)]
                       .relabeled(perm)
                       .str();
        for (Label i = 1; i <= 7; ++i)
            enc += "@" + d.sub[static_cast<std::size_t>(inv[static_cast<std::size_t>(i)] - 1)];
        if (best.empty() || enc < best) best = enc;
    });
    return Fingerprint{best, 7};
}

inline Fingerprint seven_fingerprint(const std::vector<Point>& pts) {
    return seven_fingerprint_from_data(seven_data(pts));
}

}  // namespace rpconf
