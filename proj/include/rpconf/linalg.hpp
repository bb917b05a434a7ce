#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "rpconf/rational.hpp"

namespace rpconf {

using Vec3 = std::array<Rat, 3>;
using Matrix = std::vector<std::vector<Rat>>;

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline Rat dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline bool is_zero(const Vec3& v) {
    return sign(v[0]) == 0 && sign(v[1]) == 0 && sign(v[2]) == 0;
}

// Equality up to a nonzero scalar.
inline bool proportional(const Vec3& a, const Vec3& b) {
    return is_zero(cross(a, b));
}

inline Rat det3(const Vec3& a, const Vec3& b, const Vec3& c) {
    return dot(a, cross(b, c));
}

// Divides by the gcd of all numerators/denominators and fixes the sign of
// the first nonzero entry to +1. Canonical representative of a projective
// class with rational entries.
inline Vec3 normalized(Vec3 v) {
    int k = 0;
    while (k < 3 && sign(v[k]) == 0) ++k;
    if (k == 3) return v;
    Rat lead = v[k];
    for (auto& x : v) x /= lead;
    return v;
}

// Scales a rational vector to coprime integer entries with the first nonzero
// entry positive. Same projective class, minimal coordinate size.
inline Vec3 primitive(Vec3 v) {
    mpz_class den(1);
    for (const auto& x : v) {
        mpz_class d = x.get_den();
        den = den / gcd(den, d) * d;
    }
    mpz_class g(0);
    for (auto& x : v) {
        x *= Rat(den);
        x.canonicalize();
        g = gcd(g, x.get_num());
    }
    if (sign(g) != 0)
        for (auto& x : v) {
            x /= Rat(g);
            x.canonicalize();
        }
    for (const auto& x : v) {
        if (sign(x) == 0) continue;
        if (sign(x) < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

// In-place reduced row echelon form; returns the rank.
inline std::size_t rref(Matrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && sign(m[piv][col]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        Rat inv = m[rank][col];
        for (std::size_t j = col; j < cols; ++j) m[rank][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || sign(m[i][col]) == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank(Matrix m) { return rref(m); }

// Basis of the right null space of m (each vector has `cols` entries).
inline std::vector<std::vector<Rat>> null_space(Matrix m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    rref(m);
    // pivot column of each nonzero row
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::size_t c = 0;
        while (c < cols && sign(m[i][c]) == 0) ++c;
        if (c == cols) break;
        pivot_of_col[c] = static_cast<long>(i);
        ++r;
    }
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (pivot_of_col[free_c] >= 0) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_c] = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            if (pivot_of_col[c] >= 0)
                v[c] = -m[static_cast<std::size_t>(pivot_of_col[c])][free_c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves the 3x3 system A x = b (columns a0,a1,a2); requires det != 0.
inline Vec3 solve3(const Vec3& a0, const Vec3& a1, const Vec3& a2, const Vec3& b) {
    Rat d = det3({a0[0], a1[0], a2[0]}, {a0[1], a1[1], a2[1]}, {a0[2], a1[2], a2[2]});
    Rat d0 = det3({b[0], a1[0], a2[0]}, {b[1], a1[1], a2[1]}, {b[2], a1[2], a2[2]});
    Rat d1 = det3({a0[0], b[0], a2[0]}, {a0[1], b[1], a2[1]}, {a0[2], b[2], a2[2]});
    Rat d2 = det3({a0[0], a1[0], b[0]}, {a0[1], a1[1], b[1]}, {a0[2], a1[2], b[2]});
    return {d0 / d, d1 / d, d2 / d};
}

}  // namespace rpconf
