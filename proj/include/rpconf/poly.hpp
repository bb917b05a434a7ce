#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "rpconf/rational.hpp"

namespace rpconf {

// Dense univariate polynomial over the rationals, ascending coefficients.
struct Poly {
    std::vector<Rat> c;

    static Poly zero() { return {}; }

    void trim() {
        while (!c.empty() && sign(c.back()) == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rat& lead() const { return c.back(); }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    Poly derivative() const {
        Poly d;
        for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * static_cast<long>(i));
        return d;
    }
};

// Quotient of an exact division (the remainder is known to vanish).
inline Poly divide_exact(const Poly& a, const Poly& b) {
    Poly quo;
    Poly r = a;
    r.trim();
    if (r.is_zero()) return quo;
    quo.c.assign(static_cast<std::size_t>(r.degree() - b.degree() + 1), Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rat f = r.lead() / b.lead();
        int shift = r.degree() - b.degree();
        quo.c[static_cast<std::size_t>(shift)] = f;
        for (int i = 0; i <= b.degree(); ++i)
            r.c[static_cast<std::size_t>(i + shift)] -= f * b.c[static_cast<std::size_t>(i)];
        r.trim();
    }
    return quo;
}

inline Poly rem(Poly a, const Poly& b) {
    a.trim();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rat f = a.lead() / b.lead();
        int shift = a.degree() - b.degree();
        for (int i = 0; i <= b.degree(); ++i)
            a.c[static_cast<std::size_t>(i + shift)] -= f * b.c[static_cast<std::size_t>(i)];
        a.trim();
    }
    return a;
}

inline Poly poly_gcd(Poly a, Poly b) {
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero())
        for (auto& x : a.c) x /= a.c.back();
    return a;
}

inline std::vector<Poly> sturm_sequence(const Poly& p) {
    std::vector<Poly> s;
    Poly a = p;
    a.trim();
    if (a.is_zero()) return s;
    s.push_back(a);
    Poly b = a.derivative();
    b.trim();
    while (!b.is_zero()) {
        s.push_back(b);
        Poly r = rem(s[s.size() - 2], b);
        for (auto& x : r.c) x = -x;
        b = std::move(r);
    }
    return s;
}

inline int sign_variations(const std::vector<Poly>& s, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& p : s) {
        int sg = sign(p.eval(x));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}

// Number of distinct real roots in (a, b]. Requires a squarefree input for
// multiplicity-free counting, but variation counting itself is general.
inline int count_roots(const std::vector<Poly>& sturm, const Rat& a, const Rat& b) {
    return sign_variations(sturm, a) - sign_variations(sturm, b);
}

inline Rat root_bound(const Poly& p) {
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat q = abs(p.c[static_cast<std::size_t>(i)] / p.lead());
        if (q > m) m = q;
    }
    return m + 1;
}

// Isolating intervals (a, b] with p(a) != 0, p(b) != 0, one root each.
inline std::vector<std::pair<Rat, Rat>> isolate_roots(const Poly& p) {
    Poly q = p;
    q.trim();
    std::vector<std::pair<Rat, Rat>> out;
    if (q.degree() < 1) return out;
    Poly sf = q;
    Poly g = poly_gcd(q, q.derivative());
    if (g.degree() >= 1) sf = divide_exact(q, g);  // drop repeated factors
    auto sturm = sturm_sequence(sf);
    Rat bound = root_bound(sf);
    std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int n = count_roots(sturm, a, b);
        if (n == 0) continue;
        if (n == 1) {
            out.emplace_back(a, b);
            continue;
        }
        Rat mid = (a + b) / 2;
        if (sign(sf.eval(mid)) == 0) {
            // make the midpoint an interval of its own and recurse around it
            Rat eps = (b - a) / 4;
            while (count_roots(sturm, mid - eps, mid + eps) > 1) eps /= 2;
            out.emplace_back(mid - eps, mid + eps);
            stack.emplace_back(a, mid - eps);
            stack.emplace_back(mid + eps, b);
        } else {
            stack.emplace_back(a, mid);
            stack.emplace_back(mid, b);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

// Refines an isolating interval of p until q has constant nonzero sign on it;
// returns that sign. p and q must have no common root in the interval.
inline int sign_at_root(const Poly& p, std::pair<Rat, Rat> iv, const Poly& q) {
    auto sturm_q = sturm_sequence(q);
    auto sturm_p = sturm_sequence(p);
    for (int iter = 0; iter < 4096; ++iter) {
        int sa = sign(q.eval(iv.first));
        int sb = sign(q.eval(iv.second));
        if (sa == sb && sa != 0 && count_roots(sturm_q, iv.first, iv.second) == 0) return sa;
        Rat mid = (iv.first + iv.second) / 2;
        if (sign(p.eval(mid)) == 0) {
            // the root is rational: evaluate directly
            int s = sign(q.eval(mid));
            if (s != 0) return s;
            throw Error("sign_at_root: common root of p and q");
        }
        if (count_roots(sturm_p, iv.first, mid) == 1)
            iv.second = mid;
        else
            iv.first = mid;
    }
    throw Error("sign_at_root: refinement did not converge");
}

}  // namespace rpconf
