#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rpconf/conic.hpp"
#include "rpconf/projective.hpp"

using namespace rpconf;

namespace {

Point pt(long a, long b, long c) { return Point(Rat(a), Rat(b), Rat(c)); }

// random invertible rational 3x3 matrix, applied to a point
struct RandomProjectivity {
    std::array<Vec3, 3> rows;
    Point apply(const Point& p) const {
        return Point(dot(rows[0], p.v), dot(rows[1], p.v), dot(rows[2], p.v));
    }
};

RandomProjectivity random_map(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-9, 9);
    while (true) {
        RandomProjectivity m;
        for (auto& r : m.rows) r = {Rat(d(rng)), Rat(d(rng)), Rat(d(rng))};
        if (sign(det3(m.rows[0], m.rows[1], m.rows[2])) != 0) return m;
    }
}

}  // namespace

TEST_CASE("collinear") {
    CHECK(collinear(pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)));
    CHECK_FALSE(collinear(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)));
    // affine points on y = x + 1
    CHECK(collinear(pt(1, 2, 1), pt(2, 3, 1), pt(3, 4, 1)));
}

TEST_CASE("line_through / meet duality") {
    CHECK(line_through(pt(1, 0, 0), pt(0, 1, 0)) == Line(Rat(0), Rat(0), Rat(1)));
    CHECK(meet(Line(Rat(1), Rat(0), Rat(0)), Line(Rat(0), Rat(1), Rat(0))) == pt(0, 0, 1));
    CHECK(line_through(pt(1, 0, 1), pt(0, 1, 1)) == Line(Rat(1), Rat(1), Rat(-1)));
    CHECK_THROWS_AS(line_through(pt(1, 2, 3), pt(2, 4, 6)), IdenticalInputs);
}

TEST_CASE("scale invariance of predicates") {
    Point p = pt(3, -5, 7), q = pt(1, 1, 1), r = pt(2, 0, 9);
    bool base = collinear(p, q, r);
    Point p2(Rat(-6), Rat(10), Rat(-14));  // -2 * p
    CHECK(collinear(p2, q, r) == base);
}

TEST_CASE("cremona transform") {
    std::array<Point, 3> base = {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)};
    CHECK(cremona_transform(base, pt(1, 1, 1)) == pt(1, 1, 1));
    CHECK(cremona_transform(base, pt(1, 2, 3)) == pt(6, 3, 2));
    Point p = pt(5, 7, 11);
    CHECK(cremona_transform(base, cremona_transform(base, p)) == p);
    CHECK_THROWS_AS(cremona_transform(base, pt(1, 0, 0)), BasePointInput);
    std::array<Point, 3> bad = {pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)};
    CHECK_THROWS_AS(cremona_transform(bad, pt(1, 1, 1)), CollinearBase);
}

TEST_CASE("cremona involution for a non-standard base") {
    std::array<Point, 3> base = {pt(1, 2, 1), pt(-1, 1, 2), pt(3, 0, 1)};
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-20, 20);
    int done = 0;
    while (done < 25) {
        Point p(Rat(d(rng)), Rat(d(rng)), Rat(d(rng) == 0 ? 1 : d(rng)));
        try {
            Point q = cremona_transform(base, p);
            if (q == base[0] || q == base[1] || q == base[2]) continue;  // exceptional line
            CHECK(cremona_transform(base, q) == p);
            ++done;
        } catch (const Error&) {
            continue;  // base point
        }
    }
}

TEST_CASE("cyclic order in a line pencil") {
    Point center = pt(0, 0, 1);
    std::vector<Point> pts = {pt(1, 0, 1), pt(1, 1, 1), pt(0, 1, 1), pt(-1, 1, 1)};
    CyclicWord w = cyclic_order_in_line_pencil(center, pts);
    CHECK(w == CyclicWord({1, 2, 3, 4}));
    // any 3-element cyclic words are equal up to rotation/reversal
    CHECK(CyclicWord({1, 2, 3}) == CyclicWord({2, 1, 3}));
    // collinear with center: shared direction
    std::vector<Point> bad = {pt(1, 0, 1), pt(2, 0, 2 * 1), pt(0, 1, 1)};
    CHECK_THROWS_AS(cyclic_order_in_line_pencil(center, {pt(1, 0, 1), pt(2, 0, 1), pt(0, 1, 1)}),
                    SharedDirection);
    CHECK_THROWS_AS(cyclic_order_in_line_pencil(center, {center}), CoincidentWithCenter);
}

TEST_CASE("conic through five: unit circle") {
    std::array<Point, 5> pts = {pt(1, 0, 1), pt(0, 1, 1), pt(-1, 0, 1), pt(0, -1, 1), pt(3, 4, 5)};
    ConicForm q = conic_through_five(pts);
    // x0^2 + x1^2 - x2^2 up to positive scale
    CHECK(sign(q.c[0]) > 0);
    CHECK(q.c[1] == q.c[0]);
    CHECK(q.c[2] == -q.c[0]);
    CHECK(sign(q.c[3]) == 0);
    CHECK(sign(q.det()) < 0);
    for (const auto& p : pts) CHECK(conic_side(q, p) == Side::On);

    CHECK(conic_side(q, pt(0, 0, 1)) == Side::Interior);
    CHECK(conic_side(q, pt(1, 0, 0)) == Side::Exterior);
    CHECK(conic_side(q, pt(1, 0, 1)) == Side::On);

    std::array<Point, 5> rep = {pt(1, 0, 1), pt(1, 0, 1), pt(-1, 0, 1), pt(0, -1, 1), pt(3, 4, 5)};
    CHECK_THROWS_AS(conic_through_five(rep), DegenerateConic);
    std::array<Point, 5> coll = {pt(0, 0, 1), pt(1, 1, 1), pt(2, 2, 1), pt(0, -1, 1), pt(3, 4, 5)};
    CHECK_THROWS_AS(conic_through_five(coll), DegenerateConic);
}

TEST_CASE("conic through five: generic interpolation check") {
    std::array<Point, 5> pts = {pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1), pt(1, 1, 1), pt(3, 2, 1)};
    ConicForm q = conic_through_five(pts);
    for (const auto& p : pts) CHECK(sign(q.eval(p)) == 0);
}

TEST_CASE("normalization idempotence and sign flip") {
    std::array<Point, 5> pts = {pt(1, 0, 1), pt(0, 1, 1), pt(-1, 0, 1), pt(0, -1, 1), pt(3, 4, 5)};
    ConicForm q = conic_through_five(pts);
    ConicForm neg = q;
    for (auto& x : neg.c) x = -x;
    ConicForm renorm = signature_normalized(neg);
    CHECK(sign(renorm.det()) < 0);
    CHECK(conic_side(renorm, pt(0, 0, 1)) == Side::Interior);
    CHECK_THROWS_AS(conic_side(ConicForm{q.c, false}, pt(0, 0, 1)), NotNormalized);
}

TEST_CASE("cyclic order on conic") {
    std::array<Point, 5> pts5 = {pt(1, 0, 1), pt(0, 1, 1), pt(-1, 0, 1), pt(0, -1, 1), pt(3, 4, 5)};
    ConicForm q = conic_through_five(pts5);
    std::vector<Point> four = {pt(1, 0, 1), pt(0, 1, 1), pt(-1, 0, 1), pt(0, -1, 1)};
    CHECK(cyclic_order_on_conic(q, four) == CyclicWord({1, 2, 3, 4}));

    // angular-order oracle: (3:4:5) sits at angle ~53 deg, between 0 and 90
    std::vector<Point> five(pts5.begin(), pts5.end());
    CyclicWord w = cyclic_order_on_conic(q, five);
    CHECK(w == CyclicWord({1, 5, 2, 3, 4}));

    // reversal of the input order gives the same word
    std::vector<Point> rev(five.rbegin(), five.rend());
    CyclicWord wr = cyclic_order_on_conic(q, rev, {5, 4, 3, 2, 1});
    CHECK(wr == w);

    CHECK_THROWS_AS(cyclic_order_on_conic(q, {pt(1, 0, 1), pt(0, 1, 1), pt(2, 2, 1)}),
                    PointNotOnConic);
}

TEST_CASE("projection center independence on the conic") {
    std::array<Point, 5> pts5 = {pt(1, 0, 1), pt(0, 1, 1), pt(-1, 0, 1), pt(0, -1, 1), pt(3, 4, 5)};
    ConicForm q = conic_through_five(pts5);
    std::vector<Point> five(pts5.begin(), pts5.end());
    CyclicWord base = cyclic_order_on_conic(q, five);
    for (std::size_t start = 1; start < 5; ++start) {
        std::vector<Point> rot;
        std::vector<Label> lab;
        for (std::size_t i = 0; i < 5; ++i) {
            rot.push_back(five[(start + i) % 5]);
            lab.push_back(static_cast<Label>((start + i) % 5 + 1));
        }
        CHECK(cyclic_order_on_conic(q, rot, lab) == base);
    }
}

TEST_CASE("projective invariance (randomized)") {
    std::mt19937_64 rng(42);
    std::array<Point, 5> pts5 = {pt(1, 0, 1), pt(0, 1, 1), pt(-1, 0, 1), pt(0, -1, 1), pt(3, 4, 5)};
    ConicForm q = conic_through_five(pts5);
    std::vector<Point> five(pts5.begin(), pts5.end());
    CyclicWord base_word = cyclic_order_on_conic(q, five);
    Point c = pt(7, 1, 5);
    std::vector<Point> pencil_pts = {pt(1, 0, 1), pt(0, 1, 1), pt(-1, 0, 1), pt(2, 5, 1)};
    CyclicWord base_pencil = cyclic_order_in_line_pencil(c, pencil_pts);

    for (int iter = 0; iter < 100; ++iter) {
        auto m = random_map(rng);
        std::array<Point, 5> tp;
        for (int i = 0; i < 5; ++i) tp[static_cast<std::size_t>(i)] = m.apply(pts5[static_cast<std::size_t>(i)]);
        ConicForm tq = conic_through_five(tp);
        std::vector<Point> tfive(tp.begin(), tp.end());
        CHECK(cyclic_order_on_conic(tq, tfive) == base_word);

        std::vector<Point> tpencil;
        for (const auto& p : pencil_pts) tpencil.push_back(m.apply(p));
        CHECK(cyclic_order_in_line_pencil(m.apply(c), tpencil) == base_pencil);

        CHECK(collinear(m.apply(pt(1, 2, 1)), m.apply(pt(2, 3, 1)), m.apply(pt(3, 4, 1))));
    }
}

TEST_CASE("charts and convex position") {
    // rational unit-circle points in convex position
    std::vector<Point> hex;
    for (long t : {0L, 1L, 3L, 9L, -5L, -1L}) {
        // (1-t^2 : 2t : 1+t^2) with t = k/4
        Rat tt = rat(t, 4);
        hex.emplace_back(1 - tt * tt, 2 * tt, 1 + tt * tt);
    }
    Line chart = find_chart_line(hex);
    for (const auto& p : hex) CHECK_FALSE(incident(chart, p));
    CHECK(convex_position_in_chart(hex, chart));

    std::vector<Point> with_inner = {pt(0, 0, 1), pt(4, 0, 1), pt(0, 4, 1), pt(1, 1, 1)};
    CHECK_FALSE(convex_position_in_chart(with_inner, Line(Rat(0), Rat(0), Rat(1))));
    CHECK_THROWS_AS(chart_coords(Line(Rat(1), Rat(0), Rat(0)), pt(0, 1, 1)), ChartThroughPoint);
}

TEST_CASE("genericity report") {
    std::vector<Point> good = {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1),
                               pt(1, 1, 1), pt(1, 2, 3), pt(2, 5, 7)};
    auto rep = genericity_report(good);
    CHECK(rep.collinear_triples.empty());

    std::vector<Point> tri = {pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0),
                              pt(1, 1, 1), pt(1, 2, 3), pt(2, 5, 7)};
    auto rep2 = genericity_report(tri);
    REQUIRE(rep2.collinear_triples.size() == 1);
    CHECK(rep2.collinear_triples[0] == std::array<Label, 3>{1, 2, 3});
    CHECK_FALSE(rep2.fully_generic);

    // six points on the unit circle: one coconic sextuple
    std::vector<Point> circ;
    for (long k : {0L, 1L, 2L, 3L, 5L, 7L}) {
        Rat t = rat(k, 2);
        circ.emplace_back(1 - t * t, 2 * t, 1 + t * t);
    }
    auto rep3 = genericity_report(circ);
    REQUIRE(rep3.coconic_sextuples.size() == 1);
    CHECK(rep3.coconic_sextuples[0] == std::vector<Label>{1, 2, 3, 4, 5, 6});
}
