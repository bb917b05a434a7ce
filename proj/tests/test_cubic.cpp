#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "rpconf/cubic.hpp"

using namespace rpconf;

namespace {

Point pt(long a, long b, long c) { return Point(Rat(a), Rat(b), Rat(c)); }

// (1-t^2 : 2t : 1+t^2), a rational point of the unit circle
Point circle_pt(const Rat& t) { return Point(1 - t * t, 2 * t, 1 + t * t); }

std::vector<Point> generic_six() {
    // five points on the unit circle plus one interior point; fully generic
    std::vector<Point> pts;
    pts.push_back(pt(4, 3, 12));  // label 1, affine (1/3, 1/4)
    pts.push_back(circle_pt(rat(0)));
    pts.push_back(circle_pt(rat(1, 2)));
    pts.push_back(circle_pt(rat(2)));
    pts.push_back(circle_pt(rat(-3)));
    pts.push_back(circle_pt(rat(-1, 3)));
    return pts;
}

}  // namespace

TEST_CASE("nodal pencil basis: definition check") {
    auto pts = generic_six();
    REQUIRE(genericity_report(pts).fully_generic);
    PencilOfCubics pen = nodal_pencil_basis(pts, 1);
    for (const CubicForm* f : {&pen.c0, &pen.c1}) {
        for (const auto& p : pts) CHECK(sign(f->eval(p)) == 0);
        CHECK(is_zero(f->gradient(pts[0])));
    }
}

TEST_CASE("pencil member consistency: random (lambda:mu) spot checks") {
    auto pts = generic_six();
    PencilOfCubics pen = nodal_pencil_basis(pts, 3);
    std::size_t node_idx = 2;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int i = 0; i < 25; ++i) {
        CubicForm m = pen.member(Rat(d(rng)), Rat(d(rng)));
        if (m.is_zero()) continue;
        for (const auto& p : pts) CHECK(sign(m.eval(p)) == 0);
        CHECK(is_zero(m.gradient(pts[node_idx])));
    }
}

TEST_CASE("pencil coordinates") {
    auto pts = generic_six();
    PencilOfCubics pen = nodal_pencil_basis(pts, 1);
    CHECK(pencil_coordinate(pen, pen.c0) == rp1(Rat(1), Rat(0)));
    CHECK(pencil_coordinate(pen, pen.member(Rat(1), Rat(1))) == rp1(Rat(1), Rat(1)));
    CubicForm junk;
    junk.c[0] = 1;
    CHECK_THROWS_AS(pencil_coordinate(pen, junk), NotInPencil);
}

TEST_CASE("reducible members: five of them, distinct coordinates") {
    auto pts = generic_six();
    auto members = reducible_members(pts, 1);
    REQUIRE(members.size() == 5);
    std::vector<Label> ms;
    for (const auto& m : members) ms.push_back(m.comb.m);
    std::sort(ms.begin(), ms.end());
    CHECK(ms == std::vector<Label>{2, 3, 4, 5, 6});
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) CHECK_FALSE(members[i].coord == members[j].coord);
    // every reducible member vanishes at all six points and is singular at the node
    for (const auto& m : members) {
        for (const auto& p : pts) CHECK(sign(m.form.eval(p)) == 0);
        CHECK(is_zero(m.form.gradient(pts[0])));
    }
}

TEST_CASE("degenerate input: collinear triple through the node") {
    std::vector<Point> pts = {pt(0, 0, 1), pt(1, 1, 1), pt(2, 2, 1),
                              pt(1, 0, 1), pt(0, 1, 1),  pt(3, 1, 1)};
    CHECK_THROWS_AS(reducible_members(pts, 1), Error);  // UnexpectedRank or DegenerateConic
}

TEST_CASE("combinatorial pencil: relabeling equivariance") {
    auto pts = generic_six();
    CombinatorialPencil base = combinatorial_pencil(pts, 1);
    REQUIRE(base.seq.size() == 5);

    // permute the five non-node points: sigma = (2 4)(3 6 5)
    std::vector<Label> perm = {0, 1, 4, 6, 2, 3, 5};
    std::vector<Point> shuffled = pts;
    std::vector<Label> labels = {1, 2, 3, 4, 5, 6};
    for (auto& l : labels) l = perm[static_cast<std::size_t>(l)];
    CombinatorialPencil moved = combinatorial_pencil(shuffled, 1, labels);
    CHECK(moved == base.relabeled(perm));
}

TEST_CASE("Bezout order coherence") {
    auto pts = generic_six();
    Label node = 1;
    auto members = reducible_members(pts, node);
    std::vector<std::pair<RP1, std::size_t>> order;
    for (std::size_t i = 0; i < members.size(); ++i) order.emplace_back(members[i].coord, i);
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // reading off m in pencil order reproduces the order of the five points on
    // their shared conic
    std::array<Point, 5> others = {pts[1], pts[2], pts[3], pts[4], pts[5]};
    ConicForm q5 = conic_through_five(others);
    CyclicWord conic_word =
        cyclic_order_on_conic(q5, {pts[1], pts[2], pts[3], pts[4], pts[5]}, {2, 3, 4, 5, 6});
    std::vector<Label> m_seq;
    for (const auto& [coord, idx] : order) m_seq.push_back(members[idx].comb.m);
    CHECK(CyclicWord(m_seq) == conic_word);

    // each member's conic word embeds in the line-pencil word at the node
    CyclicWord pencil_word = cyclic_order_in_line_pencil(
        pts[0], {pts[1], pts[2], pts[3], pts[4], pts[5]}, {2, 3, 4, 5, 6});
    for (const auto& m : members) {
        // restrict the pencil word to the four labels shared with the member's conic
        std::vector<Label> restricted;
        for (Label l : pencil_word.labels())
            if (l != node && l != m.comb.m) restricted.push_back(l);
        std::vector<Label> member_restricted;
        for (Label l : m.comb.word.labels())
            if (l != node) member_restricted.push_back(l);
        CHECK(CyclicWord(restricted) == CyclicWord(member_restricted));
    }
}

TEST_CASE("seven-point nodal cubic") {
    auto pts = generic_six();
    pts.push_back(pt(9, -2, 14));
    REQUIRE(genericity_report(pts).fully_generic);
    for (Label node = 1; node <= 7; ++node) {
        CubicForm f = seven_point_nodal_cubic(pts, node);
        for (const auto& p : pts) CHECK(sign(f.eval(p)) == 0);
        CHECK(is_zero(f.gradient(pts[static_cast<std::size_t>(node - 1)])));
    }
    // rank anomaly on degenerate input (repeated point drops two conditions)
    std::vector<Point> bad = generic_six();
    bad.push_back(bad.back());
    CHECK_THROWS_AS(seven_point_nodal_cubic(bad, 1), UnexpectedRank);
}
