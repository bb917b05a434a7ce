#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "rpconf/adjacency.hpp"
#include "rpconf/catalog.hpp"
#include "rpconf/wallclass.hpp"
#include "rpconf/walls.hpp"

using namespace rpconf;

namespace {

std::vector<Point> six(const char* cls) {
    return Catalog::instance().points(std::string("six ") + cls);
}

// Admissible line-wall triples grouped by target class, plus whether the
// conic-wall is reachable.
struct Prop1 {
    std::map<std::string, int> lines;
    bool conic = false;
};

Prop1 prop1_counts(const std::vector<Point>& pts) {
    Prop1 out;
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b)
            for (std::size_t c = b + 1; c < 6; ++c) {
                for (auto [m, i, j] : {std::array<std::size_t, 3>{a, b, c}, {b, a, c}, {c, a, b}}) {
                    auto landing = find_clear_landing(pts, m, i, j);
                    if (!landing) continue;
                    auto far = cross_wall_at(pts, m, i, j, *landing);
                    if (!far) continue;
                    ++out.lines[six_class_name(six_class(*far))];
                    break;
                }
            }
    for (std::size_t m = 0; m < 6 && !out.conic; ++m) {
        std::array<std::size_t, 5> five{};
        std::size_t w = 0;
        for (std::size_t k = 0; k < 6; ++k)
            if (k != m) five[w++] = k;
        if (cross_conic(pts, m, five)) out.conic = true;
    }
    return out;
}

}  // namespace

TEST_CASE("line-wall key is invariant under relabeling and scaling") {
    std::vector<Point> pts = Catalog::instance().points("seven D6");
    // move point 4 exactly onto the line 56 to build a wall configuration
    auto landing = find_clear_landing(pts, 3, 4, 5);
    REQUIRE(landing.has_value());
    pts[3] = Point(landing->to);
    std::string key = line_wall_key(pts);

    std::vector<Point> relabeled = {pts[2], pts[6], pts[0], pts[3], pts[5], pts[1], pts[4]};
    CHECK(line_wall_key(relabeled) == key);

    std::vector<Point> scaled = pts;
    for (auto& p : scaled) p = Point(Vec3{Rat(3) * p.v[0], Rat(3) * p.v[1], Rat(3) * p.v[2]});
    CHECK(line_wall_key(scaled) == key);

    CHECK(refined_wall_key(relabeled) == refined_wall_key(pts));
}

TEST_CASE("six-point adjacency graph: 4 cameras, 3 line-walls, one conic-wall") {
    AdjacencyGraph lines = adjacency_graph(6, false);
    CHECK(lines.vertices.size() == 4);
    CHECK(lines.wall_class_count() == 3);

    AdjacencyGraph full = adjacency_graph(6, true);
    CHECK(full.vertices.size() == 4);
    CHECK(full.wall_class_count() == 4);
}

TEST_CASE("Proposition 1: adjacency counts of the four six-point classes") {
    Prop1 b = prop1_counts(six("beta"));
    CHECK(b.lines == std::map<std::string, int>{{"delta", 3}});
    CHECK(b.conic);
    Prop1 d = prop1_counts(six("delta"));
    CHECK(d.lines == std::map<std::string, int>{{"beta", 2}, {"gamma", 4}});
    CHECK_FALSE(d.conic);
    Prop1 g = prop1_counts(six("gamma"));
    CHECK(g.lines == std::map<std::string, int>{{"delta", 6}, {"alpha", 1}});
    CHECK_FALSE(g.conic);
    Prop1 a = prop1_counts(six("alpha"));
    CHECK(a.lines == std::map<std::string, int>{{"gamma", 10}});
    CHECK_FALSE(a.conic);
}

TEST_CASE("crossing a six-point line-wall changes the class as expected") {
    std::vector<Point> beta = six("beta");
    std::set<std::string> neighbors;
    for (std::size_t m = 0; m < 6; ++m)
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j) {
                if (i == m || j == m) continue;
                for (const auto& landing : find_clear_landings(beta, m, i, j)) {
                    auto far = cross_wall_at(beta, m, i, j, landing);
                    if (far) neighbors.insert(six_class_name(six_class(*far)));
                }
            }
    CHECK(neighbors == std::set<std::string>{"delta"});
}

TEST_CASE("crossing the six-point conic-wall stays within beta") {
    std::vector<Point> beta = six("beta");
    for (std::size_t m = 0; m < 6; ++m) {
        std::array<std::size_t, 5> five{};
        std::size_t w = 0;
        for (std::size_t k = 0; k < 6; ++k)
            if (k != m) five[w++] = k;
        auto far = cross_conic(beta, m, five);
        REQUIRE(far.has_value());
        CHECK(six_class_name(six_class(*far)) == std::string("beta"));
    }
}

TEST_CASE("seven-point graph: 11 cameras and 27 line-wall classes") {
    AdjacencyGraph g = adjacency_graph(7, false);
    CHECK(g.vertices.size() == 11);
    CHECK(g.wall_class_count() == 27);
}

TEST_CASE("conic-walls: 11 distinct classes, merging the expected cameras") {
    std::set<std::string> keys;
    for (char X = 'A'; X <= 'K'; ++X)
        keys.insert(conic_wall_key(Catalog::instance().points(std::string("coconic ") + X)));
    CHECK(keys.size() == 11);

    const auto& cam = seven_camera_of_class();
    CHECK(cam.at("D6") == cam.at("G6"));
    CHECK(cam.at("C6") == cam.at("Cp6"));
    CHECK(cam.at("C6") == cam.at("H6"));
    CHECK(cam.at("E6") != cam.at("D6"));
}

TEST_CASE("refined census finds 38 refined line-wall classes") {
    CHECK(refined_census() == 38);
}

TEST_CASE("graph export is deterministic and well-formed") {
    AdjacencyGraph g = adjacency_graph(6, true);
    std::string d1 = g.dot(), d2 = adjacency_graph(6, true).dot();
    CHECK(d1 == d2);
    CHECK(d1.find("alpha") != std::string::npos);
    std::string j = g.json();
    CHECK(j.find("\"vertices\"") != std::string::npos);
}
