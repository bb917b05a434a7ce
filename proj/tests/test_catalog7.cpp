#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "rpconf/adjacency.hpp"
#include "rpconf/catalog.hpp"
#include "rpconf/fingerprint.hpp"
#include "rpconf/walls.hpp"

using namespace rpconf;

namespace {

const char* kSeven[] = {"E6", "D6", "G6", "C6", "Cp6", "H6", "B6",
                        "A6", "K6", "I6", "J6", "R", "T", "V"};

// (X,6): the six coconic points of arrangement X with point 6 pushed off the
// conic 12345 to the outside; (X,6'): pushed to the inside.
std::vector<Point> off_conic(char X, bool outside) {
    const auto& pts = Catalog::instance().points(std::string("coconic ") + X);
    for (const Rat& f : {Rat(2), Rat(1, 2)}) {
        Vec3 toward{f * pts[5].v[0], f * pts[5].v[1], pts[5].v[2]};
        std::vector<Point> moved = pts;
        moved[5] = leave_conic(pts, 5, toward);
        std::array<Point, 5> five{pts[0], pts[1], pts[2], pts[3], pts[4]};
        Side s = conic_side(conic_through_five(five), moved[5]);
        if ((s == Side::Exterior) == outside) return moved;
    }
    throw Error("off_conic: both directions land on the same side");
}

}  // namespace

TEST_CASE("the 14 seven-point representatives have distinct fingerprints") {
    std::set<std::string> fps;
    for (const char* n : kSeven) {
        const auto& pts = Catalog::instance().points(std::string("seven ") + n);
        fps.insert(seven_fingerprint(pts).bytes);
    }
    CHECK(fps.size() == 14);
}

TEST_CASE("quadruples and subscripts match the reference table") {
    std::ifstream in(std::string(RPCONF_DATA_DIR) + "/golden/quadruples.txt");
    REQUIRE(in.good());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string name, quad, sub;
        ss >> name >> quad >> sub;
        const auto& pts = Catalog::instance().points("seven " + name);
        SevenClass cls = seven_class(pts);
        CHECK(cls.rep == name);
        std::string want = "(" + quad + ")" + (sub.empty() ? "" : "_" + sub);
        CHECK(cls.str() == want);
        ++rows;
    }
    CHECK(rows == 14);
}

TEST_CASE("classification round-trips through an arbitrary relabeling") {
    for (const char* n : kSeven) {
        auto pts = Catalog::instance().points(std::string("seven ") + n);
        std::vector<Point> shuffled = {pts[3], pts[6], pts[1], pts[0], pts[5], pts[2], pts[4]};
        CHECK(seven_class(shuffled).rep == n);
    }
}

TEST_CASE("paper identifications hold as fingerprint equalities") {
    // (X,6) and (X,6') coincide for X in {A,B,I,J,K}; (E,6) = (F,6');
    // (D,6) = (G,6'); (C,6) = (H,6').
    auto fp = [](const std::vector<Point>& pts) { return seven_fingerprint(pts).bytes; };
    for (char X : {'A', 'B', 'I', 'J', 'K'})
        CHECK(fp(off_conic(X, true)) == fp(off_conic(X, false)));
    CHECK(fp(off_conic('E', true)) == fp(off_conic('F', false)));
    CHECK(fp(off_conic('D', true)) == fp(off_conic('G', false)));
    CHECK(fp(off_conic('C', true)) == fp(off_conic('H', false)));
    // and the two sides of C are genuinely different classes
    CHECK(fp(off_conic('C', true)) != fp(off_conic('C', false)));
}

TEST_CASE("both sides of every conic-wall classify into cataloged classes") {
    std::set<std::string> names(std::begin(kSeven), std::end(kSeven));
    for (char X = 'A'; X <= 'K'; ++X) {
        CHECK(names.count(seven_class(off_conic(X, true)).rep) == 1);
        CHECK(names.count(seven_class(off_conic(X, false)).rep) == 1);
    }
}

TEST_CASE("coconic representatives reach exactly the tabulated aligned triples") {
    std::ifstream in(std::string(RPCONF_DATA_DIR) + "/golden/coconic_triples.txt");
    REQUIRE(in.good());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string letter, t;
        ss >> letter;
        std::set<std::string> want;
        while (ss >> t) want.insert(t);
        const auto& pts = Catalog::instance().points("coconic " + letter);
        std::set<std::string> got;
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j)
                if (can_reach_line(pts, 6, i, j))
                    got.insert(std::to_string(i + 1) + std::to_string(j + 1) + "7");
        CHECK(got == want);
        ++rows;
    }
    CHECK(rows == 11);
}

TEST_CASE("conic-wall classes of A..K are pairwise distinct and named") {
    std::set<std::string> seen;
    for (char X = 'A'; X <= 'K'; ++X) {
        const auto& pts = Catalog::instance().points(std::string("coconic ") + X);
        WallDescriptor w = conic_wall_class(pts);
        CHECK(w.name == std::string(1, X));
        seen.insert(w.key);
    }
    CHECK(seen.size() == 11);
}
