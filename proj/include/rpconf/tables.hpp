#pragma once

// Regeneration of the reference tables from the catalog and the engines,
// with cell-level comparison against the stored golden transcriptions.
// Cyclic data (pencil sequences, conic words) is compared up to rotation and
// reversal by canonicalizing both sides.

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rpconf/adjacency.hpp"
#include "rpconf/catalog.hpp"
#include "rpconf/cremona_pencil.hpp"
#include "rpconf/cubic.hpp"

namespace rpconf {

struct TableDiff {
    std::string table, row, expected, got;
};

namespace detail {

inline std::string canon_cycle(std::vector<std::string> toks) {
    std::string best;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t r = 0; r < toks.size(); ++r) {
            std::string k;
            for (std::size_t i = 0; i < toks.size(); ++i) k += toks[(r + i) % toks.size()] + ";";
            if (best.empty() || k < best) best = k;
        }
        std::reverse(toks.begin(), toks.end());
    }
    return best;
}

inline std::string canon_word(const std::string& digits) {
    std::vector<Label> w;
    for (char ch : digits) w.push_back(static_cast<Label>(ch - '0'));
    return CyclicWord(std::move(w)).str();
}

inline std::vector<std::vector<std::string>> golden_rows(const std::string& file) {
    std::ifstream in(std::string(RPCONF_DATA_DIR) + "/golden/" + file);
    if (!in) throw ParseError("golden table missing: " + file);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::vector<std::string> toks;
        std::string t;
        while (ss >> t) toks.push_back(t);
        rows.push_back(toks);
    }
    return rows;
}

inline std::string pencil_member_tokens(const CombinatorialPencil& pen) {
    std::vector<std::string> toks;
    for (const auto& e : pen.seq) toks.push_back(std::to_string(e.m) + ":" + e.word.str());
    return canon_cycle(std::move(toks));
}

}  // namespace detail

// The seven pencils of cubics (zone representatives, node 1).
inline void check_pencils_cubics(std::vector<TableDiff>& diffs) {
    for (const auto& row : detail::golden_rows("pencils_cubics.txt")) {
        const std::string& zone = row[0];
        std::vector<std::string> want;
        for (std::size_t k = 1; k < row.size(); ++k) {
            auto colon = row[k].find(':');
            want.push_back(row[k].substr(0, colon + 1) +
                           detail::canon_word(row[k].substr(colon + 1)));
        }
        const auto& pts = Catalog::instance().points("zone " + zone);
        std::string got = detail::pencil_member_tokens(combinatorial_pencil(pts, 1));
        std::string expected = detail::canon_cycle(std::move(want));
        if (got != expected)
            diffs.push_back({"pencils_cubics", zone, expected, got});
    }
}

// The seven pencils of conics after the quadratic transformation.
inline void check_pencils_conics(std::vector<TableDiff>& diffs) {
    for (const auto& row : detail::golden_rows("pencils_conics.txt")) {
        const std::string& zone = row[0];
        std::array<Label, 3> base{static_cast<Label>(row[1][0] - '0'),
                                  static_cast<Label>(row[1][1] - '0'),
                                  static_cast<Label>(row[1][2] - '0')};
        std::vector<std::string> want;
        for (std::size_t k = 2; k < row.size(); ++k) {
            if (row[k][0] == '(')
                want.push_back("(" + detail::canon_word(row[k].substr(1, row[k].size() - 2)) +
                               ")");
            else
                want.push_back(row[k]);
        }
        const auto& pts = Catalog::instance().points("zone " + zone);
        ConicPencilSequence seq = conic_pencil_after_cremona(pts, 1, base);
        std::vector<std::string> got_toks;
        for (const auto& m : seq.seq)
            got_toks.push_back(m.line_pair ? m.key() : "(" + m.word.str() + ")");
        std::string got = detail::canon_cycle(std::move(got_toks));
        std::string expected = detail::canon_cycle(std::move(want));
        if (got != expected)
            diffs.push_back({"pencils_conics", zone, expected, got});
    }
}

// The four lists of six pencils, with the interior/exterior bits.
inline void check_four_lists(std::vector<TableDiff>& diffs) {
    for (const auto& row : detail::golden_rows("four_lists.txt")) {
        const std::string& cls = row[0];
        Label node = static_cast<Label>(row[1][0] - '0');
        std::string rowname = cls + " " + row[1];
        const auto& pts = Catalog::instance().points("six " + cls);
        std::vector<Point> five;
        std::vector<Label> five_labels;
        for (Label l = 1; l <= 6; ++l)
            if (l != node) {
                five.push_back(pts[static_cast<std::size_t>(l - 1)]);
                five_labels.push_back(l);
            }
        std::array<Point, 5> fv{five[0], five[1], five[2], five[3], five[4]};
        ConicForm c = conic_through_five(fv);
        std::string side =
            conic_side(c, pts[static_cast<std::size_t>(node - 1)]) == Side::Interior ? "<" : ">";
        std::string word = cyclic_order_on_conic(c, five, five_labels).str();
        std::vector<std::string> want;
        for (std::size_t k = 4; k < row.size(); ++k) {
            auto colon = row[k].find(':');
            want.push_back(row[k].substr(0, colon + 1) +
                           detail::canon_word(row[k].substr(colon + 1)));
        }
        std::string expected =
            row[2] + " " + detail::canon_word(row[3]) + " " + detail::canon_cycle(std::move(want));
        std::string got = side + " " + word + " " +
                          detail::pencil_member_tokens(combinatorial_pencil(pts, node));
        if (got != expected) diffs.push_back({"four_lists", rowname, expected, got});
    }
}

// Quadruples and subscripts of the fourteen configurations.
inline void check_quadruples(std::vector<TableDiff>& diffs) {
    for (const auto& row : detail::golden_rows("quadruples.txt")) {
        const std::string& name = row[0];
        std::string expected = "(" + row[1] + ")";
        if (row.size() > 2) expected += "_" + row[2];
        const auto& pts = Catalog::instance().points("seven " + name);
        SevenClass cls = seven_class(pts);
        std::string got = cls.str();
        if (got != expected || cls.rep != name)
            diffs.push_back({"quadruples", name, expected + " rep " + name,
                             got + " rep " + cls.rep});
    }
}

// Adjacent line-wall triples of the eleven coconic arrangements.
inline void check_coconic_triples(std::vector<TableDiff>& diffs) {
    for (const auto& row : detail::golden_rows("coconic_triples.txt")) {
        const std::string& letter = row[0];
        std::set<std::string> expected(row.begin() + 1, row.end());
        const auto& pts = Catalog::instance().points("coconic " + letter);
        std::set<std::string> got;
        for (Label i = 1; i <= 6; ++i)
            for (Label j = static_cast<Label>(i + 1); j <= 6; ++j)
                if (can_reach_line(pts, 6, static_cast<std::size_t>(i - 1),
                                   static_cast<std::size_t>(j - 1)))
                    got.insert(std::to_string(i) + std::to_string(j) + "7");
        if (got != expected) {
            auto join = [](const std::set<std::string>& s) {
                std::string out;
                for (const auto& t : s) out += (out.empty() ? "" : " ") + t;
                return out;
            };
            diffs.push_back({"coconic_triples", letter, join(expected), join(got)});
        }
    }
}

// Adjacencies via line-walls: every row is reproduced by an actual crossing.
inline void check_adj_line_walls(std::vector<TableDiff>& diffs) {
    for (const auto& row : detail::golden_rows("adj_line_walls.txt")) {
        const std::string &src = row[0], &trip = row[1], &wall = row[2], &dst = row[3];
        const auto& pts = Catalog::instance().points("seven " + src);
        std::array<std::size_t, 3> t{static_cast<std::size_t>(trip[0] - '1'),
                                     static_cast<std::size_t>(trip[1] - '1'),
                                     static_cast<std::size_t>(trip[2] - '1')};
        std::string got = "(no crossing)";
        bool ok = false;
        for (int m = 0; m < 3 && !ok; ++m) {
            std::size_t mover = t[static_cast<std::size_t>(m)];
            std::size_t i = t[static_cast<std::size_t>((m + 1) % 3)];
            std::size_t j = t[static_cast<std::size_t>((m + 2) % 3)];
            for (const auto& landing : find_clear_landings(pts, mover, i, j)) {
                auto far = cross_wall_at(pts, mover, i, j, landing);
                if (!far) continue;
                std::vector<Point> at_wall = pts;
                at_wall[mover] = Point(landing.to);
                got = line_wall_class(at_wall).name + " -> " + seven_class(*far).rep;
                if (got == wall + " -> " + dst) {
                    ok = true;
                    break;
                }
            }
        }
        if (!ok)
            diffs.push_back({"adj_line_walls", src + " " + trip, wall + " -> " + dst, got});
    }
}

// Adjacencies via conic-walls.
inline void check_adj_conic_walls(std::vector<TableDiff>& diffs) {
    std::set<std::string> expected, got;
    for (const auto& row : detail::golden_rows("adj_conic_walls.txt"))
        expected.insert(row[0] + " " + row[1] + " " + row[2]);
    for (char X = 'A'; X <= 'K'; ++X) {
        const auto& pts = Catalog::instance().points(std::string("coconic ") + X);
        std::vector<std::string> sides;
        for (const Rat& f : {Rat(2), Rat(1, 2)}) {
            Vec3 toward{f * pts[5].v[0], f * pts[5].v[1], pts[5].v[2]};
            std::vector<Point> moved = pts;
            moved[5] = leave_conic(pts, 5, toward);
            sides.push_back(seven_class(moved).rep);
        }
        got.insert(sides[0] + " " + X + " " + sides[1]);
        if (sides[0] != sides[1]) got.insert(sides[1] + " " + X + " " + sides[0]);
    }
    if (got != expected) {
        auto join = [](const std::set<std::string>& s) {
            std::string out;
            for (const auto& t : s) out += (out.empty() ? "" : "; ") + t;
            return out;
        };
        diffs.push_back({"adj_conic_walls", "(all)", join(expected), join(got)});
    }
}

// Adjacencies via the refined line-walls carrying a conic.
inline void check_refined_walls(std::vector<TableDiff>& diffs) {
    for (const auto& row : detail::golden_rows("refined_walls.txt")) {
        const std::string &a = row[0], &wall = row[1], &b = row[2], &reptok = row[3];
        std::string cls = reptok.substr(0, reptok.size() - 3);
        std::string trip = reptok.substr(reptok.size() - 3);
        const auto& pts = Catalog::instance().points("seven " + cls);
        std::array<std::size_t, 3> t{static_cast<std::size_t>(trip[0] - '1'),
                                     static_cast<std::size_t>(trip[1] - '1'),
                                     static_cast<std::size_t>(trip[2] - '1')};
        std::string want = wall + " joining " + a + "," + b;
        std::string got = "(no crossing)";
        bool ok = false;
        for (int m = 0; m < 3 && !ok; ++m) {
            std::size_t mover = t[static_cast<std::size_t>(m)];
            std::size_t i = t[static_cast<std::size_t>((m + 1) % 3)];
            std::size_t j = t[static_cast<std::size_t>((m + 2) % 3)];
            for (const auto& landing : find_clear_landings(pts, mover, i, j)) {
                auto far = cross_wall_at(pts, mover, i, j, landing);
                if (!far) continue;
                std::string other = seven_class(*far).rep;
                if (other != (cls == a ? b : a)) continue;
                std::vector<Point> at_wall = pts;
                at_wall[mover] = Point(landing.to);
                got = refined_wall_fingerprint(at_wall).name + " joining " + cls + "," + other;
                if (got == wall + " joining " + cls + "," + other &&
                    ((cls == a && other == b) || (cls == b && other == a))) {
                    ok = true;
                    break;
                }
            }
        }
        if (!ok) diffs.push_back({"refined_walls", reptok, want, got});
    }
}

inline std::vector<TableDiff> check_all_tables() {
    std::vector<TableDiff> diffs;
    check_pencils_cubics(diffs);
    check_pencils_conics(diffs);
    check_four_lists(diffs);
    check_quadruples(diffs);
    check_coconic_triples(diffs);
    check_adj_conic_walls(diffs);
    check_adj_line_walls(diffs);
    check_refined_walls(diffs);
    return diffs;
}

}  // namespace rpconf
