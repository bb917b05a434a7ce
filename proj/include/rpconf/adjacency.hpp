#pragma once

// Wall descriptors with their table names, wall crossing at the level of
// configuration classes, and the adjacency graphs of cameras and walls.

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "rpconf/catalog.hpp"
#include "rpconf/wallclass.hpp"
#include "rpconf/walls.hpp"

namespace rpconf {

struct WallDescriptor {
    enum class Kind { LineWall, ConicWall, RefinedLineWall };
    Kind kind;
    std::string name;  // W1..W27, conic letter A..K, or refined W-name like W18_1
    std::string key;   // canonical class key (the cyclic sequence data)
};

// Frozen wall naming, derived once from the adjacency tables.
class WallNames {
  public:
    static const WallNames& instance() {
        static WallNames n(std::string(RPCONF_DATA_DIR) + "/wall_names.txt");
        return n;
    }

    explicit WallNames(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ParseError("wall names: cannot open " + path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ss(line);
            std::string kind, name, key;
            ss >> kind >> name >> key;
            if (kind == "line")
                line_[key] = name;
            else if (kind == "refined")
                refined_[key] = name;
            else
                throw ParseError("wall names: bad kind " + kind);
        }
    }

    std::string line_name(const std::string& key) const {
        auto it = line_.find(key);
        if (it == line_.end()) throw UnknownClass("line-wall key not in catalog");
        return it->second;
    }
    std::string refined_name(const std::string& key) const {
        auto it = refined_.find(key);
        if (it == refined_.end()) throw UnknownClass("refined-wall key not in catalog");
        return it->second;
    }
    const std::map<std::string, std::string>& line_map() const { return line_; }
    const std::map<std::string, std::string>& refined_map() const { return refined_; }

  private:
    std::map<std::string, std::string> line_, refined_;  // key -> name
};

// conic-wall letters, keyed by canonical conic-wall key of the coconic reps
inline const std::map<std::string, std::string>& conic_wall_letters() {
    static const std::map<std::string, std::string> m = [] {
        std::map<std::string, std::string> out;
        for (char X = 'A'; X <= 'K'; ++X) {
            std::string key =
                conic_wall_key(Catalog::instance().points(std::string("coconic ") + X));
            out[key] = std::string(1, X);
        }
        return out;
    }();
    return m;
}

inline WallDescriptor line_wall_class(const std::vector<Point>& pts) {
    std::string key = line_wall_key(pts);
    return {WallDescriptor::Kind::LineWall, WallNames::instance().line_name(key), key};
}

inline WallDescriptor conic_wall_class(const std::vector<Point>& pts) {
    std::string key = conic_wall_key(pts);
    auto& m = conic_wall_letters();
    auto it = m.find(key);
    if (it == m.end()) throw NonRealizableDiagram("conic-wall key not among the eleven letters");
    return {WallDescriptor::Kind::ConicWall, it->second, key};
}

inline WallDescriptor refined_wall_fingerprint(const std::vector<Point>& pts) {
    std::string key = refined_wall_key(pts);
    return {WallDescriptor::Kind::RefinedLineWall, WallNames::instance().refined_name(key), key};
}

// One wall crossing: move point `l` (1-based) onto and across the line
// through `n` and `m`.
struct CrossReport {
    std::vector<Point> after;
    std::vector<Point> at_wall;
    WallDescriptor wall;
    std::string before_class, after_class;
};

inline std::string class_label(const std::vector<Point>& pts) {
    return pts.size() == 6 ? six_class_name(six_class(pts)) : seven_class(pts).str();
}

inline std::optional<CrossReport> cross_line_wall(const std::vector<Point>& pts, Label l, Label n,
                                                  Label m) {
    std::size_t mover = static_cast<std::size_t>(l - 1);
    std::size_t i = static_cast<std::size_t>(n - 1), j = static_cast<std::size_t>(m - 1);
    auto landing = find_clear_landing(pts, mover, i, j);
    if (!landing) return std::nullopt;
    auto far = cross_wall_at(pts, mover, i, j, *landing);
    if (!far) return std::nullopt;
    CrossReport rep;
    rep.at_wall = pts;
    rep.at_wall[mover] = Point(landing->to);
    rep.after = *far;
    rep.wall = pts.size() == 7 ? line_wall_class(rep.at_wall)
                               : WallDescriptor{WallDescriptor::Kind::LineWall, "",
                                                line_wall_key(rep.at_wall)};
    rep.before_class = class_label(pts);
    rep.after_class = class_label(rep.after);
    return rep;
}

// Adjacency graph of cameras (vertices) and walls (edges).
struct AdjacencyGraph {
    std::vector<std::string> vertices;                                     // sorted class names
    std::set<std::tuple<std::string, std::string, std::string>> edges;    // (a, b, wall), a <= b

    std::size_t wall_class_count() const {
        std::set<std::string> walls;
        for (const auto& [a, b, w] : edges) walls.insert(w);
        return walls.size();
    }

    std::string dot() const {
        std::ostringstream out;
        out << "graph adjacency {\n";
        for (const auto& v : vertices) out << "  \"" << v << "\";\n";
        for (const auto& [a, b, w] : edges)
            out << "  \"" << a << "\" -- \"" << b << "\" [label=\"" << w << "\"];\n";
        out << "}\n";
        return out.str();
    }

    std::string json() const {
        std::ostringstream out;
        out << "{\n  \"vertices\": [";
        for (std::size_t i = 0; i < vertices.size(); ++i)
            out << (i ? ", " : "") << "\"" << vertices[i] << "\"";
        out << "],\n  \"edges\": [\n";
        std::size_t i = 0;
        for (const auto& [a, b, w] : edges) {
            out << "    {\"a\": \"" << a << "\", \"b\": \"" << b << "\", \"wall\": \"" << w
                << "\"}" << (++i < edges.size() ? "," : "") << "\n";
        }
        out << "  ]\n}\n";
        return out.str();
    }
};

namespace detail {

inline void add_edge(AdjacencyGraph& g, std::string a, std::string b, const std::string& w) {
    if (b < a) std::swap(a, b);
    g.edges.insert({a, b, w});
}

}  // namespace detail

inline AdjacencyGraph adjacency_graph_six(bool with_conics) {
    const Catalog& cat = Catalog::instance();
    AdjacencyGraph g;
    g.vertices = {"alpha", "beta", "delta", "gamma"};
    std::map<std::string, std::string> wall_name;  // line-wall key -> L1, L2, ...
    std::vector<std::pair<std::string, std::pair<std::string, std::string>>> found;
    for (const char* cls : {"six alpha", "six beta", "six gamma", "six delta"}) {
        const auto& pts = cat.points(cls);
        std::string src = cls + 4;
        for (const auto& t : admissible_triples(pts)) {
            std::array<std::size_t, 3> ti{static_cast<std::size_t>(t[0] - 1),
                                          static_cast<std::size_t>(t[1] - 1),
                                          static_cast<std::size_t>(t[2] - 1)};
            for (int m = 0; m < 3; ++m) {
                std::size_t mover = ti[static_cast<std::size_t>(m)];
                std::size_t i = ti[static_cast<std::size_t>((m + 1) % 3)];
                std::size_t j = ti[static_cast<std::size_t>((m + 2) % 3)];
                auto landing = find_clear_landing(pts, mover, i, j);
                if (!landing) continue;
                auto far = cross_wall_at(pts, mover, i, j, *landing);
                if (!far) continue;
                std::vector<Point> at_wall = pts;
                at_wall[mover] = Point(landing->to);
                DegeneracyReport dr = degeneracy_detect(at_wall);
                found.push_back({line_wall_key(at_wall, dr.triple),
                                 {src, std::string(six_class_name(six_class(*far)))}});
                break;
            }
        }
        if (with_conics) {
            for (std::size_t mover = 0; mover < 6; ++mover) {
                std::array<std::size_t, 5> five{};
                std::size_t w = 0;
                for (std::size_t k = 0; k < 6; ++k)
                    if (k != mover) five[w++] = k;
                auto far = cross_conic(pts, mover, five);
                if (far)
                    detail::add_edge(g, src, six_class_name(six_class(*far)), "conic");
            }
        }
    }
    std::set<std::string> keys;
    for (const auto& [key, e] : found) keys.insert(key);
    std::size_t idx = 0;
    for (const auto& key : keys) wall_name[key] = "L" + std::to_string(++idx);
    for (const auto& [key, e] : found) detail::add_edge(g, e.first, e.second, wall_name[key]);
    return g;
}

// Cameras of the alignment-only stratification: configuration classes merged
// along conic-walls.
inline std::map<std::string, std::string> seven_camera_of_class() {
    static const std::map<std::string, std::string> m = [] {
        // conic-wall identifications from the coconic catalog: displacing
        // point 6 off the conic to either side
        std::map<std::string, std::set<std::string>> comp;
        std::map<std::string, std::string> root;
        static const char* names[] = {"E6", "D6", "G6", "C6", "Cp6", "H6", "B6",
                                      "A6", "K6", "I6", "J6", "R", "T", "V"};
        for (const char* n : names) root[n] = n;
        auto find = [&](std::string x) {
            while (root[x] != x) x = root[x];
            return x;
        };
        for (char X = 'A'; X <= 'K'; ++X) {
            const auto& pts = Catalog::instance().points(std::string("coconic ") + X);
            std::vector<std::string> sides;
            for (const Rat& f : {Rat(2), Rat(1, 2)}) {
                Vec3 toward{f * pts[5].v[0], f * pts[5].v[1], pts[5].v[2]};
                std::vector<Point> moved = pts;
                moved[5] = leave_conic(pts, 5, toward);
                sides.push_back(seven_class(moved).rep);
            }
            std::string a = find(sides[0]), b = find(sides[1]);
            if (a != b) root[a] = b;
        }
        std::map<std::string, std::string> out;
        for (const char* n : names) comp[find(n)].insert(n);
        for (const auto& [r, members] : comp) {
            std::string cam;
            for (const auto& mname : members) cam += (cam.empty() ? "" : "+") + mname;
            for (const auto& mname : members) out[mname] = cam;
        }
        return out;
    }();
    return m;
}

inline AdjacencyGraph adjacency_graph_seven() {
    const Catalog& cat = Catalog::instance();
    auto cam = seven_camera_of_class();
    AdjacencyGraph g;
    std::set<std::string> verts;
    for (const auto& [cls, camera] : cam) verts.insert(camera);
    g.vertices.assign(verts.begin(), verts.end());
    static const char* names[] = {"E6", "D6", "G6", "C6", "Cp6", "H6", "B6",
                                  "A6", "K6", "I6", "J6", "R", "T", "V"};
    for (const char* n : names) {
        const auto& pts = cat.points(std::string("seven ") + n);
        for (const auto& t : admissible_triples(pts)) {
            std::array<std::size_t, 3> ti{static_cast<std::size_t>(t[0] - 1),
                                          static_cast<std::size_t>(t[1] - 1),
                                          static_cast<std::size_t>(t[2] - 1)};
            for (int m = 0; m < 3; ++m) {
                std::size_t mover = ti[static_cast<std::size_t>(m)];
                std::size_t i = ti[static_cast<std::size_t>((m + 1) % 3)];
                std::size_t j = ti[static_cast<std::size_t>((m + 2) % 3)];
                for (const auto& landing : find_clear_landings(pts, mover, i, j)) {
                    auto far = cross_wall_at(pts, mover, i, j, landing);
                    if (!far) continue;
                    std::vector<Point> at_wall = pts;
                    at_wall[mover] = Point(landing.to);
                    detail::add_edge(g, cam.at(n), cam.at(seven_class(*far).rep),
                                     line_wall_class(at_wall).name);
                }
            }
        }
    }
    return g;
}

inline AdjacencyGraph adjacency_graph(int level, bool with_conics) {
    if (level == 6) return adjacency_graph_six(with_conics);
    if (level == 7 && !with_conics) return adjacency_graph_seven();
    if (level == 7) {
        AdjacencyGraph g = adjacency_graph_seven();
        // the conic walls live inside the cameras; record them as self-loops
        auto cam = seven_camera_of_class();
        for (char X = 'A'; X <= 'K'; ++X) {
            const auto& pts = Catalog::instance().points(std::string("coconic ") + X);
            std::vector<Point> moved = pts;
            Vec3 toward{2 * pts[5].v[0], 2 * pts[5].v[1], pts[5].v[2]};
            moved[5] = leave_conic(pts, 5, toward);
            std::string camera = cam.at(seven_class(moved).rep);
            detail::add_edge(g, camera, camera, std::string(1, X));
        }
        return g;
    }
    throw Error("adjacency_graph: level must be 6 or 7");
}

// Refined line-wall classes reachable from the catalog, grouped by the
// W-name of the underlying line-wall.
inline std::map<std::string, std::set<std::string>> refined_census_by_wall() {
    static const char* names[] = {"E6", "D6", "G6", "C6", "Cp6", "H6", "B6",
                                  "A6", "K6", "I6", "J6", "R", "T", "V"};
    std::map<std::string, std::set<std::string>> by_wall;
    for (const char* n : names) {
        const auto& pts = Catalog::instance().points(std::string("seven ") + n);
        for (const auto& t : admissible_triples(pts)) {
            std::array<std::size_t, 3> ti{static_cast<std::size_t>(t[0] - 1),
                                          static_cast<std::size_t>(t[1] - 1),
                                          static_cast<std::size_t>(t[2] - 1)};
            for (int m = 0; m < 3; ++m) {
                std::size_t mover = ti[static_cast<std::size_t>(m)];
                std::size_t i = ti[static_cast<std::size_t>((m + 1) % 3)];
                std::size_t j = ti[static_cast<std::size_t>((m + 2) % 3)];
                for (const auto& landing : find_clear_landings(pts, mover, i, j)) {
                    if (!cross_wall_at(pts, mover, i, j, landing)) continue;
                    std::vector<Point> at_wall = pts;
                    at_wall[mover] = Point(landing.to);
                    by_wall[line_wall_class(at_wall).name].insert(refined_wall_key(at_wall));
                }
            }
        }
    }
    return by_wall;
}

// Distinct refined line-wall classes reachable from the catalog.
inline std::size_t refined_census() {
    std::size_t total = 0;
    for (const auto& [w, ks] : refined_census_by_wall()) total += ks.size();
    return total;
}

}  // namespace rpconf
