#pragma once

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "rpconf/errors.hpp"
#include "rpconf/fingerprint.hpp"

#ifndef RPCONF_DATA_DIR
#define RPCONF_DATA_DIR "data"
#endif

namespace rpconf {

enum class SixClass { Alpha, Beta, Gamma, Delta };

inline const char* six_class_name(SixClass c) {
    switch (c) {
        case SixClass::Alpha: return "alpha";
        case SixClass::Beta: return "beta";
        case SixClass::Gamma: return "gamma";
        case SixClass::Delta: return "delta";
    }
    return "?";
}

// Counts (n_beta, n_delta, n_gamma, n_alpha) of the six-point classes realized
// by dropping each of the seven points in turn.
struct Quadruple {
    std::array<int, 4> n{};  // beta, delta, gamma, alpha

    bool operator==(const Quadruple& o) const { return n == o.n; }
    bool operator<(const Quadruple& o) const { return n < o.n; }
    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < 4; ++i) s += (i ? "," : "") + std::to_string(n[static_cast<std::size_t>(i)]);
        return s + ")";
    }
};

struct SevenClass {
    Quadruple quad;
    int subscript = 0;  // 1..3 where quadruples tie, 0 otherwise
    std::string rep;    // representative arrangement name, e.g. "E6"

    std::string str() const {
        return quad.str() + (subscript ? "_" + std::to_string(subscript) : "");
    }
};

// Canonical key of a combinatorial pencil with a designated node: the node is
// relabeled 1 and the key minimized over the arrangements of the other five.
inline std::string zone_canonical_key(const CombinatorialPencil& pen, Label node) {
    std::vector<Label> rest;
    for (Label l = 1; l <= 6; ++l)
        if (l != node) rest.push_back(l);
    std::vector<Label> target = {2, 3, 4, 5, 6};
    std::string best;
    std::sort(target.begin(), target.end());
    do {
        std::vector<Label> perm(7, 0);
        perm[static_cast<std::size_t>(node)] = 1;
        for (std::size_t i = 0; i < 5; ++i)
            perm[static_cast<std::size_t>(rest[i])] = target[i];
        std::string k = pen.relabeled(perm).key();
        if (best.empty() || k < best) best = k;
    } while (std::next_permutation(target.begin(), target.end()));
    return best;
}

// Frozen representative data; loaded once from the versioned catalog file.
class Catalog {
  public:
    static const Catalog& instance() {
        static Catalog c(std::string(RPCONF_DATA_DIR) + "/catalog.txt");
        return c;
    }

    explicit Catalog(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ParseError("catalog: cannot open " + path);
        std::string line, section;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream ss(line);
            std::string tok;
            if (!(ss >> tok)) continue;
            if (tok[0] == '[') {
                std::string rest;
                ss >> rest;
                if (rest.empty() || rest.back() != ']')
                    throw ParseError("catalog: bad section header: " + line);
                section = tok.substr(1) + " " + rest.substr(0, rest.size() - 1);
                sections_[section] = {};
                continue;
            }
            std::string s1 = tok, s2, s3;
            if (!(ss >> s2 >> s3)) throw ParseError("catalog: bad point line: " + line);
            sections_[section].emplace_back(parse_rat(s1), parse_rat(s2), parse_rat(s3));
        }
    }

    const std::vector<Point>& points(const std::string& section) const {
        auto it = sections_.find(section);
        if (it == sections_.end()) throw ParseError("catalog: no section " + section);
        return it->second;
    }
    bool has(const std::string& section) const { return sections_.count(section) != 0; }

    const std::vector<std::string>& section_names() const {
        if (names_.empty())
            for (const auto& [k, v] : sections_) names_.push_back(k);
        return names_;
    }

    // zone letter A..G from the canonical pencil key
    char zone_of_key(const std::string& key) const {
        std::call_once(zones_once_, [&] {
            for (char z = 'A'; z <= 'G'; ++z) {
                const auto& pts = points(std::string("zone ") + z);
                zone_keys_[zone_canonical_key(combinatorial_pencil(pts, 1), 1)] = z;
            }
        });
        auto it = zone_keys_.find(key);
        if (it == zone_keys_.end()) throw UnknownZone("no zone with this pencil");
        return it->second;
    }

    SixClass six_class_of(const Fingerprint& fp) const {
        std::call_once(six_once_, [&] {
            const std::pair<const char*, SixClass> names[] = {{"six alpha", SixClass::Alpha},
                                                              {"six beta", SixClass::Beta},
                                                              {"six gamma", SixClass::Gamma},
                                                              {"six delta", SixClass::Delta}};
            for (const auto& [sec, cls] : names)
                six_fps_[six_fingerprint(points(sec)).bytes] = cls;
        });
        auto it = six_fps_.find(fp.bytes);
        if (it == six_fps_.end()) throw UnknownClass("six-point fingerprint not in catalog");
        return it->second;
    }

    // seven-point classes, keyed by fingerprint; built from the [seven ...]
    // sections when present
    const std::map<std::string, SevenClass>& seven_classes() const {
        std::call_once(seven_once_, [&] {
            std::map<Quadruple, std::vector<std::pair<std::string, std::string>>> by_quad;
            // table order fixes the subscripts
            static const char* order[] = {"E6", "D6", "G6", "C6", "Cp6", "H6", "B6",
                                          "A6", "K6", "I6", "J6", "R", "T", "V"};
            for (const char* name : order) {
                std::string sec = std::string("seven ") + name;
                if (!has(sec)) continue;
                const auto& pts = points(sec);
                SevenClass cls;
                cls.rep = name;
                cls.quad = quadruple_of(pts);
                Fingerprint fp = seven_fingerprint(pts);
                by_quad[cls.quad].emplace_back(name, fp.bytes);
                seven_fps_[fp.bytes] = cls;  // subscript fixed below
            }
            for (const auto& [quad, members] : by_quad)
                for (std::size_t i = 0; i < members.size(); ++i)
                    seven_fps_[members[i].second].subscript =
                        members.size() > 1 ? static_cast<int>(i + 1) : 0;
        });
        return seven_fps_;
    }

    SevenClass seven_class_of(const Fingerprint& fp) const {
        const auto& m = seven_classes();
        auto it = m.find(fp.bytes);
        if (it == m.end()) throw UnknownClass("seven-point fingerprint not in catalog");
        return it->second;
    }

    Quadruple quadruple_of(const std::vector<Point>& pts) const {
        if (pts.size() != 7) throw Error("quadruple_of: need seven points");
        Quadruple q;
        for (std::size_t skip = 0; skip < 7; ++skip) {
            std::vector<Point> six;
            for (std::size_t i = 0; i < 7; ++i)
                if (i != skip) six.push_back(pts[i]);
            switch (six_class_of(six_fingerprint(six))) {
                case SixClass::Beta: ++q.n[0]; break;
                case SixClass::Delta: ++q.n[1]; break;
                case SixClass::Gamma: ++q.n[2]; break;
                case SixClass::Alpha: ++q.n[3]; break;
            }
        }
        return q;
    }

  private:
    std::map<std::string, std::vector<Point>> sections_;
    mutable std::vector<std::string> names_;
    mutable std::once_flag zones_once_, six_once_, seven_once_;
    mutable std::map<std::string, char> zone_keys_;
    mutable std::map<std::string, SixClass> six_fps_;
    mutable std::map<std::string, SevenClass> seven_fps_;
};

inline SixClass six_class(const std::vector<Point>& pts) {
    return Catalog::instance().six_class_of(six_fingerprint(pts));
}

inline char zone_letter(const std::vector<Point>& pts, Label node) {
    return Catalog::instance().zone_of_key(zone_canonical_key(combinatorial_pencil(pts, node), node));
}

inline Quadruple seven_quadruple(const std::vector<Point>& pts) {
    return Catalog::instance().quadruple_of(pts);
}

inline SevenClass seven_class(const std::vector<Point>& pts) {
    return Catalog::instance().seven_class_of(seven_fingerprint(pts));
}

}  // namespace rpconf
