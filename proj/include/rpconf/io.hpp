#pragma once

// Point-file parsing. Format: one point per line as three integers or
// rationals "x0 x1 x2"; '#' starts a comment; labels are 1-based in line
// order; 6 or 7 non-comment lines.

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "rpconf/errors.hpp"
#include "rpconf/projective.hpp"

namespace rpconf {

inline std::vector<Point> parse_point_file(std::istream& in) {
    std::vector<Point> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ss(line);
        std::string a, b, c;
        if (!(ss >> a)) continue;
        if (!(ss >> b >> c))
            throw ParseError("line " + std::to_string(lineno) + ": expected three coordinates");
        std::string extra;
        if (ss >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
        try {
            pts.emplace_back(parse_rat(a), parse_rat(b), parse_rat(c));
        } catch (const Error& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (pts.size() != 6 && pts.size() != 7)
        throw ParseError("expected 6 or 7 points, got " + std::to_string(pts.size()));
    return pts;
}

}  // namespace rpconf
