// rpconf — classify configurations of six or seven points in the real
// projective plane, reproduce the reference tables, and explore the
// wall-and-camera adjacency structure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rpconf/adjacency.hpp"
#include "rpconf/catalog.hpp"
#include "rpconf/census.hpp"
#include "rpconf/cubic.hpp"
#include "rpconf/io.hpp"
#include "rpconf/tables.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGoldenMismatch = 2;
constexpr int kExitParseError = 3;
constexpr int kExitDegenerate = 4;

std::string hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : bytes) {
        out += digits[c >> 4];
        out += digits[c & 15];
    }
    return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw rpconf::Error("cannot open output file: " + path);
    return file;
}

std::vector<rpconf::Point> load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw rpconf::ParseError("cannot open input file: " + path);
    return rpconf::parse_point_file(in);
}

int cmd_classify(const std::string& path, std::ostream& os) {
    using namespace rpconf;
    std::vector<Point> pts = load_points(path);
    DegeneracyReport deg = degeneracy_detect(pts);
    if (deg.kind != Degeneracy::Generic) {
        os << "degenerate configuration\n";
        switch (deg.kind) {
            case Degeneracy::OneCollinearTriple: {
                os << "  collinear triple: " << int(deg.triple[0]) << " " << int(deg.triple[1])
                   << " " << int(deg.triple[2]) << "\n";
                if (pts.size() == 7) {
                    try {
                        WallDescriptor w = line_wall_class(pts);
                        os << "  line-wall class: " << w.name << "\n";
                        os << "  refined class:   " << refined_wall_fingerprint(pts).name << "\n";
                    } catch (const Error& e) {
                        os << "  line-wall class: (not in the catalog: " << e.what() << ")\n";
                    }
                }
                break;
            }
            case Degeneracy::OneCoconicSextuple: {
                os << "  coconic sextuple:";
                for (Label l : deg.sextuple) os << " " << int(l);
                os << "\n";
                if (pts.size() == 7) {
                    try {
                        os << "  conic-wall class: " << conic_wall_class(pts).name << "\n";
                    } catch (const Error& e) {
                        os << "  conic-wall class: (not in the catalog: " << e.what() << ")\n";
                    }
                }
                break;
            }
            default:
                os << "  multiple simultaneous degeneracies\n";
                break;
        }
        return kExitDegenerate;
    }
    if (pts.size() == 6) {
        os << "class: " << six_class_name(six_class(pts)) << "\n";
        for (Label n = 1; n <= 6; ++n) {
            std::array<Point, 5> five{pts[0], pts[0], pts[0], pts[0], pts[0]};
            std::size_t w = 0;
            for (Label l = 1; l <= 6; ++l)
                if (l != n) five[w++] = pts[static_cast<std::size_t>(l - 1)];
            Side s = conic_side(conic_through_five(five), pts[static_cast<std::size_t>(n - 1)]);
            CombinatorialPencil pen = combinatorial_pencil(pts, n);
            os << "  node " << int(n) << " " << (s == Side::Interior ? "interior" : "exterior")
               << "  pencil:";
            for (const auto& e : pen.seq) os << " " << int(e.m) << ":" << e.word.str();
            os << "\n";
        }
        os << "fingerprint: " << hex(six_fingerprint(pts).bytes) << "\n";
    } else {
        SevenClass cls = seven_class(pts);
        os << "class: " << cls.str() << "  [" << cls.rep << "]\n";
        os << "quadruple: " << cls.quad.str() << "\n";
        SevenData d = seven_data(pts);
        os << "interior/exterior (point i vs conic omitting i,j):\n";
        for (std::size_t i = 1; i <= 7; ++i) {
            os << "  " << i << ":";
            for (std::size_t j = 1; j <= 7; ++j)
                os << " " << (i == j ? '.' : d.bit[i][j]);
            os << "\n";
        }
        os << "nodal cubics:\n";
        for (const auto& desc : d.descriptors) os << "  " << desc.str() << "\n";
        os << "fingerprint: " << hex(seven_fingerprint(pts).bytes) << "\n";
    }
    return kExitOk;
}

int cmd_tables(std::ostream& os) {
    std::vector<rpconf::TableDiff> diffs = rpconf::check_all_tables();
    if (diffs.empty()) {
        os << "all tables match the golden copies\n";
        return kExitOk;
    }
    for (const auto& d : diffs) {
        os << "MISMATCH " << d.table << " [" << d.row << "]\n";
        os << "  expected: " << d.expected << "\n";
        os << "  got:      " << d.got << "\n";
    }
    return kExitGoldenMismatch;
}

int cmd_census(std::uint64_t seed, std::size_t samples, long bound, std::size_t n,
               unsigned jobs, std::ostream& os) {
    rpconf::CensusResult res = rpconf::run_census(seed, samples, n, bound, jobs);
    os << "samples: " << samples << "  points: " << n << "  bound: " << bound
       << "  seed: " << seed << "\n";
    os << "generic: " << res.generic << "  rejected: " << res.rejected << "\n";
    for (const auto& [name, count] : res.histogram) os << "  " << name << ": " << count << "\n";
    if (res.unknown > 0) {
        os << "UNKNOWN: " << res.unknown << "\n";
        return kExitGoldenMismatch;
    }
    return kExitOk;
}

int cmd_graph(int level, bool conics, const std::string& format, std::ostream& os) {
    rpconf::AdjacencyGraph g = rpconf::adjacency_graph(level, conics);
    os << (format == "json" ? g.json() : g.dot());
    return kExitOk;
}

int cmd_representatives(std::ostream& os) {
    using namespace rpconf;
    const Catalog& cat = Catalog::instance();
    for (const std::string& sec : cat.section_names()) {
        os << "[" << sec << "]\n";
        for (const Point& p : cat.points(sec))
            os << p.v[0] << " " << p.v[1] << " " << p.v[2] << "\n";
        os << "\n";
    }
    return kExitOk;
}

int cmd_cross(const std::string& path, const std::string& triple, bool conic, std::ostream& os) {
    using namespace rpconf;
    std::vector<Point> pts = load_points(path);
    if (degeneracy_detect(pts).kind != Degeneracy::Generic) {
        os << "input must be generic\n";
        return kExitDegenerate;
    }
    if (conic) {
        if (pts.size() != 7) throw ParseError("conic crossing needs seven points");
        os << "before: " << class_label(pts) << "\n";
        for (std::size_t mover = 0; mover < 7; ++mover) {
            std::array<std::size_t, 5> five{};
            std::size_t w = 0;
            for (std::size_t k = 0; k < 7 && w < 5; ++k)
                if (k != mover) five[w++] = k;
            // try every 5-subset of the other six via the excluded index
            for (std::size_t skip = 0; skip < 7; ++skip) {
                if (skip == mover) continue;
                w = 0;
                for (std::size_t k = 0; k < 7; ++k)
                    if (k != mover && k != skip) five[w++] = k;
                auto crossed = cross_conic(pts, mover, five);
                if (!crossed) continue;
                std::vector<Point> at_wall = *crossed;  // far side
                os << "mover " << (mover + 1) << " across conic of the others omitting "
                   << (skip + 1) << " -> " << class_label(*crossed) << "\n";
                return kExitOk;
            }
        }
        os << "no conic-wall reachable\n";
        return kExitGoldenMismatch;
    }
    if (triple.size() != 3) throw ParseError("triple must be three digit labels, e.g. 167");
    Label l = static_cast<Label>(triple[0] - '0');
    Label n = static_cast<Label>(triple[1] - '0');
    Label m = static_cast<Label>(triple[2] - '0');
    auto in_range = [&](Label x) { return x >= 1 && x <= static_cast<Label>(pts.size()); };
    if (!in_range(l) || !in_range(n) || !in_range(m) || l == n || l == m || n == m)
        throw ParseError("triple labels out of range or repeated");
    auto rep = cross_line_wall(pts, l, n, m);
    if (!rep) {
        os << "wall " << int(n) << int(m) << " not reachable by point " << int(l) << "\n";
        return kExitGoldenMismatch;
    }
    os << "mover: " << int(l) << "  line: " << int(n) << int(m) << "\n";
    os << "before: " << rep->before_class << "\n";
    os << "wall:   " << rep->wall.name << "\n";
    os << "after:  " << rep->after_class << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of six and seven points in the projective plane"};
    app.require_subcommand(1);

    std::string file, out, format = "text", triple;
    std::uint64_t seed = 1;
    std::size_t samples = 1000, npoints = 6;
    long bound = 50;
    unsigned jobs = 1;
    int level = 7;
    bool conics = false, conic_cross = false;

    CLI::App* classify = app.add_subcommand("classify", "classify a point file");
    classify->add_option("file", file, "point file")->required();
    classify->add_option("--out", out, "output file");

    CLI::App* tables = app.add_subcommand("tables", "regenerate and diff the reference tables");
    tables->add_option("--out", out, "output file");

    CLI::App* census = app.add_subcommand("census", "classify random configurations");
    census->add_option("--seed", seed, "random seed");
    census->add_option("--samples", samples, "number of samples");
    census->add_option("--bound", bound, "coordinate bound")->check(CLI::Range(2L, 1000000L));
    census->add_option("--points", npoints, "points per sample (6 or 7)")
        ->check(CLI::IsMember({6, 7}));
    census->add_option("--jobs", jobs, "worker threads");
    census->add_option("--out", out, "output file");

    CLI::App* graph = app.add_subcommand("graph", "emit the adjacency graph");
    graph->add_option("--level", level, "6 or 7 points")->check(CLI::IsMember({6, 7}));
    graph->add_flag("--conics", conics, "include conic-walls");
    graph->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    graph->add_option("--out", out, "output file");

    CLI::App* reps = app.add_subcommand("representatives", "dump the catalog");
    reps->add_option("--out", out, "output file");

    CLI::App* cross = app.add_subcommand("cross", "cross one wall from a generic file");
    cross->add_option("file", file, "point file")->required();
    cross->add_option("triple", triple, "three labels, mover first (e.g. 167)");
    cross->add_flag("--conic", conic_cross, "cross a conic-wall instead");
    cross->add_option("--out", out, "output file");

    CLI11_PARSE(app, argc, argv);

    std::ofstream fout;
    try {
        std::ostream& os = open_out(fout, out);
        if (classify->parsed()) return cmd_classify(file, os);
        if (tables->parsed()) return cmd_tables(os);
        if (census->parsed()) return cmd_census(seed, samples, bound, npoints, jobs, os);
        if (graph->parsed()) return cmd_graph(level, conics, format, os);
        if (reps->parsed()) return cmd_representatives(os);
        if (cross->parsed()) return cmd_cross(file, triple, conic_cross, os);
    } catch (const rpconf::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const rpconf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    }
    return kExitOk;
}
