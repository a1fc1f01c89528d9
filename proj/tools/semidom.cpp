// Command-line front end: domination numbers, multisubdivision, tree families
// and the verification harness.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semidom/families.hpp"
#include "semidom/formats.hpp"
#include "semidom/msd.hpp"
#include "semidom/report.hpp"
#include "semidom/solvers.hpp"
#include "semidom/verify.hpp"

namespace {

using namespace semidom;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

// Catalog size limit for generate / recognize.
constexpr int kFamilyOrderCap = 20;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Graph> read_graphs(const std::string& path, const std::string& format) {
    const auto text = read_all(path);
    if (format == "graph6") {
        std::istringstream in(text);
        auto graphs = read_graph6_stream(in);
        if (graphs.empty()) {
            throw Error("no graphs in " + path);
        }
        return graphs;
    }
    return {parse_edgelist(text)};
}

Graph read_one(const std::string& path, const std::string& format) {
    auto graphs = read_graphs(path, format);
    if (graphs.size() != 1) {
        throw Error("expected exactly one graph in " + path);
    }
    return std::move(graphs.front());
}

Variant parse_param(const std::string& p) {
    if (p == "gamma") return Variant::Plain;
    if (p == "gamma-t") return Variant::Total;
    return Variant::Semitotal;
}

int resolve_jobs(int flag) {
    if (const char* env = std::getenv("SEMIDOM_JOBS"); env && *env) {
        try {
            std::size_t pos = 0;
            const int value = std::stoi(env, &pos);
            if (pos == std::string(env).size() && value >= 1) {
                return value;
            }
        } catch (const std::exception&) {
        }
        throw Error("SEMIDOM_JOBS must be a positive integer");
    }
    return flag;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semitotal domination toolkit"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"edgelist", "graph6"};
    const std::vector<std::string> families{"U", "T", "T1"};

    std::string input;
    std::string format = "edgelist";

    auto* compute = app.add_subcommand("compute", "Minimum set for gamma, gamma-t or gamma-t2");
    std::string param;
    compute->add_option("--param", param)->required()->check(
        CLI::IsMember({"gamma", "gamma-t", "gamma-t2"}));
    compute->add_option("--input", input)->required();
    compute->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* msd = app.add_subcommand("msd", "Multisubdivision number for gamma-t2");
    int k_max = 5;
    msd->add_option("--input", input)->required();
    msd->add_option("--format", format)->check(CLI::IsMember(formats));
    msd->add_option("--k-max", k_max)->check(CLI::Range(1, 16));

    auto* subdivide = app.add_subcommand("subdivide", "Subdivide one edge k times");
    std::vector<int> edge;
    int times = 1;
    subdivide->add_option("--input", input)->required();
    subdivide->add_option("--format", format)->check(CLI::IsMember(formats));
    subdivide->add_option("--edge", edge)->required()->delimiter(',')->expected(2);
    subdivide->add_option("--times", times)->check(CLI::Range(0, 1000));

    auto* generate = app.add_subcommand("generate", "Export a family catalog");
    std::string family;
    int max_n = 0;
    std::string out_path = "-";
    generate->add_option("--family", family)->required()->check(CLI::IsMember(families));
    generate->add_option("--max-n", max_n)->required()->check(CLI::Range(1, kFamilyOrderCap));
    generate->add_option("--out", out_path);

    auto* recog = app.add_subcommand("recognize", "Family membership of a tree");
    recog->add_option("--family", family)->required()->check(CLI::IsMember(families));
    recog->add_option("--input", input)->required();
    recog->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* almost = app.add_subcommand("almost-sds", "Minimum almost semitotal set relative to a vertex");
    int vertex = 0;
    almost->add_option("--input", input)->required();
    almost->add_option("--format", format)->check(CLI::IsMember(formats));
    almost->add_option("--vertex", vertex)->required()->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "Check one claim exhaustively");
    std::string claim;
    std::optional<int> verify_max_n;
    std::string graphs_path;
    int jobs = 1;
    verify->add_option("--claim", claim)->required();
    verify->add_option("--max-n", verify_max_n)->check(CLI::PositiveNumber);
    verify->add_option("--graphs", graphs_path);
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed()) {
            const auto variant = parse_param(param);
            for (const auto& g : read_graphs(input, format)) {
                std::cout << to_json(min_set(g, variant)) << '\n';
            }
        } else if (msd->parsed()) {
            for (const auto& g : read_graphs(input, format)) {
                std::cout << to_json(msd_semitotal(g, k_max)) << '\n';
            }
        } else if (subdivide->parsed()) {
            const Graph g = read_one(input, format);
            const Graph h = subdivide_edge(g, Edge::make(edge[0], edge[1]), times);
            std::cout << (format == "graph6" ? encode_graph6(h) + "\n" : encode_edgelist(h));
        } else if (generate->parsed()) {
            const auto catalog = generate_family(*parse_family(family), max_n);
            if (out_path == "-") {
                write_catalog(std::cout, catalog);
            } else {
                std::ofstream out(out_path);
                if (!out) {
                    throw Error("cannot write " + out_path);
                }
                write_catalog(out, catalog);
            }
        } else if (recog->parsed()) {
            const auto fam = *parse_family(family);
            for (const auto& g : read_graphs(input, format)) {
                std::cout << recognition_json(fam, recognize(fam, g, kFamilyOrderCap)) << '\n';
            }
        } else if (almost->parsed()) {
            const Graph g = read_one(input, format);
            if (vertex >= g.order()) {
                throw Error("vertex " + std::to_string(vertex) + " out of range");
            }
            std::cout << to_json(min_almost_semitotal(g, vertex)) << '\n';
        } else if (verify->parsed()) {
            const auto id = parse_claim(claim);
            if (!id) {
                throw Error("unknown claim " + claim);
            }
            VerifyBounds bounds;
            bounds.max_n = verify_max_n;
            bounds.jobs = resolve_jobs(jobs);
            if (!graphs_path.empty()) {
                bounds.graphs = read_graphs(graphs_path, "graph6");
            }
            const auto report = run_verification(*id, bounds);
            std::cout << to_json(report, 2) << '\n';
            return report.passed ? kExitOk : kExitClaimFailed;
        }
    } catch (const MsdSearchExhausted& e) {
        std::cerr << "semidom: " << e.what() << '\n';
        return kExitClaimFailed;
    } catch (const std::exception& e) {
        std::cerr << "semidom: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}
