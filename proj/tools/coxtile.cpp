// coxtile: batch front-end for the reflection-trick pipeline.
//
// Exit codes: 0 ok, 1 certificate failure, 2 usage/input error,
// 3 guard exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coxtile/genus_bounds.hpp"
#include "coxtile/json_io.hpp"

namespace {

using coxtile::json;

constexpr int kOk = 0;
constexpr int kCertificateFailure = 1;
constexpr int kUsageError = 2;
constexpr int kGuardExceeded = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

std::string hex64(std::uint64_t h) {
    std::ostringstream out;
    out << std::hex << std::setfill('0') << std::setw(16) << h;
    return out.str();
}

// Shared plumbing: input path, output destination, seed, report stamping.
struct Pipeline {
    std::string input;
    std::string output;  // empty = stdout
    std::uint64_t seed = 0;
    int threads = 1;  // accepted for interface stability; outputs never depend on it

    std::string input_text;

    coxtile::SimplicialComplex load() {
        input_text = read_file(input);
        return coxtile::complex_from_json(json::parse(input_text));
    }

    json report(const std::string& command, json config) const {
        json r;
        r["tool"] = "coxtile";
        r["version"] = coxtile::kVersion;
        r["command"] = command;
        r["input_hash"] = hex64(coxtile::fnv1a64(input_text));
        r["seed"] = seed;
        config["threads"] = threads;
        r["config"] = config;
        return r;
    }

    void emit(const json& r) const {
        std::string text = r.dump(2) + "\n";
        if (output.empty())
            std::cout << text;
        else
            write_file(output, text);
    }

    void add_common(CLI::App* cmd, bool with_input = true) {
        if (with_input)
            cmd->add_option("input", input, "complex JSON file")->required();
        cmd->add_option("-o,--output", output, "write the report here instead of stdout");
        cmd->add_option("--seed", seed, "seed recorded in the report");
        cmd->add_option("--threads", threads, "worker threads (does not affect outputs)");
    }
};

json word_list(const coxtile::NerveGraph& G, const std::vector<coxtile::ReducedWord>& ws) {
    json out = json::array();
    for (const auto& w : ws) out.push_back(coxtile::word_to_string(G, w));
    return out;
}

int run_check(Pipeline& pipe) {
    auto K = pipe.load();
    auto squares = coxtile::empty_squares(K);
    bool flag = coxtile::is_flag(K);

    json cfg = json::object();
    json r = pipe.report("check", cfg);
    r["flag"] = flag;
    r["no_empty_square"] = squares.empty();
    r["flag_no_square"] = flag && squares.empty();
    json sq = json::array();
    for (const auto& s : squares) {
        json cyc = json::array();
        for (int v : s.cycle) cyc.push_back(K.vertex_labels()[v]);
        sq.push_back(cyc);
    }
    r["empty_squares"] = sq;
    auto G = coxtile::NerveGraph::from_complex(K);
    r["hyperbolic"] = coxtile::is_hyperbolic(G);
    if (auto w = coxtile::z2_witness(G)) {
        json cyc = json::array();
        for (int v : *w) cyc.push_back(K.vertex_labels()[v]);
        r["z2_witness"] = cyc;
    }
    pipe.emit(r);
    return kOk;
}

int run_subdivide(Pipeline& pipe, int rounds) {
    auto K = pipe.load();
    json cfg;
    cfg["rounds"] = rounds;
    json r = pipe.report("subdivide", cfg);
    auto sd = coxtile::barycentric_subdivision(K);
    r["sd"] = coxtile::complex_to_json(sd);
    auto fns = coxtile::make_flag_no_square(K, rounds);
    r["flag_no_square"] = coxtile::complex_to_json(fns);
    r["flag_no_square_verified"] = coxtile::is_flag_no_square(fns);
    r["euler"] = coxtile::euler_characteristic(fns);
    pipe.emit(r);
    return kOk;
}

int run_group(Pipeline& pipe, int radius, int torsion_radius, long long max_elements,
              const std::string& csv_path) {
    auto K = pipe.load();
    auto G = coxtile::NerveGraph::from_complex(K);
    json cfg;
    cfg["radius"] = radius;
    cfg["torsion_radius"] = torsion_radius;
    cfg["max_elements"] = max_elements;
    json r = pipe.report("group", cfg);

    auto ball = coxtile::enumerate_ball(G, radius, max_elements);
    r["ball_size"] = ball.size();
    r["growth"] = coxtile::growth_series(G, radius, max_elements);
    r["hyperbolic"] = coxtile::is_hyperbolic(G);
    r["commutator_index"] = coxtile::commutator_subgroup_index(G);

    auto scan = coxtile::torsion_scan(G, torsion_radius, true, max_elements);
    json ts;
    ts["radius"] = scan.radius;
    ts["commutator_only"] = scan.commutator_only;
    ts["scanned"] = scan.scanned;
    ts["violations"] = word_list(G, scan.violations);
    r["torsion_scan"] = ts;

    if (!csv_path.empty()) write_file(csv_path, coxtile::ball_to_csv(G, ball));
    pipe.emit(r);
    return scan.violations.empty() ? kOk : kCertificateFailure;
}

int run_davis(Pipeline& pipe, int tiles, const std::string& dot_path,
              const coxtile::TruncationGuards& guards) {
    auto K = pipe.load();
    auto ch = coxtile::build_chamber(K);
    auto tc = coxtile::build_truncation(ch, tiles, guards);
    json cfg;
    cfg["tiles"] = tiles;
    cfg["max_tiles"] = guards.max_tiles;
    cfg["max_cells"] = guards.max_cells;
    json r = pipe.report("davis", cfg);

    r["cell_count"] = tc.cell_count();
    r["euler"] = tc.euler();
    r["connected"] = tc.adjacency_connected();
    bool signs_ok = true;
    for (const auto& e : tc.adjacency)
        if (tc.tile_sign[e.from] != -tc.tile_sign[e.to]) signs_ok = false;
    r["signs_alternate"] = signs_ok;
    r["orbifold_euler"] = coxtile::orbifold_euler(ch).str();

    bool certified = true;
    json certs = json::array();
    for (const auto& w : tc.tiles) {
        if (w.is_identity()) continue;
        auto ar = coxtile::attach_region(ch, tc.nerve, w);
        auto cert = coxtile::disk_certificate(ar.region);
        json c;
        c["word"] = coxtile::word_to_string(tc.nerve, w);
        c["status"] = cert.status == coxtile::CertificateStatus::Verified   ? "verified"
                      : cert.status == coxtile::CertificateStatus::Failed   ? "failed"
                                                                            : "inconclusive";
        c["dim"] = cert.dim;
        c["chi"] = cert.chi;
        if (!cert.reason.empty()) c["reason"] = cert.reason;
        certs.push_back(c);
        if (cert.status == coxtile::CertificateStatus::Failed) certified = false;
    }
    r["disk_certificates"] = certs;
    r["homology"] = coxtile::homology_to_json(coxtile::homology(tc.chains));
    r["adjacency"] = coxtile::adjacency_to_json(tc);

    if (!dot_path.empty()) write_file(dot_path, coxtile::adjacency_to_dot(tc));
    pipe.emit(r);
    if (!certified || !tc.adjacency_connected() || !signs_ok) return kCertificateFailure;
    return kOk;
}

int run_quotient(Pipeline& pipe, bool dump_chains) {
    auto K = pipe.load();
    auto qc = coxtile::build_quotient_complex(K);
    json cfg;
    cfg["dump_chains"] = dump_chains;
    json r = pipe.report("quotient", cfg);
    r["index"] = qc.index;
    r["cell_count"] = qc.cell_count();
    r["euler"] = qc.euler();
    r["orbifold_euler"] = coxtile::orbifold_euler(qc.chamber).str();
    r["homology"] = coxtile::homology_to_json(qc.profile);
    if (dump_chains) r["chains"] = coxtile::chains_to_json(qc.chains);
    pipe.emit(r);
    return kOk;
}

int run_homology(Pipeline& pipe) {
    auto K = pipe.load();
    json r = pipe.report("homology", json::object());
    r["euler"] = coxtile::euler_characteristic(K);
    r["homology"] = coxtile::homology_to_json(coxtile::homology(K));
    pipe.emit(r);
    return kOk;
}

struct AdjunctionArgs {
    coxtile::LegendrianCurve green{1, 1, 0};
    coxtile::LegendrianCurve blue{1, 3, 0};
    long long self_int = 0;
    long long k = 1;
    long long clasps = -1;  // -1 = off
};

int run_adjunction(Pipeline& pipe, const AdjunctionArgs& a) {
    json cfg;
    cfg["green"] = {{"tb", a.green.tb}, {"r", a.green.rot}, {"framing", a.green.framing}};
    cfg["blue"] = {{"tb", a.blue.tb}, {"r", a.blue.rot}, {"framing", a.blue.framing}};
    cfg["self_int"] = a.self_int;
    cfg["k"] = a.k;
    // no input file: the report hash covers the configuration instead
    pipe.input_text = cfg.dump();
    json r = pipe.report("adjunction", cfg);

    long long c1 = coxtile::chern_evaluation(a.green, a.blue);
    r["c1_eval"] = c1;
    r["genus_bound"] = coxtile::adjunction_genus_bound({c1, a.self_int, a.k});
    // the X / X' comparison: same homology, c1-evaluations c1 and 0
    r["bound_x"] = coxtile::adjunction_genus_bound({c1, a.self_int, a.k});
    r["bound_x_prime"] = coxtile::adjunction_genus_bound({0, a.self_int, a.k});
    if (a.clasps >= 0) {
        auto fam = coxtile::clasp_family_claim(a.clasps);
        json f;
        f["m"] = fam.m;
        f["c1_eval"] = fam.c1_eval;
        f["direct_bound"] = fam.direct_bound;
        f["claimed_exclusion"] = fam.claimed_exclusion;
        r["clasp_family"] = f;
    }
    pipe.emit(r);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational toolkit for right-angled reflection tilings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", coxtile::kVersion);

    Pipeline pipe;

    auto* check = app.add_subcommand("check", "flag / no-square / hyperbolicity predicates");
    pipe.add_common(check);

    auto* subdivide = app.add_subcommand("subdivide", "sd and flag-no-square subdivision");
    int rounds = 32;
    subdivide->add_option("--rounds", rounds, "subdivision round budget");
    pipe.add_common(subdivide);

    auto* group = app.add_subcommand("group", "ball, growth, hyperbolicity, torsion scan");
    int radius = 4;
    int torsion_radius = 4;
    long long max_elements = 200000;
    std::string csv_path;
    group->add_option("--radius", radius, "ball radius");
    group->add_option("--torsion-radius", torsion_radius, "torsion scan radius");
    group->add_option("--max-elements", max_elements, "ball element guard");
    group->add_option("--csv", csv_path, "write the ball as CSV here");
    pipe.add_common(group);

    auto* davis = app.add_subcommand("davis", "truncation build and disk certificates");
    int tiles = 8;
    std::string dot_path;
    coxtile::TruncationGuards guards;
    davis->add_option("--tiles", tiles, "number of chambers");
    davis->add_option("--dot", dot_path, "write the adjacency graph as DOT here");
    davis->add_option("--max-tiles", guards.max_tiles, "tile guard");
    davis->add_option("--max-cells", guards.max_cells, "cell guard");
    pipe.add_common(davis);

    auto* quotient = app.add_subcommand("quotient", "explicit quotient complex and homology");
    bool dump_chains = false;
    quotient->add_flag("--chains", dump_chains, "dump boundary matrices");
    pipe.add_common(quotient);

    auto* hom = app.add_subcommand("homology", "integral homology of an input complex");
    pipe.add_common(hom);

    auto* adj = app.add_subcommand("adjunction", "genus bounds from Legendrian data");
    AdjunctionArgs aa;
    adj->add_option("--tb-g", aa.green.tb, "tb of the first curve");
    adj->add_option("--rot-g", aa.green.rot, "rotation of the first curve");
    adj->add_option("--framing-g", aa.green.framing, "framing of the first curve");
    adj->add_option("--tb-b", aa.blue.tb, "tb of the second curve");
    adj->add_option("--rot-b", aa.blue.rot, "rotation of the second curve");
    adj->add_option("--framing-b", aa.blue.framing, "framing of the second curve");
    adj->add_option("--self-int", aa.self_int, "self-intersection of the class");
    adj->add_option("--k", aa.k, "multiple of the generator");
    adj->add_option("--clasps", aa.clasps, "also report the m-clasp family claim");
    pipe.add_common(adj, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (check->parsed()) return run_check(pipe);
        if (subdivide->parsed()) return run_subdivide(pipe, rounds);
        if (group->parsed()) return run_group(pipe, radius, torsion_radius, max_elements, csv_path);
        if (davis->parsed()) return run_davis(pipe, tiles, dot_path, guards);
        if (quotient->parsed()) return run_quotient(pipe, dump_chains);
        if (hom->parsed()) return run_homology(pipe);
        if (adj->parsed()) return run_adjunction(pipe, aa);
    } catch (const coxtile::GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return kGuardExceeded;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
