// Command-line surface for the arrowing library: parameter reports, arrowing
// decisions, constructions with replayable traces, verification suites, and a
// desk-scale separator probe. Exit codes: 0 affirmative/pass, 1 negative or
// violation (with certificate/counterexample artifacts), 2 unknown/budget,
// >2 usage or I/O errors.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ramsey/ramsey.hpp"

namespace {

using namespace ramsey;

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Artifacts are written atomically so goldens never see partial files.
void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Accepts graph6 or the JSON schema; JSON is recognized by a leading '{'.
Graph parse_graph_text(const std::string& text) {
    const std::string t = trim(text);
    if (!t.empty() && t.front() == '{') return graph_from_json(parse_json_text(t));
    return decode_graph6(t);
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string graph_artifact(const Graph& g, const std::string& fmt) {
    if (fmt == "json") return dump_json(graph_to_json(g));
    if (fmt == "dot") return to_dot(g);
    return encode_graph6(g) + "\n";
}

std::string graph_ext(const std::string& fmt) {
    if (fmt == "json") return ".json";
    if (fmt == "dot") return ".dot";
    return ".g6";
}

// Wall-clock reporting goes to stdout only; artifacts stay byte-stable.
struct Report {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Report(const std::string& command) { std::cout << "command: " << command << "\n"; }

    void input(const std::string& path, const std::string& bytes) {
        std::cout << "input: " << path << " fnv1a=" << hex64(fnv1a(bytes)) << "\n";
    }
    void seed(std::uint64_t s) { std::cout << "seed: " << s << "\n"; }
    void line(const std::string& k, const std::string& v) { std::cout << k << ": " << v << "\n"; }
    void wrote(const std::string& path) { std::cout << "artifact: " << path << "\n"; }

    int finish(int exit_code) {
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cout << "time_ms: " << ms.count() << "\n";
        std::cout << "exit: " << exit_code << "\n";
        return exit_code;
    }
};

std::string out_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

std::vector<int> parse_bounds_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(trim(item)));
        } catch (const std::exception&) {
            throw precondition_error("bounds: expected comma-separated integers, got '" + text + "'");
        }
    }
    if (out.empty()) throw precondition_error("bounds: empty list");
    return out;
}

// All compositions of total into parts entries >= 1, lexicographic.
void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        if (total >= 1) {
            cur.push_back(total);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int first = 1; first + (parts - 1) <= total; ++first) {
        cur.push_back(first);
        compositions(total - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

int run_params(const std::string& graph_file, const std::string& out_dir) {
    Report rep("params");
    const std::string text = read_file(graph_file);
    rep.input(graph_file, text);
    const Graph g = parse_graph_text(text);

    const ChromaticResult cr = chromatic_number(g);
    const int omega = clique_number(g);
    const auto go = odd_girth(g);
    nlohmann::json j{{"n", g.vertex_count()}, {"edges", g.edge_count()}, {"chi", cr.chi}, {"omega", omega}};
    rep.line("n", std::to_string(g.vertex_count()));
    rep.line("chi", std::to_string(cr.chi));
    rep.line("omega", std::to_string(omega));
    if (go) {
        rep.line("odd_girth", std::to_string(*go));
        j["odd_girth"] = *go;
    } else {
        rep.line("odd_girth", "infinite");
        j["odd_girth"] = "infinite";
    }
    j["chi_witness"] = cr.colouring.colours;
    if (g.vertex_count() >= 1) {
        const AResult ar = a_parameter(g);
        rep.line("a", std::to_string(ar.a));
        j["a"] = ar.a;
        j["a_witness"] = ar.colouring.colours;
    }
    const std::string path = out_path(out_dir, "params.json");
    atomic_write(path, dump_json(j));
    rep.wrote(path);
    return rep.finish(0);
}

int run_arrows(const std::string& host_file, const std::string& pattern_file, int q, std::uint64_t budget,
               const std::string& out_dir) {
    Report rep("arrows");
    const std::string host_text = read_file(host_file);
    const std::string pattern_text = read_file(pattern_file);
    rep.input(host_file, host_text);
    rep.input(pattern_file, pattern_text);
    const Graph f = parse_graph_text(host_text);
    const Graph h = parse_graph_text(pattern_text);

    try {
        const ArrowsResult res = arrows(f, h, q, budget);
        rep.line("nodes", std::to_string(res.nodes));
        if (res.arrows) {
            rep.line("outcome", "arrows: every " + std::to_string(q) + "-colouring contains a monochromatic copy");
            return rep.finish(0);
        }
        const std::string path = out_path(out_dir, "certificate.json");
        atomic_write(path, dump_json(colouring_to_json(*res.certificate)));
        rep.line("outcome", "does not arrow; certificate colouring written");
        rep.wrote(path);
        return rep.finish(1);
    } catch (const budget_exceeded_error& e) {
        rep.line("outcome", std::string("unknown: ") + e.what());
        return rep.finish(2);
    }
}

int run_construct_hypergraph(int k, int n_cap, const Rational& eps, std::uint64_t seed, std::uint64_t budget,
                             const std::string& out_dir) {
    Report rep("construct hypergraph");
    rep.seed(seed);
    try {
        const Hypergraph h = hypergraph_search(k, n_cap, eps, seed, budget);
        rep.line("outcome", "found n=" + std::to_string(h.vertex_count()) + " k=" + std::to_string(h.uniformity()) +
                                " hyperedges=" + std::to_string(h.edge_count()));
        const auto girth = hypergraph_girth(h);
        rep.line("girth", girth ? std::to_string(*girth) : "infinite");
        rep.line("independence", std::to_string(hypergraph_independence_number(h)));
        const std::string path = out_path(out_dir, "hypergraph.json");
        atomic_write(path, dump_json(hypergraph_to_json(h)));
        rep.wrote(path);
        return rep.finish(0);
    } catch (const budget_exceeded_error& e) {
        rep.line("outcome", std::string("unknown: ") + e.what());
        return rep.finish(2);
    }
}

int run_construct_blowup(const std::string& base_file, const Rational& eps, int n_cap,
                         const std::string& backing_file, std::uint64_t seed, std::uint64_t budget,
                         const std::string& out_dir, const std::string& fmt) {
    Report rep("construct blowup");
    const std::string base_text = read_file(base_file);
    rep.input(base_file, base_text);
    const Graph base = parse_graph_text(base_text);
    std::optional<Hypergraph> backing;
    if (!backing_file.empty()) {
        const std::string btext = read_file(backing_file);
        rep.input(backing_file, btext);
        backing = hypergraph_from_json(parse_json_text(btext));
    }
    rep.seed(seed);
    try {
        const BlowupTrace bt = build_l(base, eps, n_cap, backing, seed, budget);
        rep.line("outcome", "blow-up on " + std::to_string(bt.result.vertex_count()) + " vertices, " +
                                std::to_string(bt.result.edge_count()) + " edges, " +
                                std::to_string(bt.backing.edge_count()) + " embedded copies");
        const std::string tpath = out_path(out_dir, "blowup.json");
        atomic_write(tpath, dump_json(blowup_to_json(bt)));
        rep.wrote(tpath);
        const std::string gpath = out_path(out_dir, "result" + graph_ext(fmt));
        atomic_write(gpath, graph_artifact(bt.result, fmt));
        rep.wrote(gpath);
        return rep.finish(0);
    } catch (const budget_exceeded_error& e) {
        rep.line("outcome", std::string("unknown: ") + e.what());
        return rep.finish(2);
    }
}

int run_construct_tower(int m, int n_cap, int q, int levels, const std::optional<Rational>& eps, std::uint64_t seed,
                        std::uint64_t budget, int max_vertices, const std::string& out_dir, const std::string& fmt) {
    Report rep("construct tower");
    rep.seed(seed);
    BuildLimits limits;
    limits.search_work = budget;
    limits.max_vertices = max_vertices;
    try {
        const auto tower = build_f_tower(m, n_cap, q, levels, eps, seed, limits);
        rep.line("eps", tower.front().eps_used.str());
        for (const auto& t : tower)
            rep.line("level " + std::to_string(t.level), std::to_string(t.graph.vertex_count()) + " vertices, " +
                                                             std::to_string(t.graph.edge_count()) + " edges");
        const std::string tpath = out_path(out_dir, "tower.json");
        atomic_write(tpath, dump_json(tower_to_json(tower)));
        rep.wrote(tpath);
        const std::string gpath = out_path(out_dir, "result" + graph_ext(fmt));
        atomic_write(gpath, graph_artifact(tower.back().graph, fmt));
        rep.wrote(gpath);
        return rep.finish(0);
    } catch (const budget_exceeded_error& e) {
        rep.line("outcome", std::string("unknown: ") + e.what());
        return rep.finish(2);
    } catch (const size_budget_exceeded_error& e) {
        rep.line("outcome", std::string("size budget: ") + e.what() + " (level reached " +
                                std::to_string(e.level_reached) + ")");
        return rep.finish(2);
    }
}

int run_construct_theorem8(const std::string& base_file, int h_size, int q, const std::optional<Rational>& eps,
                           std::uint64_t seed, std::uint64_t budget, int max_vertices, const std::string& out_dir,
                           const std::string& fmt) {
    Report rep("construct theorem8");
    const std::string base_text = read_file(base_file);
    rep.input(base_file, base_text);
    const Graph base = parse_graph_text(base_text);
    rep.seed(seed);
    BuildLimits limits;
    limits.search_work = budget;
    limits.max_vertices = max_vertices;
    try {
        const Theorem8Trace t8 = build_theorem8(base, h_size, q, eps, seed, limits);
        rep.line("chi", std::to_string(t8.chi));
        rep.line("a_of_g", std::to_string(t8.a_of_g));
        rep.line("outcome", "built F on " + std::to_string(t8.graph.vertex_count()) + " vertices, " +
                                std::to_string(t8.graph.edge_count()) + " edges, |A|=" +
                                std::to_string(t8.a_set.size()));
        const std::string tpath = out_path(out_dir, "theorem8.json");
        atomic_write(tpath, dump_json(theorem8_to_json(t8)));
        rep.wrote(tpath);
        const std::string gpath = out_path(out_dir, "result" + graph_ext(fmt));
        atomic_write(gpath, graph_artifact(t8.graph, fmt));
        rep.wrote(gpath);
        const EdgeColouring c = theorem8_colouring(t8, t8.a_of_g, q);
        const std::string cpath = out_path(out_dir, "colouring.json");
        atomic_write(cpath, dump_json(colouring_to_json(c)));
        rep.wrote(cpath);
        return rep.finish(0);
    } catch (const budget_exceeded_error& e) {
        rep.line("outcome", std::string("unknown: ") + e.what());
        return rep.finish(2);
    } catch (const size_budget_exceeded_error& e) {
        rep.line("outcome", std::string("size budget: ") + e.what() + " (level reached " +
                                std::to_string(e.level_reached) + ")");
        return rep.finish(2);
    }
}

int run_verify_lemma3(const std::string& blowup_file, int n_cap, const std::string& out_dir) {
    Report rep("verify lemma3");
    const std::string text = read_file(blowup_file);
    rep.input(blowup_file, text);
    const BlowupTrace bt = blowup_from_json(parse_json_text(text));
    const Lemma3Result res = verify_lemma3(bt, n_cap);
    if (res.ok) {
        rep.line("outcome", "pass: every short cycle lies inside a single hyperedge");
        return rep.finish(0);
    }
    nlohmann::json j{{"cycle", res.cycle}, {"hyperedge", res.hyperedge}};
    const std::string path = out_path(out_dir, "violation.json");
    atomic_write(path, dump_json(j));
    rep.line("outcome", "violation: cycle escapes its hyperedge");
    rep.wrote(path);
    return rep.finish(1);
}

int run_verify_lemma5(const std::string& blowup_file, const Rational& eps, const std::string& out_dir) {
    Report rep("verify lemma5");
    const std::string text = read_file(blowup_file);
    rep.input(blowup_file, text);
    const BlowupTrace bt = blowup_from_json(parse_json_text(text));
    const Lemma5Result res = verify_lemma5(bt, eps);
    const long long s0 = eps.ceil_times(bt.result.vertex_count());
    rep.line("subset_size", std::to_string(s0));
    if (res.ok) {
        rep.line("outcome", "pass: every subset of that size contains the base graph");
        return rep.finish(0);
    }
    nlohmann::json j{{"subset", res.subset}};
    const std::string path = out_path(out_dir, "violation.json");
    atomic_write(path, dump_json(j));
    rep.line("outcome", "violation: subset without a base copy");
    rep.wrote(path);
    return rep.finish(1);
}

int run_verify_focus(int trials, int q, std::uint64_t seed) {
    Report rep("verify focus");
    rep.seed(seed);
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        const int a_size = 1 + rng.below_int(5);
        const int b_size = 1 + rng.below_int(128);
        const Graph kab = complete_join(a_size, Graph(b_size));
        EdgeColouring c{kab, q, std::vector<int>(kab.edge_count())};
        for (auto& col : c.colours) col = 1 + rng.below_int(q);
        std::vector<int> a_set(a_size), b_set(b_size);
        std::iota(a_set.begin(), a_set.end(), 0);
        std::iota(b_set.begin(), b_set.end(), a_size);

        const FocusResult fr = focus(a_set, b_set, c);
        long long pow_q = 1;
        for (int i = 0; i < a_size; ++i) pow_q *= q;
        check(static_cast<int>(fr.a_prime.size()) >= (a_size + q - 1) / q, "focus: a bound violated");
        check(static_cast<long long>(fr.b_prime.size()) >= (b_size + pow_q - 1) / pow_q, "focus: b bound violated");
        for (int a : fr.a_prime)
            for (int b : fr.b_prime)
                check(colour_of(c, a, b) == fr.colour, "focus: core not monochromatic");
    }
    rep.line("outcome", "pass: " + std::to_string(trials) + " trials, bounds and monochromaticity hold");
    return rep.finish(0);
}

int run_verify_claim(const std::string& tower_file, int trials, std::uint64_t seed, const std::string& out_dir) {
    Report rep("verify claim");
    const std::string text = read_file(tower_file);
    rep.input(tower_file, text);
    rep.seed(seed);
    const auto tower = tower_from_json(parse_json_text(text));
    const ConstructionTrace& top = tower.back();

    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        EdgeColouring c{top.graph, top.q, std::vector<int>(top.graph.edge_count())};
        for (auto& col : c.colours) col = 1 + rng.below_int(top.q);
        try {
            const RamseyWitness w = extract_witness(top, c);
            long long total = 0;
            for (int mv : w.m_values) total += mv;
            check(total == top.level + top.q, "claim: wrong class total");
        } catch (const extraction_failure_error& e) {
            nlohmann::json j{{"trial", trial}, {"colours", c.colours}};
            const std::string path = out_path(out_dir, "violation.json");
            atomic_write(path, dump_json(j));
            rep.line("outcome", std::string("extraction failed: ") + e.what());
            rep.wrote(path);
            return rep.finish(1);
        }
    }

    std::vector<std::vector<int>> bounds_list;
    std::vector<int> cur;
    compositions(top.level + top.q, top.q, cur, bounds_list);
    for (const auto& bounds : bounds_list) {
        const EdgeColouring c = good_colouring(top, bounds);
        const PProfileResult pr = verify_p_profile(c, PProfile{top.n_cap, bounds});
        if (!pr.ok) {
            nlohmann::json j{{"bounds", bounds}, {"colour", pr.colour}, {"subset", pr.subset}};
            const std::string path = out_path(out_dir, "violation.json");
            atomic_write(path, dump_json(j));
            rep.line("outcome", "good colouring failed its profile");
            rep.wrote(path);
            return rep.finish(1);
        }
    }
    rep.line("outcome", "pass: " + std::to_string(trials) + " extractions and " +
                            std::to_string(bounds_list.size()) + " good colourings verified");
    return rep.finish(0);
}

int run_verify_pprofile(const std::string& graph_file, const std::string& colouring_file, int n_cap,
                        const std::vector<int>& bounds, const std::string& out_dir) {
    Report rep("verify pprofile");
    const std::string gtext = read_file(graph_file);
    const std::string ctext = read_file(colouring_file);
    rep.input(graph_file, gtext);
    rep.input(colouring_file, ctext);
    const Graph g = parse_graph_text(gtext);
    const EdgeColouring c = colouring_from_json(g, parse_json_text(ctext));
    const PProfileResult pr = verify_p_profile(c, PProfile{n_cap, bounds});
    if (pr.ok) {
        rep.line("outcome", "pass: every small monochromatic subgraph meets its bound");
        return rep.finish(0);
    }
    nlohmann::json j{{"colour", pr.colour}, {"subset", pr.subset}};
    const std::string path = out_path(out_dir, "violation.json");
    atomic_write(path, dump_json(j));
    rep.line("outcome", "violation in colour " + std::to_string(pr.colour));
    rep.wrote(path);
    return rep.finish(1);
}

int run_verify_theorem8(const std::string& trace_file, const std::string& pattern_file, const std::string& out_dir) {
    Report rep("verify theorem8");
    const std::string ttext = read_file(trace_file);
    const std::string ptext = read_file(pattern_file);
    rep.input(trace_file, ttext);
    rep.input(pattern_file, ptext);
    const Theorem8Trace t8 = theorem8_from_json(parse_json_text(ttext));
    const Graph h = parse_graph_text(ptext);

    const EdgeColouring c = theorem8_colouring(t8, t8.a_of_g, t8.q);
    if (const auto copy = find_monochromatic_copy(c, h)) {
        nlohmann::json j{{"colour", copy->colour}, {"image", copy->embedding.image}};
        const std::string path = out_path(out_dir, "violation.json");
        atomic_write(path, dump_json(j));
        rep.line("outcome", "violation: monochromatic copy in colour " + std::to_string(copy->colour));
        rep.wrote(path);
        return rep.finish(1);
    }
    rep.line("outcome", "pass: no colour class contains the pattern");
    return rep.finish(0);
}

int run_separate(const std::string& g_file, const std::string& h_file, int q, int n_max, std::uint64_t budget) {
    Report rep("separate");
    const std::string gtext = read_file(g_file);
    const std::string htext = read_file(h_file);
    rep.input(g_file, gtext);
    rep.input(h_file, htext);
    const Graph g = parse_graph_text(gtext);
    const Graph h = parse_graph_text(htext);

    int found = 0;
    try {
        const auto seps = find_separator(g, h, q, n_max, budget, [&](const Graph& f) {
            std::cout << "separator: " << encode_graph6(f) << "\n";
            ++found;
        });
        rep.line("found", std::to_string(seps.size()));
        rep.line("note", "exhaustion up to n_max proves nothing about Ramsey equivalence beyond this size");
        return rep.finish(seps.empty() ? 1 : 0);
    } catch (const budget_exceeded_error& e) {
        rep.line("found", std::to_string(found));
        rep.line("outcome", std::string("unknown: ") + e.what());
        rep.line("note", "exhaustion up to n_max proves nothing about Ramsey equivalence beyond this size");
        return rep.finish(2);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramsey arrowing toolkit: parameters, arrowing decisions, constructions, verification"};
    app.require_subcommand(1);

    std::string out_dir = ".";
    app.add_option("--out-dir", out_dir, "directory for artifacts")->envname("RAMSEY_OUT_DIR")->capture_default_str();

    // params
    auto* cmd_params = app.add_subcommand("params", "chromatic number, clique number, odd girth, a-parameter");
    std::string params_graph;
    cmd_params->add_option("graph", params_graph, "graph file (graph6 or JSON)")->required();

    // arrows
    auto* cmd_arrows = app.add_subcommand("arrows", "decide host -> (pattern)_q");
    std::string arrows_host, arrows_pattern;
    int arrows_q = 2;
    std::uint64_t arrows_budget = default_arrows_budget;
    cmd_arrows->add_option("host", arrows_host, "host graph file")->required();
    cmd_arrows->add_option("pattern", arrows_pattern, "pattern graph file")->required();
    cmd_arrows->add_option("--q", arrows_q, "number of colours")->capture_default_str();
    cmd_arrows->add_option("--budget-nodes", arrows_budget, "search node budget")->capture_default_str();

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "build hypergraphs, blow-ups, towers, theorem8 instances");
    cmd_construct->require_subcommand(1);
    std::string fmt = "g6";
    cmd_construct->add_option("--format", fmt, "result graph format")->check(CLI::IsMember({"g6", "json", "dot"}));
    std::uint64_t seed = 0;
    cmd_construct->add_option("--seed", seed, "random seed")->capture_default_str();
    std::uint64_t work_budget = default_search_budget;
    cmd_construct->add_option("--budget-nodes", work_budget, "hypergraph search budget")->capture_default_str();

    auto* ch = cmd_construct->add_subcommand("hypergraph", "high-girth low-independence uniform hypergraph");
    int ch_k = 2, ch_ncap = 2;
    std::string ch_eps;
    ch->add_option("--k", ch_k, "uniformity")->required();
    ch->add_option("--n-cap", ch_ncap, "girth must exceed this")->required();
    ch->add_option("--eps", ch_eps, "independence bound as p/q")->required();

    auto* cb = cmd_construct->add_subcommand("blowup", "embed a base graph into every hyperedge");
    std::string cb_base, cb_backing, cb_eps;
    int cb_ncap = 2;
    cb->add_option("--base", cb_base, "base graph file")->required();
    cb->add_option("--eps", cb_eps, "independence bound as p/q")->required();
    cb->add_option("--n-cap", cb_ncap, "girth cap")->required();
    cb->add_option("--backing", cb_backing, "optional backing hypergraph JSON");

    auto* ct = cmd_construct->add_subcommand("tower", "recursive join-and-blow-up tower");
    int ct_m = 2, ct_ncap = 2, ct_q = 2, ct_levels = 0, ct_maxv = 4096;
    std::string ct_eps;
    ct->add_option("--m", ct_m, "base independent-set size")->required();
    ct->add_option("--n-cap", ct_ncap, "profile cap")->required();
    ct->add_option("--q", ct_q, "colours")->required();
    ct->add_option("--levels", ct_levels, "levels to build")->required();
    ct->add_option("--eps", ct_eps, "override epsilon as p/q (default q^{-q*m})");
    ct->add_option("--max-vertices", ct_maxv, "size budget")->capture_default_str();

    auto* c8 = cmd_construct->add_subcommand("theorem8", "distinguishing construction for the a-parameter");
    std::string c8_base, c8_eps;
    int c8_h = 2, c8_q = 2, c8_maxv = 4096;
    c8->add_option("--base", c8_base, "base graph file")->required();
    c8->add_option("--h-size", c8_h, "target pattern vertex count")->required();
    c8->add_option("--q", c8_q, "colours")->required();
    c8->add_option("--eps", c8_eps, "override epsilon as p/q (default per construction)");
    c8->add_option("--max-vertices", c8_maxv, "size budget")->capture_default_str();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verification suites with counterexample artifacts");
    cmd_verify->require_subcommand(1);
    std::uint64_t verify_seed = 0;
    int verify_trials = 100;
    cmd_verify->add_option("--seed", verify_seed, "random seed")->capture_default_str();
    cmd_verify->add_option("--trials", verify_trials, "randomized trial count")->capture_default_str();

    auto* v3 = cmd_verify->add_subcommand("lemma3", "short cycles stay inside hyperedges");
    std::string v3_blowup;
    int v3_ncap = 2;
    v3->add_option("--blowup", v3_blowup, "blow-up trace JSON")->required();
    v3->add_option("--n-cap", v3_ncap, "cycle length cap")->required();

    auto* v5 = cmd_verify->add_subcommand("lemma5", "every eps-fraction contains the base");
    std::string v5_blowup, v5_eps;
    v5->add_option("--blowup", v5_blowup, "blow-up trace JSON")->required();
    v5->add_option("--eps", v5_eps, "fraction as p/q")->required();

    auto* vf = cmd_verify->add_subcommand("focus", "pigeonhole bounds on random bipartite colourings");
    int vf_q = 2;
    vf->add_option("--q", vf_q, "colours")->capture_default_str();

    auto* vc = cmd_verify->add_subcommand("claim", "witness extraction and good colourings on a tower");
    std::string vc_tower;
    vc->add_option("--tower", vc_tower, "tower trace JSON")->required();

    auto* vp = cmd_verify->add_subcommand("pprofile", "monochromatic subgraph colourability profile");
    std::string vp_graph, vp_colouring, vp_bounds;
    int vp_ncap = 2;
    vp->add_option("--graph", vp_graph, "graph file")->required();
    vp->add_option("--colouring", vp_colouring, "edge colouring JSON")->required();
    vp->add_option("--n-cap", vp_ncap, "subgraph size cap")->required();
    vp->add_option("--bounds", vp_bounds, "comma-separated per-colour bounds")->required();

    auto* v8 = cmd_verify->add_subcommand("theorem8", "constructed colouring avoids the pattern");
    std::string v8_trace, v8_pattern;
    v8->add_option("--trace", v8_trace, "theorem8 trace JSON")->required();
    v8->add_option("--pattern", v8_pattern, "pattern graph file")->required();

    // separate
    auto* cmd_separate = app.add_subcommand("separate", "probe for graphs arrowing g but not h");
    std::string sep_g, sep_h;
    int sep_q = 2, sep_nmax = 5;
    std::uint64_t sep_budget = default_arrows_budget;
    cmd_separate->add_option("G", sep_g, "graph that must be arrowed")->required();
    cmd_separate->add_option("H", sep_h, "graph that must not be arrowed")->required();
    cmd_separate->add_option("--q", sep_q, "colours")->capture_default_str();
    cmd_separate->add_option("--n-max", sep_nmax, "largest candidate vertex count")->capture_default_str();
    cmd_separate->add_option("--budget-nodes", sep_budget, "shared search budget")->capture_default_str();

    // Options registered on a parent (--out-dir, --seed, --format, ...) stay
    // usable after a nested subcommand name.
    const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
        for (CLI::App* sub : node->get_subcommands([](CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_params->parsed()) return run_params(params_graph, out_dir);
        if (cmd_arrows->parsed()) return run_arrows(arrows_host, arrows_pattern, arrows_q, arrows_budget, out_dir);
        if (cmd_construct->parsed()) {
            if (ch->parsed())
                return run_construct_hypergraph(ch_k, ch_ncap, Rational::parse(ch_eps), seed, work_budget, out_dir);
            if (cb->parsed())
                return run_construct_blowup(cb_base, Rational::parse(cb_eps), cb_ncap, cb_backing, seed, work_budget,
                                            out_dir, fmt);
            if (ct->parsed()) {
                std::optional<Rational> eps;
                if (!ct_eps.empty()) eps = Rational::parse(ct_eps);
                return run_construct_tower(ct_m, ct_ncap, ct_q, ct_levels, eps, seed, work_budget, ct_maxv, out_dir,
                                           fmt);
            }
            if (c8->parsed()) {
                std::optional<Rational> eps;
                if (!c8_eps.empty()) eps = Rational::parse(c8_eps);
                return run_construct_theorem8(c8_base, c8_h, c8_q, eps, seed, work_budget, c8_maxv, out_dir, fmt);
            }
        }
        if (cmd_verify->parsed()) {
            if (v3->parsed()) return run_verify_lemma3(v3_blowup, v3_ncap, out_dir);
            if (v5->parsed()) return run_verify_lemma5(v5_blowup, Rational::parse(v5_eps), out_dir);
            if (vf->parsed()) return run_verify_focus(verify_trials, vf_q, verify_seed);
            if (vc->parsed()) return run_verify_claim(vc_tower, verify_trials, verify_seed, out_dir);
            if (vp->parsed())
                return run_verify_pprofile(vp_graph, vp_colouring, vp_ncap, parse_bounds_list(vp_bounds), out_dir);
            if (v8->parsed()) return run_verify_theorem8(v8_trace, v8_pattern, out_dir);
        }
        if (cmd_separate->parsed()) return run_separate(sep_g, sep_h, sep_q, sep_nmax, sep_budget);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 3;
    } catch (const invalid_backing_error& e) {
        std::cerr << "invalid backing: " << e.what() << "\n";
        return 3;
    } catch (const extraction_failure_error& e) {
        std::cerr << "extraction failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    std::cerr << "no subcommand\n";
    return 3;
}
