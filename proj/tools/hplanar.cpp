// Command-line front end: generators, verifiers, searches, counters and the
// approximation routines behind one binary. Exit codes: 0 = success / "yes",
// 1 = "no" / nothing found, 2 = input error, 3 = a size ceiling was exceeded.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hplanar/approx.hpp"
#include "hplanar/decomposition.hpp"
#include "hplanar/graph.hpp"
#include "hplanar/hardness.hpp"
#include "hplanar/hclass.hpp"
#include "hplanar/io.hpp"
#include "hplanar/matching.hpp"
#include "hplanar/modulator.hpp"
#include "hplanar/planarity.hpp"
#include "hplanar/rational.hpp"
#include "hplanar/rng.hpp"

using namespace hplanar;
using nlohmann::json;

namespace {

constexpr int kYes = 0, kNo = 1, kBadInput = 2, kCeiling = 3;

struct Options {
    std::string format = "text";
    int threads = 1;  // upper bound on worker threads; the library is sequential
};

VertexSet parse_vertices(const std::string& spec, int n, const char* what) {
    VertexSet out(n);
    if (spec.empty()) return out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 0 || v >= n) throw std::invalid_argument("");
            out.add(v);
        } catch (...) {
            throw ParseError("bad vertex '" + tok + "' in " + what);
        }
    }
    return out;
}

HClass resolve_hclass(const std::string& name, int hsize) {
    HClass h = builtin_hclass(name);
    return hsize >= 0 ? restrict_to_size(h, hsize) : h;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
}

void emit(const Options& opt, const json& report, const std::string& text) {
    if (opt.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

std::string describe_set(const VertexSet& s) {
    std::string out;
    for (int v : s.to_vector()) out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

std::string dimacs(const PlanarCnf& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_variables << ' ' << phi.clauses.size() << '\n';
    for (const auto& cl : phi.clauses) {
        for (int lit : cl) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

int cmd_check_modulator(const Options& opt, const std::string& graph_file, const std::string& hname,
                        int hsize, const std::string& xspec) {
    Graph g = load_graph_file(graph_file);
    HClass h = resolve_hclass(hname, hsize);
    VertexSet x = parse_vertices(xspec, g.num_vertices(), "--x");
    std::string why;
    bool ok = verify_planar_modulator(g, h, x, &why);
    json rep = {{"command", "check-modulator"}, {"hclass", h.name}, {"valid", ok}};
    if (!ok) rep["why"] = why;
    emit(opt, rep, ok ? "valid planar " + h.name + "-modulator\n" : "invalid: " + why + "\n");
    return ok ? kYes : kNo;
}

int cmd_find_modulator(const Options& opt, const std::string& mode, const std::string& graph_file,
                       const std::string& hname, int hsize, int ceiling, int big_leaf) {
    Graph g = load_graph_file(graph_file);
    HClass h = resolve_hclass(hname, hsize);
    std::optional<PlanarModulator> m;
    if (mode == "brute") {
        m = brute_force_planar_modulator(g, h, ceiling);
    } else if (mode == "bigleaf") {
        m = big_leaf_search(g, h, big_leaf);
    } else {
        m = self_reduce_modulator(g, h, [&](const Graph& q) { return decide_h_planarity(q, h); });
    }
    if (!m) {
        emit(opt, {{"command", "find-modulator"}, {"mode", mode}, {"found", false}}, "no modulator found\n");
        return kNo;
    }
    json rep = {{"command", "find-modulator"},
                {"mode", mode},
                {"found", true},
                {"size", m->x.count()},
                {"x", m->x.to_vector()}};
    emit(opt, rep,
         "modulator of size " + std::to_string(m->x.count()) + ": " + describe_set(m->x) + "\n");
    return kYes;
}

int cmd_ptd(const Options& opt, const std::string& graph_file, const std::string& hname, int hsize,
            int k_max, int ceiling) {
    Graph g = load_graph_file(graph_file);
    HClass h = resolve_hclass(hname, hsize);
    auto r = planar_treedepth_exact(g, h, k_max, ceiling);
    if (!r) {
        emit(opt, {{"command", "ptd"}, {"hclass", h.name}, {"found", false}},
             "planar " + h.name + "-treedepth exceeds " + std::to_string(k_max) + "\n");
        return kNo;
    }
    json layers = json::array();
    std::string text = "depth " + std::to_string(r->depth) + "\n";
    for (const VertexSet& layer : r->seq.layers) {
        layers.push_back(layer.to_vector());
        text += "layer: " + describe_set(layer) + "\n";
    }
    emit(opt, {{"command", "ptd"}, {"hclass", h.name}, {"found", true}, {"depth", r->depth}, {"layers", layers}},
         text);
    return kYes;
}

int cmd_ptw_verify(const Options& opt, const std::string& graph_file, const std::string& decomp_file,
                   int k) {
    Graph g = load_graph_file(graph_file);
    json j = load_json_file(decomp_file);
    PlanarWidthDecomposition pw;
    try {
        pw.base = tree_decomposition_from_json(j, g.num_vertices());
        for (const std::string& tag : j.at("tags")) {
            if (tag != "small" && tag != "planar") throw ParseError("unknown bag tag '" + tag + "'");
            pw.tags.push_back(tag == "small" ? BagTag::small : BagTag::planar_torso);
        }
    } catch (const json::exception& e) {
        throw ParseError("bad decomposition in '" + decomp_file + "': " + e.what());
    }
    std::string why;
    bool ok = verify_planar_width(g, pw, k, &why);
    json rep = {{"command", "ptw-verify"}, {"k", k}, {"valid", ok}};
    if (!ok) rep["why"] = why;
    emit(opt, rep, ok ? "valid width-" + std::to_string(k) + " decomposition\n" : "invalid: " + why + "\n");
    return ok ? kYes : kNo;
}

int cmd_pmm(const Options& opt, const std::string& mode, const std::string& graph_file,
            const std::string& hname, int hsize, const std::string& xspec) {
    Graph g = load_graph_file(graph_file);
    Rational value;
    if (mode == "brute") {
        value = pmm_bruteforce(g);
    } else if (mode == "fkt") {
        if (!planar(g)) throw ParseError("graph in '" + graph_file + "' is not planar");
        value = fkt_pmm(g);
    } else {
        if (hname.empty()) throw ParseError("pmm hplanar needs --hclass");
        HClass h = resolve_hclass(hname, hsize);
        auto m = attest_planar_modulator(g, h, parse_vertices(xspec, g.num_vertices(), "--x"));
        if (!m) throw ParseError("--x is not a valid planar " + h.name + "-modulator");
        value = hplanar_pmm(g, h, *m);
    }
    emit(opt, {{"command", "pmm"}, {"mode", mode}, {"value", format_rational(value)}},
         format_rational(value) + "\n");
    return kYes;
}

int cmd_baker(const Options& opt, const std::string& graph_file, const std::string& hname, int hsize,
              const std::string& xspec, const std::string& eps_text) {
    Graph g = load_graph_file(graph_file);
    if (hname.empty()) throw ParseError("baker-is needs --hclass");
    HClass h = resolve_hclass(hname, hsize);
    auto eps = parse_rational(eps_text);
    if (!eps) throw ParseError("bad --epsilon '" + eps_text + "'");
    auto m = attest_planar_modulator(g, h, parse_vertices(xspec, g.num_vertices(), "--x"));
    if (!m) throw ParseError("--x is not a valid planar " + h.name + "-modulator");
    BakerRun run = baker_independent_set(g, h, *m, *eps);
    json rep = {{"command", "baker-is"},
                {"epsilon", format_rational(run.epsilon)},
                {"k", run.k},
                {"chosen", run.chosen},
                {"size", run.result.count()},
                {"vertices", run.result.to_vector()}};
    emit(opt, rep,
         "independent set of size " + std::to_string(run.result.count()) + " (k = " +
             std::to_string(run.k) + ", stratum " + std::to_string(run.chosen) + "): " +
             describe_set(run.result) + "\n");
    return kYes;
}

int cmd_color(const Options& opt, const std::string& mode, const std::string& graph_file,
              const std::string& hname, int hsize, const std::string& xspec,
              const std::string& layer_spec, const std::string& decomp_file, int k, int k_max) {
    Graph g = load_graph_file(graph_file);
    if (hname.empty()) throw ParseError("color needs --hclass");
    HClass h = resolve_hclass(hname, hsize);
    Coloring c;
    if (mode == "flat") {
        auto m = attest_planar_modulator(g, h, parse_vertices(xspec, g.num_vertices(), "--x"));
        if (!m) throw ParseError("--x is not a valid planar " + h.name + "-modulator");
        c = additive_color(g, h, *m);
    } else if (mode == "ptd") {
        EliminationSequence seq;
        if (!layer_spec.empty()) {
            std::stringstream ss(layer_spec);
            std::string part;
            while (std::getline(ss, part, ';'))
                seq.layers.push_back(parse_vertices(part, g.num_vertices(), "--layers"));
        } else {
            auto r = planar_treedepth_exact(g, h, k_max);
            if (!r) {
                emit(opt, {{"command", "color"}, {"mode", mode}, {"found", false}},
                     "no elimination sequence of depth <= " + std::to_string(k_max) + "\n");
                return kNo;
            }
            seq = r->seq;
        }
        c = ptd_color(g, h, seq);
    } else {  // ptw
        if (decomp_file.empty()) throw ParseError("color --mode ptw needs --decomp");
        json j = load_json_file(decomp_file);
        HTreeDecomposition htd;
        std::vector<BagTag> tags;
        try {
            VertexSet x(g.num_vertices());
            for (int v : j.at("x")) {
                if (v < 0 || v >= g.num_vertices()) throw ParseError("modulator vertex out of range");
                x.add(v);
            }
            htd.x = x;
            htd.base = tree_decomposition_from_json(j, g.num_vertices());
            for (const std::string& tag : j.at("tags")) {
                if (tag != "small" && tag != "planar") throw ParseError("unknown bag tag '" + tag + "'");
                tags.push_back(tag == "small" ? BagTag::small : BagTag::planar_torso);
            }
        } catch (const json::exception& e) {
            throw ParseError("bad decomposition in '" + decomp_file + "': " + e.what());
        }
        htd.leaf_components = components_within(g, htd.x.complement());
        c = ptw_color(g, h, htd, tags, k);
    }
    if (!verify_coloring(g, c)) throw std::logic_error("produced coloring failed verification");
    json rep = {{"command", "color"}, {"mode", mode}, {"color_count", c.color_count}, {"colors", c.color}};
    std::string text = std::to_string(c.color_count) + " colors\n";
    for (int v = 0; v < g.num_vertices(); ++v)
        text += std::to_string(v) + ": " + std::to_string(c.color[v]) + "\n";
    emit(opt, rep, text);
    return kYes;
}

int cmd_gen(const Options& opt, CLI::App* grid, CLI::App* wall, CLI::App* apex, CLI::App* hard,
            int rows, int cols, int radius, int size, int vars, int clauses, uint64_t seed,
            const std::string& cnf_out, const std::string& graph_out) {
    json rep = {{"command", "gen"}};
    std::string text;
    Graph g;
    if (grid->parsed()) {
        rep["kind"] = "grid";
        g = generate_grid(cols, rows);
    } else if (wall->parsed()) {
        rep["kind"] = "wall";
        g = generate_wall(radius).graph;
    } else if (apex->parsed()) {
        rep["kind"] = "apex";
        g = generate_apex_grid(size);
    } else if (hard->parsed()) {
        rep["kind"] = "hardness";
        Rng rng(seed);
        PlanarCnf phi = random_planar_cnf(rng, vars, clauses);
        ReductionOutput red = reduce(phi);
        rep["cnf"] = {{"variables", phi.num_variables}, {"clauses", phi.clauses}};
        g = red.g;
        std::string cnf_text = dimacs(phi);
        if (!cnf_out.empty()) {
            std::ofstream out(cnf_out);
            if (!out) throw ParseError("cannot write '" + cnf_out + "'");
            out << cnf_text;
        } else {
            text += cnf_text;
        }
    }
    rep["graph"] = graph_to_json(g);
    std::string graph_text = write_graph_text(g);
    if (!graph_out.empty()) {
        std::ofstream out(graph_out);
        if (!out) throw ParseError("cannot write '" + graph_out + "'");
        out << graph_text;
    } else {
        text += graph_text;
    }
    emit(opt, rep, text);
    return kYes;
}

int cmd_unbreakable(const Options& opt, const std::string& graph_file, int s, int c, int ceiling) {
    Graph g = load_graph_file(graph_file);
    auto sep = find_breaking_separation(g, s, c, ceiling);
    if (!sep) {
        emit(opt, {{"command", "unbreakable"}, {"s", s}, {"c", c}, {"unbreakable", true}},
             "(" + std::to_string(s) + "," + std::to_string(c) + ")-unbreakable\n");
        return kYes;
    }
    json rep = {{"command", "unbreakable"},
                {"s", s},
                {"c", c},
                {"unbreakable", false},
                {"left", sep->left.to_vector()},
                {"right", sep->right.to_vector()}};
    emit(opt, rep,
         "breakable; separator: " + describe_set(sep->left & sep->right) + "\n");
    return kNo;
}

int cmd_minor(const Options& opt, const std::string& host_file, const std::string& pattern_file,
              int ceiling) {
    Graph host = load_graph_file(host_file);
    Graph pattern = load_graph_file(pattern_file);
    auto model = find_minor(host, pattern, ceiling);
    if (!model) {
        emit(opt, {{"command", "minor"}, {"found", false}}, "no minor model\n");
        return kNo;
    }
    json sets = json::array();
    std::string text = "minor model:\n";
    for (const VertexSet& bs : model->branch_sets) {
        sets.push_back(bs.to_vector());
        text += "  " + describe_set(bs) + "\n";
    }
    emit(opt, {{"command", "minor"}, {"found", true}, {"branch_sets", sets}}, text);
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar H-modulator toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--output-format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "worker thread cap")->check(CLI::PositiveNumber);

    std::string graph_file, second_file, hname, xspec, mode, eps_text = "1/2";
    std::string layer_spec, decomp_file, cnf_out, graph_out;
    int hsize = -1, brute_ceiling = 22, ptd_ceiling = 14, unb_ceiling = 18, minor_ceiling = 8;
    int big_leaf = 5, k_max = 4, k = 0, s = 2, c = 4;
    int rows = 2, cols = 2, radius = 3, size = 3, vars = 1, clauses = 1;
    uint64_t seed = 0;

    CLI::App* check = app.add_subcommand("check-modulator", "verify a planar H-modulator");
    check->add_option("graph", graph_file)->required();
    check->add_option("--hclass", hname)->required();
    check->add_option("--hsize", hsize, "restrict the class to members of at most this many vertices");
    check->add_option("--x", xspec, "comma-separated modulator vertices");

    CLI::App* find = app.add_subcommand("find-modulator", "search for a planar H-modulator");
    find->add_option("mode", mode)->required()->check(CLI::IsMember({"brute", "bigleaf", "selfreduce"}));
    find->add_option("graph", graph_file)->required();
    find->add_option("--hclass", hname)->required();
    find->add_option("--hsize", hsize);
    find->add_option("--ceiling", brute_ceiling, "subset-sweep size ceiling")->capture_default_str();
    find->add_option("--big-leaf", big_leaf, "big-leaf threshold a")->capture_default_str();

    CLI::App* ptd = app.add_subcommand("ptd", "exact planar H-treedepth with certificate");
    ptd->add_option("graph", graph_file)->required();
    ptd->add_option("--hclass", hname)->required();
    ptd->add_option("--hsize", hsize);
    ptd->add_option("--kmax", k_max)->capture_default_str();
    ptd->add_option("--ceiling", ptd_ceiling)->capture_default_str();

    CLI::App* ptwv = app.add_subcommand("ptw-verify", "verify a planar-width decomposition");
    ptwv->add_option("graph", graph_file)->required();
    ptwv->add_option("decomposition", second_file, "JSON with bags, edges, tags")->required();
    ptwv->add_option("--k", k)->required();

    CLI::App* pmm = app.add_subcommand("pmm", "weighted perfect-matching count");
    pmm->add_option("mode", mode)->required()->check(CLI::IsMember({"brute", "fkt", "hplanar"}));
    pmm->add_option("graph", graph_file)->required();
    pmm->add_option("--hclass", hname);
    pmm->add_option("--hsize", hsize);
    pmm->add_option("--x", xspec);

    CLI::App* baker = app.add_subcommand("baker-is", "layered independent-set approximation");
    baker->add_option("graph", graph_file)->required();
    baker->add_option("--hclass", hname)->required();
    baker->add_option("--hsize", hsize);
    baker->add_option("--x", xspec);
    baker->add_option("--epsilon", eps_text)->capture_default_str();

    CLI::App* color = app.add_subcommand("color", "additive proper coloring");
    color->add_option("graph", graph_file)->required();
    color->add_option("--mode", mode)->required()->check(CLI::IsMember({"flat", "ptd", "ptw"}));
    color->add_option("--hclass", hname)->required();
    color->add_option("--hsize", hsize);
    color->add_option("--x", xspec);
    color->add_option("--layers", layer_spec, "semicolon-separated elimination layers");
    color->add_option("--decomp", decomp_file, "JSON with x, bags, edges, tags");
    color->add_option("--k", k)->capture_default_str();
    color->add_option("--kmax", k_max)->capture_default_str();

    CLI::App* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    CLI::App* gen_grid = gen->add_subcommand("grid");
    gen_grid->add_option("--rows", rows)->capture_default_str();
    gen_grid->add_option("--cols", cols)->capture_default_str();
    CLI::App* gen_wall = gen->add_subcommand("wall");
    gen_wall->add_option("--radius", radius)->capture_default_str();
    CLI::App* gen_apex = gen->add_subcommand("apex");
    gen_apex->add_option("--size", size)->capture_default_str();
    CLI::App* gen_hard = gen->add_subcommand("hardness");
    gen_hard->add_option("--vars", vars)->capture_default_str();
    gen_hard->add_option("--clauses", clauses)->capture_default_str();
    gen_hard->add_option("--seed", seed)->required();
    gen_hard->add_option("--cnf-out", cnf_out, "write the formula here instead of stdout");
    gen_hard->add_option("--graph-out", graph_out, "write the graph here instead of stdout");

    CLI::App* unb = app.add_subcommand("unbreakable", "(s,c)-unbreakability check");
    unb->add_option("graph", graph_file)->required();
    unb->add_option("--s", s)->required();
    unb->add_option("--c", c)->required();
    unb->add_option("--ceiling", unb_ceiling)->capture_default_str();

    CLI::App* minor = app.add_subcommand("minor", "brute-force minor search");
    minor->add_option("host", graph_file)->required();
    minor->add_option("pattern", second_file)->required();
    minor->add_option("--ceiling", minor_ceiling)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (check->parsed()) return cmd_check_modulator(opt, graph_file, hname, hsize, xspec);
        if (find->parsed()) return cmd_find_modulator(opt, mode, graph_file, hname, hsize, brute_ceiling, big_leaf);
        if (ptd->parsed()) return cmd_ptd(opt, graph_file, hname, hsize, k_max, ptd_ceiling);
        if (ptwv->parsed()) return cmd_ptw_verify(opt, graph_file, second_file, k);
        if (pmm->parsed()) return cmd_pmm(opt, mode, graph_file, hname, hsize, xspec);
        if (baker->parsed()) return cmd_baker(opt, graph_file, hname, hsize, xspec, eps_text);
        if (color->parsed())
            return cmd_color(opt, mode, graph_file, hname, hsize, xspec, layer_spec, decomp_file, k, k_max);
        if (gen->parsed())
            return cmd_gen(opt, gen_grid, gen_wall, gen_apex, gen_hard, rows, cols, radius, size, vars,
                           clauses, seed, cnf_out, graph_out);
        if (unb->parsed()) return cmd_unbreakable(opt, graph_file, s, c, unb_ceiling);
        if (minor->parsed()) return cmd_minor(opt, graph_file, second_file, minor_ceiling);
    } catch (const std::length_error& e) {
        std::cerr << "ceiling exceeded: " << e.what() << "\n";
        return kCeiling;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
