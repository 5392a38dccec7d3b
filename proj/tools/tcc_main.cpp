#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcc/closedtcc.hpp"
#include "tcc/error.hpp"
#include "tcc/generators.hpp"
#include "tcc/kernel.hpp"
#include "tcc/opentcc.hpp"
#include "tcc/reachability.hpp"
#include "tcc/temporal_graph.hpp"
#include "tcc/transitivity.hpp"

using json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 computed (including "no"), 2 usage error, 3 domain error.
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tcc::Error("ParseError", "cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

tcc::TemporalGraph load_tg(const std::string &path) {
    return tcc::parse_temporal_graph(read_file(path));
}

struct SettingFlags {
    bool strict = false;
    bool non_strict = false;

    void attach(CLI::App *cmd) {
        cmd->add_flag("--strict", strict, "strict temporal paths (increasing labels)");
        cmd->add_flag("--non-strict", non_strict, "non-strict temporal paths (non-decreasing labels)");
    }

    tcc::Setting resolve(const tcc::TemporalGraph &tg) const {
        if (strict == non_strict)
            throw CLI::ValidationError("exactly one of --strict / --non-strict is required");
        return tcc::setting_for(tg, strict ? tcc::Strictness::Strict : tcc::Strictness::NonStrict);
    }

    std::string name() const { return strict ? "strict" : "non-strict"; }
};

struct Emitter {
    bool json_mode = false;
    std::string command;
    json input = json::object();
    json result = json::object();
    json witness = nullptr;
    json trace = nullptr;
    std::string text;

    void flush() const {
        if (json_mode) {
            json out;
            out["command"] = command;
            out["input"] = input;
            out["result"] = result;
            out["witness"] = witness;
            out["trace"] = trace;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << text;
        }
    }
};

json arcs_to_json(const tcc::DiGraph &dg) {
    json arr = json::array();
    for (auto [u, v] : dg.arcs()) arr.push_back({u, v});
    return arr;
}

json pairs_to_json(const std::vector<std::pair<int, int>> &pairs) {
    json arr = json::array();
    for (auto [u, v] : pairs) arr.push_back({u, v});
    return arr;
}

std::string join_ints(const std::vector<int> &xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(xs[i]);
    }
    return out;
}

json trace_to_json(const tcc::KernelTrace &trace) {
    json entries = json::array();
    for (const auto &e : trace.entries)
        entries.push_back({{"rule", e.rule}, {"vertices", e.vertices}, {"k_after", e.k_after}});
    std::string status = trace.status == tcc::KernelStatus::Reduced     ? "reduced"
                         : trace.status == tcc::KernelStatus::TrivialYes ? "trivial-yes"
                                                                         : "trivial-no";
    return json{{"status", status}, {"entries", entries}};
}

std::string status_name(tcc::KernelStatus s) {
    return s == tcc::KernelStatus::Reduced ? "reduced"
           : s == tcc::KernelStatus::TrivialYes ? "trivial-yes"
                                                : "trivial-no";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact algorithms for temporal connected components"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit a single JSON object on stdout");

    // ---- reach ----
    auto *reach = app.add_subcommand("reach", "compute the strict or non-strict reachability graph");
    std::string reach_file;
    SettingFlags reach_setting;
    reach->add_option("file", reach_file, ".tg input file")->required();
    reach_setting.attach(reach);

    // ---- params ----
    auto *params = app.add_subcommand("params", "distance-to-transitivity parameters of the reachability graph");
    std::string params_file;
    SettingFlags params_setting;
    int am_budget = 12;
    int vc_budget = 20;
    bool with_vc = false;
    params->add_option("file", params_file, ".tg input file")->required();
    params_setting.attach(params);
    params->add_option("--am-budget", am_budget, "arc-modification search budget (default 12)");
    params->add_flag("--with-vc", with_vc, "also report the underlying graph's vertex cover number");
    params->add_option("--vc-budget", vc_budget, "vertex cover search budget (default 20)");

    // ---- tcc-open ----
    auto *tcc_open = app.add_subcommand("tcc-open", "solve Open-TCC");
    std::string open_file;
    SettingFlags open_setting;
    int open_k = 0;
    std::vector<int> open_modulator;
    bool open_has_modulator = false;
    tcc_open->add_option("file", open_file, ".tg input file")->required();
    tcc_open->add_option("-k", open_k, "component size threshold")->required();
    open_setting.attach(tcc_open);
    tcc_open->add_option("--modulator", open_modulator, "transitivity modulator to use (comma separated)")
        ->delimiter(',')
        ->each([&](const std::string &) { open_has_modulator = true; });

    // ---- tcc-closed-bf ----
    auto *tcc_closed = app.add_subcommand("tcc-closed-bf", "solve Closed-TCC by brute force");
    std::string closed_file;
    SettingFlags closed_setting;
    int closed_k = 0;
    int closed_cap = 15;
    tcc_closed->add_option("file", closed_file, ".tg input file")->required();
    tcc_closed->add_option("-k", closed_k, "component size threshold")->required();
    closed_setting.attach(tcc_closed);
    tcc_closed->add_option("--cap", closed_cap, "vertex-count cap for the search (default 15)");

    // ---- kernel ----
    auto *kernel_cmd = app.add_subcommand("kernel", "kernelize Open-TCC to a Clique instance (DIMACS)");
    std::string kernel_file;
    SettingFlags kernel_setting;
    int kernel_k = 0;
    bool addition_only = false;
    bool reencode = false;
    std::vector<int> kernel_modulator;
    bool kernel_has_modulator = false;
    kernel_cmd->add_option("file", kernel_file, ".tg input file")->required();
    kernel_cmd->add_option("-k", kernel_k, "component size threshold")->required();
    kernel_setting.attach(kernel_cmd);
    kernel_cmd->add_flag("--addition-only", addition_only,
                         "use the arc-addition kernel (2|B|+1 vertices)");
    kernel_cmd->add_flag("--reencode", reencode,
                         "re-encode the kernel as a proper directed temporal graph (needs k' >= 5)");
    kernel_cmd
        ->add_option("--modulator", kernel_modulator,
                     "inherent transitivity modulator to use (comma separated)")
        ->delimiter(',')
        ->each([&](const std::string &) { kernel_has_modulator = true; });

    // ---- gen ----
    auto *gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);

    auto *gen_single = gen->add_subcommand("single-snapshot", "lifetime-1 lift of a static graph");
    std::string gen_single_file;
    gen_single->add_option("file", gen_single_file, "DIMACS graph file")->required();

    auto *gen_star_cmd = gen->add_subcommand("star", "temporal star separating delta_vd from the vertex cover number");
    int star_m = 0;
    gen_star_cmd->add_option("m", star_m, "leaf-set halves size (|X| = |Y| = m)")->required();

    auto *gen_nokernel = gen->add_subcommand("nokernel", "directed lower-bound construction over a vertex cover");
    std::string gen_nokernel_file;
    std::vector<int> gen_cover;
    int gen_nokernel_k = 0;
    gen_nokernel->add_option("file", gen_nokernel_file, "DIMACS graph file")->required();
    gen_nokernel->add_option("--cover", gen_cover, "vertex cover of the graph (comma separated)")
        ->delimiter(',')
        ->required();
    gen_nokernel->add_option("-k", gen_nokernel_k, "clique size target (> 6)")->required();

    auto *gen_closed = gen->add_subcommand("closed-hard", "Closed-TCC self-reduction gadget");
    std::string gen_closed_file;
    int gen_closed_k = 0;
    gen_closed->add_option("file", gen_closed_file, ".tg input file")->required();
    gen_closed->add_option("-k", gen_closed_k, "component size threshold (> 4)")->required();

    auto *gen_random_cmd = gen->add_subcommand("random", "independent time-edges with probability p");
    int rand_n = 0, rand_l = 0;
    double rand_p = 0.0;
    bool rand_directed = false, rand_undirected = false;
    uint64_t rand_seed = 0;
    gen_random_cmd->add_option("n", rand_n, "vertex count")->required();
    gen_random_cmd->add_option("L", rand_l, "lifetime")->required();
    gen_random_cmd->add_option("p", rand_p, "edge probability")->required();
    gen_random_cmd->add_flag("--directed", rand_directed, "directed arcs");
    gen_random_cmd->add_flag("--undirected", rand_undirected, "undirected edges");
    gen_random_cmd->add_option("--seed", rand_seed, "RNG seed")->required();

    // ---- oracle ----
    auto *oracle = app.add_subcommand("oracle", "brute-force open and closed tcc sizes");
    std::string oracle_file;
    SettingFlags oracle_setting;
    int open_cap = 20;
    int oracle_closed_cap = 15;
    oracle->add_option("file", oracle_file, ".tg input file")->required();
    oracle_setting.attach(oracle);
    oracle->add_option("--open-cap", open_cap, "cap for the open brute force (default 20)");
    oracle->add_option("--closed-cap", oracle_closed_cap, "cap for the closed brute force (default 15)");

    // Let --json appear after the subcommand as well.
    for (CLI::App *sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (CLI::App *nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);

        Emitter out;
        out.json_mode = json_mode;

        if (reach->parsed()) {
            out.command = "reach";
            tcc::TemporalGraph tg = load_tg(reach_file);
            tcc::Setting s = reach_setting.resolve(tg);
            tcc::DiGraph dg = tcc::reachability_graph(tg, s);
            out.input = {{"file", reach_file}, {"setting", reach_setting.name()}};
            out.result = {{"n", dg.n()}, {"arc_count", dg.arc_count()}, {"arcs", arcs_to_json(dg)}};
            out.text = dg.serialize();
        } else if (params->parsed()) {
            out.command = "params";
            tcc::TemporalGraph tg = load_tg(params_file);
            tcc::Setting s = params_setting.resolve(tg);
            tcc::DiGraph gr = tcc::reachability_graph(tg, s);
            tcc::Modulator mod = tcc::min_transitivity_modulator(gr);
            tcc::ArcModSet additions = tcc::arc_addition_set(gr);
            auto am = tcc::min_arc_modification_set(gr, am_budget);
            out.input = {{"file", params_file},
                         {"setting", params_setting.name()},
                         {"am_budget", am_budget}};
            out.result = {{"delta_vd", mod.size()}, {"delta_aa", (int)additions.additions.size()}};
            out.result["delta_am"] = am ? json(am->size()) : json(nullptr);
            out.text = "delta_vd " + std::to_string(mod.size()) + "\n" +
                       "delta_aa " + std::to_string(additions.additions.size()) + "\n";
            out.text += am ? "delta_am " + std::to_string(am->size()) + "\n"
                           : "delta_am unknown (> budget " + std::to_string(am_budget) + ")\n";
            out.trace = json::object();
            out.trace["modulator"] = mod.vertices;
            out.trace["additions"] = pairs_to_json(additions.additions);
            if (am)
                out.trace["modification"] = {{"additions", pairs_to_json(am->additions)},
                                             {"deletions", pairs_to_json(am->deletions)}};
            else
                out.trace["modification"] = nullptr;
            if (with_vc) {
                out.input["vc_budget"] = vc_budget;
                auto vc = tcc::min_vertex_cover(tcc::underlying_skeleton(tg), vc_budget);
                out.result["vc"] = vc ? json(vc->size) : json(nullptr);
                out.text += vc ? "vc " + std::to_string(vc->size) + "\n"
                               : "vc unknown (> budget " + std::to_string(vc_budget) + ")\n";
                out.trace["vertex_cover"] = vc ? json(vc->witness) : json(nullptr);
            }
        } else if (tcc_open->parsed()) {
            out.command = "tcc-open";
            tcc::TemporalGraph tg = load_tg(open_file);
            tcc::Setting s = open_setting.resolve(tg);
            if (open_k < 1) throw tcc::Error("KTooSmall", "k must be at least 1");
            tcc::DiGraph gr = tcc::reachability_graph(tg, s);
            std::vector<int> modulator =
                open_has_modulator ? open_modulator : tcc::min_transitivity_modulator(gr).vertices;
            tcc::TccResult res = tcc::solve_with_modulator(gr, open_k, modulator);
            out.input = {{"file", open_file}, {"setting", open_setting.name()}, {"k", open_k}};
            out.result = {{"size", res.size}, {"answer", res.answer}};
            out.witness = res.witness;
            out.trace = {{"modulator", modulator},
                         {"modulator_source", open_has_modulator ? "given" : "computed"}};
            out.text = "size " + std::to_string(res.size) + "\n" +
                       "answer " + std::string(res.answer ? "yes" : "no") + "\n" +
                       "witness " + join_ints(res.witness) + "\n";
        } else if (tcc_closed->parsed()) {
            out.command = "tcc-closed-bf";
            tcc::TemporalGraph tg = load_tg(closed_file);
            tcc::Setting s = closed_setting.resolve(tg);
            tcc::TccResult res = tcc::solve_closed_bruteforce(tg, s, closed_k, closed_cap);
            out.input = {{"file", closed_file},
                         {"setting", closed_setting.name()},
                         {"k", closed_k},
                         {"cap", closed_cap}};
            out.result = {{"size", res.size}, {"answer", res.answer}};
            out.witness = res.witness;
            out.text = "size " + std::to_string(res.size) + "\n" +
                       "answer " + std::string(res.answer ? "yes" : "no") + "\n" +
                       "witness " + join_ints(res.witness) + "\n";
        } else if (kernel_cmd->parsed()) {
            out.command = "kernel";
            if (addition_only && kernel_has_modulator)
                throw CLI::ValidationError("--addition-only computes its own modulator; drop --modulator");
            tcc::TemporalGraph tg = load_tg(kernel_file);
            tcc::Setting s = kernel_setting.resolve(tg);
            tcc::KernelResult res;
            if (addition_only) {
                res = tcc::kernelize_addition(tg, s, kernel_k);
            } else {
                tcc::DiGraph gr = tcc::reachability_graph(tg, s);
                std::vector<int> modulator = kernel_has_modulator
                                                 ? kernel_modulator
                                                 : tcc::arc_addition_set(gr).endpoints;
                res = tcc::kernelize_reachability(gr, kernel_k, modulator);
            }
            std::string dimacs = tcc::serialize_dimacs(res.instance);
            out.input = {{"file", kernel_file},
                         {"setting", kernel_setting.name()},
                         {"k", kernel_k},
                         {"addition_only", addition_only},
                         {"reencode", reencode}};
            out.result = {{"status", status_name(res.trace.status)},
                          {"k", res.instance.k},
                          {"n", res.instance.graph.n()},
                          {"m", res.instance.graph.edge_count()},
                          {"blue", res.instance.blue_vertices()},
                          {"clusters", res.instance.clusters},
                          {"origin", res.instance.origin},
                          {"modulator", res.modulator},
                          {"dimacs", dimacs}};
            out.trace = trace_to_json(res.trace);
            out.text = dimacs;
            if (reencode) {
                tcc::SemaphoreEncoding enc = tcc::clique_to_open_tcc(res.instance.graph, res.instance.k);
                out.result["reencoded_tg"] = enc.tg.serialize();
                out.text = enc.tg.serialize();
            } else {
                out.result["reencoded_tg"] = nullptr;
            }
        } else if (gen->parsed()) {
            out.command = "gen";
            std::string text;
            json meta = json::object();
            if (gen_single->parsed()) {
                tcc::DimacsGraph g = tcc::parse_dimacs(read_file(gen_single_file));
                text = tcc::gen_single_snapshot(g.graph).serialize();
                out.input = {{"generator", "single-snapshot"}, {"file", gen_single_file}};
            } else if (gen_star_cmd->parsed()) {
                text = tcc::gen_star(star_m).serialize();
                out.input = {{"generator", "star"}, {"m", star_m}};
            } else if (gen_nokernel->parsed()) {
                tcc::DimacsGraph g = tcc::parse_dimacs(read_file(gen_nokernel_file));
                tcc::NokernelInstance inst =
                    tcc::gen_nokernel_directed(g.graph, gen_cover, gen_nokernel_k);
                std::string header = "# cover " + join_ints(inst.cover) + "\n";
                header += "# relay_base " + std::to_string(inst.relay_base) + " in_base " +
                          std::to_string(inst.in_base) + "\n";
                header += std::string("# cover subgraph greedy (k-1)-partite: ") +
                          (inst.cover_partite_checked ? "yes" : "no") + "\n";
                text = header + inst.tg.serialize();
                out.input = {{"generator", "nokernel"},
                             {"file", gen_nokernel_file},
                             {"cover", gen_cover},
                             {"k", gen_nokernel_k}};
                meta = {{"cover", inst.cover},
                        {"relay_base", inst.relay_base},
                        {"in_base", inst.in_base},
                        {"cover_partite_checked", inst.cover_partite_checked}};
            } else if (gen_closed->parsed()) {
                tcc::TemporalGraph base = load_tg(gen_closed_file);
                tcc::ClosedHardInstance inst = tcc::gen_closed_hard(base, gen_closed_k);
                std::string header = "# x1 " + std::to_string(inst.x1) + " x2 " +
                                     std::to_string(inst.x2) + " x3 " + std::to_string(inst.x3) + "\n";
                if (inst.directed_edge_pairs)
                    header += "# directed input: each gadget edge added as two opposite arcs\n";
                text = header + inst.tg.serialize();
                out.input = {{"generator", "closed-hard"}, {"file", gen_closed_file}, {"k", gen_closed_k}};
                meta = {{"x1", inst.x1},
                        {"x2", inst.x2},
                        {"x3", inst.x3},
                        {"directed_edge_pairs", inst.directed_edge_pairs}};
            } else if (gen_random_cmd->parsed()) {
                if (rand_directed == rand_undirected)
                    throw CLI::ValidationError("exactly one of --directed / --undirected is required");
                text = tcc::gen_random(rand_n, rand_l, rand_p, rand_directed, rand_seed).serialize();
                out.input = {{"generator", "random"}, {"n", rand_n},       {"L", rand_l},
                             {"p", rand_p},           {"directed", rand_directed}, {"seed", rand_seed}};
            }
            out.result = {{"tg", text}};
            if (!meta.empty()) out.result["meta"] = meta;
            out.text = text;
        } else if (oracle->parsed()) {
            out.command = "oracle";
            tcc::TemporalGraph tg = load_tg(oracle_file);
            tcc::Setting s = oracle_setting.resolve(tg);
            tcc::DiGraph gr = tcc::reachability_graph(tg, s);
            tcc::TccResult open_res = tcc::max_bidirectional_clique_bruteforce(gr, open_cap);
            tcc::TccResult closed_res = tcc::solve_closed_bruteforce(tg, s, 1, oracle_closed_cap);
            out.input = {{"file", oracle_file}, {"setting", oracle_setting.name()}};
            out.result = {{"open", {{"size", open_res.size}}}, {"closed", {{"size", closed_res.size}}}};
            out.witness = {{"open", open_res.witness}, {"closed", closed_res.witness}};
            out.text = "open_size " + std::to_string(open_res.size) + "\n" +
                       "open_witness " + join_ints(open_res.witness) + "\n" +
                       "closed_size " + std::to_string(closed_res.size) + "\n" +
                       "closed_witness " + join_ints(closed_res.witness) + "\n";
        }

        out.flush();
        return 0;
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const tcc::Error &e) {
        if (json_mode) {
            json out = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        }
        return kExitDomain;
    } catch (const std::exception &e) {
        if (json_mode) {
            json out = {{"error", {{"code", "InternalError"}, {"message", e.what()}}}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cerr << "error [InternalError]: " << e.what() << "\n";
        }
        return kExitDomain;
    }
}
