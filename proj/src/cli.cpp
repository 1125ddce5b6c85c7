#include "psw/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <sstream>

#include "psw/constructions.hpp"
#include "psw/generators.hpp"
#include "psw/io.hpp"
#include "psw/oracle.hpp"
#include "psw/suite.hpp"
#include "psw/witness.hpp"

namespace psw {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

std::vector<int> parse_divide_spec(const std::string& spec, int x, int y) {
    std::vector<int> div(static_cast<std::size_t>(std::max(0, x - 1)) * y, 0);
    if (spec.empty()) return div;
    if (spec.find(',') == std::string::npos) {
        int uniform = std::stoi(spec);
        for (auto& d : div) d = uniform;
        return div;
    }
    // "i,j,d;i,j,d;..." with 0-based column pair i and row j
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        int i, j, d;
        char c1, c2;
        std::istringstream is(item);
        require(static_cast<bool>(is >> i >> c1 >> j >> c2 >> d) && c1 == ',' && c2 == ',',
                "PreconditionFailed", "bad divide entry: " + item);
        require(i >= 0 && i < x - 1 && j >= 0 && j < y, "PreconditionFailed",
                "divide entry out of range: " + item);
        div[static_cast<std::size_t>(i) * y + j] = d;
    }
    return div;
}

GhGraph load_gh(const std::string& graph_path, const std::string& meta_path) {
    Graph g = load_edge_list(graph_path);
    std::ifstream in(meta_path);
    require(in.good(), "PreconditionFailed", "cannot open " + meta_path);
    Json meta = Json::parse(in);
    require(meta.value("type", "") == std::string("gh"), "PreconditionFailed",
            "metadata is not a gh sidecar");
    return gh_from_graph(std::move(g), meta.at("h").get<int>());
}

int sweep_lemma_id(const std::string& name) {
    if (name == "lemma5") return 5;
    if (name == "lemma6") return 6;
    if (name == "lemma7") return 7;
    if (name == "lemma9") return 9;
    if (name == "grow" || name == "lemma11") return 11;
    fail("PreconditionFailed", "unknown check: " + name);
}

int run_sweep_command(int lemma, SweepParams par, const std::string& csv_out,
                      const std::string& json_out) {
    if (lemma == 11) par.families = par.samples; // grow sweeps count families
    SweepReport rep = exhaustive_lemma_sweep(lemma, par);
    if (!csv_out.empty()) atomic_write(csv_out, sweep_report_csv(rep));
    if (!json_out.empty()) atomic_write(json_out, sweep_report_json(rep).dump(2) + "\n");
    std::cout << "lemma " << rep.lemma << ": " << rep.instances << " instances, " << rep.failures
              << " failures\n";
    for (const auto& note : rep.failure_notes) std::cout << "  " << note << "\n";
    return rep.failures == 0 ? kExitPass : kExitFail;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"product-structure workbench"};
    app.require_subcommand(1);

    std::string config_path;
    long long budget_vertices = kDefaultVertexBudget;
    std::uint64_t seed = 42;
    int jobs = 1;
    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--budget-vertices", budget_vertices, "vertex budget for generators");
    app.add_option("--seed", seed, "seed for randomized commands");
    app.add_option("--jobs", jobs, "parallel jobs where supported");

    // ---- generate ----
    auto* generate = app.add_subcommand("generate", "emit graphs of the built-in families");
    auto* gen_gh = generate->add_subcommand("gh", "binary tree with level paths");
    int gh_height = 1;
    std::string gen_out;
    gen_gh->add_option("--height", gh_height, "tree height")->required();
    gen_gh->add_option("-o,--output", gen_out, "edge-list output")->required();
    auto* gen_grid = generate->add_subcommand("grid", "grid with subdivided horizontal edges");
    int grid_x = 1, grid_y = 1;
    std::string grid_divide, grid_out;
    gen_grid->add_option("--x", grid_x)->required();
    gen_grid->add_option("--y", grid_y)->required();
    gen_grid->add_option("--divide", grid_divide, "uniform count or i,j,d;... list");
    gen_grid->add_option("-o,--output", grid_out)->required();

    // ---- validate ----
    auto* validate = app.add_subcommand("validate", "run the validators");
    std::string val_graph, val_partition, val_layering;
    int val_c = 1;
    auto* val_part = validate->add_subcommand("partition", "H-partition validity");
    val_part->add_option("--graph", val_graph)->required();
    val_part->add_option("--partition", val_partition)->required();
    auto* val_lay = validate->add_subcommand("layering", "layering validity");
    val_lay->add_option("--graph", val_graph)->required();
    val_lay->add_option("--layering", val_layering)->required();
    auto* val_emb = validate->add_subcommand("embedding", "H x P x K_c embedding");
    val_emb->add_option("--graph", val_graph)->required();
    val_emb->add_option("--partition", val_partition)->required();
    val_emb->add_option("--layering", val_layering)->required();
    val_emb->add_option("--c", val_c)->required();

    // ---- product ----
    auto* product = app.add_subcommand("product", "graph products");
    auto* prod_strong = product->add_subcommand("strong", "strong product of two graphs");
    std::string prod_a, prod_b, prod_out;
    prod_strong->add_option("a", prod_a, "first factor edge list")->required();
    prod_strong->add_option("b", prod_b, "second factor edge list")->required();
    prod_strong->add_option("-o,--output", prod_out)->required();

    // ---- witness ----
    auto* witness = app.add_subcommand("witness", "run the lower-bound pipeline");
    std::string wit_graph, wit_meta, wit_tp, wit_lay, wit_out, wit_alpha = "1/5";
    long long wit_c_override = 0;
    witness->add_option("--graph", wit_graph)->required();
    witness->add_option("--meta", wit_meta)->required();
    witness->add_option("--tree-partition", wit_tp)->required();
    witness->add_option("--layering", wit_lay)->required();
    witness->add_option("-o,--output", wit_out)->required();
    witness->add_option("--alpha", wit_alpha, "rational in (0,1/4), default 1/5");
    witness->add_option("--c-override", wit_c_override, "width proxy override (advanced)");

    // ---- audit ----
    auto* audit = app.add_subcommand("audit", "replay a certificate from scratch");
    std::string aud_cert, aud_graph, aud_meta, aud_tp, aud_lay;
    long long aud_delta = 0, aud_tw = 0;
    audit->add_option("certificate", aud_cert)->required();
    audit->add_option("--graph", aud_graph, "override the recorded graph path");
    audit->add_option("--meta", aud_meta);
    audit->add_option("--tree-partition", aud_tp);
    audit->add_option("--layering", aud_lay);
    audit->add_option("--delta", aud_delta, "also report against deg(H) = delta");
    audit->add_option("--treewidth", aud_tw, "also report against tw(H) = t");

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "positive constructions");
    auto* con_outer = construct->add_subcommand("outerplanar", "chain partition with unit cells");
    int con_height = 1;
    std::string con_parts, con_host, con_lay;
    con_outer->add_option("--height", con_height)->required();
    con_outer->add_option("-o,--output", con_parts, "partition JSON")->required();
    con_outer->add_option("--host", con_host, "host edge-list output")->required();
    con_outer->add_option("--layering", con_lay, "optional layering JSON output");

    // ---- check ----
    auto* check = app.add_subcommand("check", "structure checks and lemma sweeps");
    auto* check_tw2 = check->add_subcommand("tw2", "treewidth <= 2 by reduction");
    std::string chk_graph;
    check_tw2->add_option("graph", chk_graph)->required();
    auto* check_outer = check->add_subcommand("outerplanar", "forbidden-minor search");
    int chk_budget = 1 << 10;
    check_outer->add_option("graph", chk_graph)->required();
    check_outer->add_option("--budget", chk_budget);
    int chk_height = 3;
    bool chk_exhaustive = false;
    long long chk_samples = 10'000;
    std::string chk_csv, chk_json;
    for (const char* name : {"lemma5", "lemma6", "lemma7", "lemma9", "grow"}) {
        auto* sub = check->add_subcommand(name, std::string("sweep for ") + name);
        sub->add_option("--height", chk_height);
        sub->add_flag("--exhaustive", chk_exhaustive);
        sub->add_option("--samples", chk_samples);
        sub->add_option("-o,--csv", chk_csv);
        sub->add_option("--json", chk_json);
    }

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    auto* ora_minc = oracle->add_subcommand("min-c", "minimum clique factor over tiny hosts");
    std::string ora_graph;
    int ora_tree_max = 6, ora_path_max = 6;
    ora_minc->add_option("graph", ora_graph)->required();
    ora_minc->add_option("--tree-max", ora_tree_max);
    ora_minc->add_option("--path-max", ora_path_max);
    auto* ora_sweep = oracle->add_subcommand("sweep", "lemma sweep harness");
    int ora_lemma = 5;
    int ora_height = 3;
    bool ora_exhaustive = false;
    long long ora_samples = 10'000;
    std::string ora_csv, ora_json;
    ora_sweep->add_option("--lemma", ora_lemma)->required();
    ora_sweep->add_option("--height", ora_height);
    ora_sweep->add_flag("--exhaustive", ora_exhaustive);
    ora_sweep->add_option("--samples", ora_samples);
    ora_sweep->add_option("-o,--csv", ora_csv);
    ora_sweep->add_option("--json", ora_json);
    auto* ora_sep = oracle->add_subcommand("separators", "minimal balanced separators");
    int ora_sep_height = 3, ora_sep_max = 5;
    ora_sep->add_option("--height", ora_sep_height)->required();
    ora_sep->add_option("--max-size", ora_sep_max);
    auto* ora_tw = oracle->add_subcommand("treewidth", "exact treewidth of a tiny graph");
    ora_tw->add_option("graph", ora_graph)->required();

    // ---- suite ----
    auto* suite = app.add_subcommand("suite", "batteries of checks");
    auto* suite_paper = suite->add_subcommand("paper-checks", "the acceptance battery");
    int suite_height = 20;
    suite_paper->add_option("--height", suite_height, "tallest family member used");

    // ---- export ----
    auto* exportc = app.add_subcommand("export", "export formats");
    auto* export_dot = exportc->add_subcommand("dot", "graphviz dot");
    std::string dot_in, dot_out;
    export_dot->add_option("graph", dot_in)->required();
    export_dot->add_option("-o,--output", dot_out)->required();

    // let the global flags (--seed, --jobs, ...) appear after a subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands({})) enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    std::vector<const char*> argv;
    argv.push_back("psw");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (!config_path.empty()) {
            auto cfg = read_config(config_path);
            // flags override the file, so only absent options are filled
            if (cfg.count("budget_vertices") && !app.count("--budget-vertices"))
                budget_vertices = std::stoll(cfg["budget_vertices"]);
            if (cfg.count("seed") && !app.count("--seed")) seed = std::stoull(cfg["seed"]);
            if (cfg.count("jobs") && !app.count("--jobs")) jobs = std::stoi(cfg["jobs"]);
        }

        if (gen_gh->parsed()) {
            GhGraph gh = build_gh(gh_height, budget_vertices);
            save_edge_list(gh.graph, gen_out);
            atomic_write(gen_out + ".json", gh_metadata(gh).dump(2) + "\n");
            std::cout << "wrote " << gen_out << " (" << gh.graph.n << " vertices, "
                      << gh.graph.edge_count() << " edges)\n";
            return kExitPass;
        }
        if (gen_grid->parsed()) {
            auto div = parse_divide_spec(grid_divide, grid_x, grid_y);
            SubdividedGrid sg = build_subdivided_grid(grid_x, grid_y, div, budget_vertices);
            save_edge_list(sg.graph, grid_out);
            atomic_write(grid_out + ".json", grid_metadata(sg, div).dump(2) + "\n");
            std::cout << "wrote " << grid_out << " (" << sg.graph.n << " vertices)\n";
            return kExitPass;
        }

        if (val_part->parsed()) {
            Graph g = load_edge_list(val_graph);
            HPartition p = load_hpartition(val_partition);
            auto bad = validate_hpartition(g, p);
            std::cout << (bad.empty() ? "valid H-partition" : "violations:") << "\n";
            for (auto& [u, v] : bad) std::cout << "  edge " << u << " " << v << "\n";
            return bad.empty() ? kExitPass : kExitFail;
        }
        if (val_lay->parsed()) {
            Graph g = load_edge_list(val_graph);
            Layering lay = load_layering(val_layering);
            auto bad = validate_layering(g, lay);
            std::cout << (bad.empty() ? "valid layering" : "violations:") << "\n";
            for (auto& [u, v] : bad) std::cout << "  edge " << u << " " << v << "\n";
            return bad.empty() ? kExitPass : kExitFail;
        }
        if (val_emb->parsed()) {
            Graph g = load_edge_list(val_graph);
            HPartition p = load_hpartition(val_partition);
            Layering lay = load_layering(val_layering);
            ProductEmbedding emb = partitions_to_embedding(g, p, lay, val_c);
            auto bad = validate_embedding(g, emb);
            std::cout << (bad.empty() ? "valid embedding into H x P x K_" + std::to_string(val_c)
                                      : "violations:")
                      << "\n";
            for (auto& s : bad) std::cout << "  " << s << "\n";
            return bad.empty() ? kExitPass : kExitFail;
        }

        if (prod_strong->parsed()) {
            Graph a = load_edge_list(prod_a);
            Graph b = load_edge_list(prod_b);
            StrongProduct pr = strong_product(a, b, budget_vertices);
            save_edge_list(pr.graph, prod_out);
            std::cout << "wrote " << prod_out << " (" << pr.graph.n << " vertices, "
                      << pr.graph.edge_count() << " edges)\n";
            return kExitPass;
        }

        if (witness->parsed()) {
            GhGraph gh = load_gh(wit_graph, wit_meta);
            HPartition tp = load_hpartition(wit_tp);
            Layering lay = load_layering(wit_lay);
            WitnessConfig cfg;
            cfg.alpha = Rational::parse(wit_alpha);
            if (wit_c_override > 0) cfg.c_override = wit_c_override;
            cfg.inputs = {wit_graph, wit_meta, wit_tp, wit_lay};
            WitnessCertificate cert = extract_witness(gh, tp, lay, cfg);
            save_certificate(cert, wit_out);
            if (cert.branch == "infeasible") {
                std::cout << "infeasible at " << cert.infeasible.stage << ": "
                          << cert.infeasible.inequality << " (" << cert.infeasible.lhs
                          << " vs " << cert.infeasible.rhs << ")\n";
                return kExitInfeasible;
            }
            long long cell = cert.branch == "main" ? cert.final_cell.cell : cert.early.cell;
            long long bound = cert.branch == "main" ? cert.final_cell.bound : cert.early.bound;
            std::cout << cert.branch << " certificate: cell " << cell << " >= bound " << bound
                      << " (c = " << cert.c << ")\n";
            return kExitPass;
        }

        if (audit->parsed()) {
            WitnessCertificate cert = load_certificate(aud_cert);
            std::string graph_path = aud_graph.empty() ? cert.inputs.graph : aud_graph;
            std::string meta_path = aud_meta.empty() ? cert.inputs.meta : aud_meta;
            std::string tp_path = aud_tp.empty() ? cert.inputs.tree_partition : aud_tp;
            std::string lay_path = aud_lay.empty() ? cert.inputs.layering : aud_lay;
            if (cert.branch == "infeasible") {
                std::cout << "infeasible certificate: " << cert.infeasible.stage << ", "
                          << cert.infeasible.inequality << "\n";
                return kExitInfeasible;
            }
            GhGraph gh = load_gh(graph_path, meta_path);
            HPartition tp = load_hpartition(tp_path);
            Layering lay = load_layering(lay_path);
            auto bad = audit_certificate(gh, tp, lay, cert);
            if (!bad.empty()) {
                std::cout << "audit FAILED:\n";
                for (auto& s : bad) std::cout << "  " << s << "\n";
                return kExitFail;
            }
            std::cout << "audit clean\n";
            if (aud_delta > 0 && aud_tw > 0) {
                LowerBoundReport rep = lower_bound_report(cert, aud_delta, aud_tw);
                std::cout << "n = " << rep.n << ", cell = " << rep.cell
                          << ", implied tree-product width = " << rep.implied_width.str() << "\n"
                          << rep.verdict << "\n"
                          << "any claim via this pair needs c*delta*(t+1) >= "
                          << rep.cdt1_lower.str() << "\n";
                return rep.refuted ? kExitFail : kExitPass;
            }
            return kExitPass;
        }

        if (con_outer->parsed()) {
            GhGraph gh = build_gh(con_height, budget_vertices);
            auto [hp, lay] = build_leftmost_path_partition(gh);
            save_edge_list(hp.host, con_host);
            save_hpartition(hp, con_parts, std::filesystem::path(con_host).filename().string());
            if (!con_lay.empty()) save_layering(lay, con_lay);
            std::cout << "wrote " << con_parts << " (" << hp.parts.size() << " parts, width "
                      << partition_width(hp) << ")\n";
            return kExitPass;
        }

        if (check_tw2->parsed()) {
            Graph g = load_edge_list(chk_graph);
            StructureVerdict v = treewidth_at_most_2(g);
            std::cout << "treewidth <= 2: " << (*v.treewidth_le_2 ? "yes" : "no") << " ("
                      << v.trace.size() << " reduction steps)\n";
            return *v.treewidth_le_2 ? kExitPass : kExitFail;
        }
        if (check_outer->parsed()) {
            Graph g = load_edge_list(chk_graph);
            StructureVerdict v = outerplanarity_check_small(g, chk_budget);
            if (!v.outerplanar.has_value()) {
                std::cout << "unknown (above budget)\n";
                return kExitInfeasible;
            }
            std::cout << "outerplanar: " << (*v.outerplanar ? "yes" : "no");
            if (!*v.outerplanar) std::cout << " (" << v.minor_kind << " found)";
            std::cout << "\n";
            return *v.outerplanar ? kExitPass : kExitFail;
        }
        for (const char* name : {"lemma5", "lemma6", "lemma7", "lemma9", "grow"}) {
            auto* sub = check->get_subcommand(name);
            if (sub->parsed()) {
                SweepParams par;
                par.height = chk_height;
                par.exhaustive = chk_exhaustive;
                par.samples = chk_samples;
                par.seed = seed;
                return run_sweep_command(sweep_lemma_id(name), par, chk_csv, chk_json);
            }
        }

        if (ora_minc->parsed()) {
            Graph g = load_edge_list(ora_graph);
            MinProductC res = min_product_c(g, ora_tree_max, ora_path_max);
            std::cout << "minimum c = " << res.c << " (tree host with " << res.tp.host.n
                      << " nodes, path length " << res.lay.layer_count() - 1 << ")\n";
            return kExitPass;
        }
        if (ora_sweep->parsed()) {
            SweepParams par;
            par.height = ora_height;
            par.exhaustive = ora_exhaustive;
            par.samples = ora_samples;
            par.seed = seed;
            return run_sweep_command(ora_lemma, par, ora_csv, ora_json);
        }
        if (ora_sep->parsed()) {
            GhGraph gh = build_gh(ora_sep_height, budget_vertices);
            auto seps = minimal_balanced_separators(gh, ora_sep_max);
            std::cout << seps.size() << " minimal balanced separators up to size " << ora_sep_max
                      << "\n";
            for (std::size_t i = 0; i < seps.size() && i < 20; ++i) {
                std::cout << " ";
                for (int v : seps[i]) std::cout << " " << v;
                std::cout << "\n";
            }
            return kExitPass;
        }
        if (ora_tw->parsed()) {
            Graph g = load_edge_list(ora_graph);
            std::cout << "treewidth = " << exact_treewidth_tiny(g) << "\n";
            return kExitPass;
        }

        if (suite_paper->parsed()) {
            SuiteOptions opt;
            opt.height = suite_height;
            opt.seed = seed;
            opt.jobs = jobs;
            auto results = run_paper_checks(opt, &std::cout);
            bool all = true;
            for (const auto& r : results) all = all && r.pass;
            std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << "\n";
            return all ? kExitPass : kExitFail;
        }

        if (export_dot->parsed()) {
            Graph g = load_edge_list(dot_in);
            write_dot(g, dot_out);
            std::cout << "wrote " << dot_out << "\n";
            return kExitPass;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    std::cerr << "no subcommand matched\n";
    return kExitUsage;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

} // namespace psw
