#include "psw/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace psw {

void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        require(out.good(), "PreconditionFailed", "cannot write " + tmp);
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ostringstream ss;
    write_edge_list(g, ss);
    atomic_write(path, ss.str());
}

// ---------------- partitions ----------------

Json hpartition_to_json(const HPartition& p, const std::string& host_ref) {
    Json j;
    if (!host_ref.empty()) {
        j["host"] = host_ref;
    } else {
        Json host;
        host["n"] = p.host.n;
        Json edges = Json::array();
        for (auto& [u, v] : p.host.edges) edges.push_back(Json::array({u, v}));
        host["edges"] = std::move(edges);
        j["host"] = std::move(host);
    }
    Json parts = Json::object();
    for (int x = 0; x < p.host.n; ++x) parts[std::to_string(x)] = p.parts[x];
    j["parts"] = std::move(parts);
    j["subject_n"] = p.subject_vertex_count;
    return j;
}

HPartition hpartition_from_json(const Json& j, const std::string& base_dir) {
    Graph host;
    if (j.at("host").is_string()) {
        std::filesystem::path p = j.at("host").get<std::string>();
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        host = load_edge_list(p.string());
    } else {
        std::vector<std::pair<int, int>> es;
        for (auto& e : j.at("host").at("edges"))
            es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        host = build_graph(j.at("host").at("n").get<int>(), std::move(es));
    }
    std::vector<VertexSet> parts(host.n);
    for (auto& [key, val] : j.at("parts").items()) {
        int x = std::stoi(key);
        require(x >= 0 && x < host.n, "NotAPartition", "part key outside the host");
        parts[x] = val.get<VertexSet>();
    }
    int subject_n = 0;
    if (j.contains("subject_n")) {
        subject_n = j.at("subject_n").get<int>();
    } else {
        for (auto& part : parts)
            for (int v : part) subject_n = std::max(subject_n, v + 1);
    }
    return make_hpartition(std::move(host), std::move(parts), subject_n);
}

void save_hpartition(const HPartition& p, const std::string& path, const std::string& host_ref) {
    atomic_write(path, hpartition_to_json(p, host_ref).dump(2) + "\n");
}

HPartition load_hpartition(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "PreconditionFailed", "cannot open " + path);
    Json j = Json::parse(in);
    return hpartition_from_json(j, std::filesystem::path(path).parent_path().string());
}

// ---------------- layerings ----------------

Json layering_to_json(const Layering& lay) {
    Json j;
    j["layers"] = lay.layers;
    return j;
}

Layering layering_from_json(const Json& j) {
    std::vector<VertexSet> layers;
    for (auto& l : j.at("layers")) layers.push_back(l.get<VertexSet>());
    int subject_n = 0;
    for (auto& l : layers)
        for (int v : l) subject_n = std::max(subject_n, v + 1);
    return make_layering(std::move(layers), subject_n);
}

void save_layering(const Layering& lay, const std::string& path) {
    atomic_write(path, layering_to_json(lay).dump(2) + "\n");
}

Layering load_layering(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "PreconditionFailed", "cannot open " + path);
    return layering_from_json(Json::parse(in));
}

// ---------------- certificates ----------------

namespace {

Json grid_to_json(const GridRecord& g) {
    return Json{{"cols", g.cols},     {"rows", g.rows},     {"removed", g.removed},
                {"col_lo", g.col_lo}, {"col_hi", g.col_hi}, {"p", g.p}};
}

GridRecord grid_from_json(const Json& j) {
    GridRecord g;
    g.cols = j.at("cols").get<long long>();
    g.rows = j.at("rows").get<long long>();
    g.removed = j.at("removed").get<long long>();
    g.col_lo = j.at("col_lo").get<long long>();
    g.col_hi = j.at("col_hi").get<long long>();
    g.p = j.at("p").get<std::string>();
    return g;
}

Json startup_to_json(const StartupRecord& s) {
    Json j{{"balanced_node", s.balanced_node},
           {"separator_size", s.separator_size},
           {"i0", s.i0},
           {"y_size", s.y_size},
           {"l_size", s.l_size},
           {"branch", std::string(1, s.branch)},
           {"z_size", s.z_size},
           {"zprime_size", s.zprime_size},
           {"dropped", s.dropped}};
    if (s.branch == 'Z') j["grid"] = grid_to_json(s.grid);
    return j;
}

StartupRecord startup_from_json(const Json& j) {
    StartupRecord s;
    s.balanced_node = j.at("balanced_node").get<int>();
    s.separator_size = j.at("separator_size").get<long long>();
    s.i0 = j.at("i0").get<long long>();
    s.y_size = j.at("y_size").get<long long>();
    s.l_size = j.at("l_size").get<long long>();
    s.branch = j.at("branch").get<std::string>().at(0);
    s.z_size = j.at("z_size").get<long long>();
    s.zprime_size = j.at("zprime_size").get<long long>();
    s.dropped = j.at("dropped").get<long long>();
    if (j.contains("grid")) s.grid = grid_from_json(j.at("grid"));
    return s;
}

} // namespace

Json certificate_to_json(const WitnessCertificate& cert) {
    Json j;
    j["format"] = "psw-witness-certificate";
    j["h"] = cert.h;
    j["n"] = cert.n;
    j["c"] = cert.c;
    j["alpha"] = cert.alpha.str();
    j["branch"] = cert.branch;
    j["inputs"] = Json{{"graph", cert.inputs.graph},
                       {"meta", cert.inputs.meta},
                       {"tree_partition", cert.inputs.tree_partition},
                       {"layering", cert.inputs.layering}};
    if (cert.branch == "early-exit") {
        j["early"] = Json{{"x", cert.early.x},
                          {"bag_size", cert.early.bag_size},
                          {"threshold", cert.early.threshold},
                          {"diam_bound", cert.early.diam_bound},
                          {"layer", cert.early.layer},
                          {"cell", cert.early.cell},
                          {"bound", cert.early.bound}};
    }
    if (cert.startup_trace) j["startup"] = startup_to_json(*cert.startup_trace);
    Json stages = Json::array();
    for (const auto& fam : cert.families) {
        Json f{{"i", fam.index},
               {"x", fam.x_node},
               {"q", fam.q},
               {"k", fam.k},
               {"ell", fam.ell},
               {"m_anchor", fam.m_anchor},
               {"m_vertex", fam.m_vertex},
               {"parts", fam.parts},
               {"anchors", fam.anchors},
               {"ineq", Json{{"text", fam.ineq_text}, {"lhs", fam.ineq_lhs}, {"rhs", fam.ineq_rhs}}}};
        if (!fam.paths.empty()) f["paths"] = fam.paths;
        stages.push_back(std::move(f));
    }
    j["stages"] = std::move(stages);
    Json grids = Json::array();
    for (const auto& g : cert.grids) grids.push_back(grid_to_json(g));
    j["grids"] = std::move(grids);
    j["t"] = cert.t;
    j["t1"] = cert.t1;
    j["t2"] = cert.t2;
    if (cert.branch == "main") {
        j["final"] = Json{{"x", cert.final_cell.x},
                          {"y", cert.final_cell.layer},
                          {"part_index", cert.final_cell.part_index},
                          {"cell", cert.final_cell.cell},
                          {"bound", cert.final_cell.bound},
                          {"bound_ell", cert.final_cell.bound_ell},
                          {"ell_final", cert.final_cell.ell_final},
                          {"diam_bound", cert.final_cell.diam_bound}};
    } else {
        j["final"] = nullptr;
    }
    if (cert.branch == "infeasible") {
        j["infeasible"] = Json{{"stage", cert.infeasible.stage},
                               {"inequality", cert.infeasible.inequality},
                               {"lhs", cert.infeasible.lhs},
                               {"rhs", cert.infeasible.rhs}};
    }
    return j;
}

WitnessCertificate certificate_from_json(const Json& j) {
    WitnessCertificate cert;
    cert.h = j.at("h").get<int>();
    cert.n = j.at("n").get<long long>();
    cert.c = j.at("c").get<long long>();
    cert.alpha = Rational::parse(j.at("alpha").get<std::string>());
    cert.branch = j.at("branch").get<std::string>();
    if (j.contains("inputs")) {
        cert.inputs.graph = j.at("inputs").value("graph", "");
        cert.inputs.meta = j.at("inputs").value("meta", "");
        cert.inputs.tree_partition = j.at("inputs").value("tree_partition", "");
        cert.inputs.layering = j.at("inputs").value("layering", "");
    }
    if (j.contains("early")) {
        const Json& e = j.at("early");
        cert.early.x = e.at("x").get<int>();
        cert.early.bag_size = e.at("bag_size").get<long long>();
        cert.early.threshold = e.at("threshold").get<long long>();
        cert.early.diam_bound = e.at("diam_bound").get<long long>();
        cert.early.layer = e.at("layer").get<int>();
        cert.early.cell = e.at("cell").get<long long>();
        cert.early.bound = e.at("bound").get<long long>();
    }
    if (j.contains("startup")) cert.startup_trace = startup_from_json(j.at("startup"));
    for (const auto& f : j.at("stages")) {
        FamilyRecord fam;
        fam.index = f.at("i").get<int>();
        fam.x_node = f.at("x").get<int>();
        fam.q = f.at("q").get<long long>();
        fam.k = f.at("k").get<long long>();
        fam.ell = f.at("ell").get<long long>();
        fam.m_anchor = f.at("m_anchor").get<long long>();
        fam.m_vertex = f.at("m_vertex").get<long long>();
        fam.parts = f.at("parts").get<std::vector<VertexSet>>();
        fam.anchors = f.at("anchors").get<std::vector<int>>();
        if (f.contains("paths"))
            fam.paths = f.at("paths").get<std::vector<std::vector<std::vector<int>>>>();
        fam.ineq_text = f.at("ineq").at("text").get<std::string>();
        fam.ineq_lhs = f.at("ineq").at("lhs").get<std::string>();
        fam.ineq_rhs = f.at("ineq").at("rhs").get<std::string>();
        cert.families.push_back(std::move(fam));
    }
    if (j.contains("grids"))
        for (const auto& g : j.at("grids")) cert.grids.push_back(grid_from_json(g));
    cert.t = j.at("t").get<long long>();
    cert.t1 = j.at("t1").get<long long>();
    cert.t2 = j.at("t2").get<long long>();
    if (j.contains("final") && !j.at("final").is_null()) {
        const Json& f = j.at("final");
        cert.final_cell.x = f.at("x").get<int>();
        cert.final_cell.layer = f.at("y").get<int>();
        cert.final_cell.part_index = f.at("part_index").get<int>();
        cert.final_cell.cell = f.at("cell").get<long long>();
        cert.final_cell.bound = f.at("bound").get<long long>();
        cert.final_cell.bound_ell = f.at("bound_ell").get<long long>();
        cert.final_cell.ell_final = f.at("ell_final").get<long long>();
        cert.final_cell.diam_bound = f.at("diam_bound").get<long long>();
    }
    if (j.contains("infeasible")) {
        const Json& inf = j.at("infeasible");
        cert.infeasible.stage = inf.at("stage").get<std::string>();
        cert.infeasible.inequality = inf.at("inequality").get<std::string>();
        cert.infeasible.lhs = inf.at("lhs").get<std::string>();
        cert.infeasible.rhs = inf.at("rhs").get<std::string>();
    }
    return cert;
}

void save_certificate(const WitnessCertificate& cert, const std::string& path) {
    atomic_write(path, certificate_to_json(cert).dump(2) + "\n");
}

WitnessCertificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "PreconditionFailed", "cannot open " + path);
    return certificate_from_json(Json::parse(in));
}

// ---------------- generator metadata ----------------

Json gh_metadata(const GhGraph& gh) {
    Json j;
    j["type"] = "gh";
    j["h"] = gh.height();
    j["n"] = gh.graph.n;
    j["m"] = gh.graph.edge_count();
    return j;
}

Json grid_metadata(const SubdividedGrid& sg, const std::vector<int>& divisions) {
    Json j;
    j["type"] = "grid";
    j["x"] = sg.x;
    j["y"] = sg.y;
    Json div = Json::array();
    for (int i = 0; i + 1 < sg.x; ++i)
        for (int r = 0; r < sg.y; ++r)
            div.push_back(Json::array({i, r, divisions[i * sg.y + r]}));
    j["divisions"] = std::move(div);
    Json roles = Json::array();
    for (int v = 0; v < sg.graph.n; ++v)
        roles.push_back(sg.is_grid_vertex(v) ? "grid" : "subdivision");
    j["vertex_roles"] = std::move(roles);
    return j;
}

GhGraph gh_from_graph(Graph g, int h) {
    GhGraph expect = build_gh(h);
    require(expect.graph.n == g.n && expect.graph.edges == g.edges, "PreconditionFailed",
            "graph does not match the height-" + std::to_string(h) + " family member");
    return expect;
}

// ---------------- reports ----------------

std::string sweep_report_csv(const SweepReport& rep) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < rep.row_header.size(); ++i)
        ss << (i ? "," : "") << rep.row_header[i];
    ss << "\n";
    for (const auto& row : rep.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) ss << (i ? "," : "") << row[i];
        ss << "\n";
    }
    return ss.str();
}

Json sweep_report_json(const SweepReport& rep) {
    Json j;
    j["lemma"] = rep.lemma;
    j["instances"] = rep.instances;
    j["failures"] = rep.failures;
    j["failure_notes"] = rep.failure_notes;
    j["extremes"] = rep.extremes;
    return j;
}

void write_dot(const Graph& g, const std::string& path) {
    std::ostringstream ss;
    ss << "graph g {\n";
    for (int v = 0; v < g.n; ++v) ss << "  " << v << ";\n";
    for (auto& [u, v] : g.edges) ss << "  " << u << " -- " << v << ";\n";
    ss << "}\n";
    atomic_write(path, ss.str());
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> out;
    std::ifstream in(path);
    require(in.good(), "PreconditionFailed", "cannot open config " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) out[key] = val;
    }
    return out;
}

} // namespace psw
