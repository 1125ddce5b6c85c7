#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "psw/cli.hpp"
#include "psw/generators.hpp"
#include "psw/io.hpp"
#include "psw/partitions.hpp"

using namespace psw;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("psw-test-" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

} // namespace

TEST_CASE("generate writes edge lists with sidecars") {
    TempDir tmp;
    std::string out = tmp / "g2.el";
    CHECK(run_cli({"generate", "gh", "--height", "2", "-o", out}) == 0);
    Graph g = load_edge_list(out);
    CHECK(g.edges == build_gh(2).graph.edges);
    std::ifstream meta(out + ".json");
    REQUIRE(meta.good());
    Json j = Json::parse(meta);
    CHECK(j.at("h") == 2);
    CHECK(j.at("type") == "gh");

    std::string grid = tmp / "grid.el";
    CHECK(run_cli({"generate", "grid", "--x", "3", "--y", "2", "--divide", "1", "-o", grid}) == 0);
    CHECK(load_edge_list(grid).n == 10);
    CHECK(run_cli({"generate", "grid", "--x", "3", "--y", "2", "--divide", "0,0:1", "-o", grid}) ==
          1); // malformed divide spec
}

TEST_CASE("the chain construction round-trips through files") {
    TempDir tmp;
    std::string g2 = tmp / "g2.el";
    std::string parts = tmp / "parts.json";
    std::string host = tmp / "host.el";
    std::string lay = tmp / "lay.json";
    CHECK(run_cli({"generate", "gh", "--height", "2", "-o", g2}) == 0);
    CHECK(run_cli({"construct", "outerplanar", "--height", "2", "-o", parts, "--host", host,
                   "--layering", lay}) == 0);
    CHECK(run_cli({"validate", "partition", "--graph", g2, "--partition", parts}) == 0);
    CHECK(run_cli({"validate", "layering", "--graph", g2, "--layering", lay}) == 0);
    CHECK(run_cli({"validate", "embedding", "--graph", g2, "--partition", parts, "--layering",
                   lay, "--c", "1"}) == 0);
    CHECK(run_cli({"check", "tw2", host}) == 0);
    CHECK(run_cli({"check", "outerplanar", host}) == 0);
}

TEST_CASE("strong product command") {
    TempDir tmp;
    std::string k2 = tmp / "k2.el";
    save_edge_list(complete_graph(2), k2);
    std::string out = tmp / "k4.el";
    CHECK(run_cli({"product", "strong", k2, k2, "-o", out}) == 0);
    Graph k4 = load_edge_list(out);
    CHECK(k4.n == 4);
    CHECK(k4.edge_count() == 6);
}

TEST_CASE("witness and audit round trip, tampering caught") {
    TempDir tmp;
    std::string gph = tmp / "g10.el";
    CHECK(run_cli({"generate", "gh", "--height", "10", "-o", gph}) == 0);
    GhGraph gh = build_gh(10);

    VertexSet all(gh.graph.n);
    for (int v = 0; v < gh.graph.n; ++v) all[v] = v;
    HPartition tp = make_hpartition(build_graph(1, {}), {all}, gh.graph.n);
    std::string tp_path = tmp / "tp.json";
    save_hpartition(tp, tp_path);

    Layering lay = bfs_layering(gh.graph, 0);
    std::string lay_path = tmp / "lay.json";
    save_layering(lay, lay_path);

    std::string cert_path = tmp / "cert.json";
    CHECK(run_cli({"witness", "--graph", gph, "--meta", gph + ".json", "--tree-partition",
                   tp_path, "--layering", lay_path, "-o", cert_path}) == 0);
    CHECK(run_cli({"audit", cert_path}) == 0);
    CHECK(run_cli({"audit", cert_path, "--delta", "100", "--treewidth", "10"}) == 0);
    CHECK(run_cli({"audit", cert_path, "--delta", "1", "--treewidth", "1"}) == 1); // refuted

    // corrupt the recorded cell and the audit must fail
    {
        std::ifstream in(cert_path);
        Json j = Json::parse(in);
        j["early"]["cell"] = j["early"]["cell"].get<long long>() + 1;
        atomic_write(cert_path, j.dump(2) + "\n");
    }
    CHECK(run_cli({"audit", cert_path}) == 1);
}

TEST_CASE("witness reports infeasibility with exit code 3") {
    TempDir tmp;
    std::string gph = tmp / "g6.el";
    CHECK(run_cli({"generate", "gh", "--height", "6", "-o", gph}) == 0);
    GhGraph gh = build_gh(6);
    std::vector<VertexSet> parts(gh.graph.n);
    for (int v = 0; v < gh.graph.n; ++v) parts[v] = {v};
    HPartition self = make_hpartition(gh.graph, std::move(parts), gh.graph.n);
    std::string tp_path = tmp / "self.json";
    save_hpartition(self, tp_path);
    std::string lay_path = tmp / "lay.json";
    save_layering(bfs_layering(gh.graph, 0), lay_path);
    std::string cert_path = tmp / "cert.json";
    CHECK(run_cli({"witness", "--graph", gph, "--meta", gph + ".json", "--tree-partition",
                   tp_path, "--layering", lay_path, "-o", cert_path}) == 3);
    CHECK(run_cli({"audit", cert_path}) == 3);
}

TEST_CASE("oracle and sweep commands") {
    TempDir tmp;
    std::string g1 = tmp / "g1.el";
    CHECK(run_cli({"generate", "gh", "--height", "1", "-o", g1}) == 0);
    CHECK(run_cli({"oracle", "min-c", g1, "--tree-max", "6", "--path-max", "6"}) == 0);
    CHECK(run_cli({"oracle", "treewidth", g1}) == 0);
    CHECK(run_cli({"oracle", "separators", "--height", "2", "--max-size", "3"}) == 0);

    std::string csv = tmp / "sweep.csv";
    CHECK(run_cli({"check", "lemma5", "--height", "3", "--exhaustive", "-o", csv}) == 0);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "s_size,depth,depth_cap");
    CHECK(run_cli({"oracle", "sweep", "--lemma", "7", "--samples", "300", "--seed", "9"}) == 0);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({"no-such-command"}) == 2);
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"generate", "gh"}) == 2); // missing required flags
}

TEST_CASE("identical invocations produce identical artifacts") {
    TempDir tmp;
    std::string a = tmp / "a.el", b = tmp / "b.el";
    CHECK(run_cli({"generate", "gh", "--height", "5", "-o", a}) == 0);
    CHECK(run_cli({"generate", "gh", "--height", "5", "-o", b}) == 0);
    auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a + ".json") == slurp(b + ".json"));
}

TEST_CASE("dot export") {
    TempDir tmp;
    std::string g1 = tmp / "g1.el";
    CHECK(run_cli({"generate", "gh", "--height", "1", "-o", g1}) == 0);
    std::string dot = tmp / "g1.dot";
    CHECK(run_cli({"export", "dot", g1, "-o", dot}) == 0);
    std::ifstream in(dot);
    std::string first;
    std::getline(in, first);
    CHECK(first == "graph g {");
}

TEST_CASE("config file fills defaults but flags win") {
    TempDir tmp;
    std::string cfg = tmp / "psw.cfg";
    atomic_write(cfg, "budget_vertices = 4\nseed = 1\n# comment\n");
    std::string out = tmp / "g3.el";
    // the configured budget is too small for h = 3
    CHECK(run_cli({"--config", cfg, "generate", "gh", "--height", "3", "-o", out}) == 1);
    CHECK(run_cli({"--config", cfg, "--budget-vertices", "1000000", "generate", "gh", "--height",
                   "3", "-o", out}) == 0);
}
