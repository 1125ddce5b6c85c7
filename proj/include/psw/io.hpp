#ifndef PSW_IO_HPP
#define PSW_IO_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "psw/generators.hpp"
#include "psw/graph.hpp"
#include "psw/oracle.hpp"
#include "psw/partitions.hpp"
#include "psw/witness.hpp"

namespace psw {

using Json = nlohmann::ordered_json;

// outputs are written to <path>.tmp and renamed, so partial files never land
void atomic_write(const std::string& path, const std::string& content);

void save_edge_list(const Graph& g, const std::string& path);

// partition file: { "host": "file.el" | {"n":..,"edges":[[u,v],..]},
//                   "parts": { "<host id>": [ids...] } }
Json hpartition_to_json(const HPartition& p, const std::string& host_ref = "");
HPartition hpartition_from_json(const Json& j, const std::string& base_dir);
void save_hpartition(const HPartition& p, const std::string& path,
                     const std::string& host_ref = "");
HPartition load_hpartition(const std::string& path);

// layering file: { "layers": [[ids...], ...] }
Json layering_to_json(const Layering& lay);
Layering layering_from_json(const Json& j);
void save_layering(const Layering& lay, const std::string& path);
Layering load_layering(const std::string& path);

// witness certificates
Json certificate_to_json(const WitnessCertificate& cert);
WitnessCertificate certificate_from_json(const Json& j);
void save_certificate(const WitnessCertificate& cert, const std::string& path);
WitnessCertificate load_certificate(const std::string& path);

// generator sidecar metadata
Json gh_metadata(const GhGraph& gh);
Json grid_metadata(const SubdividedGrid& sg, const std::vector<int>& divisions);

// reconstruct a GhGraph from a graph plus its height, verifying the edges
GhGraph gh_from_graph(Graph g, int h);

std::string sweep_report_csv(const SweepReport& rep);
Json sweep_report_json(const SweepReport& rep);

void write_dot(const Graph& g, const std::string& path);

// TOML-like key=value config ('#' comments); flags override file values
std::map<std::string, std::string> read_config(const std::string& path);

} // namespace psw

#endif
