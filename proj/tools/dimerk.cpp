// dimerk: command-line front end for the dimension-dependence engine.
//
// Exit status: 0 pass, 2 configuration or input error, 3 internal
// consistency failure, 4 theorem-check failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dimerk/dimerk.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kExitConfig = 2;
constexpr int kExitConsistency = 3;
constexpr int kExitTheorem = 4;

struct RunConfig {
  std::string cache_dir;
  bool no_cache = false;
  int jobs = 1;
  bool decimal = false;

  int n = 0;
  int d = 1;
  std::string input = "-";
  std::string output = "-";
  std::string out_dir;
  std::string psi_path;
  std::vector<int> sides;
  bool as_topology = false;
  bool fixed_kinds = false;
};

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

json read_json(const std::string& path, std::string* digest = nullptr) {
  const std::string text = read_text(path);
  if (digest) *digest = dimerk::detail::fnv1a_hex(text);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text << '\n';
}

std::shared_ptr<dimerk::EmbeddingCache> open_cache(const RunConfig& config) {
  if (config.no_cache) return nullptr;
  std::string dir = config.cache_dir;
  if (dir.empty()) {
    const char* env = std::getenv("DIMERK_CACHE_DIR");
    dir = env && *env ? env : ".dimerk-cache";
  }
  return std::make_shared<dimerk::EmbeddingCache>(dir);
}

int run_topologies(const RunConfig& config) {
  const auto catalog = dimerk::enumerate_topologies(config.n, config.jobs);
  json out = json::array();
  for (const auto& t : catalog.entries) out.push_back(dimerk::io::to_json(t));
  if (!config.out_dir.empty()) {
    fs::create_directories(config.out_dir);
    write_text((fs::path(config.out_dir) / ("topologies-n" + std::to_string(config.n) + ".json")).string(),
               out.dump(2));
  } else {
    write_text(config.output, out.dump(2));
  }
  return 0;
}

int run_weighted_sum(const RunConfig& config) {
  std::string digest;
  const auto graphs = dimerk::io::graphs_from_json(read_json(config.input, &digest));
  std::vector<dimerk::Topology> topologies;
  for (const auto& g : graphs) topologies.push_back(dimerk::canonicalize(g));

  dimerk::EmbeddingCounter counter(open_cache(config));
  const auto sums = dimerk::parallel_map(topologies.size(), config.jobs, [&](std::size_t i) {
    return dimerk::weighted_sum(topologies[i], counter);
  });

  json all = json::array();
  for (std::size_t i = 0; i < topologies.size(); ++i) {
    const auto& t = topologies[i];
    json entry{{"generatorVersion", std::string(dimerk::kGeneratorVersion)},
               {"inputDigest", digest},
               {"hash", t.hash},
               {"n", t.edge_count()},
               {"graph", dimerk::io::to_json(t.canonical)},
               {"automorphisms", t.automorphism_count},
               {"laurent", dimerk::io::to_json(sums[i])}};
    if (config.decimal) entry["laurentDecimal"] = dimerk::detail::decimal_view(sums[i]);
    if (!config.out_dir.empty()) {
      fs::create_directories(config.out_dir);
      write_text((fs::path(config.out_dir) / ("weighted-sum-" + t.hash + ".json")).string(), entry.dump(2));
    }
    all.push_back(std::move(entry));
  }
  if (config.out_dir.empty()) write_text(config.output, all.dump(2));
  return 0;
}

int run_reduce(const RunConfig& config) {
  dimerk::Multigraph g = dimerk::io::multigraph_from_json(read_json(config.input));
  if (config.as_topology) g = dimerk::prepare_for_reduction(g);
  const auto result = dimerk::reduce_to_nondegenerate(g);
  json out = json::array();
  for (const auto& term : result.terms) out.push_back(dimerk::io::to_json(term));
  write_text(config.output, out.dump(2));
  return 0;
}

int run_embed_poly(const RunConfig& config) {
  const dimerk::Multigraph g = dimerk::io::multigraph_from_json(read_json(config.input));
  dimerk::EmbeddingCounter counter(open_cache(config));
  write_text(config.output, dimerk::io::to_json(counter.polynomial(g)).dump(2));
  return 0;
}

int run_oracle(const RunConfig& config) {
  const dimerk::Multigraph g = dimerk::io::multigraph_from_json(read_json(config.input));
  std::vector<dimerk::TorusSpec> tori;
  if (config.sides.empty()) {
    tori = dimerk::default_tori(g.edge_count(), config.d);
  } else {
    for (int side : config.sides) tori.push_back(dimerk::TorusSpec{config.d, side});
  }
  const dimerk::NSeries series = config.fixed_kinds
                                     ? dimerk::extrapolate_assignment(g, config.d, tori, config.jobs)
                                     : dimerk::extrapolate_limit(dimerk::canonicalize(g), config.d, tori, config.jobs);
  json out = dimerk::io::to_json(series);
  if (config.decimal) out["limitDecimal"] = dimerk::to_decimal(series.limit());
  write_text(config.output, out.dump(2));
  return 0;
}

int run_verify(const RunConfig& config) {
  dimerk::EmbeddingCounter counter(open_cache(config));
  const auto report = dimerk::build_verify_report(config.n, counter, config.jobs, config.decimal);
  if (config.output != "-") write_text(config.output, report.json.dump(2));
  std::cout << report.summary << '\n';
  return report.passed() ? 0 : kExitTheorem;
}

int run_kernel(const RunConfig& config) {
  std::string digest;
  const auto psi = dimerk::io::psi_table_from_json(read_json(config.psi_path, &digest), config.psi_path);
  dimerk::EmbeddingCounter counter(open_cache(config));
  const auto result = dimerk::assemble_kernel(config.n, psi, counter, {}, config.jobs);
  json out = dimerk::io::to_json(result);
  out["generatorVersion"] = std::string(dimerk::kGeneratorVersion);
  out["inputDigest"] = digest;
  if (config.decimal) out["valueDecimal"] = dimerk::detail::decimal_view(result.value);
  write_text(config.output, out.dump(2));
  return result.form.passes_form ? 0 : kExitTheorem;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"Exact dimension dependence of dimer-expansion kernel contributions"};
  app.require_subcommand(1);
  app.add_option("--cache-dir", config.cache_dir, "Embedding-count cache directory (env DIMERK_CACHE_DIR)");
  app.add_flag("--no-cache", config.no_cache, "Do not read or write the embedding-count cache");
  app.add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--decimal", config.decimal, "Add approximate decimal values next to exact ones");

  auto* topologies = app.add_subcommand("topologies", "Catalog of connected n-edge multigraph topologies");
  topologies->add_option("--n", config.n, "Edge count (1..7)")->required();
  topologies->add_option("--out", config.output, "Output file ('-' for stdout)");
  topologies->add_option("--out-dir", config.out_dir, "Write topologies-n{n}.json into this directory");

  auto* weighted = app.add_subcommand("weighted-sum", "Laurent polynomial W_T(d) per input topology");
  weighted->add_option("--input,--topology", config.input, "Graph or array of graphs ('-' for stdin)");
  weighted->add_option("--out", config.output, "Output file ('-' for stdout)");
  weighted->add_option("--out-dir", config.out_dir, "Write weighted-sum-<hash>.json per topology");

  auto* reduce = app.add_subcommand("reduce", "Signed nondegenerate terms of a graph");
  reduce->add_option("--graph", config.input, "Graph JSON ('-' for stdin)")->required();
  reduce->add_flag("--as-topology", config.as_topology, "Reset kinds: loop edges solid, bridges wavy");
  reduce->add_option("--out", config.output, "Output file ('-' for stdout)");

  auto* embed = app.add_subcommand("embed-poly", "Embedding count of an all-solid graph as a polynomial in d");
  embed->add_option("--graph", config.input, "Graph JSON ('-' for stdin)")->required();
  embed->add_option("--out", config.output, "Output file ('-' for stdout)");

  auto* oracle = app.add_subcommand("oracle", "Finite-torus series in 1/(N-1) and its N -> infinity limit");
  oracle->add_option("--topology,--graph", config.input, "Graph JSON ('-' for stdin)")->required();
  oracle->add_option("--d", config.d, "Lattice dimension")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--sizes", config.sides, "Comma-separated torus sides")->delimiter(',');
  oracle->add_flag("--fixed-kinds", config.fixed_kinds, "Use the edge kinds in the file instead of all assignments");
  oracle->add_option("--out", config.output, "Output file ('-' for stdout)");

  auto* verify = app.add_subcommand("verify", "Check the Laurent form of every n-edge topology");
  verify->add_option("--n", config.n, "Edge count (1..7)")->required();
  verify->add_option("--report", config.output, "Report file");

  auto* kernel = app.add_subcommand("kernel", "Assemble sum_T psi(T) W_T from a coefficient table");
  kernel->add_option("--n", config.n, "Edge count (1..7)")->required();
  kernel->add_option("--psi", config.psi_path, "Coefficient table JSON {hash: \"p/q\"}")->required();
  kernel->add_option("--out", config.output, "Output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*topologies) return run_topologies(config);
    if (*weighted) return run_weighted_sum(config);
    if (*reduce) return run_reduce(config);
    if (*embed) return run_embed_poly(config);
    if (*oracle) return run_oracle(config);
    if (*verify) return run_verify(config);
    if (*kernel) return run_kernel(config);
  } catch (const dimerk::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
