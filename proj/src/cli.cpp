#include "hamcolor/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "hamcolor/bowtie.hpp"
#include "hamcolor/structure.hpp"

namespace hamcolor::cli {

// ---------------------------------------------------------------------------
// Plumbing

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) out << std::setw(2) << static_cast<int>(digest[i]);
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path);
}

std::string serialize(const Json& report) { return report.dump(2) + "\n"; }

std::string sidecar_path(const std::string& ecg_path) {
  std::string stem = ecg_path;
  if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".ecg") == 0) {
    stem.resize(stem.size() - 4);
  }
  return stem + ".partition.json";
}

namespace {

Json base_report(const std::string& command) {
  Json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["status"] = "pass";
  j["input_digest"] = nullptr;
  j["parameters"] = Json::object();
  j["results"] = Json::object();
  return j;
}

Json digest_of(const std::string& graph_text) {
  Json d;
  d["algorithm"] = "sha256";
  d["graph"] = sha256_hex(graph_text);
  return d;
}

CommandOutcome finish(Json report, bool pass) {
  report["status"] = pass ? "pass" : "fail";
  return {std::move(report), pass ? kExitPass : kExitCheckFailed};
}

Json set_json(const VertexSet& s) { return Json(s.items()); }

Json edge_json(const Edge& e) { return Json::array({e.u, e.v, e.color}); }

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(edge_json(e));
  return out;
}

Json bowtie_json(const Bowtie& b) { return Json(std::vector<Vertex>(b.v.begin(), b.v.end())); }

Json cycle_json(const HamiltonCycle& h) {
  Json j;
  j["order"] = h.order();
  j["counts"] = h.counts();
  return j;
}

Json packing_json(const BowtiePacking& p) {
  Json j;
  j["t"] = p.size();
  Json list = Json::array();
  for (const Bowtie& b : p.bowties) list.push_back(bowtie_json(b));
  j["bowties"] = std::move(list);
  j["covered"] = set_json(p.covered);
  return j;
}

std::string error_type(const std::exception& e) {
#define HAMCOLOR_NAME(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  HAMCOLOR_NAME(ParseError)
  HAMCOLOR_NAME(ValidationError)
  HAMCOLOR_NAME(ColorOutOfRange)
  HAMCOLOR_NAME(OverlappingSides)
  HAMCOLOR_NAME(InvalidCycle)
  HAMCOLOR_NAME(NotHamiltonian)
  HAMCOLOR_NAME(BudgetExceeded)
  HAMCOLOR_NAME(NotALinearForest)
  HAMCOLOR_NAME(NoExtensionFound)
  HAMCOLOR_NAME(InvalidBowtie)
  HAMCOLOR_NAME(NotDisjoint)
  HAMCOLOR_NAME(NotKBad)
  HAMCOLOR_NAME(DivisibilityError)
  HAMCOLOR_NAME(ParameterError)
  HAMCOLOR_NAME(TargetsInfeasible)
  HAMCOLOR_NAME(ModeInconclusive)
  HAMCOLOR_NAME(NotAPartition)
  HAMCOLOR_NAME(NotATriangle)
  HAMCOLOR_NAME(IoError)
  HAMCOLOR_NAME(std::logic_error)
#undef HAMCOLOR_NAME
  return "Error";
}

}  // namespace

CommandOutcome run_guarded(const std::string& command, const std::function<CommandOutcome()>& body,
                           bool timing) {
  auto start = std::chrono::steady_clock::now();
  CommandOutcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.report = base_report(command);
    outcome.report["status"] = "error";
    outcome.report["error"] = {{"type", error_type(e)}, {"message", e.what()}};
    outcome.exit_code = kExitError;
  }
  if (timing) {
    auto elapsed = std::chrono::steady_clock::now() - start;
    outcome.report["timing"] = {
        {"elapsed_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
  }
  return outcome;
}

// ---------------------------------------------------------------------------
// gen

Json partition_json(const Construction& c) {
  Json j;
  j["kind"] = construction_kind_name(c.spec.kind);
  j["n"] = c.graph.n();
  j["r"] = c.graph.r();
  if (c.spec.kind == ConstructionKind::Counterexample2) j["t"] = c.spec.t;
  j["part_names"] = c.part_names;
  Json parts = Json::array();
  for (const VertexSet& p : c.parts) parts.push_back(set_json(p));
  j["parts"] = std::move(parts);
  j["edges"] = c.graph.edge_count();
  j["min_degree"] = c.min_degree;
  j["min_degree_nominal"] = c.nominal_min_degree;
  j["min_degree_deviation"] = c.min_degree - c.nominal_min_degree;
  return j;
}

CommandOutcome cmd_gen(const ConstructionSpec& spec, const std::string& out_path) {
  Json report = base_report("gen");
  report["parameters"] = {{"kind", construction_kind_name(spec.kind)},
                          {"n", spec.n},
                          {"r", spec.r},
                          {"t", spec.t},
                          {"out", out_path}};
  Construction c = build_construction(spec);
  std::string ecg = save_graph(c.graph);
  Json partition = partition_json(c);
  std::string side = sidecar_path(out_path);
  write_file(out_path, ecg);
  write_file(side, serialize(partition));
  report["results"] = {{"files", Json::array({out_path, side})},
                       {"graph_digest", sha256_hex(ecg)},
                       {"partition", partition}};
  return finish(std::move(report), true);
}

// ---------------------------------------------------------------------------
// verify-balance

CommandOutcome cmd_verify_balance(const std::string& graph_text, long long max_bias_scaled,
                                  std::uint64_t node_budget) {
  Json report = base_report("verify-balance");
  report["input_digest"] = digest_of(graph_text);
  report["parameters"] = {{"max_bias_scaled", max_bias_scaled}, {"node_budget", node_budget}};
  ColoredGraph g = load_graph(graph_text);
  BiasSpectrum s = bias_spectrum(g, node_budget);
  BiasReport lo{{}, s.min_scaled, g.r()};
  BiasReport hi{{}, s.max_scaled, g.r()};
  bool pass = s.max_scaled <= max_bias_scaled;
  report["results"] = {{"n", g.n()},
                       {"r", g.r()},
                       {"cycles", s.count},
                       {"nodes", s.nodes},
                       {"min_scaled", s.min_scaled},
                       {"max_scaled", s.max_scaled},
                       {"min_bias", lo.bias_string()},
                       {"max_bias", hi.bias_string()},
                       {"min_cycle", s.min_cycle},
                       {"max_cycle", s.max_cycle},
                       {"pass", pass}};
  return finish(std::move(report), pass);
}

// ---------------------------------------------------------------------------
// analyze

namespace {

Json certificate_json(const StructureCertificate& cert) {
  Json j;
  j["mode"] = mode_name(cert.mode);
  j["k"] = cert.k;
  j["m"] = cert.m;
  Json parts = Json::array();
  Json classes = Json::array();
  Json slack = Json::array();
  for (std::size_t i = 0; i < cert.parts.size(); ++i) {
    parts.push_back(set_json(cert.parts[i]));
    classes.push_back(set_json(cert.classes[i]));
    slack.push_back(set_json(cert.slack[i]));
  }
  j["parts"] = std::move(parts);
  j["class_names"] = cert.class_names;
  j["classes"] = std::move(classes);
  j["slack"] = std::move(slack);
  j["symmetric_differences"] = cert.symmetric_differences;
  j["ideal_sizes"] = cert.ideal_sizes;
  j["realized_sizes"] = cert.realized_sizes;
  j["exceptional"] = set_json(cert.exceptional);
  j["wildcards"] = set_json(cert.wildcards);
  j["diagnostic_bounds"] = {{"symmetric_difference", cert.symmetric_difference_bounds},
                            {"neighborhood_matching", cert.neighborhood_matching_threshold},
                            {"path_edges", cert.path_edge_budget}};
  return j;
}

Json verdict_json(const CertificateVerdict& v) {
  Json j;
  j["s"] = v.s;
  j["pass"] = v.pass();
  Json conds = Json::array();
  for (const ConditionResult& c : v.conditions) {
    conds.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", edges_json(c.witness)}});
  }
  j["conditions"] = std::move(conds);
  return j;
}

}  // namespace

CommandOutcome cmd_analyze(const std::string& graph_text, int m, std::optional<int> s) {
  Json report = base_report("analyze");
  report["input_digest"] = digest_of(graph_text);
  report["parameters"] = {{"m", m}, {"s", s ? Json(*s) : Json(nullptr)}};
  if (m < 1) throw ParameterError("m must be positive");
  ColoredGraph g = load_graph(graph_text);
  StripResult strip = strip_bad_bowties(g);
  DichotomyReport dichotomy = global_dichotomy(strip.residual);

  Json types = Json::array();
  std::vector<std::string> per_vertex(static_cast<std::size_t>(g.n()), "removed");
  for (std::size_t i = 0; i < strip.to_parent.size(); ++i) {
    per_vertex[strip.to_parent[i]] = dichotomy.types[i].to_string();
  }
  std::vector<Vertex> nonconforming;
  for (Vertex v : dichotomy.nonconforming) nonconforming.push_back(strip.to_parent[v]);

  Json results;
  results["n"] = g.n();
  results["r"] = g.r();
  results["strip"] = {{"t", strip.t()},
                      {"removed", set_json(strip.removed)},
                      {"packing", packing_json(strip.packing)},
                      {"residual_clean", strip.residual_clean}};
  results["dichotomy"] = {
      {"mode", mode_name(dichotomy.mode)},
      {"k", dichotomy.k},
      {"vertex_types", per_vertex},
      {"nonconforming", nonconforming},
      {"has_bad_bowtie",
       dichotomy.has_bad_bowtie ? Json(*dichotomy.has_bad_bowtie) : Json(nullptr)}};

  if (dichotomy.mode == StructureMode::Inconclusive) {
    results["certificate"] = nullptr;
    results["verdict"] = nullptr;
    report["results"] = std::move(results);
    return finish(std::move(report), false);
  }
  StructureCertificate cert = recover_partition(g, strip.residual, strip.removed, m, dichotomy);
  long long bound = s ? *s : default_matching_bound(cert.mode, g.r(), m);
  if (bound > std::numeric_limits<int>::max()) throw ParameterError("s too large");
  CertificateVerdict verdict = check_certificate(g, cert, static_cast<int>(bound));
  results["certificate"] = certificate_json(cert);
  results["verdict"] = verdict_json(verdict);
  report["results"] = std::move(results);
  bool pass = verdict.pass();
  return finish(std::move(report), pass);
}

// ---------------------------------------------------------------------------
// search

namespace {

struct SampleOutcome {
  Json record;
  std::string ecg;
  std::optional<long long> max_scaled;
};

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

SampleOutcome run_sample(const SearchOptions& o, std::uint64_t index) {
  const std::uint64_t seed = derived_seed(o.seed, index);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(o.edge_probability);
  std::uniform_int_distribution<Color> color(1, o.r);

  const int n = o.n;
  std::vector<std::vector<Color>> adj(n, std::vector<Color>(n, 0));
  std::vector<int> deg(n, 0);
  auto add = [&](Vertex u, Vertex v, Color c) {
    adj[u][v] = adj[v][u] = c;
    ++deg[u];
    ++deg[v];
  };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) add(u, v, color(rng));
    }
  }
  std::size_t repaired = 0;
  for (Vertex v = 0; v < n; ++v) {
    while (deg[v] < o.min_degree) {
      std::vector<Vertex> free;
      for (Vertex u = 0; u < n; ++u) {
        if (u != v && adj[v][u] == 0) free.push_back(u);
      }
      std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
      add(v, free[pick(rng)], color(rng));
      ++repaired;
    }
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (adj[u][v]) edges.push_back({u, v, adj[u][v]});
    }
  }
  ColoredGraph g(n, o.r, std::move(edges));

  SampleOutcome out;
  out.ecg = save_graph(g);
  Json& rec = out.record;
  rec["index"] = index;
  rec["seed"] = seed;
  rec["edges"] = g.edge_count();
  rec["min_degree"] = min_degree(g);
  rec["repaired_edges"] = repaired;
  rec["graph_digest"] = sha256_hex(out.ecg);
  try {
    BiasSpectrum s = bias_spectrum(g, o.node_budget);
    rec["status"] = "ok";
    rec["cycles"] = s.count;
    rec["nodes"] = s.nodes;
    rec["min_scaled"] = s.min_scaled;
    rec["max_scaled"] = s.max_scaled;
    rec["max_cycle"] = s.max_cycle;
    out.max_scaled = s.max_scaled;
  } catch (const NotHamiltonian&) {
    rec["status"] = "not_hamiltonian";
  } catch (const BudgetExceeded&) {
    rec["status"] = "budget_exceeded";
  }
  return out;
}

}  // namespace

CommandOutcome cmd_search(const SearchOptions& o) {
  Json report = base_report("search");
  report["parameters"] = {{"n", o.n},
                          {"r", o.r},
                          {"min_degree", o.min_degree},
                          {"samples", o.samples},
                          {"seed", o.seed},
                          {"edge_probability", o.edge_probability},
                          {"node_budget", o.node_budget},
                          {"repair", "add uniformly random non-edges with uniformly random "
                                     "colors at each deficient vertex, in vertex order"}};
  if (o.n < 3 || o.n > 64) throw ParameterError("search needs 3 <= n <= 64");
  if (o.r < 1) throw ParameterError("search needs r >= 1");
  if (o.min_degree < 0 || o.min_degree > o.n - 1) {
    throw ParameterError("min degree must lie in 0..n-1");
  }
  if (!(o.edge_probability >= 0.0 && o.edge_probability <= 1.0)) {
    throw ParameterError("edge probability must lie in [0,1]");
  }

  std::vector<SampleOutcome> outcomes(o.samples);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < o.samples; i = next++) outcomes[i] = run_sample(o, i);
  };
  unsigned workers = std::max(1u, o.workers);
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(o.samples, 1)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json samples = Json::array();
  std::uint64_t ok = 0;
  std::uint64_t non_hamiltonian = 0;
  std::uint64_t skipped = 0;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const std::string status = outcomes[i].record["status"];
    if (status == "ok") ++ok;
    if (status == "not_hamiltonian") ++non_hamiltonian;
    if (status == "budget_exceeded") ++skipped;
    if (outcomes[i].max_scaled &&
        (!best || *outcomes[i].max_scaled < *outcomes[*best].max_scaled)) {
      best = i;
    }
    samples.push_back(outcomes[i].record);
  }
  Json extremal = nullptr;
  if (best) {
    extremal = {{"index", *best},
                {"max_scaled", *outcomes[*best].max_scaled},
                {"graph", outcomes[*best].ecg}};
    if (o.save_extremal) write_file(*o.save_extremal, outcomes[*best].ecg);
  }
  report["results"] = {{"summary",
                        {{"ok", ok}, {"not_hamiltonian", non_hamiltonian}, {"skipped", skipped}}},
                       {"samples", std::move(samples)},
                       {"extremal", std::move(extremal)}};
  return finish(std::move(report), true);
}

// ---------------------------------------------------------------------------
// amplify

CommandOutcome cmd_amplify(const std::string& graph_text, const std::string& bowtie_text,
                           Color k, const ExtensionOptions& extension) {
  Json report = base_report("amplify");
  Json digest = digest_of(graph_text);
  digest["bowties"] = sha256_hex(bowtie_text);
  report["input_digest"] = std::move(digest);
  report["parameters"] = {{"color", k}, {"seed", extension.seed}};
  ColoredGraph g = load_graph(graph_text);
  std::vector<Bowtie> bowties = parse_bowties(bowtie_text);
  SwapResult swap = amplifier_swap(g, bowties, k, extension);
  Json oriented = Json::array();
  for (const Bowtie& b : swap.oriented) oriented.push_back(bowtie_json(b));
  report["results"] = {{"oriented_bowties", std::move(oriented)},
                       {"f_values", swap.f_values},
                       {"sum_f", swap.sum_f},
                       {"h1", cycle_json(swap.h1)},
                       {"h2", cycle_json(swap.h2)},
                       {"delta", swap.delta},
                       {"identity_ok", swap.delta == swap.sum_f}};
  return finish(std::move(report), swap.delta == swap.sum_f);
}

// ---------------------------------------------------------------------------
// bowties

CommandOutcome cmd_bowties(const std::string& graph_text, const BowtieListOptions& options) {
  Json report = base_report("bowties");
  report["input_digest"] = digest_of(graph_text);
  report["parameters"] = {{"only_bad", options.only_bad},
                          {"cap", options.cap ? Json(*options.cap) : Json(nullptr)},
                          {"packing", options.packing}};
  ColoredGraph g = load_graph(graph_text);
  Json list = Json::array();
  enumerate_bowties(
      g,
      [&](const Bowtie& b) {
        std::vector<int> f;
        for (Color k = 1; k <= g.r(); ++k) f.push_back(color_count_f(g, b, k));
        auto bad = bad_color(g, b);
        list.push_back(
            {{"vertices", bowtie_json(b)}, {"f", f}, {"bad_color", bad ? Json(*bad) : Json(nullptr)}});
        return true;
      },
      {options.only_bad, options.cap});
  Json results;
  results["count"] = list.size();
  results["bowties"] = std::move(list);
  if (options.packing) {
    StripResult strip = strip_bad_bowties(g);
    Json p = packing_json(strip.packing);
    p["residual_clean"] = strip.residual_clean;
    results["packing"] = std::move(p);
  }
  report["results"] = std::move(results);
  return finish(std::move(report), true);
}

}  // namespace hamcolor::cli
