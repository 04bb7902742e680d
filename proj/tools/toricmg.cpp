#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "CLI11.hpp"
#include "toricmg/classifier.hpp"
#include "toricmg/errors.hpp"
#include "toricmg/io.hpp"
#include "toricmg/report.hpp"

using namespace toricmg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;

struct InputOptions {
  std::string source;
  std::string format;  // edgelist | graph6 | "" (detect)
  std::string line_range;
};

struct CommonOptions {
  InputOptions input;
  Budget budget;
  bool json = false;
  bool timings = false;
};

struct NamedGraph {
  std::string id;
  Graph graph;
};

std::string read_source(const std::string& source, bool& inline_literal) {
  inline_literal = false;
  if (source == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (std::filesystem::exists(source)) {
    std::ifstream in(source, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  inline_literal = true;
  std::string text = source;
  for (char& c : text) {
    if (c == ';' || c == ',') c = '\n';
  }
  return text;
}

std::string detect_format(const InputOptions& in, bool inline_literal) {
  if (!in.format.empty()) return in.format;
  if (inline_literal) return "edgelist";
  auto ext = std::filesystem::path(in.source).extension().string();
  return ext == ".g6" || ext == ".graph6" ? "graph6" : "edgelist";
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& range) {
  std::size_t lo = 1, hi = SIZE_MAX;
  if (range.empty()) return {lo, hi};
  auto colon = range.find(':');
  std::string a = range.substr(0, colon);
  std::string b = colon == std::string::npos ? a : range.substr(colon + 1);
  try {
    if (!a.empty()) lo = std::stoul(a);
    if (!b.empty()) hi = std::stoul(b);
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadParameters, "bad --line-range " + range);
  }
  if (lo == 0 || hi < lo) throw Error(ErrorCode::BadParameters, "bad --line-range " + range);
  return {lo, hi};
}

std::vector<NamedGraph> load_graphs(const InputOptions& in) {
  bool inline_literal = false;
  std::string text = read_source(in.source, inline_literal);
  const std::string format = detect_format(in, inline_literal);
  std::vector<NamedGraph> out;
  if (format == "edgelist") {
    Graph g = parse_edge_list(text);
    if (g.vertex_count() == 0) return out;
    std::string id = g.vertex_count() <= 62 ? to_graph6(g) : std::filesystem::path(in.source).stem().string();
    out.push_back({std::move(id), std::move(g)});
    return out;
  }
  if (format != "graph6") throw Error(ErrorCode::BadParameters, "unknown format " + format);
  auto [lo, hi] = parse_range(in.line_range);
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line_no < lo || line_no > hi) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = parse_graph6_line(line);
      out.push_back({line, std::move(g)});
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

void add_common(CLI::App* cmd, CommonOptions& o, bool needs_input = true) {
  if (needs_input) {
    cmd->add_option("input", o.input.source, "file path, '-' for stdin, or an inline edge list like \"0 1;1 2\"")
        ->required();
  } else {
    cmd->add_option("input", o.input.source, "graph6 file or '-' for stdin");
  }
  cmd->add_option("--format", o.input.format, "input format")->check(CLI::IsMember({"edgelist", "graph6"}));
  cmd->add_option("--line-range", o.input.line_range, "graph6 lines to process, 1-based inclusive, e.g. 10:20");
  cmd->add_flag("--json", o.json, "machine-readable output");
  cmd->add_option("--max-cones", o.budget.max_cones, "reduced bases visited per fan traversal");
  cmd->add_option("--max-cycles", o.budget.max_cycles, "cycles enumerated per graph");
  cmd->add_option("--max-fiber", o.budget.max_fiber, "monomials per fiber");
}

int cmd_analyze(const CommonOptions& o) {
  auto graphs = load_graphs(o.input);
  std::vector<ClassificationReport> reports;
  bool budget_hit = false;
  for (const auto& ng : graphs) {
    reports.push_back(classify(ng.graph, o.budget, ng.id));
    if (!o.timings) reports.back().timings.clear();
    budget_hit = budget_hit || reports.back().budget_exceeded();
  }
  if (o.json) {
    std::cout << make_document(reports, o.budget, o.timings).dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << format_report_text(r);
  }
  return budget_hit ? kExitBudget : kExitOk;
}

struct CensusOptions {
  int generate = 0;
  unsigned workers = 1;
  bool only_bipartite = false;
};

std::string flag_key(const std::optional<bool>& b) { return b ? (*b ? "1" : "0") : "?"; }

int cmd_census(const CommonOptions& o, const CensusOptions& c) {
  std::vector<NamedGraph> graphs;
  if (c.generate > 0) {
    for (int n = 1; n <= c.generate; ++n) {
      for (auto& g : connected_bipartite_graphs(n)) graphs.push_back({to_graph6(g), std::move(g)});
    }
    auto [lo, hi] = parse_range(o.input.line_range);
    std::vector<NamedGraph> selected;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (i + 1 >= lo && i + 1 <= hi) selected.push_back(std::move(graphs[i]));
    }
    graphs = std::move(selected);
  } else {
    InputOptions in = o.input;
    if (in.source.empty()) in.source = "-";
    if (in.format.empty()) in.format = "graph6";
    graphs = load_graphs(in);
  }
  if (c.only_bipartite) {
    std::erase_if(graphs, [](const NamedGraph& ng) { return !is_bipartite(ng.graph); });
  }

  std::vector<std::optional<ClassificationReport>> results(graphs.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      ClassificationReport r;
      try {
        r = classify(graphs[i].graph, o.budget, graphs[i].id);
      } catch (const Error& e) {
        r.graph_id = graphs[i].id;
        r.budget_markers.push_back("error: " + std::string(to_string(e.code())) + ": " + e.what());
      }
      if (!o.timings) r.timings.clear();
      std::lock_guard lock(mu);
      results[i] = std::move(r);
      ready.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::max(1u, c.workers); ++w) pool.emplace_back(worker);

  std::map<std::string, std::size_t> combos;
  std::vector<std::string> non_mg;
  std::size_t budget_hits = 0, inconsistent = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    ClassificationReport r;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return results[i].has_value(); });
      r = std::move(*results[i]);
      results[i].reset();
    }
    if (o.json) {
      std::cout << make_document({r}, o.budget, o.timings).dump() << "\n";
    } else {
      std::cout << r.graph_id << " n=" << r.vertices << " m=" << r.edges << " mu=" << (r.mu ? std::to_string(*r.mu) : "?")
                << " MG=" << flag_key(r.is_mg) << " UMG=" << flag_key(r.is_umg) << " robust=" << flag_key(r.is_robust)
                << " genRobust=" << flag_key(r.is_gen_robust) << (r.budget_exceeded() ? " budget" : "") << "\n";
    }
    std::cout.flush();
    combos["MG=" + flag_key(r.is_mg) + " UMG=" + flag_key(r.is_umg) + " robust=" + flag_key(r.is_robust) +
           " genRobust=" + flag_key(r.is_gen_robust)]++;
    if (r.is_mg && !*r.is_mg) non_mg.push_back(r.graph_id);
    budget_hits += r.budget_exceeded() ? 1 : 0;
    inconsistent += r.consistency_violations.empty() ? 0 : 1;
  }
  for (auto& t : pool) t.join();

  if (o.json) {
    Json s;
    s["graphs"] = graphs.size();
    s["budgetExceeded"] = budget_hits;
    s["inconsistent"] = inconsistent;
    s["nonMG"] = non_mg;
    s["combinations"] = Json::object();
    for (const auto& [k, v] : combos) s["combinations"][k] = v;
    std::cout << Json{{"summary", s}}.dump() << "\n";
  } else {
    std::cout << "summary: " << graphs.size() << " graphs, " << non_mg.size() << " not MG, " << budget_hits
              << " over budget, " << inconsistent << " inconsistent\n";
    for (const auto& [k, v] : combos) std::cout << "  " << k << ": " << v << "\n";
    for (const auto& id : non_mg) std::cout << "  not MG: " << id << "\n";
  }
  return budget_hits > 0 ? kExitBudget : kExitOk;
}

Json binomial_list(const std::vector<Binomial>& bs) {
  Json j = Json::array();
  for (const auto& b : bs) j.push_back(format_binomial(normalize_sign(b)));
  return j;
}

void print_list(const std::string& title, const std::vector<Binomial>& bs) {
  std::cout << title << " (" << bs.size() << "):\n";
  for (const auto& b : bs) std::cout << "  " << format_binomial(normalize_sign(b)) << "\n";
}

NamedGraph single_graph(const InputOptions& in) {
  auto graphs = load_graphs(in);
  if (graphs.size() != 1) throw Error(ErrorCode::BadParameters, "expected exactly one graph, got " + std::to_string(graphs.size()));
  return std::move(graphs.front());
}

int cmd_bases(const CommonOptions& o, bool cycles) {
  NamedGraph ng = single_graph(o.input);
  GraphIdeal gi(ng.graph);
  Json out;
  out["graphId"] = ng.id;
  std::vector<Binomial> markov;
  if (!gi.generators().empty()) markov = minimal_generators(gi.groebner_basis(), gi.grading(), o.budget.max_fiber).markov;
  auto universal = gi.generators().empty() ? std::vector<Binomial>{} : universal_gb(gi.generators(), o.budget.max_cones);
  out["markovBasis"] = binomial_list(markov);
  out["universalGroebnerBasis"] = binomial_list(universal);
  std::vector<Binomial> cycle_binomials;
  if (cycles) {
    cycle_binomials = universal_gb_bipartite(ng.graph, o.budget.max_cycles);
    out["cycleBinomials"] = binomial_list(cycle_binomials);
  }
  if (o.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    print_list("markov basis", markov);
    print_list("universal groebner basis", universal);
    if (cycles) print_list("cycle binomials", cycle_binomials);
  }
  return kExitOk;
}

int cmd_fan(const CommonOptions& o, std::size_t samples, std::uint64_t seed, bool seed_given) {
  NamedGraph ng = single_graph(o.input);
  GraphIdeal gi(ng.graph);
  FanOptions options;
  options.max_cones = o.budget.max_cones;
  options.throw_on_budget = false;
  FanResult fan = gi.generators().empty() ? enumerate_reduced_gbs(MarkedReducedGB(), options)
                                          : enumerate_reduced_gbs(gi.groebner_basis(), options);
  Json out;
  out["graphId"] = ng.id;
  out["complete"] = fan.complete;
  out["reducedBases"] = Json::array();
  for (const auto& gb : fan.gbs) {
    Json b;
    b["size"] = gb.size();
    b["elements"] = binomial_list(gb.elements());
    b["weight"] = gb.empty() ? IntVector(gi.variables(), 1) : interior_weight(groebner_cone(gb));
    out["reducedBases"].push_back(std::move(b));
  }
  std::size_t escapes = 0;
  if (samples > 0) {
    if (!seed_given) throw Error(ErrorCode::BadParameters, "--sample needs an explicit --seed");
    std::unordered_set<MarkedReducedGB, GBHash> known(fan.gbs.begin(), fan.gbs.end());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(1, 1000);
    for (std::size_t s = 0; s < samples && !gi.generators().empty(); ++s) {
      std::vector<std::int64_t> w(gi.variables());
      for (auto& x : w) x = dist(rng);
      auto gb = buchberger(gi.generators(), MonomialOrder::weighted({w}, MonomialOrder::degrevlex(gi.variables())));
      if (!known.count(gb)) ++escapes;
    }
    out["sampledWeights"] = samples;
    out["escapes"] = escapes;
  }
  if (o.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << fan.gbs.size() << " reduced groebner bases" << (fan.complete ? "" : " (incomplete)") << "\n";
    for (std::size_t i = 0; i < fan.gbs.size(); ++i) {
      const auto& b = out["reducedBases"][i];
      std::cout << "basis " << i + 1 << " size " << fan.gbs[i].size() << " weight " << b["weight"].dump() << "\n";
      for (const auto& e : fan.gbs[i].elements()) std::cout << "  " << format_binomial(e) << "\n";
    }
    if (samples > 0) std::cout << samples << " sampled weights, " << escapes << " outside the enumerated fan\n";
  }
  if (fan.truncated) {
    std::cerr << "budget exceeded: " << to_string(ErrorCode::FanBudgetExceeded) << " cap=" << o.budget.max_cones << "\n";
    return kExitBudget;
  }
  return kExitOk;
}

int cmd_decompose(const CommonOptions& o) {
  NamedGraph ng = single_graph(o.input);
  auto theta = theta_decompose(ng.graph, o.budget.max_cycles);
  auto odd = odd_cycle_decompose(ng.graph, o.budget.max_cycles);
  auto ring = ring_decompose(ng.graph);
  if (o.json) {
    Json out;
    out["graphId"] = ng.id;
    out["thetaDecomposition"] = theta ? decomposition_to_json(*theta) : Json(nullptr);
    out["oddCycleDecomposition"] = odd ? decomposition_to_json(*odd) : Json(nullptr);
    out["ringDecomposition"] = ring ? decomposition_to_json(*ring) : Json(nullptr);
    out["ringGraph"] = ring.has_value();
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "theta decomposition: " << (theta ? format_decomposition_text(*theta) : "none\n");
  std::cout << "odd-cycle decomposition: " << (odd ? format_decomposition_text(*odd) : "none\n");
  std::cout << "ring graph: " << (ring ? "yes " + format_decomposition_text(*ring) : "no\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal generators and Groebner bases of toric ideals of graphs"};
  app.require_subcommand(1);

  CommonOptions analyze_opts, census_opts, bases_opts, fan_opts, decompose_opts;
  CensusOptions census;
  bool cycles = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand("analyze", "classify each input graph");
  add_common(analyze, analyze_opts);
  analyze->add_flag("--timings", analyze_opts.timings, "include per-stage wall-clock times");

  auto* census_cmd = app.add_subcommand("census", "classify a graph6 stream, one report per line, then a summary");
  add_common(census_cmd, census_opts, false);
  census_cmd->add_option("--generate", census.generate, "instead of reading input, generate all connected bipartite graphs on up to N vertices");
  census_cmd->add_option("--workers", census.workers, "worker threads")->check(CLI::Range(1u, 256u));
  census_cmd->add_flag("--only-bipartite", census.only_bipartite, "skip non-bipartite graphs");
  census_cmd->add_flag("--timings", census_opts.timings, "include per-stage wall-clock times");

  auto* bases = app.add_subcommand("bases", "Markov basis and universal Groebner basis");
  add_common(bases, bases_opts);
  bases->add_flag("--cycles", cycles, "also list cycle binomials (bipartite graphs only)");

  auto* fan = app.add_subcommand("fan", "all reduced Groebner bases");
  add_common(fan, fan_opts);
  fan->add_option("--sample", samples, "check this many random weight orders against the enumerated fan");
  auto* seed_opt = fan->add_option("--seed", seed, "seed for --sample");

  auto* decompose = app.add_subcommand("decompose", "theta, odd-cycle and ring decompositions");
  add_common(decompose, decompose_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_opts);
    if (census_cmd->parsed()) return cmd_census(census_opts, census);
    if (bases->parsed()) return cmd_bases(bases_opts, cycles);
    if (fan->parsed()) return cmd_fan(fan_opts, samples, seed, seed_opt->count() > 0);
    if (decompose->parsed()) return cmd_decompose(decompose_opts);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << to_string(e.code()) << " cap=" << e.cap() << ": " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
