#include "toricmg/report.hpp"

#include <sstream>

#include "toricmg/errors.hpp"

namespace toricmg {

namespace {

const char* kind_name(LeafKind k) {
  switch (k) {
    case LeafKind::Theta: return "theta";
    case LeafKind::Cycle: return "cycle";
    case LeafKind::Edge: return "edge";
  }
  return "edge";
}

LeafKind kind_from(const std::string& s) {
  if (s == "theta") return LeafKind::Theta;
  if (s == "cycle") return LeafKind::Cycle;
  if (s == "edge") return LeafKind::Edge;
  throw Error(ErrorCode::BadParameters, "unknown leaf kind " + s);
}

Json node_to_json(const DecompositionNode& node) {
  Json j;
  switch (node.kind) {
    case DecompositionNode::Kind::Leaf:
      j["type"] = "leaf";
      j["kind"] = kind_name(node.leaf.kind);
      j["r"] = node.leaf.r;
      j["k"] = node.leaf.k;
      j["vertices"] = node.leaf.vertices;
      j["edges"] = node.leaf.edges;
      return j;
    case DecompositionNode::Kind::EdgeSum:
      j["type"] = "edgeSum";
      j["seamEdge"] = node.seam_edge;
      break;
    case DecompositionNode::Kind::VertexSum:
      j["type"] = "blocks";
      j["cutVertex"] = node.cut_vertex;
      break;
  }
  j["children"] = Json::array();
  for (const auto& c : node.children) j["children"].push_back(node_to_json(c));
  return j;
}

DecompositionNode node_from_json(const Json& j) {
  DecompositionNode node;
  const std::string type = j.at("type").get<std::string>();
  if (type == "leaf") {
    node.leaf.kind = kind_from(j.at("kind").get<std::string>());
    node.leaf.r = j.at("r").get<int>();
    node.leaf.k = j.at("k").get<int>();
    node.leaf.vertices = j.at("vertices").get<std::vector<int>>();
    node.leaf.edges = j.at("edges").get<std::vector<int>>();
    return node;
  }
  if (type == "edgeSum") {
    node.kind = DecompositionNode::Kind::EdgeSum;
    node.seam_edge = j.at("seamEdge").get<int>();
  } else if (type == "blocks") {
    node.kind = DecompositionNode::Kind::VertexSum;
    node.cut_vertex = j.at("cutVertex").get<int>();
  } else {
    throw Error(ErrorCode::BadParameters, "unknown node type " + type);
  }
  for (const auto& c : j.at("children")) node.children.push_back(node_from_json(c));
  return node;
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> get_opt(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

enum class FieldType { String, Int, Bool, IntArray, Object, StringArray, TimingArray };

struct Field {
  const char* name;
  FieldType type;
  bool nullable;
};

// Report schema, version 1. Order is the serialization order.
constexpr Field kReportFields[] = {
    {"graphId", FieldType::String, false},
    {"vertices", FieldType::Int, false},
    {"edges", FieldType::Int, false},
    {"bipartite", FieldType::Bool, false},
    {"mu", FieldType::Int, true},
    {"gbSizeMin", FieldType::Int, true},
    {"gbSizeMax", FieldType::Int, true},
    {"reducedGbCount", FieldType::Int, true},
    {"universalGbSize", FieldType::Int, true},
    {"universalMarkovSize", FieldType::Int, true},
    {"isMG", FieldType::Bool, true},
    {"isUMG", FieldType::Bool, true},
    {"isRobust", FieldType::Bool, true},
    {"isGenRobust", FieldType::Bool, true},
    {"mgWitnessWeight", FieldType::IntArray, true},
    {"chordlessCycleLengths", FieldType::IntArray, true},
    {"chordlessGraph", FieldType::Bool, true},
    {"thetaDecomposition", FieldType::Object, true},
    {"oddCycleDecomposition", FieldType::Object, true},
    {"ringGraph", FieldType::Bool, true},
    {"completeIntersection", FieldType::Bool, true},
    {"budgetMarkers", FieldType::StringArray, false},
    {"consistencyViolations", FieldType::StringArray, false},
};

bool has_type(const Json& v, FieldType t) {
  switch (t) {
    case FieldType::String: return v.is_string();
    case FieldType::Int: return v.is_number_integer();
    case FieldType::Bool: return v.is_boolean();
    case FieldType::Object: return v.is_object();
    case FieldType::IntArray:
      if (!v.is_array()) return false;
      for (const auto& x : v) {
        if (!x.is_number_integer()) return false;
      }
      return true;
    case FieldType::StringArray:
      if (!v.is_array()) return false;
      for (const auto& x : v) {
        if (!x.is_string()) return false;
      }
      return true;
    case FieldType::TimingArray:
      if (!v.is_array()) return false;
      for (const auto& x : v) {
        if (!x.is_object() || !x.contains("stage") || !x.contains("seconds") || !x["stage"].is_string() ||
            !x["seconds"].is_number()) {
          return false;
        }
      }
      return true;
  }
  return false;
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "unknown"; }

template <class T>
std::string or_unknown(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "unknown";
}

void format_node(std::ostringstream& out, const DecompositionNode& node, int depth) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  switch (node.kind) {
    case DecompositionNode::Kind::Leaf: {
      const auto& l = node.leaf;
      out << pad << kind_name(l.kind);
      if (l.kind == LeafKind::Theta) out << " r=" << l.r << " k=" << l.k << " base=" << l.vertices[0] << "," << l.vertices[1];
      if (l.kind == LeafKind::Cycle) out << " length=" << l.k;
      out << " vertices=[";
      for (std::size_t i = 0; i < l.vertices.size(); ++i) out << (i ? " " : "") << l.vertices[i];
      out << "] edges=[";
      for (std::size_t i = 0; i < l.edges.size(); ++i) out << (i ? " " : "") << "x" << l.edges[i] + 1;
      out << "]\n";
      return;
    }
    case DecompositionNode::Kind::EdgeSum:
      out << pad << "edge sum along x" << node.seam_edge + 1 << "\n";
      break;
    case DecompositionNode::Kind::VertexSum:
      out << pad << "blocks\n";
      break;
  }
  for (const auto& c : node.children) format_node(out, c, depth + 1);
}

}  // namespace

Json decomposition_to_json(const Decomposition& d) {
  Json j;
  j["k"] = d.k;
  j["root"] = node_to_json(d.root);
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  return Decomposition{j.at("k").get<int>(), node_from_json(j.at("root"))};
}

Json report_to_json(const ClassificationReport& r, bool with_timings) {
  Json j;
  j["graphId"] = r.graph_id;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["bipartite"] = r.bipartite;
  j["mu"] = opt(r.mu);
  j["gbSizeMin"] = opt(r.gb_size_min);
  j["gbSizeMax"] = opt(r.gb_size_max);
  j["reducedGbCount"] = opt(r.reduced_gb_count);
  j["universalGbSize"] = opt(r.universal_gb_size);
  j["universalMarkovSize"] = opt(r.universal_markov_size);
  j["isMG"] = opt(r.is_mg);
  j["isUMG"] = opt(r.is_umg);
  j["isRobust"] = opt(r.is_robust);
  j["isGenRobust"] = opt(r.is_gen_robust);
  j["mgWitnessWeight"] = opt(r.mg_witness_weight);
  j["chordlessCycleLengths"] = opt(r.chordless_cycle_lengths);
  j["chordlessGraph"] = opt(r.chordless_graph);
  j["thetaDecomposition"] = r.theta_decomposition ? decomposition_to_json(*r.theta_decomposition) : Json(nullptr);
  j["oddCycleDecomposition"] =
      r.odd_cycle_decomposition ? decomposition_to_json(*r.odd_cycle_decomposition) : Json(nullptr);
  j["ringGraph"] = opt(r.ring_graph);
  j["completeIntersection"] = opt(r.complete_intersection);
  j["budgetMarkers"] = r.budget_markers;
  j["consistencyViolations"] = r.consistency_violations;
  if (with_timings) {
    j["timings"] = Json::array();
    for (const auto& t : r.timings) j["timings"].push_back(Json{{"stage", t.stage}, {"seconds", t.seconds}});
  }
  return j;
}

ClassificationReport report_from_json(const Json& j) {
  if (auto errors = validate_report(j); !errors.empty()) throw Error(ErrorCode::BadParameters, errors.front());
  ClassificationReport r;
  r.graph_id = j.at("graphId").get<std::string>();
  r.vertices = j.at("vertices").get<int>();
  r.edges = j.at("edges").get<int>();
  r.bipartite = j.at("bipartite").get<bool>();
  r.mu = get_opt<std::size_t>(j, "mu");
  r.gb_size_min = get_opt<std::size_t>(j, "gbSizeMin");
  r.gb_size_max = get_opt<std::size_t>(j, "gbSizeMax");
  r.reduced_gb_count = get_opt<std::size_t>(j, "reducedGbCount");
  r.universal_gb_size = get_opt<std::size_t>(j, "universalGbSize");
  r.universal_markov_size = get_opt<std::size_t>(j, "universalMarkovSize");
  r.is_mg = get_opt<bool>(j, "isMG");
  r.is_umg = get_opt<bool>(j, "isUMG");
  r.is_robust = get_opt<bool>(j, "isRobust");
  r.is_gen_robust = get_opt<bool>(j, "isGenRobust");
  r.mg_witness_weight = get_opt<IntVector>(j, "mgWitnessWeight");
  r.chordless_cycle_lengths = get_opt<std::vector<std::size_t>>(j, "chordlessCycleLengths");
  r.chordless_graph = get_opt<bool>(j, "chordlessGraph");
  if (!j.at("thetaDecomposition").is_null()) r.theta_decomposition = decomposition_from_json(j["thetaDecomposition"]);
  if (!j.at("oddCycleDecomposition").is_null()) {
    r.odd_cycle_decomposition = decomposition_from_json(j["oddCycleDecomposition"]);
  }
  r.ring_graph = get_opt<bool>(j, "ringGraph");
  r.complete_intersection = get_opt<bool>(j, "completeIntersection");
  r.budget_markers = j.at("budgetMarkers").get<std::vector<std::string>>();
  r.consistency_violations = j.at("consistencyViolations").get<std::vector<std::string>>();
  if (j.contains("timings")) {
    for (const auto& t : j["timings"]) r.timings.push_back({t.at("stage").get<std::string>(), t.at("seconds").get<double>()});
  }
  return r;
}

Json budget_to_json(const Budget& b) {
  Json j;
  j["maxCones"] = b.max_cones;
  j["maxCycles"] = b.max_cycles;
  j["maxFiber"] = b.max_fiber;
  return j;
}

Json make_document(const std::vector<ClassificationReport>& reports, const Budget& budget, bool with_timings) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["toolVersion"] = kToolVersion;
  j["budgets"] = budget_to_json(budget);
  j["reports"] = Json::array();
  for (const auto& r : reports) j["reports"].push_back(report_to_json(r, with_timings));
  return j;
}

std::vector<std::string> validate_report(const Json& j) {
  std::vector<std::string> errors;
  if (!j.is_object()) return {"report is not an object"};
  std::size_t expected = 0;
  auto it = j.begin();
  for (const Field& f : kReportFields) {
    ++expected;
    if (!j.contains(f.name)) {
      errors.push_back(std::string("missing field ") + f.name);
      continue;
    }
    const Json& v = j[f.name];
    if (!(v.is_null() && f.nullable) && !has_type(v, f.type)) errors.push_back(std::string("bad type for ") + f.name);
    if (it != j.end() && it.key() != f.name) errors.push_back(std::string("field out of order: ") + f.name);
    if (it != j.end()) ++it;
  }
  if (j.contains("timings")) {
    ++expected;
    if (!has_type(j["timings"], FieldType::TimingArray)) errors.emplace_back("bad type for timings");
  }
  if (j.size() != expected) errors.emplace_back("unexpected extra fields");
  for (const char* key : {"thetaDecomposition", "oddCycleDecomposition"}) {
    if (j.contains(key) && j[key].is_object()) {
      try {
        decomposition_from_json(j[key]);
      } catch (const std::exception& e) {
        errors.push_back(std::string("malformed ") + key + ": " + e.what());
      }
    }
  }
  return errors;
}

std::vector<std::string> validate_document(const Json& j) {
  std::vector<std::string> errors;
  if (!j.is_object()) return {"document is not an object"};
  if (!j.contains("schemaVersion") || j["schemaVersion"] != kSchemaVersion) errors.emplace_back("bad schemaVersion");
  if (!j.contains("toolVersion") || !j["toolVersion"].is_string()) errors.emplace_back("bad toolVersion");
  if (!j.contains("budgets") || !j["budgets"].is_object()) {
    errors.emplace_back("missing budgets");
  } else {
    for (const char* key : {"maxCones", "maxCycles", "maxFiber"}) {
      if (!j["budgets"].contains(key) || !j["budgets"][key].is_number_integer()) {
        errors.push_back(std::string("bad budget ") + key);
      }
    }
  }
  if (!j.contains("reports") || !j["reports"].is_array()) {
    errors.emplace_back("missing reports");
    return errors;
  }
  for (std::size_t i = 0; i < j["reports"].size(); ++i) {
    for (const auto& e : validate_report(j["reports"][i])) errors.push_back("report " + std::to_string(i) + ": " + e);
  }
  return errors;
}

std::string format_decomposition_text(const Decomposition& d) {
  std::ostringstream out;
  if (d.k > 0) out << "k=" << d.k;
  out << "\n";
  format_node(out, d.root, 1);
  return out.str();
}

std::string format_report_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "graph " << (r.graph_id.empty() ? "(unnamed)" : r.graph_id) << ": " << r.vertices << " vertices, " << r.edges
      << " edges, " << (r.bipartite ? "bipartite" : "not bipartite") << "\n";
  out << "  minimal generators: " << or_unknown(r.mu) << "\n";
  out << "  reduced GB sizes: " << or_unknown(r.gb_size_min) << ".." << or_unknown(r.gb_size_max) << " over "
      << or_unknown(r.reduced_gb_count) << " bases\n";
  out << "  universal GB: " << or_unknown(r.universal_gb_size) << ", universal Markov: " << or_unknown(r.universal_markov_size)
      << "\n";
  out << "  MG " << yes_no(r.is_mg) << ", UMG " << yes_no(r.is_umg) << ", robust " << yes_no(r.is_robust)
      << ", generalized robust " << yes_no(r.is_gen_robust) << "\n";
  if (r.mg_witness_weight) {
    out << "  MG witness weight:";
    for (auto w : *r.mg_witness_weight) out << ' ' << w;
    out << "\n";
  }
  if (r.chordless_cycle_lengths) {
    out << "  chordless cycle lengths:";
    for (auto l : *r.chordless_cycle_lengths) out << ' ' << l;
    out << (r.chordless_cycle_lengths->empty() ? " none" : "") << "\n";
  }
  out << "  chordless graph " << yes_no(r.chordless_graph) << ", ring graph " << yes_no(r.ring_graph);
  if (r.bipartite) out << ", complete intersection " << yes_no(r.complete_intersection);
  out << "\n";
  if (r.theta_decomposition) out << "  theta decomposition " << format_decomposition_text(*r.theta_decomposition);
  if (r.odd_cycle_decomposition) out << "  odd-cycle decomposition " << format_decomposition_text(*r.odd_cycle_decomposition);
  for (const auto& m : r.budget_markers) out << "  budget exceeded: " << m << "\n";
  for (const auto& v : r.consistency_violations) out << "  INCONSISTENT: " << v << "\n";
  for (const auto& t : r.timings) out << "  time " << t.stage << ": " << t.seconds << " s\n";
  return out.str();
}

}  // namespace toricmg
