#include "fgc/io.hh"

#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "fgc/errors.hh"

namespace fgc {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw ParseError("invalid document: " + what, 0); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) schema_error(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing \"") + key + "\"");
  return *it;
}

long long integer(const json& j, const std::string& what) {
  if (!j.is_number_integer()) schema_error(what + " must be an integer");
  return j.get<long long>();
}

NodeId node_id(const json& j) {
  const long long v = integer(j, "edge endpoint");
  if (v < 0) schema_error("negative node ID " + std::to_string(v));
  return static_cast<NodeId>(v);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_record = [&](std::istringstream& fields) {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      fields.clear();
      fields.str(line);
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("edge list line " + std::to_string(line_no) + ": " + what, line_no);
  };
  auto expect_end = [&](std::istringstream& fields) {
    std::string rest;
    if (fields >> rest) throw fail("unexpected trailing token '" + rest + "'");
  };

  std::istringstream fields;
  if (!next_record(fields))
    throw ParseError("edge list line " + std::to_string(line_no + 1) + ": missing header 'n m'", line_no + 1);
  long long n = -1, m = -1;
  if (!(fields >> n >> m) || n < 0 || m < 0) throw fail("expected header 'n m' with non-negative integers");
  expect_end(fields);

  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_record(fields))
      throw ParseError("edge list line " + std::to_string(line_no + 1) + ": expected " + std::to_string(m) +
                           " edges, found " + std::to_string(i),
                       line_no + 1);
    long long u = -1, v = -1;
    if (!(fields >> u >> v)) throw fail("expected 'u v'");
    expect_end(fields);
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail("endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) throw fail("self-loop on node " + std::to_string(u));
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  if (next_record(fields)) throw fail("more edges than the header declares");
  return Graph(static_cast<std::size_t>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON: ") + e.what(), e.byte);
  }
}

json parse_json(std::istream& in) {
  return parse_json(std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()));
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.node_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  const long long n = integer(field(j, "n"), "\"n\"");
  if (n < 0) schema_error("\"n\" must be non-negative");
  const json& edges = field(j, "edges");
  if (!edges.is_array()) schema_error("\"edges\" must be an array");
  std::vector<Edge> parsed;
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2) schema_error("each edge must be a pair [u, v]");
    parsed.push_back({node_id(e[0]), node_id(e[1])});
  }
  return Graph(static_cast<std::size_t>(n), parsed);
}

MatchMode mode_from_string(const std::string& text) {
  if (text == "motif") return MatchMode::Motif;
  if (text == "graphlet") return MatchMode::Graphlet;
  throw InvalidArgument("mode must be \"motif\" or \"graphlet\", got \"" + text + "\"");
}

json to_json(const Pattern& p) {
  json j = {{"mode", to_string(p.mode)}, {"graph", to_json(p.graph)}};
  if (p.name) j["name"] = *p.name;
  return j;
}

Pattern pattern_from_json(const json& j) {
  Pattern p;
  const json& mode = field(j, "mode");
  if (!mode.is_string()) schema_error("\"mode\" must be a string");
  p.mode = mode_from_string(mode.get<std::string>());
  p.graph = graph_from_json(field(j, "graph"));
  if (auto it = j.find("name"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) schema_error("\"name\" must be a string");
    p.name = it->get<std::string>();
  }
  return p;
}

json to_json(const FgcInstance& instance) {
  json family = json::array();
  for (const Pattern& p : instance.family) family.push_back(to_json(p));
  return {{"graph", to_json(instance.g)}, {"target", to_json(instance.h)}, {"family", std::move(family)}};
}

FgcInstance fgc_instance_from_json(const json& j) {
  FgcInstance instance;
  instance.g = graph_from_json(field(j, "graph"));
  instance.h = graph_from_json(field(j, "target"));
  const json& family = field(j, "family");
  if (!family.is_array()) schema_error("\"family\" must be an array");
  for (const json& p : family) instance.family.push_back(pattern_from_json(p));
  return instance;
}

json to_json(const Xc3Instance& x) {
  json sets = json::array();
  for (const Triple& s : x.sets) sets.push_back({s[0], s[1], s[2]});
  return {{"k", x.k}, {"sets", std::move(sets)}};
}

Xc3Instance xc3_from_json(const json& j) {
  Xc3Instance x;
  x.k = static_cast<int>(integer(field(j, "k"), "\"k\""));
  const json& sets = field(j, "sets");
  if (!sets.is_array()) schema_error("\"sets\" must be an array");
  for (const json& s : sets) {
    if (!s.is_array() || s.size() != 3) schema_error("each set must list exactly 3 elements");
    x.sets.push_back({static_cast<int>(integer(s[0], "set element")), static_cast<int>(integer(s[1], "set element")),
                      static_cast<int>(integer(s[2], "set element"))});
  }
  validate(x);
  return x;
}

json to_json(const ReducedInstance& reduced) {
  json j = to_json(reduced.instance);
  j["mode"] = to_string(reduced.mode);
  j["source"] = to_json(reduced.source);
  json blocks = json::object();
  for (std::size_t i = 0; i < reduced.element_blocks.size(); ++i)
    blocks[std::to_string(i + 1)] = {reduced.element_blocks[i].lo, reduced.element_blocks[i].hi};
  j["element_blocks"] = std::move(blocks);
  json set_to_family = json::object();
  for (std::size_t s = 0; s < reduced.set_to_family.size(); ++s)
    set_to_family[std::to_string(s)] = reduced.set_to_family[s];
  j["set_to_family"] = std::move(set_to_family);
  return j;
}

ReducedInstance reduced_from_json(const json& j) {
  ReducedInstance reduced;
  reduced.instance = fgc_instance_from_json(j);
  const json& mode = field(j, "mode");
  if (!mode.is_string()) schema_error("\"mode\" must be a string");
  reduced.mode = mode_from_string(mode.get<std::string>());
  reduced.source = xc3_from_json(field(j, "source"));

  const json& blocks = field(j, "element_blocks");
  for (int i = 1; i <= 3 * reduced.source.k; ++i) {
    const json& block = field(blocks, std::to_string(i).c_str());
    if (!block.is_array() || block.size() != 2) schema_error("element block must be [lo, hi]");
    reduced.element_blocks.push_back({node_id(block[0]), node_id(block[1])});
  }

  const json& set_to_family = field(j, "set_to_family");
  reduced.family_to_set.assign(reduced.instance.family.size(), static_cast<std::size_t>(-1));
  for (std::size_t s = 0; s < reduced.source.sets.size(); ++s) {
    const long long f = integer(field(set_to_family, std::to_string(s).c_str()), "family index");
    if (f < 0 || static_cast<std::size_t>(f) >= reduced.instance.family.size())
      schema_error("set_to_family maps set " + std::to_string(s) + " outside the family");
    reduced.set_to_family.push_back(static_cast<std::size_t>(f));
    if (reduced.family_to_set[f] == static_cast<std::size_t>(-1)) reduced.family_to_set[f] = s;
  }
  for (std::size_t f = 0; f < reduced.family_to_set.size(); ++f)
    if (reduced.family_to_set[f] == static_cast<std::size_t>(-1))
      schema_error("family member " + std::to_string(f) + " has no set");
  return reduced;
}

json witness_json(const SolveResult& result) {
  json j = {{"answer", to_string(result.verdict)}, {"steps", json::array()}, {"intermediate_sizes", json::array()}};
  if (result.verdict == Verdict::Yes) {
    j["steps"] = result.witness.steps;
    j["intermediate_sizes"] = result.intermediate_sizes;
  }
  return j;
}

std::string to_dot(const Graph& g, const DotOptions& options) {
  std::ostringstream out;
  out << "graph " << options.name << " {\n  node [shape=circle, style=filled, fillcolor=white];\n";

  std::vector<std::size_t> class_size;
  std::size_t colored = 0;
  std::vector<std::size_t> color_index;
  if (options.classes) {
    class_size.assign(options.classes->class_count, 0);
    for (std::size_t c : options.classes->class_of) ++class_size[c];
    color_index.assign(options.classes->class_count, 0);
    for (std::size_t c = 0; c < class_size.size(); ++c)
      if (class_size[c] > 1) color_index[c] = colored++;
  }

  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << "  " << v << " [";
    out << "label=\"" << (options.labels ? options.labels->at(v) : std::to_string(v)) << "\"";
    if (options.classes) {
      const std::size_t c = options.classes->class_of.at(v);
      if (class_size[c] > 1) {
        char hsv[32];
        std::snprintf(hsv, sizeof hsv, "%.3f 0.450 0.950", static_cast<double>(color_index[c]) / colored);
        out << ", fillcolor=\"" << hsv << "\"";
      }
      out << ", tooltip=\"class " << c << "\"";
    }
    out << "];\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<std::string> element_labels(const ReducedInstance& reduced) {
  std::vector<std::string> labels(reduced.instance.g.node_count());
  for (std::size_t i = 0; i < reduced.element_blocks.size(); ++i) {
    const NodeBlock& block = reduced.element_blocks[i];
    for (NodeId v = block.lo; v <= block.hi; ++v)
      labels[v] = "x" + std::to_string(i + 1) + "." + std::to_string(v - block.lo);
  }
  return labels;
}

}  // namespace fgc
