#ifndef FGC_IO_HH
#define FGC_IO_HH

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fgc/compression.hh"
#include "fgc/graph.hh"
#include "fgc/matcher.hh"
#include "fgc/reduction.hh"

namespace fgc {

using nlohmann::json;

/// Edge list: a line `n m`, then m lines `u v`. Blank lines and lines
/// starting with '#' are skipped on read. Writes emit u < v.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// Parses JSON text; syntax errors become ParseError with the byte offset.
json parse_json(const std::string& text);
json parse_json(std::istream& in);

json to_json(const Graph& g);
Graph graph_from_json(const json& j);

MatchMode mode_from_string(const std::string& text);

json to_json(const Pattern& p);
Pattern pattern_from_json(const json& j);

/// {"graph": ..., "target": ..., "family": [...]}
json to_json(const FgcInstance& instance);
FgcInstance fgc_instance_from_json(const json& j);

/// {"k": ..., "sets": [[a,b,c], ...]}
json to_json(const Xc3Instance& x);
Xc3Instance xc3_from_json(const json& j);

/// Instance JSON plus "mode", "source", "element_blocks" and "set_to_family".
json to_json(const ReducedInstance& reduced);
ReducedInstance reduced_from_json(const json& j);

/// {"answer": "yes"|"no"|"inconclusive", "steps": [...], "intermediate_sizes": [...]}
json witness_json(const SolveResult& result);

struct DotOptions {
  const NodePartition* classes = nullptr;          // fill each class with its own color
  const std::vector<std::string>* labels = nullptr;  // per-node labels
  std::string name = "G";
};

std::string to_dot(const Graph& g, const DotOptions& options = {});

/// Node labels "x<i>.<offset>" for a reduced instance's G.
std::vector<std::string> element_labels(const ReducedInstance& reduced);

}  // namespace fgc

#endif
