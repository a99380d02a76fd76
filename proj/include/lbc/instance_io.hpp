#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lbc/graph.hpp"
#include "lbc/interval_model.hpp"
#include "lbc/reductions.hpp"
#include "lbc/witnesses.hpp"

namespace lbc {

/// InputError tied to a line of a text file (1-based; 0 = whole file).
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Instance files, one record per line, 1-indexed vertex ids:
//
//   p lbc <n> <m>
//   s <id>  t <id>  b <beta>  l <lambda>
//   e <u> <v>                      m lines
//   i <id> <start> <end>           optional, all vertices or none
//   c <text>                       comment
//
// Reduction outputs carry their metadata in structured comments:
//   c reduction pw|fvs <k> <n> <m> <eta> <nu>
//   c source-part <ids...>         one per part, source ids 1-indexed
//   c source-edge <u> <v>
//   c role <id> <role>             see format_role
struct InstanceFile {
  Instance instance;
  std::optional<IntervalModel> model;
  std::string model_issue;  // why the model is not a proper model of the graph; empty if it is

  std::optional<ReductionParams> params;
  std::vector<std::vector<Vertex>> source_parts;
  std::vector<Edge> source_edges;  // oriented, not normalized
  std::vector<Role> roles;         // empty, or one per vertex

  std::vector<std::string> comments;  // other comment lines, text after "c "
  std::vector<std::string> warnings;  // filled by the parser

  bool has_reduction() const { return params.has_value() && !roles.empty(); }
};

InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& file);

/// Field-wise equality (edge order included), ignoring warnings.
bool same_instance_file(const InstanceFile& a, const InstanceFile& b);

InstanceFile from_reduction(const ReductionOutput& out);
/// Rebuilds the reduction metadata; throws InputError when it is missing.
ReductionOutput to_reduction(const InstanceFile& file);

/// Cut files: "e <u> <v>" lines. Ids are checked against n; edges are not.
CutSet parse_cut(std::string_view text, int n);
std::string serialize_cut(const CutSet& cut);

/// FVS witness files: "v <id>" lines.
FvsWitness parse_fvs(std::string_view text, int n);
std::string serialize_fvs(const FvsWitness& w);

/// Path decompositions: "B <id> <id> ..." lines in bag order.
PathDecomposition parse_pathdecomp(std::string_view text, int n);
std::string serialize_pathdecomp(const PathDecomposition& pd);

// Source graphs for the generators:
//   p graph <n> <m>
//   e <u> <v>
//   k <k>                         optional clique size
//   g <ids...>                    optional, one line per part
struct SourceGraph {
  Graph graph;
  std::optional<int> k;
  std::vector<std::vector<Vertex>> parts;
};

SourceGraph parse_source_graph(std::string_view text);
std::string serialize_source_graph(const SourceGraph& src);

std::string read_file(const std::string& path);   // throws InputError
void write_file(const std::string& path, std::string_view text);

}  // namespace lbc
