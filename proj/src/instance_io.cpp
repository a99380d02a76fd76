#include "lbc/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace lbc {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> words;
  std::string_view rest;  // text after the first word, trimmed
};

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

// Splits into non-blank lines; words are views into `text`.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    if (raw.empty()) continue;
    Line line;
    line.number = number;
    std::size_t pos = 0;
    while (pos < raw.size()) {
      const auto b = raw.find_first_not_of(" \t", pos);
      if (b == std::string_view::npos) break;
      auto e = raw.find_first_of(" \t", b);
      if (e == std::string_view::npos) e = raw.size();
      line.words.push_back(raw.substr(b, e - b));
      pos = e;
    }
    line.rest = trim(raw.substr(line.words.front().size()));
    lines.push_back(std::move(line));
  }
  return lines;
}

long long to_int(const Line& line, std::string_view word) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError(line.number, "expected an integer, got '" + std::string(word) + "'");
  }
  return value;
}

void expect_words(const Line& line, std::size_t count, std::string_view shape) {
  if (line.words.size() != count) {
    throw ParseError(line.number, "expected '" + std::string(shape) + "'");
  }
}

// 1-indexed id in the file to a 0-indexed vertex.
Vertex to_vertex(const Line& line, std::string_view word, int n) {
  const long long id = to_int(line, word);
  if (id < 1 || id > n) {
    throw ParseError(line.number, "vertex id " + std::string(word) + " out of range 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(id - 1);
}

Vertex source_id(const Line& line, std::string_view word) {
  const long long v = to_int(line, word);
  if (v < 1 || v > 100'000'000) throw ParseError(line.number, "source id " + std::string(word) + " out of range");
  return static_cast<Vertex>(v - 1);
}

std::string id(Vertex v) { return std::to_string(v + 1); }

std::string_view kind_word(ReductionKind kind) { return kind == ReductionKind::kPathwidth ? "pw" : "fvs"; }

// Parses "e u v" lines into a vertex-checked list without duplicates.
class EdgeCollector {
 public:
  explicit EdgeCollector(int n) : n_(n) {}

  void add(const Line& line) {
    expect_words(line, 3, "e <u> <v>");
    const Vertex u = to_vertex(line, line.words[1], n_);
    const Vertex v = to_vertex(line, line.words[2], n_);
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + id(u));
    if (!seen_.insert(Edge::make(u, v)).second) {
      throw ParseError(line.number, "duplicate edge " + id(u) + " " + id(v));
    }
    edges_.push_back(Edge::make(u, v));
  }

  std::vector<Edge>& edges() { return edges_; }

 private:
  int n_;
  std::set<Edge> seen_;
  std::vector<Edge> edges_;
};

struct Header {
  int n = 0;
  int m = 0;
};

Header parse_header(const Line& line, std::string_view tag) {
  if (line.words.size() != 4 || line.words[1] != tag) {
    throw ParseError(line.number, "expected 'p " + std::string(tag) + " <n> <m>'");
  }
  const long long n = to_int(line, line.words[2]);
  const long long m = to_int(line, line.words[3]);
  if (n < 0 || m < 0 || n > 100'000'000 || m > 1'000'000'000) {
    throw ParseError(line.number, "bad header sizes");
  }
  return {static_cast<int>(n), static_cast<int>(m)};
}

void set_once(std::optional<long long>& slot, const Line& line, long long value) {
  if (slot) throw ParseError(line.number, "repeated '" + std::string(line.words[0]) + "' line");
  slot = value;
}

void parse_meta(InstanceFile& file, const Line& line, int n, std::vector<char>& has_role) {
  const auto& w = line.words;
  if (w[1] == "reduction") {
    if (w.size() != 8 || (w[2] != "pw" && w[2] != "fvs")) {
      throw ParseError(line.number, "expected 'c reduction pw|fvs <k> <n> <m> <eta> <nu>'");
    }
    if (file.params) throw ParseError(line.number, "repeated reduction line");
    ReductionParams p;
    p.kind = w[2] == "pw" ? ReductionKind::kPathwidth : ReductionKind::kFeedbackVertex;
    p.k = static_cast<int>(to_int(line, w[3]));
    p.n = static_cast<int>(to_int(line, w[4]));
    p.m = static_cast<int>(to_int(line, w[5]));
    p.eta = static_cast<int>(to_int(line, w[6]));
    p.nu = static_cast<int>(to_int(line, w[7]));
    file.params = p;
  } else if (w[1] == "source-part") {
    std::vector<Vertex> part;
    for (std::size_t x = 2; x < w.size(); ++x) part.push_back(source_id(line, w[x]));
    file.source_parts.push_back(std::move(part));
  } else if (w[1] == "source-edge") {
    if (w.size() != 4) throw ParseError(line.number, "expected 'c source-edge <u> <v>'");
    file.source_edges.push_back({source_id(line, w[2]), source_id(line, w[3])});
  } else {  // role
    if (w.size() < 3) throw ParseError(line.number, "expected 'c role <id> <role>'");
    const Vertex v = to_vertex(line, w[2], n);
    if (has_role[static_cast<std::size_t>(v)]) throw ParseError(line.number, "repeated role for vertex " + id(v));
    has_role[static_cast<std::size_t>(v)] = 1;
    const char* after_id = w[2].data() + w[2].size();
    const std::string_view text(after_id, static_cast<std::size_t>(line.rest.data() + line.rest.size() - after_id));
    try {
      file.roles[static_cast<std::size_t>(v)] = parse_role(trim(text));
    } catch (const InputError& e) {
      throw ParseError(line.number, e.what());
    }
  }
}

bool is_meta(const Line& line) {
  if (line.words.size() < 2) return false;
  const auto tag = line.words[1];
  return tag == "reduction" || tag == "source-part" || tag == "source-edge" || tag == "role";
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  const auto lines = split_lines(text);
  InstanceFile file;
  std::optional<Header> header;
  std::optional<long long> s, t, beta, lambda;
  int lambda_line = 0;
  std::optional<EdgeCollector> edges;
  std::vector<std::optional<Interval>> intervals;
  std::vector<char> has_role;
  int interval_count = 0;

  for (const Line& line : lines) {
    const auto tag = line.words[0];
    if (tag == "c") {
      if (is_meta(line)) {
        if (!header) throw ParseError(line.number, "record before the 'p' line");
        if (file.roles.empty() && line.words[1] == "role") file.roles.assign(static_cast<std::size_t>(header->n), Role{});
        parse_meta(file, line, header->n, has_role);
      } else {
        file.comments.emplace_back(line.rest);
      }
      continue;
    }
    if (tag == "p") {
      if (header) throw ParseError(line.number, "repeated 'p' line");
      header = parse_header(line, "lbc");
      edges.emplace(header->n);
      intervals.assign(static_cast<std::size_t>(header->n), std::nullopt);
      has_role.assign(static_cast<std::size_t>(header->n), 0);
      continue;
    }
    if (!header) throw ParseError(line.number, "record before the 'p' line");
    if (tag == "s" || tag == "t") {
      expect_words(line, 2, std::string(tag) + " <id>");
      set_once(tag == "s" ? s : t, line, to_vertex(line, line.words[1], header->n));
    } else if (tag == "b" || tag == "l") {
      expect_words(line, 2, std::string(tag) + " <value>");
      const long long value = to_int(line, line.words[1]);
      if (value < 0 || value > 1'000'000'000) {
        throw ParseError(line.number, "'" + std::string(tag) + "' out of range");
      }
      set_once(tag == "b" ? beta : lambda, line, value);
      if (tag == "l") lambda_line = line.number;
    } else if (tag == "e") {
      edges->add(line);
    } else if (tag == "i") {
      expect_words(line, 4, "i <id> <start> <end>");
      const Vertex v = to_vertex(line, line.words[1], header->n);
      auto& slot = intervals[static_cast<std::size_t>(v)];
      if (slot) throw ParseError(line.number, "repeated interval for vertex " + id(v));
      try {
        slot = Interval{parse_rational(line.words[2]), parse_rational(line.words[3])};
      } catch (const ParseError&) {
        throw;
      } catch (const InputError& e) {
        throw ParseError(line.number, e.what());
      }
      if (slot->start > slot->end) throw ParseError(line.number, "interval start after end");
      ++interval_count;
    } else {
      throw ParseError(line.number, "unknown line type '" + std::string(tag) + "'");
    }
  }

  if (!header) throw ParseError(0, "missing header line 'p lbc <n> <m>'");
  using Field = std::pair<std::optional<long long>*, const char*>;
  for (auto [slot, name] : std::initializer_list<Field>{{&s, "s"}, {&t, "t"}, {&beta, "b"}, {&lambda, "l"}}) {
    if (!*slot) throw ParseError(0, std::string("missing header field '") + name + "'");
  }
  if (static_cast<int>(edges->edges().size()) != header->m) {
    throw ParseError(0, "header announces " + std::to_string(header->m) + " edges, file has " +
                            std::to_string(edges->edges().size()));
  }
  if (*lambda > header->n) {
    file.warnings.push_back("line " + std::to_string(lambda_line) + ": lambda " + std::to_string(*lambda) +
                            " exceeds n = " + std::to_string(header->n) + ", clamped");
    *lambda = header->n;
  }

  file.instance.graph = Graph(header->n, std::move(edges->edges()));
  file.instance.s = static_cast<Vertex>(*s);
  file.instance.t = static_cast<Vertex>(*t);
  file.instance.beta = static_cast<int>(*beta);
  file.instance.lambda = static_cast<int>(*lambda);
  try {
    file.instance.validate();
  } catch (const InputError& e) {
    throw ParseError(0, e.what());
  }

  if (interval_count > 0) {
    if (interval_count != header->n) {
      throw ParseError(0, "interval lines cover " + std::to_string(interval_count) + " of " +
                              std::to_string(header->n) + " vertices");
    }
    std::vector<Interval> model;
    for (auto& slot : intervals) model.push_back(*slot);
    file.model = IntervalModel(std::move(model));
    try {
      validate_proper_model(file.instance.graph, *file.model);
    } catch (const InputError& e) {
      file.model_issue = e.what();
    }
  }

  if (!file.roles.empty()) {
    const auto missing = std::find(has_role.begin(), has_role.end(), 0);
    if (!file.params || missing != has_role.end()) {
      throw ParseError(0, file.params ? "role comment missing for vertex " + id(static_cast<Vertex>(missing - has_role.begin()))
                                      : "role comments without a reduction line");
    }
  }
  return file;
}

std::string serialize_instance(const InstanceFile& file) {
  std::ostringstream os;
  const Instance& inst = file.instance;
  const Graph& g = inst.graph;
  os << "p lbc " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  os << "s " << id(inst.s) << "\nt " << id(inst.t) << "\nb " << inst.beta << "\nl " << inst.lambda << '\n';
  for (const Edge& e : g.edges()) os << "e " << id(e.u) << ' ' << id(e.v) << '\n';
  if (file.model) {
    for (Vertex v = 0; v < file.model->size(); ++v) {
      const Interval& in = (*file.model)[v];
      os << "i " << id(v) << ' ' << format_rational(in.start) << ' ' << format_rational(in.end) << '\n';
    }
  }
  if (file.params) {
    const ReductionParams& p = *file.params;
    os << "c reduction " << kind_word(p.kind) << ' ' << p.k << ' ' << p.n << ' ' << p.m << ' ' << p.eta << ' '
       << p.nu << '\n';
  }
  for (const auto& part : file.source_parts) {
    os << "c source-part";
    for (Vertex v : part) os << ' ' << id(v);
    os << '\n';
  }
  for (const Edge& e : file.source_edges) os << "c source-edge " << id(e.u) << ' ' << id(e.v) << '\n';
  for (std::size_t v = 0; v < file.roles.size(); ++v) {
    os << "c role " << v + 1 << ' ' << format_role(file.roles[v]) << '\n';
  }
  for (const auto& c : file.comments) os << (c.empty() ? "c" : "c " + c) << '\n';
  return os.str();
}

bool same_instance_file(const InstanceFile& a, const InstanceFile& b) {
  const Instance& x = a.instance;
  const Instance& y = b.instance;
  const auto ex = x.graph.edges();
  const auto ey = y.graph.edges();
  auto same_params = [](const std::optional<ReductionParams>& p, const std::optional<ReductionParams>& q) {
    if (p.has_value() != q.has_value()) return false;
    return !p || (p->kind == q->kind && p->k == q->k && p->n == q->n && p->m == q->m && p->eta == q->eta &&
                  p->nu == q->nu);
  };
  return x.graph.vertex_count() == y.graph.vertex_count() && std::equal(ex.begin(), ex.end(), ey.begin(), ey.end()) &&
         x.s == y.s && x.t == y.t && x.beta == y.beta && x.lambda == y.lambda && a.model == b.model &&
         a.model_issue == b.model_issue && same_params(a.params, b.params) && a.source_parts == b.source_parts &&
         a.source_edges == b.source_edges && a.roles == b.roles && a.comments == b.comments;
}

InstanceFile from_reduction(const ReductionOutput& out) {
  InstanceFile file;
  file.instance = out.instance;
  file.params = out.params;
  file.source_parts = out.source_parts;
  file.source_edges = out.source_edges;
  file.roles = out.roles;
  return file;
}

ReductionOutput to_reduction(const InstanceFile& file) {
  if (!file.has_reduction()) throw InputError("instance carries no reduction metadata");
  ReductionOutput out;
  out.instance = file.instance;
  out.roles = file.roles;
  out.params = *file.params;
  out.source_parts = file.source_parts;
  out.source_edges = file.source_edges;
  out.index_roles();
  return out;
}

CutSet parse_cut(std::string_view text, int n) {
  CutSet cut;
  for (const Line& line : split_lines(text)) {
    if (line.words[0] == "c") continue;
    if (line.words[0] != "e") throw ParseError(line.number, "unknown line type '" + std::string(line.words[0]) + "'");
    expect_words(line, 3, "e <u> <v>");
    const Vertex u = to_vertex(line, line.words[1], n);
    const Vertex v = to_vertex(line, line.words[2], n);
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + id(u));
    if (!cut.insert(Edge::make(u, v)).second) {
      throw ParseError(line.number, "duplicate edge " + id(u) + " " + id(v));
    }
  }
  return cut;
}

std::string serialize_cut(const CutSet& cut) {
  std::string out;
  for (const Edge& e : cut) out += "e " + id(e.u) + " " + id(e.v) + "\n";
  return out;
}

FvsWitness parse_fvs(std::string_view text, int n) {
  FvsWitness w;
  for (const Line& line : split_lines(text)) {
    if (line.words[0] == "c") continue;
    if (line.words[0] != "v") throw ParseError(line.number, "unknown line type '" + std::string(line.words[0]) + "'");
    expect_words(line, 2, "v <id>");
    if (!w.vertices.insert(to_vertex(line, line.words[1], n)).second) {
      throw ParseError(line.number, "repeated vertex " + std::string(line.words[1]));
    }
  }
  return w;
}

std::string serialize_fvs(const FvsWitness& w) {
  std::string out;
  for (Vertex v : w.vertices) out += "v " + id(v) + "\n";
  return out;
}

PathDecomposition parse_pathdecomp(std::string_view text, int n) {
  PathDecomposition pd;
  for (const Line& line : split_lines(text)) {
    if (line.words[0] == "c") continue;
    if (line.words[0] != "B") throw ParseError(line.number, "unknown line type '" + std::string(line.words[0]) + "'");
    std::vector<Vertex> bag;
    for (std::size_t x = 1; x < line.words.size(); ++x) bag.push_back(to_vertex(line, line.words[x], n));
    pd.bags.push_back(std::move(bag));
  }
  return pd;
}

std::string serialize_pathdecomp(const PathDecomposition& pd) {
  std::string out;
  for (const auto& bag : pd.bags) {
    out += "B";
    for (Vertex v : bag) out += " " + id(v);
    out += "\n";
  }
  return out;
}

SourceGraph parse_source_graph(std::string_view text) {
  SourceGraph src;
  std::optional<Header> header;
  std::optional<EdgeCollector> edges;
  std::set<Vertex> in_part;
  for (const Line& line : split_lines(text)) {
    const auto tag = line.words[0];
    if (tag == "c") continue;
    if (tag == "p") {
      if (header) throw ParseError(line.number, "repeated 'p' line");
      header = parse_header(line, "graph");
      edges.emplace(header->n);
      continue;
    }
    if (!header) throw ParseError(line.number, "record before the 'p' line");
    if (tag == "e") {
      edges->add(line);
    } else if (tag == "k") {
      expect_words(line, 2, "k <k>");
      if (src.k) throw ParseError(line.number, "repeated 'k' line");
      src.k = static_cast<int>(to_int(line, line.words[1]));
    } else if (tag == "g") {
      std::vector<Vertex> part;
      for (std::size_t x = 1; x < line.words.size(); ++x) {
        const Vertex v = to_vertex(line, line.words[x], header->n);
        if (!in_part.insert(v).second) throw ParseError(line.number, "vertex " + id(v) + " in two parts");
        part.push_back(v);
      }
      src.parts.push_back(std::move(part));
    } else {
      throw ParseError(line.number, "unknown line type '" + std::string(tag) + "'");
    }
  }
  if (!header) throw ParseError(0, "missing header line 'p graph <n> <m>'");
  if (static_cast<int>(edges->edges().size()) != header->m) {
    throw ParseError(0, "header announces " + std::to_string(header->m) + " edges, file has " +
                            std::to_string(edges->edges().size()));
  }
  src.graph = Graph(header->n, std::move(edges->edges()));
  return src;
}

std::string serialize_source_graph(const SourceGraph& src) {
  std::ostringstream os;
  os << "p graph " << src.graph.vertex_count() << ' ' << src.graph.edge_count() << '\n';
  for (const Edge& e : src.graph.edges()) os << "e " << id(e.u) << ' ' << id(e.v) << '\n';
  if (src.k) os << "k " << *src.k << '\n';
  for (const auto& part : src.parts) {
    os << 'g';
    for (Vertex v : part) os << ' ' << id(v);
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write failed for '" + path + "'");
}

}  // namespace lbc
