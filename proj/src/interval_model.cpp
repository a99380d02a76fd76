#include "lbc/interval_model.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace lbc {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(text.substr(0, slash), whole);
    const auto den = parse_int(text.substr(slash + 1), whole);
    if (den == 0) throw InputError("zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  const std::string_view int_part = text.substr(0, dot);
  const std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw InputError("not a rational number: '" + std::string(whole) + "'");
  }
  if (frac_part.size() > 15) throw InputError("too many decimals in '" + std::string(whole) + "'");
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  const std::int64_t ip = int_part.empty() ? 0 : parse_int(int_part, whole);
  const std::int64_t fp = frac_part.empty() ? 0 : parse_int(frac_part, whole);
  if (ip < 0 || fp < 0) throw InputError("not a rational number: '" + std::string(whole) + "'");
  Rational value(ip * scale + fp, scale);
  return negative ? -value : value;
}

std::string format_rational(const Rational& value) {
  std::int64_t den = value.denominator();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) den /= 2, ++twos;
  while (den % 5 == 0) den /= 5, ++fives;
  if (den != 1) {
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
  }
  const int digits = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const std::int64_t scaled = value.numerator() * (scale / value.denominator());
  const bool negative = scaled < 0;
  const std::int64_t mag = negative ? -scaled : scaled;
  std::string out = std::to_string(mag / scale);
  if (digits > 0) {
    std::string frac = std::to_string(mag % scale);
    out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  }
  return negative ? "-" + out : out;
}

void validate_proper_model(const Graph& g, const IntervalModel& model) {
  if (model.size() != g.vertex_count()) {
    throw InputError("interval model has " + std::to_string(model.size()) +
                     " intervals for " + std::to_string(g.vertex_count()) + " vertices");
  }
  for (Vertex v = 0; v < model.size(); ++v) {
    if (model[v].end < model[v].start) {
      throw InputError("interval of vertex " + std::to_string(v) + " has end < start");
    }
  }

  std::vector<Vertex> order(static_cast<std::size_t>(model.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (model[a].start != model[b].start) return model[a].start < model[b].start;
    return model[a].end < model[b].end;
  });
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const Interval& a = model[order[k]];
    const Interval& b = model[order[k + 1]];
    const bool nested = (a.start == b.start) ? a.end != b.end : b.end <= a.end;
    if (nested) {
      throw InputError("interval of vertex " + std::to_string(order[k + 1]) +
                       " and vertex " + std::to_string(order[k]) + " are nested");
    }
  }

  // Sweep: in start order each interval meets exactly the later intervals
  // starting no later than its end.
  std::size_t implied = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t l = k + 1; l < order.size(); ++l) {
      if (model[order[k]].end < model[order[l]].start) break;
      if (!g.has_edge(order[k], order[l])) {
        throw InputError("intervals of vertices " + std::to_string(order[k]) + " and " +
                         std::to_string(order[l]) + " intersect but the edge is missing");
      }
      ++implied;
    }
  }
  if (implied != static_cast<std::size_t>(g.edge_count())) {
    throw InputError("graph has edges between vertices whose intervals are disjoint");
  }
}

Graph intersection_graph(const IntervalModel& model) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < model.size(); ++u) {
    for (Vertex v = u + 1; v < model.size(); ++v) {
      if (model[u].intersects(model[v])) edges.push_back({u, v});
    }
  }
  return Graph(model.size(), std::move(edges));
}

}  // namespace lbc
