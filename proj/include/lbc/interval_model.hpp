#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "lbc/graph.hpp"

namespace lbc {

using Rational = boost::rational<std::int64_t>;

/// Accepts decimals ("3", "-0.25") and fractions ("7/3"). Throws InputError.
Rational parse_rational(std::string_view text);

/// Decimal form when the denominator is a product of 2s and 5s, "p/q" otherwise.
std::string format_rational(const Rational& value);

struct Interval {
  Rational start;
  Rational end;

  bool intersects(const Interval& o) const { return start <= o.end && o.start <= end; }
  bool operator==(const Interval&) const = default;
};

/// One closed interval per vertex of an associated graph.
class IntervalModel {
 public:
  IntervalModel() = default;
  explicit IntervalModel(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {}

  int size() const { return static_cast<int>(intervals_.size()); }
  const Interval& operator[](Vertex v) const { return intervals_[static_cast<std::size_t>(v)]; }
  Interval& operator[](Vertex v) { return intervals_[static_cast<std::size_t>(v)]; }
  const std::vector<Interval>& intervals() const { return intervals_; }

  bool operator==(const IntervalModel&) const = default;

 private:
  std::vector<Interval> intervals_;
};

/// Throws InputError unless `model` is a proper interval model of `g`: one
/// interval per vertex, start <= end, no interval strictly inside another, and
/// {u,v} is an edge exactly when the intervals intersect.
void validate_proper_model(const Graph& g, const IntervalModel& model);

/// Edge set implied by a model (all intersecting pairs).
Graph intersection_graph(const IntervalModel& model);

}  // namespace lbc
