#pragma once

#include <cstdint>
#include <vector>

#include "orientlat/graph.hpp"

namespace orientlat {

struct ChromaticPolynomial {
  /// coefficients[k] multiplies t^k; size is vertex count + 1.
  std::vector<std::int64_t> coefficients;

  std::int64_t linear() const { return coefficients.size() > 1 ? coefficients[1] : 0; }
  std::int64_t evaluate(std::int64_t t) const;

  friend bool operator==(const ChromaticPolynomial&, const ChromaticPolynomial&) = default;
};

/// Deletion-contraction with memoisation on a relabelled edge list.
ChromaticPolynomial chromatic_polynomial(const Graph& g);

/// (-1)^n times the linear coefficient, n = number of nonzero vertices.
/// Throws CounterexampleError if negative.
std::int64_t greene_zaslavsky_count(const Graph& g);

/// Acyclic orientations whose only sink is 0, counted by enumeration.
std::size_t count_unique_sink_zero(const Graph& g);

}  // namespace orientlat
