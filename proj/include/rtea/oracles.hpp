// Brute-force reference computations. These are slow, under-approximate
// where noted, and share no code with the decision procedures beyond
// single-function evaluation.

#pragma once

#include "rtea/energy.hpp"
#include "rtea/model.hpp"
#include "rtea/rtef.hpp"

#include <cstddef>
#include <span>

namespace rtea::oracles {

struct DpConfig {
  Rational delta = 1;
  std::size_t max_steps = 0;
};

/// Best energy at an accepting state over runs whose delays are multiples of
/// delta and whose total time is at most delta * max_steps. A lower bound on
/// the exact behavior.
Energy dp_lower_bound(const RteaModel& m, const Rational& x0, const Rational& t,
                      const DpConfig& cfg);

/// max over t1 in {0, t/grid, ..., t} of l2(l1(x, t1), t - t1).
Energy compose_split_oracle(const LinearRtef& l1, const LinearRtef& l2, const Energy& x,
                            const Rational& t, std::size_t grid);

/// Exact value of an arbitrary (not normalized) atom sequence, found by
/// enumerating the vertices of the polytope of wait allocations.
Energy sequence_value_by_vertices(std::span<const Atom> atoms, const Energy& x,
                                  const Rational& t);

/// Searches lasso runs (simple path to an accepting state, then a simple
/// cycle through it repeated with geometrically shrinking budgets) that can
/// be continued forever. True answers are definitive.
bool buchi_unroll(const RteaModel& m, const Rational& x0, const Rational& t,
                  std::size_t repetitions);

}  // namespace rtea::oracles
