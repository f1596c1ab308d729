// Boolean behaviors of infinite runs.
//
// An OmegaVal answers "does an infinite run exist from energy x within time
// t". For finite t this holds exactly where the support function is
// defined; for t = inf it holds from a closed energy threshold upward, or
// wherever the support is defined at t = inf.

#pragma once

#include "rtea/energy.hpp"
#include "rtea/rational.hpp"
#include "rtea/rtef.hpp"

#include <optional>

namespace rtea {

struct OmegaVal {
  Rtef fin_support;
  /// nullopt: no energy qualifies through the threshold (Never).
  std::optional<Rational> inf_threshold;

  static OmegaVal never() { return {}; }
};

bool operator==(const OmegaVal& a, const OmegaVal& b);

/// F^omega: infinitely many F-steps within the budget.
OmegaVal omega_of(const Rtef& f);

/// F acting on v from the left: an F-step followed by v.
OmegaVal act(const Rtef& f, const OmegaVal& v);

/// Pointwise disjunction.
OmegaVal sup_omega(const OmegaVal& a, const OmegaVal& b);

bool eval_omega(const OmegaVal& v, const Energy& x, const Duration& t);

std::string to_string(const OmegaVal& v);

}  // namespace rtea
