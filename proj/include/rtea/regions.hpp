// Piecewise-linear closed form of a linear energy function.
//
// Along the x axis a normal-form function splits into cells delimited by
// its bounds. Inside a cell the minimal traversal time is affine in x,
// W(x) = slope * x + intercept, and wherever t >= max(0, W(x)) the value is
// the affine form  coef_t * t + coef_x * x + constant.

#pragma once

#include "rtea/energy.hpp"
#include "rtea/rational.hpp"
#include "rtea/rtef.hpp"

#include <optional>
#include <vector>

namespace rtea {

struct AffineBoundary {
  Rational slope;
  Rational intercept;

  Rational at(const Rational& x) const { return slope * x + intercept; }
  friend bool operator==(const AffineBoundary&, const AffineBoundary&) = default;
};

struct AffineValue {
  Rational coef_t;
  Rational coef_x;
  Rational constant;

  Rational at(const Rational& x, const Rational& t) const {
    return coef_t * t + coef_x * x + constant;
  }
  friend bool operator==(const AffineValue&, const AffineValue&) = default;
};

struct RegionPiece {
  Rational x_low;
  std::optional<Rational> x_high;  // nullopt: unbounded
  /// False for the cell below a zero-rate first bound, where no run exists.
  bool feasible = true;
  AffineBoundary boundary;
  AffineValue value;

  bool contains(const Rational& x) const {
    return x_low <= x && (!x_high || x < *x_high);
  }
};

/// Pieces covering [0, inf) in increasing x order. The identity yields one
/// piece with value x and boundary 0.
std::vector<RegionPiece> extract_regions(const LinearRtef& l);

/// Evaluates a function through its pieces (finite x and t only).
Energy eval_regions(const std::vector<RegionPiece>& pieces, const Rational& x,
                    const Rational& t);

}  // namespace rtea
