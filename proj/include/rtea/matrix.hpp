// Matrices over energy functions and the behaviors of weighted automata.

#pragma once

#include "rtea/omega.hpp"
#include "rtea/rtef.hpp"

#include <cstddef>
#include <vector>

namespace rtea {

/// Row-major matrix of Rtef; entries default to bottom. Blocks of a square
/// matrix are rectangular, so the shape is not required to be square.
class RtefMatrix {
 public:
  RtefMatrix() = default;
  RtefMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RtefMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rtef& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rtef& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Copy of rows [r0, r0 + nr) and columns [c0, c0 + nc).
  RtefMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  friend bool operator==(const RtefMatrix&, const RtefMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rtef> entries_;
};

using OmegaVector = std::vector<OmegaVal>;

/// Weighted automaton (alpha, M, k): states 0..k-1 are the accepting ones.
struct AutomatonRep {
  std::vector<bool> alpha;
  RtefMatrix m;
  std::size_t k = 0;

  bool accepting(std::size_t i) const { return i < k; }
};

/// Both throw std::invalid_argument on a shape mismatch.
RtefMatrix mat_mul(const RtefMatrix& a, const RtefMatrix& b);
RtefMatrix mat_sup(const RtefMatrix& a, const RtefMatrix& b);

/// Kleene star of a square matrix by block elimination. `split` is the size
/// of the leading block; 0 picks half of the dimension.
RtefMatrix mat_star(const RtefMatrix& m, std::size_t split = 1);

/// M^omega: entry i holds the runs from i that take infinitely many steps.
OmegaVector mat_omega(const RtefMatrix& m);

/// Runs that visit one of the first k states infinitely often. Entries
/// 0..k-1 are (a + b d* c)^omega and the rest are d* c acting on those.
OmegaVector mat_omega_accepting(const RtefMatrix& m, std::size_t k);

/// Matrix acting on a vector.
OmegaVector act(const RtefMatrix& m, const OmegaVector& v);

/// |A|: supremum of M*[i][j] over initial i and accepting j.
Rtef finite_behavior(const AutomatonRep& a);

/// ||A||: disjunction of the accepting omega entries over initial states.
OmegaVal buchi_behavior(const AutomatonRep& a);

}  // namespace rtea
