#include "rtea/regions.hpp"

namespace rtea {

std::vector<RegionPiece> extract_regions(const LinearRtef& l) {
  std::vector<RegionPiece> pieces;
  if (l.is_identity()) {
    pieces.push_back(RegionPiece{0, std::nullopt, true, {0, 0}, {0, 1, 0}});
    return pieces;
  }

  const auto& atoms = l.atoms();
  const std::size_t n = atoms.size();
  const Atom& last = atoms.back();

  // tail[j]: time to climb from bound j to the last bound.
  std::vector<Rational> tail(n, Rational(0));
  for (std::size_t j = n - 1; j-- > 0;) {
    tail[j] = tail[j + 1] + (atoms[j + 1].bound - atoms[j].bound) / atoms[j + 1].rate;
  }

  if (is_zero(last.rate)) {
    // A single zero-rate atom: a pure guard x >= b.
    if (sgn(last.bound) > 0) {
      pieces.push_back(RegionPiece{0, last.bound, false, {0, 0}, {0, 0, 0}});
    }
    pieces.push_back(RegionPiece{last.bound, std::nullopt, true, {0, 0}, {0, 1, last.price}});
    return pieces;
  }

  // Cell j holds the x for which atoms 0..j-1 pass without waiting and
  // atom j is the first one to wait for. The last two cells share their
  // value and are emitted as one piece with a clamped boundary.
  for (std::size_t j = 0; j < n; ++j) {
    Rational lo = j == 0 ? Rational(0) : atoms[j - 1].bound;
    std::optional<Rational> hi;
    if (j + 1 < n) hi = atoms[j].bound;
    if (hi && lo >= *hi) continue;

    const Atom& first_wait = atoms[j];
    if (is_zero(first_wait.rate)) {
      pieces.push_back(RegionPiece{lo, hi, false, {0, 0}, {0, 0, 0}});
      continue;
    }
    AffineBoundary boundary{-1 / first_wait.rate, first_wait.bound / first_wait.rate + tail[j]};
    // value = b_n + p + r_n (t - W(x))
    AffineValue value{last.rate, last.rate / first_wait.rate,
                      last.bound + last.price - last.rate * boundary.intercept};
    pieces.push_back(RegionPiece{std::move(lo), std::move(hi), true, std::move(boundary),
                                 std::move(value)});
  }
  return pieces;
}

Energy eval_regions(const std::vector<RegionPiece>& pieces, const Rational& x,
                    const Rational& t) {
  for (const RegionPiece& piece : pieces) {
    if (!piece.contains(x)) continue;
    if (!piece.feasible) return Energy::bottom();
    Rational w = piece.boundary.at(x);
    if (t < w) return Energy::bottom();
    return Energy::finite(piece.value.at(x, t));
  }
  return Energy::bottom();
}

}  // namespace rtea
