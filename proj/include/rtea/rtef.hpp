// Real-time energy functions.
//
// An energy function maps an initial energy x and a time budget t to the
// best energy reachable at the end of a path, or bottom when no run exists.
// The atomic function of one delay-then-transition step with rate r, price p
// and bound b is
//
//     f(x, t) = x + r t + p   if x + r t >= b,   bottom otherwise.
//
// Paths compose atoms; a LinearRtef stores one path in normal form (rates
// strictly increasing, bounds non-decreasing, every price but the last is
// zero) and the empty sequence is the identity. An Rtef is a finite
// supremum of linear functions; the empty set is bottom.
//
// At t = inf every function takes the supremum over finite budgets.

#pragma once

#include "rtea/energy.hpp"
#include "rtea/rational.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rtea {

struct Atom {
  Rational rate;   // energy gained per time unit while waiting
  Rational price;  // energy paid when taking the transition (<= 0)
  Rational bound;  // energy needed to take the transition

  /// Throws std::invalid_argument unless rate >= 0, price <= 0,
  /// bound >= 0 and bound >= -price.
  void validate() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
};

std::string to_string(const Atom& a);

/// True if the sequence satisfies the normal-form invariants.
bool is_normal_form(std::span<const Atom> atoms);

class LinearRtef {
 public:
  /// The identity function.
  LinearRtef() = default;

  static LinearRtef identity() { return {}; }

  /// Wraps a sequence that is already in normal form. Throws
  /// std::invalid_argument otherwise.
  static LinearRtef from_normal_form(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool is_identity() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }

  /// Rate of the last atom; the identity behaves like the atom (0, 0, 0).
  const Rational& last_rate() const;
  const Rational& first_rate() const;
  /// Total price of the path (the price of the last atom).
  const Rational& price() const;

  friend bool operator==(const LinearRtef&, const LinearRtef&) = default;
  friend std::strong_ordering operator<=>(const LinearRtef& a, const LinearRtef& b);

 private:
  explicit LinearRtef(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
  friend LinearRtef normalize(std::span<const Atom> seq);

  std::vector<Atom> atoms_;
};

std::string to_string(const LinearRtef& l);

/// Rewrites an arbitrary atom sequence into normal form without changing
/// the function it denotes. Adjacent atoms with r_k >= r_{k+1} are merged
/// into (r_k, p_k + p_{k+1}, max(b_k, b_{k+1} - p_k)) leftmost-first, then a
/// left-to-right sweep moves every price onto the last atom. A leading
/// (0, 0, 0) atom is the identity and is dropped.
LinearRtef normalize(std::span<const Atom> seq);

/// Greedy evaluation: wait as little as possible in every stage and spend
/// the remaining budget in the last (fastest) one.
Energy eval(const LinearRtef& l, const Energy& x, const Duration& t);

/// Minimal time needed to traverse `l` from finite energy x; nullopt when a
/// zero-rate stage blocks the path.
std::optional<Rational> min_traversal_time(const LinearRtef& l, const Rational& x);

/// f <= f' in the "not better than" order: last rate of l1 <= last rate of l2.
bool precedes(const LinearRtef& l1, const LinearRtef& l2);

class Rtef {
 public:
  /// Bottom (no components).
  Rtef() = default;

  static Rtef bottom() { return {}; }
  static Rtef one() { return Rtef({LinearRtef::identity()}); }
  static Rtef atom(const Atom& a);
  static Rtef linear(LinearRtef l) { return Rtef({std::move(l)}); }
  /// Sorts and deduplicates; does not prune.
  static Rtef from_components(std::vector<LinearRtef> components) {
    return Rtef(std::move(components));
  }

  /// Components in lexicographic order of their atom tuples.
  const std::vector<LinearRtef>& components() const { return components_; }
  bool is_bottom() const { return components_.empty(); }
  bool has_identity() const;

  friend bool operator==(const Rtef&, const Rtef&) = default;

 private:
  explicit Rtef(std::vector<LinearRtef> components);

  std::vector<LinearRtef> components_;
};

std::string to_string(const Rtef& f);

Energy eval(const Rtef& f, const Energy& x, const Duration& t);

/// Pointwise supremum followed by prune.
Rtef sup(const Rtef& f, const Rtef& g);

/// Composition in diagrammatic order: (f . g)(x, t) = max over t1 + t2 = t
/// of g(f(x, t1), t2).
Rtef compose(const Rtef& f, const Rtef& g);

/// Drops every component pointwise dominated by another retained one.
Rtef prune(const Rtef& f);

/// Kleene star: the supremum of all order-respecting compositions of the
/// non-identity components sorted by last rate, plus the identity.
Rtef star(const Rtef& f);

/// f^n with f^0 = 1.
Rtef power(const Rtef& f, unsigned n);

/// A point where the left function exceeds the right one.
struct LeqWitness {
  Rational x;
  Rational t;
  Energy lhs;
  Energy rhs;
};

/// Exact decision of f <= g at every (x, t). Returns nullopt when the order
/// holds, otherwise a concrete finite point where it fails.
std::optional<LeqWitness> leq_counterexample(const Rtef& f, const Rtef& g);

bool leq(const Rtef& f, const Rtef& g);
bool leq_linear(const LinearRtef& l1, const LinearRtef& l2);

/// leq both ways.
bool equivalent(const Rtef& f, const Rtef& g);

}  // namespace rtea
