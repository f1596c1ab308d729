#include "rtea/rtef.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rtea {

void Atom::validate() const {
  if (sgn(rate) < 0) throw std::invalid_argument("atom rate must be >= 0: " + to_string(*this));
  if (sgn(price) > 0) throw std::invalid_argument("atom price must be <= 0: " + to_string(*this));
  if (sgn(bound) < 0) throw std::invalid_argument("atom bound must be >= 0: " + to_string(*this));
  if (bound < -price) {
    throw std::invalid_argument("atom bound must be >= -price: " + to_string(*this));
  }
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = compare(a.rate, b.rate); c != 0) return c;
  if (auto c = compare(a.price, b.price); c != 0) return c;
  return compare(a.bound, b.bound);
}

std::string to_string(const Atom& a) {
  return "(" + to_string(a.rate) + "," + to_string(a.price) + "," + to_string(a.bound) + ")";
}

bool is_normal_form(std::span<const Atom> atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const Atom& a = atoms[i];
    if (sgn(a.rate) < 0 || sgn(a.price) > 0 || sgn(a.bound) < 0 || a.bound < -a.price) {
      return false;
    }
    if (i + 1 < atoms.size()) {
      const Atom& next = atoms[i + 1];
      if (!(a.rate < next.rate) || next.bound < a.bound || !is_zero(a.price)) return false;
    }
  }
  if (!atoms.empty()) {
    const Atom& first = atoms.front();
    if (is_zero(first.rate) && is_zero(first.price) && is_zero(first.bound)) return false;
  }
  return true;
}

LinearRtef LinearRtef::from_normal_form(std::vector<Atom> atoms) {
  if (!is_normal_form(atoms)) {
    throw std::invalid_argument("atom sequence is not in normal form");
  }
  return LinearRtef(std::move(atoms));
}

namespace {
const Rational kZero(0);
}

const Rational& LinearRtef::last_rate() const {
  return atoms_.empty() ? kZero : atoms_.back().rate;
}

const Rational& LinearRtef::first_rate() const {
  return atoms_.empty() ? kZero : atoms_.front().rate;
}

const Rational& LinearRtef::price() const {
  return atoms_.empty() ? kZero : atoms_.back().price;
}

std::strong_ordering operator<=>(const LinearRtef& a, const LinearRtef& b) {
  return std::lexicographical_compare_three_way(a.atoms_.begin(), a.atoms_.end(),
                                                b.atoms_.begin(), b.atoms_.end());
}

std::string to_string(const LinearRtef& l) {
  if (l.is_identity()) return "[]";
  std::string out = "[";
  for (std::size_t i = 0; i < l.atoms().size(); ++i) {
    if (i) out += ",";
    out += to_string(l.atoms()[i]);
  }
  return out + "]";
}

LinearRtef normalize(std::span<const Atom> seq) {
  std::vector<Atom> atoms(seq.begin(), seq.end());
  for (const Atom& a : atoms) a.validate();

  // Time spent in a stage that is not faster than its predecessor is better
  // spent in the predecessor, so such pairs collapse into one atom.
  std::size_t k = 0;
  while (k + 1 < atoms.size()) {
    Atom& cur = atoms[k];
    const Atom& next = atoms[k + 1];
    if (cur.rate >= next.rate) {
      Rational bound = std::max<Rational>(cur.bound, next.bound - cur.price);
      cur.price += next.price;
      cur.bound = std::move(bound);
      atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(k) + 1);
    } else {
      ++k;
    }
  }

  for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
    Atom& cur = atoms[i];
    Atom& next = atoms[i + 1];
    next.bound = std::max<Rational>(cur.bound, next.bound - cur.price);
    next.price += cur.price;
    cur.price = 0;
  }

  if (!atoms.empty()) {
    const Atom& first = atoms.front();
    if (is_zero(first.rate) && is_zero(first.price) && is_zero(first.bound)) {
      atoms.erase(atoms.begin());
    }
  }
  return LinearRtef(std::move(atoms));
}

Energy eval(const LinearRtef& l, const Energy& x, const Duration& t) {
  if (x.is_bottom()) return x;
  if (l.is_identity() || x.is_infinite()) return x;

  Rational cur = x.value();
  Rational remaining = t.is_finite() ? t.value() : Rational(0);
  for (const Atom& a : l.atoms()) {
    if (cur >= a.bound) continue;
    if (is_zero(a.rate)) return Energy::bottom();
    if (t.is_finite()) {
      Rational wait = (a.bound - cur) / a.rate;
      if (wait > remaining) return Energy::bottom();
      remaining -= wait;
    }
    cur = a.bound;
  }
  const Atom& last = l.atoms().back();
  if (t.is_infinite()) {
    if (sgn(last.rate) > 0) return Energy::infinity();
    return Energy::finite(cur + last.price);
  }
  return Energy::finite(cur + last.rate * remaining + last.price);
}

std::optional<Rational> min_traversal_time(const LinearRtef& l, const Rational& x) {
  Rational cur = x;
  Rational total = 0;
  for (const Atom& a : l.atoms()) {
    if (cur >= a.bound) continue;
    if (is_zero(a.rate)) return std::nullopt;
    total += (a.bound - cur) / a.rate;
    cur = a.bound;
  }
  return total;
}

bool precedes(const LinearRtef& l1, const LinearRtef& l2) {
  return l1.last_rate() <= l2.last_rate();
}

Rtef::Rtef(std::vector<LinearRtef> components) : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end());
  components_.erase(std::unique(components_.begin(), components_.end()), components_.end());
}

Rtef Rtef::atom(const Atom& a) { return Rtef({normalize(std::span<const Atom>(&a, 1))}); }

bool Rtef::has_identity() const {
  return !components_.empty() && components_.front().is_identity();
}

std::string to_string(const Rtef& f) {
  if (f.is_bottom()) return "bot";
  std::string out = "{";
  for (std::size_t i = 0; i < f.components().size(); ++i) {
    if (i) out += ", ";
    out += to_string(f.components()[i]);
  }
  return out + "}";
}

Energy eval(const Rtef& f, const Energy& x, const Duration& t) {
  Energy best = Energy::bottom();
  for (const LinearRtef& l : f.components()) best = max(best, eval(l, x, t));
  return best;
}

Rtef prune(const Rtef& f) {
  const auto& comps = f.components();
  if (comps.size() < 2) return f;
  std::vector<bool> keep(comps.size(), true);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (leq_linear(comps[i], comps[j])) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<LinearRtef> kept;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (keep[i]) kept.push_back(comps[i]);
  }
  return Rtef::from_components(std::move(kept));
}

Rtef sup(const Rtef& f, const Rtef& g) {
  if (f.is_bottom()) return g;
  if (g.is_bottom()) return f;
  std::vector<LinearRtef> all = f.components();
  all.insert(all.end(), g.components().begin(), g.components().end());
  return prune(Rtef::from_components(std::move(all)));
}

Rtef compose(const Rtef& f, const Rtef& g) {
  if (f.is_bottom() || g.is_bottom()) return {};
  std::vector<LinearRtef> out;
  out.reserve(f.components().size() * g.components().size());
  std::vector<Atom> seq;
  for (const LinearRtef& l1 : f.components()) {
    for (const LinearRtef& l2 : g.components()) {
      seq.assign(l1.atoms().begin(), l1.atoms().end());
      seq.insert(seq.end(), l2.atoms().begin(), l2.atoms().end());
      out.push_back(normalize(seq));
    }
  }
  return prune(Rtef::from_components(std::move(out)));
}

Rtef star(const Rtef& f) {
  std::vector<LinearRtef> comps;
  for (const LinearRtef& l : f.components()) {
    if (!l.is_identity()) comps.push_back(l);
  }
  std::stable_sort(comps.begin(), comps.end(), [](const LinearRtef& a, const LinearRtef& b) {
    return a.last_rate() < b.last_rate();
  });
  // Compositions that take a component after a faster one are dominated,
  // so only increasing selections of the sorted components matter.
  Rtef acc = Rtef::one();
  for (const LinearRtef& l : comps) {
    acc = sup(acc, compose(acc, Rtef::linear(l)));
  }
  return acc;
}

Rtef power(const Rtef& f, unsigned n) {
  Rtef acc = Rtef::one();
  for (unsigned i = 0; i < n; ++i) acc = compose(acc, f);
  return acc;
}

bool leq(const Rtef& f, const Rtef& g) { return !leq_counterexample(f, g).has_value(); }

bool leq_linear(const LinearRtef& l1, const LinearRtef& l2) {
  if (l1 == l2) return true;
  // Large x at t = 0 exposes the price, large t exposes the last rate.
  if (l1.price() > l2.price() || l1.last_rate() > l2.last_rate()) return false;
  return leq(Rtef::linear(l1), Rtef::linear(l2));
}

bool equivalent(const Rtef& f, const Rtef& g) { return leq(f, g) && leq(g, f); }

}  // namespace rtea
