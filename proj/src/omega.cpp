#include "rtea/omega.hpp"

namespace rtea {

namespace {

void lower_to(std::optional<Rational>& acc, const Rational& c) {
  if (!acc || c < *acc) acc = c;
}

// Least x from which l, given unlimited time, ends with energy >= c.
std::optional<Rational> reach_threshold(const LinearRtef& l, const Rational& c) {
  if (l.is_identity()) return c;
  const Atom& first = l.atoms().front();
  if (sgn(l.last_rate()) > 0) return sgn(first.rate) > 0 ? Rational(0) : first.bound;
  // Normal form leaves a single zero-rate atom here.
  return std::max<Rational>(first.bound, c - first.price);
}

}  // namespace

bool operator==(const OmegaVal& a, const OmegaVal& b) {
  return a.fin_support == b.fin_support && a.inf_threshold == b.inf_threshold;
}

OmegaVal omega_of(const Rtef& f) {
  OmegaVal v;
  std::vector<LinearRtef> zero_price;
  for (const LinearRtef& l : f.components()) {
    if (is_zero(l.price())) zero_price.push_back(l);

    if (l.is_identity() || sgn(l.first_rate()) > 0) {
      lower_to(v.inf_threshold, 0);
    } else if (sgn(l.last_rate()) > 0 || is_zero(l.price())) {
      lower_to(v.inf_threshold, l.atoms().front().bound);
    }
  }
  // After a zero-price step the energy is at least its last bound, so the
  // same step can be repeated forever without delay.
  v.fin_support = compose(star(f), Rtef::from_components(std::move(zero_price)));
  return v;
}

OmegaVal act(const Rtef& f, const OmegaVal& v) {
  OmegaVal out;
  out.fin_support = compose(f, v.fin_support);
  if (v.inf_threshold) {
    for (const LinearRtef& l : f.components()) {
      if (auto c = reach_threshold(l, *v.inf_threshold)) lower_to(out.inf_threshold, *c);
    }
  }
  return out;
}

OmegaVal sup_omega(const OmegaVal& a, const OmegaVal& b) {
  OmegaVal out;
  out.fin_support = sup(a.fin_support, b.fin_support);
  out.inf_threshold = a.inf_threshold;
  if (b.inf_threshold) lower_to(out.inf_threshold, *b.inf_threshold);
  return out;
}

bool eval_omega(const OmegaVal& v, const Energy& x, const Duration& t) {
  if (x.is_bottom()) return false;
  if (t.is_infinite() && v.inf_threshold) {
    if (x.is_infinite() || x.value() >= *v.inf_threshold) return true;
  }
  return !eval(v.fin_support, x, t).is_bottom();
}

std::string to_string(const OmegaVal& v) {
  return "{support: " + to_string(v.fin_support) +
         ", threshold: " + (v.inf_threshold ? to_string(*v.inf_threshold) : "never") + "}";
}

}  // namespace rtea
