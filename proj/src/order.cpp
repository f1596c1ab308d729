// Exact decision of the pointwise order f <= g.
//
// Both sides are piecewise affine over the (x, t) quadrant. The x axis is cut
// at every bound of every component; inside one cell each component is
// either never defined or defined on the half plane t >= W(x), with an
// affine value there. The cell is further cut by the activation lines
// t = W(x) and by the crease lines where two right-hand components tie.
// Within every open face of that arrangement the set of defined components
// is constant and max(g) - f is affine, so a violation exists iff some face
// has a negative value at one of its corners. Faces are visited by probing
// every vertex in the direction of each adjacent angular sector.
//
// Unbounded faces are closed off by the lines x = M and t = M for a symbolic
// M larger than every finite quantity; coordinates are kept as a + b M.

#include "rtea/regions.hpp"
#include "rtea/rtef.hpp"

#include <algorithm>
#include <stdexcept>

namespace rtea {

namespace {

struct Lex {
  Rational fin = 0;
  Rational big = 0;  // coefficient of M
};

Lex operator+(const Lex& a, const Lex& b) { return {a.fin + b.fin, a.big + b.big}; }
Lex operator-(const Lex& a, const Lex& b) { return {a.fin - b.fin, a.big - b.big}; }
Lex operator*(const Rational& s, const Lex& a) { return {s * a.fin, s * a.big}; }
Lex operator/(const Lex& a, const Rational& s) { return {a.fin / s, a.big / s}; }

int sign(const Lex& a) { return sgn(a.big) != 0 ? sgn(a.big) : sgn(a.fin); }
int lex_cmp(const Lex& a, const Lex& b) { return sign(a - b); }

Rational concrete(const Lex& a, const Rational& m) { return a.fin + a.big * m; }

// a x + b t + c = 0
struct Line {
  Rational a;
  Rational b;
  Lex c;
};

struct Point {
  Lex x;
  Lex t;
};

bool point_less(const Point& p, const Point& q) {
  int c = lex_cmp(p.x, q.x);
  return c != 0 ? c < 0 : lex_cmp(p.t, q.t) < 0;
}

bool point_eq(const Point& p, const Point& q) {
  return lex_cmp(p.x, q.x) == 0 && lex_cmp(p.t, q.t) == 0;
}

std::optional<Point> intersect(const Line& l1, const Line& l2) {
  Rational det = l1.a * l2.b - l2.a * l1.b;
  if (is_zero(det)) return std::nullopt;
  Lex x = (l1.b * l2.c - l2.b * l1.c) / det;
  Lex t = (l2.a * l1.c - l1.a * l2.c) / det;
  return Point{std::move(x), std::move(t)};
}

struct Dir {
  Rational dx;
  Rational dt;
};

int half(const Dir& d) { return (sgn(d.dt) > 0 || (sgn(d.dt) == 0 && sgn(d.dx) > 0)) ? 0 : 1; }
Rational cross(const Dir& u, const Dir& v) { return u.dx * v.dt - u.dt * v.dx; }

bool angle_less(const Dir& u, const Dir& v) {
  int hu = half(u);
  int hv = half(v);
  if (hu != hv) return hu < hv;
  return sgn(cross(u, v)) > 0;
}

bool same_angle(const Dir& u, const Dir& v) {
  return half(u) == half(v) && is_zero(cross(u, v));
}

// One component restricted to one x cell.
struct CellForm {
  bool feasible = false;
  AffineBoundary boundary;
  AffineValue value;
};

Lex value_at(const CellForm& form, const Point& p) {
  return form.value.coef_t * p.t + form.value.coef_x * p.x + Lex{form.value.constant, 0};
}

// Whether the component is defined on the face entered from p along d.
bool active_towards(const CellForm& form, const Point& p, const Dir& d) {
  if (!form.feasible) return false;
  Lex slack = p.t - (form.boundary.slope * p.x + Lex{form.boundary.intercept, 0});
  int s = sign(slack);
  if (s != 0) return s > 0;
  return sgn(d.dt - form.boundary.slope * d.dx) > 0;
}

struct Violation {
  Point at;
  Dir towards;
};

std::optional<Violation> check_cell(const Rational& lo, const std::optional<Rational>& hi,
                                    const std::vector<CellForm>& lhs,
                                    const std::vector<CellForm>& rhs) {
  const Lex big_m{0, 1};
  const Lex x_lo{lo, 0};
  const Lex x_hi = hi ? Lex{*hi, 0} : big_m;

  std::vector<Line> lines;
  lines.push_back({1, 0, Lex{} - x_lo});
  lines.push_back({1, 0, Lex{} - x_hi});
  lines.push_back({0, 1, Lex{}});
  lines.push_back({0, 1, Lex{} - big_m});
  auto add_activation = [&](const CellForm& f) {
    if (f.feasible) lines.push_back({-f.boundary.slope, 1, Lex{-f.boundary.intercept, 0}});
  };
  for (const auto& f : lhs) add_activation(f);
  for (const auto& g : rhs) add_activation(g);
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (!rhs[i].feasible) continue;
    for (std::size_t j = i + 1; j < rhs.size(); ++j) {
      if (!rhs[j].feasible) continue;
      const AffineValue& u = rhs[i].value;
      const AffineValue& v = rhs[j].value;
      Rational a = u.coef_x - v.coef_x;
      Rational b = u.coef_t - v.coef_t;
      if (is_zero(a) && is_zero(b)) continue;
      lines.push_back({std::move(a), std::move(b), Lex{u.constant - v.constant, 0}});
    }
  }

  auto in_domain = [&](const Point& p) {
    return lex_cmp(p.x, x_lo) >= 0 && lex_cmp(p.x, x_hi) <= 0 && sign(p.t) >= 0 &&
           lex_cmp(p.t, big_m) <= 0;
  };

  struct Incidence {
    Point p;
    std::size_t line;
  };
  std::vector<Incidence> incidences;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto p = intersect(lines[i], lines[j]);
      if (!p || !in_domain(*p)) continue;
      incidences.push_back({*p, i});
      incidences.push_back({std::move(*p), j});
    }
  }
  std::sort(incidences.begin(), incidences.end(), [](const Incidence& u, const Incidence& v) {
    if (point_less(u.p, v.p)) return true;
    if (point_less(v.p, u.p)) return false;
    return u.line < v.line;
  });

  std::vector<Dir> dirs;
  for (std::size_t begin = 0; begin < incidences.size();) {
    std::size_t end = begin;
    while (end < incidences.size() && point_eq(incidences[end].p, incidences[begin].p)) ++end;
    const Point& v = incidences[begin].p;

    dirs.clear();
    for (std::size_t k = begin; k < end; ++k) {
      if (k > begin && incidences[k].line == incidences[k - 1].line) continue;
      const Line& l = lines[incidences[k].line];
      dirs.push_back({l.b, -l.a});
      dirs.push_back({-l.b, l.a});
    }
    std::sort(dirs.begin(), dirs.end(), angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end(), same_angle), dirs.end());

    const bool on_lo = lex_cmp(v.x, x_lo) == 0;
    const bool on_hi = lex_cmp(v.x, x_hi) == 0;
    const bool on_t0 = sign(v.t) == 0;
    const bool on_tm = lex_cmp(v.t, big_m) == 0;

    for (std::size_t k = 0; k < dirs.size(); ++k) {
      const Dir& u = dirs[k];
      const Dir& w = dirs[(k + 1) % dirs.size()];
      Dir d{u.dx + w.dx, u.dt + w.dt};
      if ((on_lo && sgn(d.dx) <= 0) || (on_hi && sgn(d.dx) >= 0) ||
          (on_t0 && sgn(d.dt) <= 0) || (on_tm && sgn(d.dt) >= 0)) {
        continue;
      }
      std::optional<Lex> best;
      for (const auto& g : rhs) {
        if (!active_towards(g, v, d)) continue;
        Lex val = value_at(g, v);
        if (!best || lex_cmp(val, *best) > 0) best = std::move(val);
      }
      for (const auto& f : lhs) {
        if (!active_towards(f, v, d)) continue;
        if (!best || lex_cmp(value_at(f, v), *best) > 0) return Violation{v, d};
      }
    }
    begin = end;
  }
  return std::nullopt;
}

std::vector<CellForm> forms_in_cell(const std::vector<std::vector<RegionPiece>>& pieces,
                                    const Rational& lo) {
  std::vector<CellForm> forms;
  forms.reserve(pieces.size());
  for (const auto& ps : pieces) {
    CellForm form;
    for (const auto& piece : ps) {
      if (!piece.contains(lo)) continue;
      form.feasible = piece.feasible;
      form.boundary = piece.boundary;
      form.value = piece.value;
      break;
    }
    forms.push_back(std::move(form));
  }
  return forms;
}

Rational max_magnitude(const Rtef& f, const Rtef& g) {
  Rational m = 1;
  for (const Rtef* h : {&f, &g}) {
    for (const auto& l : h->components()) {
      for (const auto& a : l.atoms()) {
        for (const Rational* q : {&a.rate, &a.price, &a.bound}) {
          Rational v = abs(*q);
          if (v > m) m = v;
        }
      }
    }
  }
  return m;
}

// Turns a symbolic violation into a concrete point by moving a little into
// the offending face with M instantiated large enough.
std::optional<LeqWitness> concretize(const Violation& v, const Rtef& f, const Rtef& g) {
  Rational scale = max_magnitude(f, g) + 1;
  Rational m = scale * scale * 1024;
  Rational eps(1);
  for (int round = 0; round < 256; ++round) {
    Rational x = concrete(v.at.x, m) + eps * v.towards.dx;
    Rational t = concrete(v.at.t, m) + eps * v.towards.dt;
    if (sgn(x) >= 0 && sgn(t) >= 0) {
      Energy lhs = eval(f, Energy::finite(x), Duration::finite(t));
      Energy rhs = eval(g, Energy::finite(x), Duration::finite(t));
      if (lhs > rhs) return LeqWitness{std::move(x), std::move(t), std::move(lhs), std::move(rhs)};
    }
    m *= 2;
    eps /= 2;
  }
  return std::nullopt;
}

}  // namespace

std::optional<LeqWitness> leq_counterexample(const Rtef& f, const Rtef& g) {
  if (f.is_bottom()) return std::nullopt;

  // Components already below a single right-hand component need no
  // arrangement; this also keeps the common prune queries cheap.
  std::vector<LinearRtef> open;
  if (g.components().size() > 1 || f.components().size() > 1) {
    for (const auto& l : f.components()) {
      bool covered = false;
      for (const auto& r : g.components()) {
        if (leq_linear(l, r)) {
          covered = true;
          break;
        }
      }
      if (!covered) open.push_back(l);
    }
    if (open.empty()) return std::nullopt;
  } else {
    open = f.components();
  }
  const Rtef lhs = Rtef::from_components(open);

  std::vector<std::vector<RegionPiece>> lhs_pieces;
  std::vector<std::vector<RegionPiece>> rhs_pieces;
  std::vector<Rational> cuts{Rational(0)};
  for (const auto& l : lhs.components()) {
    lhs_pieces.push_back(extract_regions(l));
    for (const auto& a : l.atoms()) cuts.push_back(a.bound);
  }
  for (const auto& l : g.components()) {
    rhs_pieces.push_back(extract_regions(l));
    for (const auto& a : l.atoms()) cuts.push_back(a.bound);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  for (std::size_t i = 0; i < cuts.size(); ++i) {
    std::optional<Rational> hi;
    if (i + 1 < cuts.size()) hi = cuts[i + 1];
    auto violation = check_cell(cuts[i], hi, forms_in_cell(lhs_pieces, cuts[i]),
                                forms_in_cell(rhs_pieces, cuts[i]));
    if (!violation) continue;
    if (auto w = concretize(*violation, lhs, g)) return w;
    throw std::logic_error("leq: symbolic violation without a concrete witness");
  }
  return std::nullopt;
}

}  // namespace rtea
