#include "rtea/oracles.hpp"

#include <stdexcept>
#include <vector>

namespace rtea::oracles {

namespace {

Energy finite_or_bottom(const std::optional<Rational>& v) {
  return v ? Energy::finite(*v) : Energy::bottom();
}

void raise(std::optional<Rational>& acc, const Rational& v) {
  if (!acc || v > *acc) acc = v;
}

// Gaussian elimination on an augmented n x (n+1) system; nullopt when singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(a[pivot][col])) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

using Path = std::vector<std::size_t>;  // transition indices

void simple_paths(const RteaModel& m, std::size_t from, std::vector<bool>& seen, Path& path,
                  std::vector<std::pair<std::size_t, Path>>& out) {
  out.emplace_back(from, path);
  for (std::size_t i = 0; i < m.transitions.size(); ++i) {
    if (m.find_state(m.transitions[i].src) != from) continue;
    std::size_t to = m.find_state(m.transitions[i].dst);
    if (seen[to]) continue;
    seen[to] = true;
    path.push_back(i);
    simple_paths(m, to, seen, path, out);
    path.pop_back();
    seen[to] = false;
  }
}

std::vector<Atom> atoms_of(const RteaModel& m, const Path& path) {
  std::vector<Atom> atoms;
  for (std::size_t i : path) {
    const Transition& tr = m.transitions[i];
    atoms.push_back({m.states[m.find_state(tr.src)].rate, tr.price, tr.bound});
  }
  return atoms;
}

}  // namespace

Energy dp_lower_bound(const RteaModel& m, const Rational& x0, const Rational& t,
                      const DpConfig& cfg) {
  if (sgn(cfg.delta) <= 0) throw std::invalid_argument("dp_lower_bound: delta must be > 0");
  if (cfg.delta * cfg.max_steps != t) {
    throw std::invalid_argument("dp_lower_bound: delta * max_steps must equal t");
  }
  const std::size_t n = m.states.size();
  std::vector<std::size_t> src(m.transitions.size()), dst(m.transitions.size());
  for (std::size_t i = 0; i < m.transitions.size(); ++i) {
    src[i] = m.find_state(m.transitions[i].src);
    dst[i] = m.find_state(m.transitions[i].dst);
  }

  std::vector<std::optional<Rational>> energy(n);
  std::optional<Rational> best;
  const std::size_t init = m.find_state(m.initial_state().name);
  energy[init] = x0;
  if (m.states[init].accepting) best = x0;

  for (std::size_t step = 0;; ++step) {
    // Zero-time moves; energies only shrink along cycles, so n rounds reach
    // every simple path.
    for (std::size_t round = 0; round < n; ++round) {
      bool changed = false;
      for (std::size_t i = 0; i < m.transitions.size(); ++i) {
        const auto& e = energy[src[i]];
        if (!e || *e < m.transitions[i].bound) continue;
        Rational after = *e + m.transitions[i].price;
        if (m.states[dst[i]].accepting) raise(best, after);
        if (!energy[dst[i]] || after > *energy[dst[i]]) {
          energy[dst[i]] = std::move(after);
          changed = true;
        }
      }
      if (!changed) break;
    }
    if (step == cfg.max_steps) break;
    for (std::size_t s = 0; s < n; ++s) {
      if (energy[s]) *energy[s] += m.states[s].rate * cfg.delta;
    }
  }
  return finite_or_bottom(best);
}

Energy compose_split_oracle(const LinearRtef& l1, const LinearRtef& l2, const Energy& x,
                            const Rational& t, std::size_t grid) {
  if (grid == 0) throw std::invalid_argument("compose_split_oracle: grid must be > 0");
  Energy best = Energy::bottom();
  for (std::size_t i = 0; i <= grid; ++i) {
    Rational t1 = t * i / grid;
    Energy mid = eval(l1, x, Duration::finite(t1));
    best = max(best, eval(l2, mid, Duration::finite(t - t1)));
  }
  return best;
}

Energy sequence_value_by_vertices(std::span<const Atom> atoms, const Energy& x,
                                  const Rational& t) {
  if (x.is_bottom()) return x;
  if (x.is_infinite()) return x;
  const std::size_t n = atoms.size();
  if (n == 0) return x;

  // Variables: the wait w_i before transition i. Constraints other than the
  // budget sum_i w_i = t come in two families per i: w_i >= 0 and
  // e_i = x + sum_{j<=i} r_j w_j + sum_{j<i} p_j >= b_i.
  auto row_for = [&](std::size_t c) {
    std::vector<Rational> row(n + 1, Rational(0));
    if (c < n) {
      row[c] = 1;
    } else {
      std::size_t i = c - n;
      Rational rhs = atoms[i].bound - x.value();
      for (std::size_t j = 0; j <= i; ++j) row[j] = atoms[j].rate;
      for (std::size_t j = 0; j < i; ++j) rhs -= atoms[j].price;
      row[n] = rhs;
    }
    return row;
  };
  auto feasible = [&](const std::vector<Rational>& w) {
    Rational e = x.value();
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(w[i]) < 0) return false;
      e += atoms[i].rate * w[i];
      if (e < atoms[i].bound) return false;
      e += atoms[i].price;
    }
    return true;
  };

  std::optional<Rational> best;
  std::vector<std::size_t> pick;
  // Enumerate (n-1)-subsets of the 2n constraints in lexicographic order.
  auto visit = [&](auto&& self, std::size_t next) -> void {
    if (pick.size() + 1 == n) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> budget(n + 1, Rational(1));
      budget[n] = t;
      a.push_back(std::move(budget));
      for (std::size_t c : pick) a.push_back(row_for(c));
      auto w = solve(std::move(a));
      if (!w || !feasible(*w)) return;
      Rational value = x.value();
      for (std::size_t i = 0; i < n; ++i) value += atoms[i].rate * (*w)[i] + atoms[i].price;
      raise(best, value);
      return;
    }
    for (std::size_t c = next; c < 2 * n; ++c) {
      pick.push_back(c);
      self(self, c + 1);
      pick.pop_back();
    }
  };
  visit(visit, 0);
  return finite_or_bottom(best);
}

bool buchi_unroll(const RteaModel& m, const Rational& x0, const Rational& t,
                  std::size_t repetitions) {
  const std::size_t n = m.states.size();
  const std::size_t init = m.find_state(m.initial_state().name);
  std::vector<bool> seen(n, false);
  Path path;
  std::vector<std::pair<std::size_t, Path>> prefixes;
  seen[init] = true;
  simple_paths(m, init, seen, path, prefixes);

  constexpr std::size_t kGrid = 8;
  for (const auto& [s, prefix] : prefixes) {
    if (!m.states[s].accepting) continue;
    const LinearRtef pre = normalize(atoms_of(m, prefix));

    // Simple cycles through s: simple paths from s followed by an edge back.
    std::vector<bool> seen_c(n, false);
    seen_c[s] = true;
    Path cpath;
    std::vector<std::pair<std::size_t, Path>> from_s;
    simple_paths(m, s, seen_c, cpath, from_s);
    for (const auto& [end, p] : from_s) {
      for (std::size_t i = 0; i < m.transitions.size(); ++i) {
        if (m.find_state(m.transitions[i].src) != end || m.find_state(m.transitions[i].dst) != s) {
          continue;
        }
        Path cycle_path = p;
        cycle_path.push_back(i);
        const LinearRtef cycle = normalize(atoms_of(m, cycle_path));

        for (std::size_t g = 0; g <= kGrid; ++g) {
          Rational t_pre = t * g / kGrid;
          Energy e = eval(pre, Energy::finite(x0), Duration::finite(t_pre));
          Rational remaining = t - t_pre;
          for (std::size_t rep = 0; rep < repetitions && !e.is_bottom(); ++rep) {
            // A cycle that keeps the energy at zero delay repeats forever.
            if (eval(cycle, e, Duration()) >= e) return true;
            Rational budget = rep == 0 ? remaining : remaining / 2;
            e = eval(cycle, e, Duration::finite(budget));
            remaining -= budget;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace rtea::oracles
