#include "rtea/matrix.hpp"

#include <stdexcept>

namespace rtea {

namespace {

// Places `src` into `dst` with its top-left corner at (r0, c0).
void paste(RtefMatrix& dst, const RtefMatrix& src, std::size_t r0, std::size_t c0) {
  for (std::size_t i = 0; i < src.rows(); ++i) {
    for (std::size_t j = 0; j < src.cols(); ++j) dst(r0 + i, c0 + j) = src(i, j);
  }
}

struct Blocks {
  RtefMatrix a, b, c, d;
};

Blocks split_blocks(const RtefMatrix& m, std::size_t k) {
  const std::size_t n = m.rows();
  return {m.block(0, 0, k, k), m.block(0, k, k, n - k), m.block(k, 0, n - k, k),
          m.block(k, k, n - k, n - k)};
}

OmegaVector concat(OmegaVector top, const OmegaVector& bottom) {
  top.insert(top.end(), bottom.begin(), bottom.end());
  return top;
}

OmegaVector sup_vec(const OmegaVector& u, const OmegaVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("omega vector size mismatch");
  OmegaVector out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(sup_omega(u[i], v[i]));
  return out;
}

}  // namespace

RtefMatrix RtefMatrix::identity(std::size_t n) {
  RtefMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rtef::one();
  return m;
}

RtefMatrix RtefMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                             std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
  RtefMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  }
  return out;
}

RtefMatrix mat_mul(const RtefMatrix& a, const RtefMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  RtefMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rtef acc;
      for (std::size_t l = 0; l < a.cols(); ++l) {
        if (a(i, l).is_bottom() || b(l, j).is_bottom()) continue;
        acc = sup(acc, compose(a(i, l), b(l, j)));
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

RtefMatrix mat_sup(const RtefMatrix& a, const RtefMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("mat_sup: shape mismatch");
  }
  RtefMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = sup(a(i, j), b(i, j));
  }
  return out;
}

RtefMatrix mat_star(const RtefMatrix& m, std::size_t split) {
  if (!m.is_square()) throw std::invalid_argument("mat_star: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  if (n == 1) {
    RtefMatrix out(1, 1);
    out(0, 0) = star(m(0, 0));
    return out;
  }
  std::size_t k = split == 0 ? n / 2 : std::min(split, n - 1);

  // With M = [a b; c d] and s = (a + b d* c)*:
  //   M* = [s, s b d*; d* c s, d* + d* c s b d*]
  auto [a, b, c, d] = split_blocks(m, k);
  RtefMatrix ds = mat_star(d, split);
  RtefMatrix b_ds = mat_mul(b, ds);
  RtefMatrix ds_c = mat_mul(ds, c);
  RtefMatrix s = mat_star(mat_sup(a, mat_mul(b_ds, c)), split);
  RtefMatrix top_right = mat_mul(s, b_ds);
  RtefMatrix bottom_left = mat_mul(ds_c, s);
  RtefMatrix bottom_right = mat_sup(ds, mat_mul(bottom_left, b_ds));

  RtefMatrix out(n, n);
  paste(out, s, 0, 0);
  paste(out, top_right, 0, k);
  paste(out, bottom_left, k, 0);
  paste(out, bottom_right, k, k);
  return out;
}

OmegaVector act(const RtefMatrix& m, const OmegaVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("act: shape mismatch");
  OmegaVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_bottom()) continue;
      out[i] = sup_omega(out[i], act(m(i, j), v[j]));
    }
  }
  return out;
}

OmegaVector mat_omega(const RtefMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("mat_omega: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  if (n == 1) return {omega_of(m(0, 0))};

  // top = a'^omega + a'* b d^omega with a' = a + b d* c; bottom = d^omega + d* c top
  auto [a, b, c, d] = split_blocks(m, 1);
  RtefMatrix ds = mat_star(d);
  RtefMatrix a_prime = mat_sup(a, mat_mul(mat_mul(b, ds), c));
  OmegaVector d_omega = mat_omega(d);
  OmegaVector top =
      sup_vec(mat_omega(a_prime), act(mat_mul(mat_star(a_prime), b), d_omega));
  OmegaVector bottom = sup_vec(d_omega, act(mat_mul(ds, c), top));
  return concat(std::move(top), bottom);
}

OmegaVector mat_omega_accepting(const RtefMatrix& m, std::size_t k) {
  if (!m.is_square()) throw std::invalid_argument("mat_omega_accepting: matrix is not square");
  const std::size_t n = m.rows();
  if (k > n) throw std::invalid_argument("mat_omega_accepting: k exceeds the dimension");
  if (k == 0) return OmegaVector(n);
  if (k == n) return mat_omega(m);

  auto [a, b, c, d] = split_blocks(m, k);
  RtefMatrix ds = mat_star(d);
  OmegaVector top = mat_omega(mat_sup(a, mat_mul(mat_mul(b, ds), c)));
  OmegaVector bottom = act(mat_mul(ds, c), top);
  return concat(std::move(top), bottom);
}

Rtef finite_behavior(const AutomatonRep& a) {
  if (a.alpha.size() != a.m.rows()) throw std::invalid_argument("alpha size mismatch");
  RtefMatrix ms = mat_star(a.m);
  Rtef out;
  for (std::size_t i = 0; i < a.m.rows(); ++i) {
    if (!a.alpha[i]) continue;
    for (std::size_t j = 0; j < a.k; ++j) out = sup(out, ms(i, j));
  }
  return out;
}

OmegaVal buchi_behavior(const AutomatonRep& a) {
  if (a.alpha.size() != a.m.rows()) throw std::invalid_argument("alpha size mismatch");
  OmegaVector v = mat_omega_accepting(a.m, a.k);
  OmegaVal out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (a.alpha[i]) out = sup_omega(out, v[i]);
  }
  return out;
}

}  // namespace rtea
