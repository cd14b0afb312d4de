#pragma once

// Reference computations used only by the tests. Nothing here calls into the
// library's algebra, chart or differentiation code.

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

struct SignedIndex {
  int sign;
  std::size_t index;
};

// e_i e_j in the doubled algebra of dimension n, by recursion on the basis
// indices: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
inline SignedIndex basis_product(std::size_t n, std::size_t i, std::size_t j) {
  if (n == 1) return {1, 0};
  const std::size_t h = n / 2;
  auto conj_sign = [](std::size_t k) { return k == 0 ? 1 : -1; };
  if (i < h && j < h) return basis_product(h, i, j);
  if (i < h) {
    auto p = basis_product(h, j - h, i);
    return {p.sign, p.index + h};
  }
  if (j < h) {
    auto p = basis_product(h, i - h, j);
    return {p.sign * conj_sign(j), p.index + h};
  }
  auto p = basis_product(h, j - h, i - h);
  return {-p.sign * conj_sign(j - h), p.index};
}

inline std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto p = basis_product(n, i, j);
      out[p.index] += p.sign * a[i] * b[j];
    }
  }
  return out;
}

inline std::array<double, 4> hamilton(const std::array<double, 4>& p, const std::array<double, 4>& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

inline std::vector<double> unit(std::size_t n, std::size_t i) {
  std::vector<double> e(n, 0.0);
  e[i] = 1.0;
  return e;
}

inline double dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

inline std::vector<double> embed(const std::vector<double>& x) {
  double n2 = 0.0;
  for (double c : x) n2 += c * c;
  std::vector<double> u{std::sqrt(1.0 - n2)};
  u.insert(u.end(), x.begin(), x.end());
  return u;
}

inline std::vector<double> loop_mul(const std::vector<double>& x, const std::vector<double>& y) {
  const auto p = mul(embed(x), embed(y));
  return std::vector<double>(p.begin() + 1, p.end());
}

// c^k_ij as the e_k coefficient of e_i e_j - e_j e_i (imaginary units, 0-based).
inline double ambient_structure_constant(std::size_t r, std::size_t k, std::size_t i, std::size_t j) {
  const std::size_t n = r + 1;
  const auto a = basis_product(n, i + 1, j + 1);
  const auto b = basis_product(n, j + 1, i + 1);
  double v = 0.0;
  if (a.index == k + 1) v += a.sign;
  if (b.index == k + 1) v -= b.sign;
  return v;
}

// Matrices of left and right multiplication by the ambient element u.
inline Eigen::MatrixXd left_matrix(const std::vector<double>& u) {
  const std::size_t n = u.size();
  Eigen::MatrixXd m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto col = mul(u, unit(n, k));
    for (std::size_t i = 0; i < n; ++i) m(i, k) = col[i];
  }
  return m;
}

inline Eigen::MatrixXd right_matrix(const std::vector<double>& u) {
  const std::size_t n = u.size();
  Eigen::MatrixXd m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto col = mul(unit(n, k), u);
    for (std::size_t i = 0; i < n; ++i) m(i, k) = col[i];
  }
  return m;
}

// X_j(g) = d/dt (g . t e_j) at t = 0, central differences.
inline Eigen::MatrixXd vector_fields(const std::vector<double>& g, double h = 1e-5) {
  const std::size_t r = g.size();
  Eigen::MatrixXd v(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<double> p(r, 0.0), m(r, 0.0);
    p[j] = h;
    m[j] = -h;
    const auto fp = loop_mul(g, p);
    const auto fm = loop_mul(g, m);
    for (std::size_t i = 0; i < r; ++i) v(i, j) = (fp[i] - fm[i]) / (2.0 * h);
  }
  return v;
}

// c^i_jk(g) from [X_j, X_k] = c^n_jk(g) X_n, with the field Jacobians by
// central differences of vector_fields.
inline std::vector<double> structure_functions(const std::vector<double>& g, double h = 1e-4) {
  const std::size_t r = g.size();
  const Eigen::MatrixXd v = vector_fields(g);
  std::vector<Eigen::MatrixXd> dv(r);  // dv[n] = d/dg_n of V
  for (std::size_t n = 0; n < r; ++n) {
    auto gp = g, gm = g;
    gp[n] += h;
    gm[n] -= h;
    dv[n] = (vector_fields(gp) - vector_fields(gm)) / (2.0 * h);
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(v);
  std::vector<double> c(r * r * r, 0.0);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      Eigen::VectorXd br = Eigen::VectorXd::Zero(r);
      for (std::size_t n = 0; n < r; ++n) br += v(n, j) * dv[n].col(k) - v(n, k) * dv[n].col(j);
      const Eigen::VectorXd coef = lu.solve(br);
      for (std::size_t i = 0; i < r; ++i) c[(i * r + j) * r + k] = coef(i);
    }
  }
  return c;
}

// Number of Gram-matrix eigenvalues above tol * largest, for flattened matrices.
inline std::size_t gram_rank(const std::vector<std::vector<double>>& vecs, double tol) {
  const std::size_t m = vecs.size();
  if (m == 0) return 0;
  Eigen::MatrixXd gram(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < vecs[a].size(); ++i) s += vecs[a][i] * vecs[b][i];
      gram(a, b) = s;
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  const auto& ev = eig.eigenvalues();
  const double top = ev.maxCoeff();
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > tol * top) ++rank;
  }
  return rank;
}

}  // namespace oracle
