#include "moufang/malcev.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "moufang/linalg.hpp"

namespace moufang {

namespace {

std::vector<double> basis_vector(std::size_t dim, std::size_t i) {
  std::vector<double> e(dim, 0.0);
  e[i] = 1.0;
  return e;
}

// Splits a point of R^{2r} into the (g, h) halves fed to a two-argument loop map.
template <class S>
std::pair<std::span<const S>, std::span<const S>> halves(const std::vector<S>& z, std::size_t r) {
  std::span<const S> all(z);
  return {all.first(r), all.subspan(r)};
}

nlohmann::ordered_json tensor_entries(const StructureTensor& c) {
  auto entries = nlohmann::ordered_json::array();
  const std::size_t r = c.dim();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        const double v = c(i, j, k);
        if (std::abs(v) <= StructureTensor::kZeroEntry) continue;
        entries.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"value", v}});
      }
  return entries;
}

}  // namespace

void StructureTensor::antisymmetrize() {
  double worst = 0.0;
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < r_; ++j) {
      for (std::size_t k = j; k < r_; ++k) {
        const double a = (*this)(i, j, k);
        const double b = (*this)(i, k, j);
        worst = std::max(worst, std::abs(a + b));
        const double anti = 0.5 * (a - b);
        (*this)(i, j, k) = anti;
        (*this)(i, k, j) = -anti;
      }
    }
  }
  raw_asymmetry_ = std::max(raw_asymmetry_, worst);
}

double StructureTensor::max_difference(const StructureTensor& other) const {
  if (other.r_ != r_) fail(ErrorCode::InvalidArgument, "tensors differ in dimension");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - other.data_[i]));
  return m;
}

std::string StructureTensor::to_json() const {
  nlohmann::ordered_json doc;
  doc["r"] = r_;
  doc["entries"] = tensor_entries(*this);
  return doc.dump();
}

std::string StructureFunctions::to_json() const {
  nlohmann::ordered_json doc;
  doc["r"] = tensor.dim();
  doc["at"] = at;
  doc["entries"] = tensor_entries(tensor);
  return doc.dump();
}

StructureConstants structure_constants(const LoopChart& loop, Backend backend, Bracketing bracketing) {
  const std::size_t r = loop.dim();
  auto commutator = [&](const auto& z) {
    const auto [g, h] = halves(z, r);
    return loop.commutator_map(g, h, bracketing);
  };
  const std::vector<double> origin(2 * r, 0.0);
  StructureTensor c(r);
  for (std::size_t j = 0; j < r; ++j) {
    const auto u = basis_vector(2 * r, j);
    for (std::size_t k = 0; k < r; ++k) {
      const auto v = basis_vector(2 * r, r + k);
      const auto d = mixed(backend, commutator, origin, u, v);
      for (std::size_t i = 0; i < r; ++i) c(i, j, k) = d[i];
    }
  }
  c.antisymmetrize();
  return c;
}

TangentVector bracket(const StructureTensor& c, const TangentVector& x, const TangentVector& y) {
  const std::size_t r = c.dim();
  if (x.size() != r || y.size() != r) fail(ErrorCode::InvalidArgument, "bracket argument dimension mismatch");
  // Pairs j < k so that swapping x and y negates every term exactly.
  TangentVector out(r, 0.0);
  for (std::size_t i = 0; i < r; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = j + 1; k < r; ++k) s += c(i, j, k) * (x[j] * y[k] - x[k] * y[j]);
    }
    out[i] = s;
  }
  return out;
}

TangentVector jacobiator(const StructureTensor& c, const TangentVector& x, const TangentVector& y,
                         const TangentVector& z) {
  auto a = bracket(c, x, bracket(c, y, z));
  const auto b = bracket(c, y, bracket(c, z, x));
  const auto d = bracket(c, z, bracket(c, x, y));
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i] + d[i];
  return a;
}

double malcev_residual(const StructureTensor& c, const TangentVector& x, const TangentVector& y,
                       const TangentVector& z) {
  const auto lhs = bracket(c, jacobiator(c, x, y, z), x);
  const auto rhs = jacobiator(c, x, y, bracket(c, x, z));
  std::vector<double> d(lhs.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = lhs[i] - rhs[i];
  return norm2(d);
}

AuxiliaryMatrix auxiliary_functions(const LoopChart& loop, const LoopPoint& g, Backend backend) {
  const std::size_t r = loop.dim();
  if (g.size() != r) fail(ErrorCode::InvalidArgument, "base point dimension mismatch");
  auto left_translate = [&](const auto& h) {
    using S = typename std::decay_t<decltype(h)>::value_type;
    const std::vector<S> gs(g.begin(), g.end());
    return loop.mul<S>(gs, h);
  };
  const std::vector<double> origin(r, 0.0);
  AuxiliaryMatrix v(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    const auto col = directional(backend, left_translate, origin, basis_vector(r, j));
    for (std::size_t n = 0; n < r; ++n) v(n, j) = col[n];
  }
  return v;
}

StructureFunctions structure_functions(const LoopChart& loop, const LoopPoint& g, Backend backend) {
  const std::size_t r = loop.dim();
  const AuxiliaryMatrix v = auxiliary_functions(loop, g, backend);
  const LuFactorization lu(v);

  auto product = [&](const auto& z) {
    const auto [a, b] = halves(z, r);
    return loop.mul(a, b);
  };
  std::vector<double> base(2 * r, 0.0);
  std::copy(g.begin(), g.end(), base.begin());

  // lie[(i*r + j)*r + k] = v_j^n d_n v_k^i: the g-derivative of column k of
  // V along column j of V, as one mixed second derivative of (g, h) -> g h.
  std::vector<double> lie(r * r * r);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<double> u(2 * r, 0.0);
    for (std::size_t n = 0; n < r; ++n) u[n] = v(n, j);
    for (std::size_t k = 0; k < r; ++k) {
      const auto d = mixed(backend, product, base, u, basis_vector(2 * r, r + k));
      for (std::size_t i = 0; i < r; ++i) lie[(i * r + j) * r + k] = d[i];
    }
  }

  StructureFunctions sf{g, StructureTensor(r)};
  std::vector<double> rhs(r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t i = 0; i < r; ++i) rhs[i] = lie[(i * r + j) * r + k] - lie[(i * r + k) * r + j];
      const auto col = lu.solve(rhs);
      for (std::size_t n = 0; n < r; ++n) sf.tensor(n, j, k) = col[n];
    }
  }
  sf.tensor.antisymmetrize();
  return sf;
}

}  // namespace moufang
