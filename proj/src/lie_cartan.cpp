#include "moufang/lie_cartan.hpp"

#include <algorithm>

#include "moufang/linalg.hpp"

namespace moufang {

namespace {

std::vector<double> basis_vector(std::size_t dim, std::size_t i) {
  std::vector<double> e(dim, 0.0);
  e[i] = 1.0;
  return e;
}

Matrix unflatten(const std::vector<double>& flat, std::size_t n) { return Matrix(n, n, flat); }

// Derivative of one side of the birepresentation along `dir` at `at`.
Matrix side_derivative(const Birepresentation& b, Side side, const LoopPoint& at,
                       const std::vector<double>& dir, Backend backend) {
  auto flat_map = [&](const auto& g) {
    using S = typename std::decay_t<decltype(g)>::value_type;
    return b.evaluate(side, std::span<const S>(g)).flat();
  };
  return unflatten(directional(backend, flat_map, at, dir), b.matrix_dim());
}

void require_differentiable(const Birepresentation& b) {
  if (!b.differentiable()) fail(ErrorCode::Unsupported, b.label() + " cannot be differentiated");
}

}  // namespace

Matrix contract(const std::vector<Matrix>& mats, const std::vector<double>& w) {
  if (mats.size() != w.size() || mats.empty()) fail(ErrorCode::InvalidArgument, "contraction size mismatch");
  Matrix out(mats.front().rows(), mats.front().cols());
  for (std::size_t n = 0; n < mats.size(); ++n) {
    if (w[n] != 0.0) out += w[n] * mats[n];
  }
  return out;
}

GeneratorSet generators(const Birepresentation& b, Backend backend) {
  require_differentiable(b);
  const std::size_t r = b.loop_dim();
  const LoopPoint e(r, 0.0);
  GeneratorSet gen;
  for (std::size_t j = 0; j < r; ++j) {
    gen.s.push_back(side_derivative(b, Side::S, e, basis_vector(r, j), backend));
    gen.t.push_back(side_derivative(b, Side::T, e, basis_vector(r, j), backend));
  }
  return gen;
}

DerivativeGeneratorSet derivative_generators(const Birepresentation& b, const GeneratorSet& gen,
                                             const LoopPoint& g) {
  const Matrix sg = b.s_map(g);
  const Matrix tg = b.t_map(g);
  const Matrix sg_inv = mat_inv(sg);
  const Matrix tg_inv = mat_inv(tg);
  DerivativeGeneratorSet d{g, {}, {}};
  for (std::size_t j = 0; j < gen.s.size(); ++j) {
    d.s.push_back(tg * gen.s[j] * tg_inv);
    d.t.push_back(sg_inv * gen.t[j] * sg);
  }
  return d;
}

double sum_identity_residual(const GeneratorSet& gen, const DerivativeGeneratorSet& dgen) {
  double worst = 0.0;
  for (std::size_t j = 0; j < gen.s.size(); ++j) {
    worst = std::max(worst, frobenius_norm(dgen.s[j] + dgen.t[j] - gen.s[j] - gen.t[j]));
  }
  return worst;
}

std::vector<Matrix> translated_derivatives(const Birepresentation& b, const LoopChart& loop,
                                           const LoopPoint& g, Side side, Backend backend) {
  require_differentiable(b);
  const AuxiliaryMatrix v = auxiliary_functions(loop, g, backend);
  const std::size_t r = loop.dim();
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<double> w(r);
    for (std::size_t n = 0; n < r; ++n) w[n] = v(n, j);
    out.push_back(side_derivative(b, side, g, w, backend));
  }
  return out;
}

GleResiduals gle_residual(const Birepresentation& b, const LoopChart& loop, const GeneratorSet& gen,
                          const LoopPoint& g, Backend backend) {
  const auto dgen = derivative_generators(b, gen, g);
  const auto ds = translated_derivatives(b, loop, g, Side::S, backend);
  const auto dt = translated_derivatives(b, loop, g, Side::T, backend);
  const Matrix sg = b.s_map(g);
  const Matrix tg = b.t_map(g);

  GleResiduals r;
  for (std::size_t j = 0; j < gen.s.size(); ++j) {
    const Matrix s_conj = sg * dgen.s[j];
    const Matrix s_assoc = sg * gen.s[j] + commutator(sg, gen.t[j]);
    const Matrix t_conj = dgen.t[j] * tg;
    const Matrix t_assoc = gen.t[j] * tg + commutator(gen.s[j], tg);
    r.s_conjugated = std::max(r.s_conjugated, frobenius_norm(ds[j] - s_conj));
    r.s_associator = std::max(r.s_associator, frobenius_norm(ds[j] - s_assoc));
    r.t_conjugated = std::max(r.t_conjugated, frobenius_norm(dt[j] - t_conj));
    r.t_associator = std::max(r.t_associator, frobenius_norm(dt[j] - t_assoc));
    r.forms_agreement = std::max(
        {r.forms_agreement, frobenius_norm(s_conj - s_assoc), frobenius_norm(t_conj - t_assoc)});
    r.associator_norm = std::max(r.associator_norm, frobenius_norm(commutator(sg, gen.t[j])));
  }
  r.sum_identity = sum_identity_residual(gen, dgen);
  return r;
}

LieCartanResiduals lie_cartan_residual(const DerivativeGeneratorSet& dgen, const StructureTensor& c) {
  const std::size_t r = dgen.s.size();
  if (c.dim() != r) fail(ErrorCode::InvalidArgument, "structure tensor and generators differ in dimension");
  LieCartanResiduals out;
  std::vector<double> w(r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t n = 0; n < r; ++n) w[n] = c(n, j, k);
      const Matrix s_rel = commutator(dgen.s[j], dgen.s[k]) - contract(dgen.s, w) +
                           2.0 * commutator(dgen.s[j], dgen.t[k]);
      const Matrix t_rel = commutator(dgen.t[j], dgen.t[k]) + contract(dgen.t, w) +
                           2.0 * commutator(dgen.t[j], dgen.s[k]);
      out.s = std::max(out.s, frobenius_norm(s_rel));
      out.t = std::max(out.t, frobenius_norm(t_rel));
    }
  }
  return out;
}

LieCartanResiduals lie_cartan_residual(const Birepresentation& b, const LoopChart& loop, const GeneratorSet& gen,
                                       const LoopPoint& g, Backend backend) {
  const auto sf = structure_functions(loop, g, backend);
  return lie_cartan_residual(derivative_generators(b, gen, g), sf.tensor);
}

CorollaryResiduals corollary_residual(const GeneratorSet& gen, const StructureConstants& c) {
  const std::size_t r = gen.s.size();
  if (c.dim() != r) fail(ErrorCode::InvalidArgument, "structure tensor and generators differ in dimension");
  CorollaryResiduals out;
  std::vector<double> w(r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t n = 0; n < r; ++n) w[n] = c(n, j, k);
      out.ss = std::max(out.ss, frobenius_norm(commutator(gen.s[j], gen.s[k]) - contract(gen.s, w)));
      out.tt = std::max(out.tt, frobenius_norm(commutator(gen.t[j], gen.t[k]) + contract(gen.t, w)));
      out.st = std::max(out.st, frobenius_norm(commutator(gen.s[j], gen.t[k])));
    }
  }
  return out;
}

}  // namespace moufang
