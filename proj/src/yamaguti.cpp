#include "moufang/yamaguti.hpp"

#include <algorithm>

namespace moufang {

namespace {

TangentVector axpy(const TangentVector& a, double s, const TangentVector& b) {
  TangentVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * b[i];
  return out;
}

double distance(const TangentVector& a, const TangentVector& b) {
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a[i] - b[i];
  return norm2(d);
}

std::vector<double> unit(std::size_t r, std::size_t i) {
  std::vector<double> e(r, 0.0);
  e[i] = 1.0;
  return e;
}

}  // namespace

YamagutiContext::YamagutiContext(DerivativeGeneratorSet dgen, StructureFunctions sf)
    : dgen_(std::move(dgen)), sf_(std::move(sf)) {
  if (dgen_.s.size() != sf_.tensor.dim() || dgen_.t.size() != sf_.tensor.dim()) {
    fail(ErrorCode::InvalidArgument, "generators and structure functions differ in dimension");
  }
}

YamagutiContext YamagutiContext::at(const Birepresentation& b, const LoopChart& loop, const GeneratorSet& gen,
                                    const LoopPoint& g, Backend backend) {
  return YamagutiContext(derivative_generators(b, gen, g), structure_functions(loop, g, backend));
}

Matrix yamagutian(const YamagutiContext& ctx, const TangentVector& x, const TangentVector& y) {
  const Matrix sx = ctx.s(x), sy = ctx.s(y);
  const Matrix tx = ctx.t(x), ty = ctx.t(y);
  Matrix y3 = commutator(sx, sy) + commutator(sx, ty) + commutator(tx, ty);
  return y3 * (1.0 / 3.0);
}

YamagutianConstraints yamagutian_constraints_residual(const YamagutiContext& ctx, const TangentVector& x,
                                                      const TangentVector& y, const TangentVector& z) {
  YamagutianConstraints r;
  r.antisymmetry = frobenius_norm(yamagutian(ctx, x, y) + yamagutian(ctx, y, x));
  r.cyclic = frobenius_norm(yamagutian(ctx, ctx.bracket(x, y), z) + yamagutian(ctx, ctx.bracket(y, z), x) +
                            yamagutian(ctx, ctx.bracket(z, x), y));
  return r;
}

YamagutiBracket yamaguti_bracket(const StructureTensor& c, const TangentVector& x, const TangentVector& y,
                                 const TangentVector& z) {
  const auto xy = bracket(c, x, y);
  const auto xy_z = bracket(c, xy, z);
  YamagutiBracket out;
  out.value = bracket(c, x, bracket(c, y, z));
  out.value = axpy(out.value, -1.0, bracket(c, y, bracket(c, x, z)));
  out.value = axpy(out.value, 1.0, xy_z);
  out.jacobi_form = axpy(jacobiator(c, x, y, z), 2.0, xy_z);
  out.forms_gap = distance(out.value, out.jacobi_form);
  return out;
}

ClosureResiduals closure_relations_residual(const YamagutiContext& ctx, const TangentVector& x,
                                            const TangentVector& y) {
  const Matrix sx = ctx.s(x), sy = ctx.s(y);
  const Matrix tx = ctx.t(x), ty = ctx.t(y);
  const Matrix yam = yamagutian(ctx, x, y);
  const auto xy = ctx.bracket(x, y);
  const Matrix s_xy = ctx.s(xy), t_xy = ctx.t(xy);

  const Matrix rhs1 = 2.0 * yam + (1.0 / 3.0) * s_xy + (2.0 / 3.0) * t_xy;
  const Matrix rhs2 = -1.0 * yam + (1.0 / 3.0) * s_xy - (1.0 / 3.0) * t_xy;
  const Matrix rhs3 = 2.0 * yam - (2.0 / 3.0) * s_xy - (1.0 / 3.0) * t_xy;

  ClosureResiduals r;
  r.ss = frobenius_norm(commutator(sx, sy) - rhs1);
  r.st = frobenius_norm(commutator(sx, ty) - rhs2);
  r.tt = frobenius_norm(commutator(tx, ty) - rhs3);
  r.definition_identity = frobenius_norm(rhs1 + rhs2 + rhs3 - 3.0 * yam);
  return r;
}

ReductivityResiduals reductivity_residual(const YamagutiContext& ctx, const TangentVector& x,
                                          const TangentVector& y, const TangentVector& z) {
  const Matrix yam = yamagutian(ctx, x, y);
  const auto xyz = yamaguti_bracket(ctx.structure().tensor, x, y, z).value;
  ReductivityResiduals r;
  r.s = frobenius_norm(6.0 * commutator(yam, ctx.s(z)) - ctx.s(xyz));
  r.t = frobenius_norm(6.0 * commutator(yam, ctx.t(z)) - ctx.t(xyz));
  return r;
}

double yamagutian_lie_residual(const YamagutiContext& ctx, const TangentVector& x, const TangentVector& y,
                               const TangentVector& z, const TangentVector& w) {
  const auto& c = ctx.structure().tensor;
  const auto xyz = yamaguti_bracket(c, x, y, z).value;
  const auto xyw = yamaguti_bracket(c, x, y, w).value;
  const Matrix lhs = 6.0 * commutator(yamagutian(ctx, x, y), yamagutian(ctx, z, w));
  return frobenius_norm(lhs - yamagutian(ctx, xyz, w) - yamagutian(ctx, z, xyw));
}

std::vector<Matrix> closure_family(const YamagutiContext& ctx) {
  const std::size_t r = ctx.dim();
  std::vector<Matrix> family = ctx.generators().s;
  family.insert(family.end(), ctx.generators().t.begin(), ctx.generators().t.end());
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) family.push_back(yamagutian(ctx, unit(r, a), unit(r, b)));
  return family;
}

namespace {
std::vector<std::vector<double>> flatten(const std::vector<Matrix>& mats) {
  std::vector<std::vector<double>> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back(m.flat());
  return out;
}
}  // namespace

std::size_t closure_dimension(const YamagutiContext& ctx, double tol) {
  return numeric_rank(flatten(closure_family(ctx)), tol);
}

double commutator_closure_remainder(const YamagutiContext& ctx, double tol) {
  const auto family = closure_family(ctx);
  const auto flat = flatten(family);
  const auto pivots = rank_revealing(flat, tol).pivots;
  std::vector<std::vector<double>> basis;
  for (auto p : pivots) basis.push_back(flat[p]);

  double worst = 0.0;
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      worst = std::max(worst, span_remainder(basis, commutator(family[a], family[b]).flat()));
    }
  }
  return worst;
}

double matrix_jacobiator_norm(const Matrix& a, const Matrix& b, const Matrix& c) {
  return frobenius_norm(commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                        commutator(c, commutator(a, b)));
}

}  // namespace moufang
