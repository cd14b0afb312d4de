#include <doctest.h>

#include "moufang/sampling.hpp"
#include "moufang/yamaguti.hpp"
#include "oracles.hpp"

using namespace moufang;

namespace {

struct Fixture {
  explicit Fixture(int level) : b(level), gen(generators(b)) {}
  YamagutiContext at(const LoopPoint& g) const { return YamagutiContext::at(b, b.loop(), gen, g); }
  LeftRightBirepresentation b;
  GeneratorSet gen;
};

std::vector<std::vector<double>> flatten(const std::vector<Matrix>& mats) {
  std::vector<std::vector<double>> out;
  for (const auto& m : mats) out.push_back(m.flat());
  return out;
}

double norm(const TangentVector& v) { return oracle::dist(v, TangentVector(v.size(), 0.0)); }

}  // namespace

TEST_CASE("Yamagutian basics") {
  const Fixture circle(1);
  const auto cctx = circle.at({0.3});
  CHECK(max_abs(yamagutian(cctx, {1.0}, {-0.7})) <= 1e-15);

  const Fixture oct(3);
  const auto ctx = oct.at(oct.b.loop().identity());
  CHECK(frobenius_norm(yamagutian(ctx, oracle::unit(7, 0), oracle::unit(7, 1))) >= 0.1);
  Sampler rng(1);
  const auto x = rng.in_cube(7);
  const auto expected = commutator(ctx.s(x), ctx.t(x)) * (1.0 / 3.0);
  CHECK(max_abs(yamagutian(ctx, x, x) - expected) <= 1e-14);
}

TEST_CASE("Yamagutian constraints") {
  Sampler rng(2);
  for (int level = 1; level <= 3; ++level) {
    const Fixture f(level);
    const std::size_t r = f.b.loop_dim();
    for (int p = 0; p < 10; ++p) {
      const auto ctx = f.at(rng.in_ball(r, 0.5));
      for (int n = 0; n < 10; ++n) {
        const auto x = rng.in_cube(r), y = rng.in_cube(r), z = rng.in_cube(r);
        const auto c = yamagutian_constraints_residual(ctx, x, y, z);
        CHECK(c.antisymmetry <= 1e-9);
        CHECK(c.cyclic <= 1e-9);
        CHECK(yamagutian_constraints_residual(ctx, x, x, z).antisymmetry <= 1e-10);
      }
    }
  }
}

TEST_CASE("Yamaguti bracket forms") {
  Sampler rng(3);
  const Fixture oct(3);
  const auto ctx = oct.at(rng.in_ball(7, 0.5));
  for (int n = 0; n < 100; ++n) {
    const auto x = rng.in_cube(7), y = rng.in_cube(7), z = rng.in_cube(7);
    CHECK(yamaguti_bracket(ctx.structure().tensor, x, y, z).forms_gap <= 1e-12);
    CHECK(norm(yamaguti_bracket(ctx.structure().tensor, x, x, z).value) <= 1e-12);
  }
  const Fixture quat(2);
  const auto qc = quat.at(rng.in_ball(3, 0.5)).structure().tensor;
  const auto x = rng.in_cube(3), y = rng.in_cube(3), z = rng.in_cube(3);
  const auto yb = yamaguti_bracket(qc, x, y, z);
  auto twice = bracket(qc, bracket(qc, x, y), z);
  for (auto& v : twice) v *= 2.0;
  CHECK(oracle::dist(yb.value, twice) <= 1e-12);
}

TEST_CASE("closure, reductivity and relation (6)") {
  Sampler rng(4);
  for (int level = 1; level <= 3; ++level) {
    const Fixture f(level);
    const std::size_t r = f.b.loop_dim();
    for (int p = 0; p < 10; ++p) {
      const auto ctx = f.at(rng.in_ball(r, 0.5));
      for (int n = 0; n < 5; ++n) {
        const auto x = rng.in_cube(r), y = rng.in_cube(r), z = rng.in_cube(r), w = rng.in_cube(r);
        const auto c = closure_relations_residual(ctx, x, y);
        CHECK(c.ss <= 1e-8);
        CHECK(c.st <= 1e-8);
        CHECK(c.tt <= 1e-8);
        CHECK(c.definition_identity <= 1e-12);
        const auto same = closure_relations_residual(ctx, x, x);
        CHECK(std::max({same.ss, same.st, same.tt}) <= 1e-12);
        const auto red = reductivity_residual(ctx, x, y, z);
        CHECK(red.s <= 1e-8);
        CHECK(red.t <= 1e-8);
        const auto zero = reductivity_residual(ctx, x, y, TangentVector(r, 0.0));
        CHECK(zero.s == 0.0);
        CHECK(zero.t == 0.0);
        CHECK(yamagutian_lie_residual(ctx, x, y, z, w) <= (level == 3 ? 1e-8 : 1e-10));
        CHECK(yamagutian_lie_residual(ctx, x, x, z, w) <= 1e-12);
      }
    }
  }
}

TEST_CASE("closure dimension against a Gram-matrix oracle") {
  const std::size_t expected[] = {0, 1, 6, 28};
  Sampler rng(5);
  for (int level = 1; level <= 3; ++level) {
    const Fixture f(level);
    const std::size_t r = f.b.loop_dim();
    const auto e_ctx = f.at(f.b.loop().identity());
    CHECK(closure_dimension(e_ctx) == expected[level]);
    CHECK(oracle::gram_rank(flatten(closure_family(e_ctx)), 1e-12) == expected[level]);
    CHECK(closure_dimension(e_ctx) <= closure_dimension_bound(r));
    CHECK(commutator_closure_remainder(e_ctx) <= 1e-8);
    for (int p = 0; p < 3; ++p) {
      const auto ctx = f.at(rng.in_ball(r, 0.5));
      CHECK(closure_dimension(ctx) == expected[level]);
      CHECK(commutator_closure_remainder(ctx) <= 1e-8);
    }
  }
  CHECK(closure_dimension_bound(1) == 2);
  CHECK(closure_dimension_bound(3) == 9);
  CHECK(closure_dimension_bound(7) == 35);
}

TEST_CASE("matrix Jacobi identity") {
  Sampler rng(6);
  Matrix a(3, 3), b(3, 3), c(3, 3);
  for (auto* m : {&a, &b, &c})
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) (*m)(i, j) = rng.uniform(-1.0, 1.0);
  CHECK(matrix_jacobiator_norm(a, b, c) <= 1e-14);
}
