#include <doctest.h>

#include "moufang/lie_cartan.hpp"
#include "moufang/malcev.hpp"
#include "moufang/sampling.hpp"
#include "oracles.hpp"

using namespace moufang;

TEST_CASE("generators are multiplication by imaginary units") {
  for (int level = 1; level <= 3; ++level) {
    const auto b = canonical_lr(level);
    const auto gen = generators(b);
    const auto fd = generators(b, Backend::FiniteDifference);
    const std::size_t n = b.matrix_dim();
    REQUIRE(gen.s.size() == b.loop_dim());
    for (std::size_t j = 0; j < b.loop_dim(); ++j) {
      const auto l = oracle::left_matrix(oracle::unit(n, j + 1));
      const auto r = oracle::right_matrix(oracle::unit(n, j + 1));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
          CHECK(gen.s[j](a, c) == l(a, c));
          CHECK(gen.t[j](a, c) == r(a, c));
        }
      CHECK(max_abs(fd.s[j] - gen.s[j]) <= 1e-5);
      CHECK(max_abs(fd.t[j] - gen.t[j]) <= 1e-5);
    }
  }
  const auto circle = generators(canonical_lr(1));
  const Matrix rot(2, 2, {0.0, -1.0, 1.0, 0.0});
  CHECK(max_abs(circle.s[0] - rot) == 0.0);
  CHECK(max_abs(circle.t[0] - rot) == 0.0);
}

TEST_CASE("derivative generators") {
  Sampler rng(1);
  for (int level = 1; level <= 3; ++level) {
    const auto b = canonical_lr(level);
    const auto gen = generators(b);
    const auto at_e = derivative_generators(b, gen, b.loop().identity());
    for (std::size_t j = 0; j < b.loop_dim(); ++j) {
      CHECK(max_abs(at_e.s[j] - gen.s[j]) <= 1e-15);
      CHECK(max_abs(at_e.t[j] - gen.t[j]) <= 1e-15);
    }
    for (int n = 0; n < 50; ++n) {
      const auto g = rng.in_ball(b.loop_dim(), 0.5);
      const auto d = derivative_generators(b, gen, g);
      CHECK(sum_identity_residual(gen, d) <= 1e-12);
      if (level < 3) {
        for (std::size_t j = 0; j < b.loop_dim(); ++j) CHECK(max_abs(d.s[j] - gen.s[j]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("generalized Lie equations") {
  Sampler rng(2);
  for (int level = 1; level <= 3; ++level) {
    const auto b = canonical_lr(level);
    const auto gen = generators(b);
    const auto e = gle_residual(b, b.loop(), gen, b.loop().identity());
    CHECK(e.s_conjugated <= 1e-15);
    CHECK(e.t_conjugated <= 1e-15);
    for (int n = 0; n < 50; ++n) {
      const auto g = rng.in_ball(b.loop_dim(), kTheoremRadius);
      const auto r = gle_residual(b, b.loop(), gen, g);
      CHECK(r.s_conjugated <= 1e-10);
      CHECK(r.s_associator <= 1e-10);
      CHECK(r.t_conjugated <= 1e-10);
      CHECK(r.t_associator <= 1e-10);
      CHECK(r.forms_agreement <= 1e-10);
      CHECK(r.sum_identity <= 1e-12);
      if (level < 3) CHECK(r.associator_norm <= 1e-12);
    }
  }
}

TEST_CASE("translated derivatives match finite differences") {
  const auto b = canonical_lr(3);
  Sampler rng(3);
  const auto g = rng.in_ball(7, kTheoremRadius);
  for (auto side : {Side::S, Side::T}) {
    const auto jet = translated_derivatives(b, b.loop(), g, side);
    const auto fd = translated_derivatives(b, b.loop(), g, side, Backend::FiniteDifference);
    for (std::size_t j = 0; j < jet.size(); ++j) CHECK(max_abs(jet[j] - fd[j]) <= 1e-5);
  }
}

TEST_CASE("generalized Lie-Cartan relations") {
  Sampler rng(4);
  for (int level = 1; level <= 3; ++level) {
    const auto b = canonical_lr(level);
    const auto gen = generators(b);
    for (int n = 0; n < 20; ++n) {
      const auto g = rng.in_ball(b.loop_dim(), kTheoremRadius);
      const auto r = lie_cartan_residual(b, b.loop(), gen, g);
      CHECK(r.s <= 1e-8);
      CHECK(r.t <= 1e-8);
      if (level == 1) {
        CHECK(r.s <= 1e-12);
        CHECK(r.t <= 1e-12);
      }
    }
    const auto at_e = lie_cartan_residual(derivative_generators(b, gen, b.loop().identity()),
                                          structure_constants(b.loop()));
    CHECK(at_e.s <= 1e-9);
    CHECK(at_e.t <= 1e-9);
  }
}

TEST_CASE("classical corollary holds exactly where the loop is a group") {
  for (int level = 1; level <= 2; ++level) {
    const auto b = canonical_lr(level);
    const auto r = corollary_residual(generators(b), structure_constants(b.loop()));
    CHECK(r.ss <= 1e-10);
    CHECK(r.tt <= 1e-10);
    CHECK(r.st <= 1e-10);
  }
  const auto o = canonical_lr(3);
  const auto r = corollary_residual(generators(o), structure_constants(o.loop()));
  CHECK(r.st >= 0.5);
}

TEST_CASE("contract") {
  const std::vector<Matrix> mats{Matrix::identity(2), Matrix(2, 2, {0.0, 1.0, 0.0, 0.0})};
  const auto m = contract(mats, {2.0, 3.0});
  CHECK(m(0, 0) == 2.0);
  CHECK(m(0, 1) == 3.0);
  CHECK_THROWS_AS(contract(mats, {1.0}), Error);
}
