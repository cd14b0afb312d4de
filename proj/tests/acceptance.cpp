// Acceptance criteria 1-10, one pass/fail line each. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "moufang/birep.hpp"
#include "moufang/cayley_dickson.hpp"
#include "moufang/lie_cartan.hpp"
#include "moufang/malcev.hpp"
#include "moufang/sampling.hpp"
#include "moufang/suite.hpp"
#include "moufang/yamaguti.hpp"

using namespace moufang;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

TangentVector unit_vector(std::size_t r, std::size_t i) {
  TangentVector e(r, 0.0);
  e[i] = 1.0;
  return e;
}

Outcome moufang_suite() {
  Outcome out;
  Sampler rng(1001);
  double worst = 0.0;
  for (int level = 1; level <= 3; ++level) {
    const LoopChart loop(level);
    int done = 0;
    while (done < 100) {
      const auto a = rng.in_ball(loop.dim(), 0.5), g = rng.in_ball(loop.dim(), 0.5), h = rng.in_ball(loop.dim(), 0.5);
      try {
        worst = std::max(worst, loop.moufang_residual(a, g, h).residual);
        ++done;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ChartDomain) throw;
      }
    }
  }
  out.require(worst <= 1e-12, "moufang residual " + fmt(worst));
  double control = 0.0;
  for (std::size_t i = 1; i < 16; ++i)
    for (std::size_t j = i + 1; j < 16; ++j)
      for (std::size_t k = 1; k < 16; ++k)
        control = std::max(control, alternativity_residual(CDElement<double>::unit(4, i) + CDElement<double>::unit(4, j),
                                                           CDElement<double>::unit(4, k)));
  out.require(control >= 0.1, "sedenion control " + fmt(control));
  out.detail = out.ok ? "max residual " + fmt(worst) + ", sedenion control " + fmt(control) : out.detail;
  return out;
}

Outcome tangent_algebra() {
  Outcome out;
  for (int level = 1; level <= 3; ++level) {
    const auto c = structure_constants(LoopChart(level));
    out.require(c.raw_asymmetry() <= 1e-9, "raw asymmetry " + fmt(c.raw_asymmetry()));
    const std::size_t r = c.dim();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) out.require(c(i, j, k) == -c(i, k, j), "antisymmetry");
  }
  const auto table = basis_table(2);
  double oracle = 0.0;
  if (table(1, 2).index == 3) oracle += table(1, 2).sign;
  if (table(2, 1).index == 3) oracle -= table(2, 1).sign;
  const double c312 = structure_constants(LoopChart(2))(2, 0, 1);
  out.require(std::abs(c312 - oracle) <= 1e-9 && std::abs(oracle - 2.0) <= 1e-15, "c^3_12 = " + fmt(c312));
  const auto o = structure_constants(LoopChart(3));
  double jac = 0.0;
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = 0; b < 7; ++b)
      for (std::size_t d = 0; d < 7; ++d)
        jac = std::max(jac, norm(jacobiator(o, unit_vector(7, a), unit_vector(7, b), unit_vector(7, d))));
  out.require(jac >= 1.0, "octonion Jacobiator " + fmt(jac));
  Sampler rng(1002);
  double mal = 0.0;
  for (int n = 0; n < 200; ++n) mal = std::max(mal, malcev_residual(o, rng.in_cube(7), rng.in_cube(7), rng.in_cube(7)));
  out.require(mal <= 1e-9, "malcev residual " + fmt(mal));
  const double circle = std::abs(structure_constants(LoopChart(1))(0, 0, 0));
  out.require(circle <= 1e-12, "circle tensor " + fmt(circle));
  if (out.ok) out.detail = "c^3_12 = " + fmt(c312) + ", max |J| = " + fmt(jac) + ", malcev " + fmt(mal);
  return out;
}

Outcome maurer_cartan() {
  Outcome out;
  double initial = 0.0;
  for (int level = 1; level <= 3; ++level) {
    const LoopChart loop(level);
    initial = std::max(initial, structure_functions(loop, loop.identity()).tensor.max_difference(structure_constants(loop)));
  }
  out.require(initial <= 1e-9, "initial condition " + fmt(initial));
  Sampler rng(1003);
  const LoopChart oct(3);
  double mal = 0.0;
  for (int p = 0; p < 20; ++p) {
    const auto cg = structure_functions(oct, rng.in_ball(7, 0.5)).tensor;
    for (int n = 0; n < 50; ++n) mal = std::max(mal, malcev_residual(cg, rng.in_cube(7), rng.in_cube(7), rng.in_cube(7)));
  }
  out.require(mal <= 1e-7, "derivative malcev " + fmt(mal));
  const LoopChart quat(2);
  const auto c = structure_constants(quat);
  double drift = 0.0;
  for (int p = 0; p < 20; ++p)
    drift = std::max(drift, structure_functions(quat, rng.in_ball(3, 0.5)).tensor.max_difference(c));
  out.require(drift <= 1e-9, "quaternion drift " + fmt(drift));
  if (out.ok) out.detail = "|c(e)-c| " + fmt(initial) + ", malcev(c(g)) " + fmt(mal) + ", quaternion drift " + fmt(drift);
  return out;
}

// Canonical birepresentation with one T entry bumped by 1e-3.
class Corrupted final : public Birepresentation {
 public:
  Corrupted() : base_(3) {}
  std::size_t loop_dim() const override { return 7; }
  std::size_t matrix_dim() const override { return 8; }
  std::string label() const override { return "corrupted"; }
  Matrix evaluate(Side side, std::span<const double> g) const override {
    Matrix m = base_.evaluate(side, g);
    if (side == Side::T) m(2, 5) += 1e-3;
    return m;
  }
  using Birepresentation::evaluate;

 private:
  LeftRightBirepresentation base_;
};

Outcome birep_axioms() {
  Outcome out;
  Sampler rng(1004);
  double axioms = 0.0, assoc12 = 0.0, assoc3 = 0.0;
  for (int level = 1; level <= 3; ++level) {
    const auto b = canonical_lr(level);
    for (int n = 0; n < 100; ++n) {
      const auto g = rng.in_ball(b.loop_dim(), 0.5), h = rng.in_ball(b.loop_dim(), 0.5);
      const auto r = birep_residuals(b, b.loop(), g, h);
      axioms = std::max({axioms, r.s_axiom, r.t_axiom, r.unit});
      const double a = associativity_residuals(b, b.loop(), g, h).max();
      (level < 3 ? assoc12 : assoc3) = std::max(level < 3 ? assoc12 : assoc3, a);
    }
  }
  out.require(axioms <= 1e-12, "axioms " + fmt(axioms));
  out.require(assoc12 <= 1e-12, "associativity levels 1-2 " + fmt(assoc12));
  out.require(assoc3 >= 1e-3, "octonion witness " + fmt(assoc3));
  const Corrupted bad;
  const LoopChart oct(3);
  double detected = 0.0;
  for (int n = 0; n < 10; ++n) {
    const auto r = birep_residuals(bad, oct, rng.in_ball(7, 0.5), rng.in_ball(7, 0.5));
    detected = std::max({detected, r.s_axiom, r.t_axiom, r.unit});
  }
  out.require(detected >= 1e-4, "fault injection " + fmt(detected));
  if (out.ok)
    out.detail = "axioms " + fmt(axioms) + ", assoc(1-2) " + fmt(assoc12) + ", octonion witness " + fmt(assoc3) +
                 ", fault " + fmt(detected);
  return out;
}

Outcome generalized_lie_equations() {
  Outcome out;
  Sampler rng(1005);
  double gle = 0.0, sum = 0.0, forms = 0.0, jetfd = 0.0;
  for (int level = 1; level <= 3; ++level) {
    const auto b = canonical_lr(level);
    const auto gen = generators(b);
    for (int n = 0; n < 50; ++n) {
      const auto g = rng.in_ball(b.loop_dim(), kTheoremRadius);
      const auto r = gle_residual(b, b.loop(), gen, g);
      gle = std::max({gle, r.s_conjugated, r.s_associator, r.t_conjugated, r.t_associator});
      sum = std::max(sum, r.sum_identity);
      forms = std::max(forms, r.forms_agreement);
      if (n < 10) {
        for (auto side : {Side::S, Side::T}) {
          const auto jet = translated_derivatives(b, b.loop(), g, side);
          const auto fd = translated_derivatives(b, b.loop(), g, side, Backend::FiniteDifference);
          for (std::size_t j = 0; j < jet.size(); ++j)
            jetfd = std::max(jetfd, relative_discrepancy(jet[j].flat(), fd[j].flat()));
        }
      }
    }
  }
  out.require(gle <= 1e-10, "GLE " + fmt(gle));
  out.require(sum <= 1e-12, "sum identity " + fmt(sum));
  out.require(forms <= 1e-10, "forms " + fmt(forms));
  out.require(jetfd <= 1e-5, "jet-fd " + fmt(jetfd));
  if (out.ok)
    out.detail = "GLE " + fmt(gle) + ", sum " + fmt(sum) + ", forms " + fmt(forms) + ", jet-fd " + fmt(jetfd);
  return out;
}

Outcome lie_cartan_relations() {
  Outcome out;
  Sampler rng(1006);
  double worst = 0.0;
  for (int level = 1; level <= 3; ++level) {
    const auto b = canonical_lr(level);
    const auto gen = generators(b);
    for (int n = 0; n < 20; ++n) {
      const auto r = lie_cartan_residual(b, b.loop(), gen, rng.in_ball(b.loop_dim(), kTheoremRadius));
      worst = std::max({worst, r.s, r.t});
    }
  }
  out.require(worst <= 1e-8, "residual " + fmt(worst));
  if (out.ok) out.detail = "max residual " + fmt(worst);
  return out;
}

Outcome corollary() {
  Outcome out;
  double classical = 0.0;
  for (int level = 1; level <= 2; ++level) {
    const auto b = canonical_lr(level);
    const auto r = corollary_residual(generators(b), structure_constants(b.loop()));
    classical = std::max({classical, r.ss, r.tt, r.st});
  }
  const auto o = canonical_lr(3);
  const double st = corollary_residual(generators(o), structure_constants(o.loop())).st;
  out.require(classical <= 1e-10, "circle/quaternion " + fmt(classical));
  out.require(st >= 0.5, "octonion [S_j,T_k] " + fmt(st));
  if (out.ok) out.detail = "circle/quaternion " + fmt(classical) + ", octonion [S_j,T_k] " + fmt(st) + " (expected failure)";
  return out;
}

Outcome yamaguti_suite() {
  Outcome out;
  Sampler rng(1007);
  double worst = 0.0, forms = 0.0;
  for (int level = 1; level <= 3; ++level) {
    const auto b = canonical_lr(level);
    const auto gen = generators(b);
    const std::size_t r = b.loop_dim();
    for (int p = 0; p < 10; ++p) {
      const auto ctx = YamagutiContext::at(b, b.loop(), gen, rng.in_ball(r, 0.5));
      for (int n = 0; n < 50; ++n) {
        const auto x = rng.in_cube(r), y = rng.in_cube(r), z = rng.in_cube(r), w = rng.in_cube(r);
        const auto c = yamagutian_constraints_residual(ctx, x, y, z);
        const auto rel = closure_relations_residual(ctx, x, y);
        const auto red = reductivity_residual(ctx, x, y, z);
        worst = std::max({worst, c.antisymmetry, c.cyclic, rel.ss, rel.st, rel.tt, red.s, red.t,
                          yamagutian_lie_residual(ctx, x, y, z, w)});
        forms = std::max(forms, yamaguti_bracket(ctx.structure().tensor, x, y, z).forms_gap);
      }
    }
  }
  out.require(worst <= 1e-8, "relations " + fmt(worst));
  out.require(forms <= 1e-12, "bracket forms " + fmt(forms));
  if (out.ok) out.detail = "relations " + fmt(worst) + ", bracket forms " + fmt(forms);
  return out;
}

Outcome closure() {
  Outcome out;
  const std::size_t expected[] = {0, 1, 6, 28};
  double remainder = 0.0;
  std::string dims;
  for (int level = 1; level <= 3; ++level) {
    const auto b = canonical_lr(level);
    const auto gen = generators(b);
    const std::size_t r = b.loop_dim();
    std::vector<LoopPoint> points{b.loop().identity()};
    for (std::uint64_t seed = 1; seed <= 10; ++seed) points.push_back(Sampler(seed, 77).in_ball(r, 0.5));
    for (const auto& g : points) {
      const auto ctx = YamagutiContext::at(b, b.loop(), gen, g);
      const std::size_t d = closure_dimension(ctx, kRankTolerance);
      out.require(d == expected[level], "level " + std::to_string(level) + " dimension " + std::to_string(d));
      out.require(d <= closure_dimension_bound(r), "bound exceeded");
      remainder = std::max(remainder, commutator_closure_remainder(ctx, kRankTolerance));
    }
    dims += (dims.empty() ? "" : ", ") + std::to_string(expected[level]) + "/" + std::to_string(closure_dimension_bound(r));
  }
  out.require(remainder <= 1e-8, "remainder " + fmt(remainder));
  if (out.ok) out.detail = "dimension/bound " + dims + ", remainder " + fmt(remainder);
  return out;
}

Outcome determinism() {
  Outcome out;
  const RunConfig config;
  const auto first = emit_report_deterministic(run_suite(config));
  const auto second = emit_report_deterministic(run_suite(config));
  out.require(first == second, "reports differ");
  if (out.ok) out.detail = std::to_string(first.size()) + " identical bytes";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"moufang identity and sedenion control", moufang_suite},
      {"tangent algebra", tangent_algebra},
      {"structure functions", maurer_cartan},
      {"birepresentation axioms", birep_axioms},
      {"generalized Lie equations", generalized_lie_equations},
      {"generalized Lie-Cartan relations", lie_cartan_relations},
      {"classical corollary", corollary},
      {"Yamaguti suite", yamaguti_suite},
      {"closure and dimension", closure},
      {"report determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 60.0) o.require(false, "took " + std::to_string(secs) + " s");
    std::printf("[%s] criterion %2zu: %-40s %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    if (!o.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
