#pragma once

// Generators of a birepresentation, derivative generators at g, and residuals
// of the generalized Lie equations and generalized Lie-Cartan commutation
// relations.

#include <vector>

#include "moufang/birep.hpp"
#include "moufang/differentiate.hpp"
#include "moufang/loop_chart.hpp"
#include "moufang/malcev.hpp"
#include "moufang/matrix.hpp"

namespace moufang {

/// S_j = dS_g/dg^j and T_j = dT_g/dg^j at g = e.
struct GeneratorSet {
  std::vector<Matrix> s;
  std::vector<Matrix> t;
};

/// S_j(g) = T_g S_j T_g^-1 and T_j(g) = S_g^-1 T_j S_g.
struct DerivativeGeneratorSet {
  LoopPoint at;
  std::vector<Matrix> s;
  std::vector<Matrix> t;
};

GeneratorSet generators(const Birepresentation& b, Backend backend = Backend::Jet);

DerivativeGeneratorSet derivative_generators(const Birepresentation& b, const GeneratorSet& gen,
                                             const LoopPoint& g);

/// max_j |S_j(g) + T_j(g) - S_j - T_j|.
double sum_identity_residual(const GeneratorSet& gen, const DerivativeGeneratorSet& dgen);

/// Maxima over j of the generalized Lie equation defects at one point:
///   v_j^n dS_g/dg^n = S_g S_j(g) = S_g S_j + [S_g, T_j]
///   v_j^n dT_g/dg^n = T_j(g) T_g = T_j T_g + [S_j, T_g]
struct GleResiduals {
  double s_conjugated = 0.0;
  double s_associator = 0.0;
  double t_conjugated = 0.0;
  double t_associator = 0.0;
  double forms_agreement = 0.0;  // the two right-hand sides against each other
  double sum_identity = 0.0;
  double associator_norm = 0.0;  // max_j |[S_g, T_j]|; zero for associative birepresentations
};

GleResiduals gle_residual(const Birepresentation& b, const LoopChart& loop, const GeneratorSet& gen,
                          const LoopPoint& g, Backend backend = Backend::Jet);

/// v_j^n dM_g/dg^n for every j, M = S or T. Exposed for the jet/FD agreement check.
std::vector<Matrix> translated_derivatives(const Birepresentation& b, const LoopChart& loop,
                                           const LoopPoint& g, Side side, Backend backend = Backend::Jet);

struct LieCartanResiduals {
  double s = 0.0;  // [S_j(g),S_k(g)] - c^n_jk(g) S_n(g) + 2[S_j(g),T_k(g)]
  double t = 0.0;  // [T_j(g),T_k(g)] + c^n_jk(g) T_n(g) + 2[T_j(g),S_k(g)]
};

LieCartanResiduals lie_cartan_residual(const DerivativeGeneratorSet& dgen, const StructureTensor& c_at_g);

LieCartanResiduals lie_cartan_residual(const Birepresentation& b, const LoopChart& loop, const GeneratorSet& gen,
                                       const LoopPoint& g, Backend backend = Backend::Jet);

struct CorollaryResiduals {
  double ss = 0.0;  // [S_j,S_k] - c^n_jk S_n
  double tt = 0.0;  // [T_j,T_k] + c^n_jk T_n
  double st = 0.0;  // [S_j,T_k]
};

CorollaryResiduals corollary_residual(const GeneratorSet& gen, const StructureConstants& c);

/// sum_n w^n M_n.
Matrix contract(const std::vector<Matrix>& mats, const std::vector<double>& w);

}  // namespace moufang
