#pragma once

// Yamagutian, Yamaguti brackets and the closed commutation relations of the
// derivative generators at a base point g:
//
//   3 Y_g(x;y) = [S_x(g),S_y(g)] + [S_x(g),T_y(g)] + [T_x(g),T_y(g)]
//   [x,y,z]_g  = [x,[y,z]_g]_g - [y,[x,z]_g]_g + [[x,y]_g,z]_g
//
//   (1) [S_x,S_y] =  2Y + 1/3 S_[x,y] + 2/3 T_[x,y]
//   (2) [S_x,T_y] =  -Y + 1/3 S_[x,y] - 1/3 T_[x,y]
//   (3) [T_x,T_y] =  2Y - 2/3 S_[x,y] - 1/3 T_[x,y]
//   (4) 6[Y(x;y), S_z] = S_[x,y,z]
//   (5) 6[Y(x;y), T_z] = T_[x,y,z]
//   (6) 6[Y(x;y), Y(z;w)] = Y([x,y,z]; w) + Y(z; [x,y,w])
//
// with every bracket taken in the structure functions c(g).

#include <cstddef>
#include <vector>

#include "moufang/birep.hpp"
#include "moufang/lie_cartan.hpp"
#include "moufang/linalg.hpp"
#include "moufang/malcev.hpp"

namespace moufang {

class YamagutiContext {
 public:
  YamagutiContext(DerivativeGeneratorSet dgen, StructureFunctions sf);

  static YamagutiContext at(const Birepresentation& b, const LoopChart& loop, const GeneratorSet& gen,
                            const LoopPoint& g, Backend backend = Backend::Jet);

  std::size_t dim() const noexcept { return dgen_.s.size(); }
  const DerivativeGeneratorSet& generators() const noexcept { return dgen_; }
  const StructureFunctions& structure() const noexcept { return sf_; }

  Matrix s(const TangentVector& x) const { return contract(dgen_.s, x); }
  Matrix t(const TangentVector& x) const { return contract(dgen_.t, x); }
  TangentVector bracket(const TangentVector& x, const TangentVector& y) const {
    return moufang::bracket(sf_.tensor, x, y);
  }

 private:
  DerivativeGeneratorSet dgen_;
  StructureFunctions sf_;
};

Matrix yamagutian(const YamagutiContext& ctx, const TangentVector& x, const TangentVector& y);

struct YamagutianConstraints {
  double antisymmetry = 0.0;  // |Y(x;y) + Y(y;x)|
  double cyclic = 0.0;        // |Y([x,y];z) + Y([y,z];x) + Y([z,x];y)|
};

YamagutianConstraints yamagutian_constraints_residual(const YamagutiContext& ctx, const TangentVector& x,
                                                      const TangentVector& y, const TangentVector& z);

struct YamagutiBracket {
  TangentVector value;        // nested-bracket form
  TangentVector jacobi_form;  // J_g(x,y,z) + 2[[x,y],z]
  double forms_gap = 0.0;
};

YamagutiBracket yamaguti_bracket(const StructureTensor& c, const TangentVector& x, const TangentVector& y,
                                 const TangentVector& z);

struct ClosureResiduals {
  double ss = 0.0;  // relation (1)
  double st = 0.0;  // relation (2)
  double tt = 0.0;  // relation (3)
  /// Sum of the three relations against 3Y: an internal identity of the
  /// coefficients, independent of the loop.
  double definition_identity = 0.0;
};

ClosureResiduals closure_relations_residual(const YamagutiContext& ctx, const TangentVector& x,
                                            const TangentVector& y);

struct ReductivityResiduals {
  double s = 0.0;  // relation (4)
  double t = 0.0;  // relation (5)
};

ReductivityResiduals reductivity_residual(const YamagutiContext& ctx, const TangentVector& x,
                                          const TangentVector& y, const TangentVector& z);

/// Relation (6).
double yamagutian_lie_residual(const YamagutiContext& ctx, const TangentVector& x, const TangentVector& y,
                               const TangentVector& z, const TangentVector& w);

/// {S_j(g)} + {T_j(g)} + {Y_g(e_a;e_b) : a < b}, in that order.
std::vector<Matrix> closure_family(const YamagutiContext& ctx);

/// Numerical rank of the closure family; at most 2r + r(r-1)/2.
std::size_t closure_dimension(const YamagutiContext& ctx, double tol = kRankTolerance);

inline std::size_t closure_dimension_bound(std::size_t r) { return 2 * r + r * (r - 1) / 2; }

/// Largest distance of a pairwise commutator of the closure family from the
/// family's span.
double commutator_closure_remainder(const YamagutiContext& ctx, double tol = kRankTolerance);

/// |[A,[B,C]] + [B,[C,A]] + [C,[A,B]]|.
double matrix_jacobiator_norm(const Matrix& a, const Matrix& b, const Matrix& c);

}  // namespace moufang
