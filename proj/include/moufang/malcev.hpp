#pragma once

// Tangent algebra of a loop chart: structure constants at the identity, the
// bracket they define, Jacobiator and Mal'tsev residuals, and the g-dependent
// structure functions from the generalized Maurer-Cartan equations.

#include <cstddef>
#include <string>
#include <vector>

#include "moufang/differentiate.hpp"
#include "moufang/loop_chart.hpp"
#include "moufang/matrix.hpp"

namespace moufang {

/// Tensor c^i_jk stored 0-based as (i, j, k); antisymmetric in (j, k).
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t r) : r_(r), data_(r * r * r, 0.0) {}

  std::size_t dim() const noexcept { return r_; }
  double& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * r_ + j) * r_ + k]; }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * r_ + j) * r_ + k]; }
  const std::vector<double>& flat() const noexcept { return data_; }

  /// max |c_jk + c_kj| of the tensor before antisymmetrization.
  double raw_asymmetry() const noexcept { return raw_asymmetry_; }

  /// Replaces the tensor by its (j, k)-antisymmetric part, recording the
  /// asymmetry it removed.
  void antisymmetrize();

  /// Largest entrywise difference.
  double max_difference(const StructureTensor& other) const;

  /// `{r, entries:[{i,j,k,value}]}` with 1-based indices matching e_1..e_r;
  /// entries with |value| <= kZeroEntry are omitted.
  std::string to_json() const;

  static constexpr double kZeroEntry = 1e-12;

 private:
  std::size_t r_ = 0;
  std::vector<double> data_;
  double raw_asymmetry_ = 0.0;
};

using StructureConstants = StructureTensor;

/// v_j^n(g) stored as (n, j).
using AuxiliaryMatrix = Matrix;

struct StructureFunctions {
  LoopPoint at;
  StructureTensor tensor;

  /// Same layout as StructureTensor::to_json plus the base point `at`.
  std::string to_json() const;
};

/// c^i_jk = d^2 (g h g^-1 h^-1)^i / dg^j dh^k at g = h = e.
StructureConstants structure_constants(const LoopChart& loop, Backend backend = Backend::Jet,
                                       Bracketing bracketing = Bracketing::LeftToRight);

/// [x, y]^i = c^i_jk x^j y^k.
TangentVector bracket(const StructureTensor& c, const TangentVector& x, const TangentVector& y);

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]].
TangentVector jacobiator(const StructureTensor& c, const TangentVector& x, const TangentVector& y,
                         const TangentVector& z);

/// |[J(x,y,z), x] - J(x, y, [x,z])|.
double malcev_residual(const StructureTensor& c, const TangentVector& x, const TangentVector& y,
                       const TangentVector& z);

/// v_j^n(g) = d(g h)^n / dh^j at h = e.
AuxiliaryMatrix auxiliary_functions(const LoopChart& loop, const LoopPoint& g,
                                    Backend backend = Backend::Jet);

/// c^n_jk(g) solving v_j^n d_n v_k^i - v_k^n d_n v_j^i = c^n_jk(g) v_n^i.
StructureFunctions structure_functions(const LoopChart& loop, const LoopPoint& g,
                                       Backend backend = Backend::Jet);

}  // namespace moufang
