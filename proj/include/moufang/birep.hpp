#pragma once

// Birepresentations (S, T) of a loop into GL_n:
//   S_e = T_e = 1,   T_g S_g S_h = S_{gh} T_g,   S_g T_g T_h = T_{hg} S_g.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "moufang/jet.hpp"
#include "moufang/loop_chart.hpp"
#include "moufang/matrix.hpp"

namespace moufang {

enum class Side { S, T };

class Birepresentation {
 public:
  virtual ~Birepresentation() = default;

  virtual std::size_t loop_dim() const = 0;
  virtual std::size_t matrix_dim() const = 0;
  virtual std::string label() const = 0;

  /// False for tabulated maps that can only be evaluated at stored points.
  virtual bool differentiable() const { return true; }

  virtual Matrix evaluate(Side side, std::span<const double> g) const = 0;
  virtual BasicMatrix<Jet1> evaluate(Side side, std::span<const Jet1> g) const;
  virtual BasicMatrix<Jet2> evaluate(Side side, std::span<const Jet2> g) const;

  Matrix s_map(const LoopPoint& g) const { return evaluate(Side::S, std::span<const double>(g)); }
  Matrix t_map(const LoopPoint& g) const { return evaluate(Side::T, std::span<const double>(g)); }
};

/// Left and right multiplications on the ambient Cayley-Dickson algebra:
/// S_g u = embed(g) u and T_g u = u embed(g), as 2^k x 2^k matrices.
class LeftRightBirepresentation final : public Birepresentation {
 public:
  explicit LeftRightBirepresentation(int level);

  std::size_t loop_dim() const override { return loop_.dim(); }
  std::size_t matrix_dim() const override { return algebra_dim(loop_.level()); }
  std::string label() const override { return "left-right multiplication on " + loop_.name(); }
  const LoopChart& loop() const noexcept { return loop_; }

  Matrix evaluate(Side side, std::span<const double> g) const override { return build(side, g); }
  BasicMatrix<Jet1> evaluate(Side side, std::span<const Jet1> g) const override { return build(side, g); }
  BasicMatrix<Jet2> evaluate(Side side, std::span<const Jet2> g) const override { return build(side, g); }

 private:
  template <class S>
  BasicMatrix<S> build(Side side, std::span<const S> g) const;

  LoopChart loop_;
};

inline LeftRightBirepresentation canonical_lr(int level) { return LeftRightBirepresentation(level); }

/// A birepresentation known only at tabulated points; usable for axiom checks
/// when the table is closed under the products those checks need.
class SampleTableBirepresentation final : public Birepresentation {
 public:
  struct Sample {
    LoopPoint g;
    Matrix s;
    Matrix t;
  };

  SampleTableBirepresentation(std::size_t r, std::size_t n, std::vector<Sample> samples);

  /// Parses `{r, n, samples:[{g:[...], S:[[...]], T:[[...]]}]}`.
  static SampleTableBirepresentation from_json(const std::string& text);

  std::size_t loop_dim() const override { return r_; }
  std::size_t matrix_dim() const override { return n_; }
  std::string label() const override { return "sample table"; }
  bool differentiable() const override { return false; }

  Matrix evaluate(Side side, std::span<const double> g) const override;
  using Birepresentation::evaluate;

  const std::vector<Sample>& samples() const noexcept { return samples_; }

  /// Index of the stored point within kMatchTolerance of g, or -1.
  std::ptrdiff_t find(std::span<const double> g) const;

  static constexpr double kMatchTolerance = 1e-9;

 private:
  std::size_t r_;
  std::size_t n_;
  std::vector<Sample> samples_;
};

struct AxiomResiduals {
  double s_axiom = 0.0;  // |T_g S_g S_h - S_{gh} T_g|
  double t_axiom = 0.0;  // |S_g T_g T_h - T_{hg} S_g|
  double unit = 0.0;     // max(|S_e - 1|, |T_e - 1|)
};

struct AssociativityResiduals {
  double ss = 0.0;  // |S_g S_h - S_{gh}|
  double tt = 0.0;  // |T_g T_h - T_{hg}|
  double st = 0.0;  // |S_g T_h - T_h S_g|
  double max() const noexcept;
};

/// Threshold below which a sampled birepresentation is classified associative.
inline constexpr double kAssociativeThreshold = 1e-9;

AxiomResiduals birep_residuals(const Birepresentation& b, const LoopChart& loop, const LoopPoint& g,
                               const LoopPoint& h);

AssociativityResiduals associativity_residuals(const Birepresentation& b, const LoopChart& loop,
                                               const LoopPoint& g, const LoopPoint& h);

}  // namespace moufang
