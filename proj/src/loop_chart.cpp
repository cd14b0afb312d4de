#include "moufang/loop_chart.hpp"

#include "moufang/linalg.hpp"

namespace moufang {

LoopChart::LoopChart(int level, double radius) : level_(level), dim_(0), radius_(radius) {
  if (level < 1 || level > 3) {
    fail(ErrorCode::InvalidArgument,
         "loops exist only for levels 1..3 (the sedenion norm is not multiplicative), got " +
             std::to_string(level));
  }
  if (!(radius > 0.0 && radius < 1.0)) {
    fail(ErrorCode::InvalidArgument, "sampling radius must lie in (0, 1)");
  }
  dim_ = algebra_dim(level) - 1;
}

std::string LoopChart::name() const {
  switch (level_) {
    case 1: return "circle";
    case 2: return "quaternion";
    default: return "octonion";
  }
}

MoufangResidual LoopChart::moufang_residual(const LoopPoint& a, const LoopPoint& g,
                                            const LoopPoint& h) const {
  const auto lhs = mul(mul(a, g), mul(h, a));
  const auto gh = mul(g, h);
  const auto rhs = mul(mul(a, gh), a);
  const auto rhs_alt = mul(a, mul(gh, a));
  MoufangResidual r;
  std::vector<double> d(dim_);
  for (std::size_t i = 0; i < dim_; ++i) d[i] = lhs[i] - rhs[i];
  r.residual = norm2(d);
  for (std::size_t i = 0; i < dim_; ++i) d[i] = rhs[i] - rhs_alt[i];
  r.bracketing_gap = norm2(d);
  return r;
}

LoopChart make_loop(const std::string& name, double radius) {
  if (name == "circle") return LoopChart(1, radius);
  if (name == "quaternion") return LoopChart(2, radius);
  if (name == "octonion") return LoopChart(3, radius);
  fail(ErrorCode::InvalidArgument, "unknown loop '" + name + "' (expected circle, quaternion or octonion)");
}

}  // namespace moufang
