#include "moufang/cayley_dickson.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace moufang {

double cd_abs(const CDElement<double>& a) { return std::sqrt(cd_norm2(a)); }

double alternativity_residual(const CDElement<double>& a, const CDElement<double>& b) {
  const auto left = cd_mul(cd_mul(a, a), b) - cd_mul(a, cd_mul(a, b));
  const auto right = cd_mul(cd_mul(a, b), b) - cd_mul(a, cd_mul(b, b));
  return std::max(cd_abs(left), cd_abs(right));
}

BasisTable::BasisTable(int level) : level_(level), dim_(0) {
  if (level < 1 || level > kMaxLevel) {
    fail(ErrorCode::InvalidArgument, "basis table level must be in 1..4, got " + std::to_string(level));
  }
  dim_ = algebra_dim(level);
  table_.resize(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const auto ei = CDElement<double>::unit(level, i);
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto p = cd_mul(ei, CDElement<double>::unit(level, j));
      std::size_t m = 0;
      std::size_t nonzero = 0;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (p[k] != 0.0) { m = k; ++nonzero; }
      }
      if (nonzero != 1 || std::abs(p[m]) != 1.0) {
        fail(ErrorCode::Domain, "basis product is not a signed unit");
      }
      table_[i * dim_ + j] = {p[m] > 0.0 ? 1 : -1, m};
    }
  }
}

std::string BasisTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["level"] = level_;
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto& e = (*this)(i, j);
      entries.push_back({{"i", i}, {"j", j}, {"sign", e.sign}, {"m", e.index}});
    }
  }
  doc["entries"] = std::move(entries);
  return doc.dump();
}

}  // namespace moufang
