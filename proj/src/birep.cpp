#include "moufang/birep.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "moufang/linalg.hpp"

namespace moufang {

BasicMatrix<Jet1> Birepresentation::evaluate(Side, std::span<const Jet1>) const {
  fail(ErrorCode::Unsupported, label() + " cannot be differentiated");
}

BasicMatrix<Jet2> Birepresentation::evaluate(Side, std::span<const Jet2>) const {
  fail(ErrorCode::Unsupported, label() + " cannot be differentiated");
}

LeftRightBirepresentation::LeftRightBirepresentation(int level) : loop_(level) {}

template <class S>
BasicMatrix<S> LeftRightBirepresentation::build(Side side, std::span<const S> g) const {
  const CDElement<S> a = loop_.embed(g);
  const std::size_t n = a.size();
  BasicMatrix<S> m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto ek = CDElement<S>::unit(loop_.level(), k);
    const auto col = side == Side::S ? cd_mul(a, ek) : cd_mul(ek, a);
    for (std::size_t i = 0; i < n; ++i) m(i, k) = col[i];
  }
  return m;
}

template BasicMatrix<double> LeftRightBirepresentation::build(Side, std::span<const double>) const;
template BasicMatrix<Jet1> LeftRightBirepresentation::build(Side, std::span<const Jet1>) const;
template BasicMatrix<Jet2> LeftRightBirepresentation::build(Side, std::span<const Jet2>) const;

SampleTableBirepresentation::SampleTableBirepresentation(std::size_t r, std::size_t n,
                                                         std::vector<Sample> samples)
    : r_(r), n_(n), samples_(std::move(samples)) {
  if (r_ == 0 || n_ == 0) fail(ErrorCode::InvalidArgument, "sample table needs positive r and n");
  for (const auto& s : samples_) {
    if (s.g.size() != r_) fail(ErrorCode::InvalidArgument, "sample point has wrong dimension");
    if (s.s.rows() != n_ || s.s.cols() != n_ || s.t.rows() != n_ || s.t.cols() != n_) {
      fail(ErrorCode::InvalidArgument, "sample matrix is not n x n");
    }
  }
}

namespace {

Matrix parse_matrix(const nlohmann::json& rows, std::size_t n) {
  if (!rows.is_array() || rows.size() != n) fail(ErrorCode::Parse, "matrix must have n rows");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) fail(ErrorCode::Parse, "matrix row must have n entries");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j].get<double>();
  }
  return m;
}

}  // namespace

SampleTableBirepresentation SampleTableBirepresentation::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("birepresentation table: ") + e.what());
  }
  try {
    const auto r = doc.at("r").get<std::size_t>();
    const auto n = doc.at("n").get<std::size_t>();
    std::vector<Sample> samples;
    for (const auto& s : doc.at("samples")) {
      samples.push_back({s.at("g").get<std::vector<double>>(), parse_matrix(s.at("S"), n),
                         parse_matrix(s.at("T"), n)});
    }
    return SampleTableBirepresentation(r, n, std::move(samples));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("birepresentation table: ") + e.what());
  }
}

std::ptrdiff_t SampleTableBirepresentation::find(std::span<const double> g) const {
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& p = samples_[i].g;
    if (p.size() != g.size()) continue;
    double d = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) d = std::max(d, std::abs(p[k] - g[k]));
    if (d <= kMatchTolerance) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

Matrix SampleTableBirepresentation::evaluate(Side side, std::span<const double> g) const {
  const auto i = find(g);
  if (i < 0) fail(ErrorCode::Unsupported, "point is not in the birepresentation table");
  const auto& s = samples_[static_cast<std::size_t>(i)];
  return side == Side::S ? s.s : s.t;
}

double AssociativityResiduals::max() const noexcept { return std::max({ss, tt, st}); }

AxiomResiduals birep_residuals(const Birepresentation& b, const LoopChart& loop, const LoopPoint& g,
                               const LoopPoint& h) {
  const Matrix sg = b.s_map(g), tg = b.t_map(g);
  const Matrix sh = b.s_map(h), th = b.t_map(h);
  const Matrix sgh = b.s_map(loop.mul(g, h));
  const Matrix thg = b.t_map(loop.mul(h, g));
  const LoopPoint e = loop.identity();
  const Matrix id = Matrix::identity(b.matrix_dim());

  AxiomResiduals r;
  r.s_axiom = frobenius_norm(tg * sg * sh - sgh * tg);
  r.t_axiom = frobenius_norm(sg * tg * th - thg * sg);
  r.unit = std::max(frobenius_norm(b.s_map(e) - id), frobenius_norm(b.t_map(e) - id));
  return r;
}

AssociativityResiduals associativity_residuals(const Birepresentation& b, const LoopChart& loop,
                                               const LoopPoint& g, const LoopPoint& h) {
  const Matrix sg = b.s_map(g), tg = b.t_map(g);
  const Matrix sh = b.s_map(h), th = b.t_map(h);
  AssociativityResiduals r;
  r.ss = frobenius_norm(sg * sh - b.s_map(loop.mul(g, h)));
  r.tt = frobenius_norm(tg * th - b.t_map(loop.mul(h, g)));
  r.st = frobenius_norm(sg * th - th * sg);
  return r;
}

}  // namespace moufang
