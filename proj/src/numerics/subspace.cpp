#include "skw/numerics/subspace.hpp"

namespace skw {

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<ExactVector>& spanning)
    : ambient_(ambient_dim) {
  basis_ = rref(ExactMatrix::from_rows(spanning, ambient_dim)).reduced;
}

Subspace Subspace::full(std::size_t n) {
  Subspace s(n);
  s.basis_ = ExactMatrix::identity(n);
  return s;
}

std::vector<ExactVector> Subspace::basis_vectors() const {
  std::vector<ExactVector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

void Subspace::check_compatible(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw Error(Errc::dimension_mismatch, "subspaces live in different ambient dimensions");
}

bool Subspace::contains(const ExactVector& v) const {
  if (v.size() != ambient_) throw Error(Errc::dimension_mismatch, "vector length mismatch");
  auto rows = basis_vectors();
  rows.push_back(v);
  return rank(ExactMatrix::from_rows(rows, ambient_)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  check_compatible(other);
  return sum(other).dim() == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
  check_compatible(other);
  auto rows = basis_vectors();
  for (auto& v : other.basis_vectors()) rows.push_back(std::move(v));
  return Subspace(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_compatible(other);
  if (is_zero() || other.is_zero()) return Subspace(ambient_);
  // a^T U = b^T W  <=>  (a, b) in ker [U^T | -W^T]
  const std::size_t k = dim(), l = other.dim();
  ExactMatrix stacked(ambient_, k + l);
  for (std::size_t c = 0; c < ambient_; ++c) {
    for (std::size_t r = 0; r < k; ++r) stacked(c, r) = basis_(r, c);
    for (std::size_t r = 0; r < l; ++r) stacked(c, k + r) = -other.basis_(r, c);
  }
  std::vector<ExactVector> vectors;
  for (const auto& coeffs : nullspace(stacked)) {
    ExactVector v(ambient_, ExactComplex(0));
    for (std::size_t r = 0; r < k; ++r) {
      if (coeffs[r].is_zero()) continue;
      for (std::size_t c = 0; c < ambient_; ++c) v[c] += coeffs[r] * basis_(r, c);
    }
    vectors.push_back(std::move(v));
  }
  return Subspace(ambient_, vectors);
}

Subspace Subspace::image(const ExactMatrix& map) const {
  if (map.rows() != ambient_ || map.cols() != ambient_)
    throw Error(Errc::dimension_mismatch, "map shape does not match ambient dimension");
  std::vector<ExactVector> vectors;
  for (const auto& b : basis_vectors()) vectors.push_back(map * b);
  return Subspace(ambient_, vectors);
}

}  // namespace skw
