#pragma once

#include <cstddef>
#include <vector>

#include "skw/numerics/matrix.hpp"

namespace skw {

using ExactVector = std::vector<ExactComplex>;

/// Complex subspace of C^n stored by its reduced row-echelon basis, so that
/// equal subspaces have identical representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);
  /// Span of the given vectors (need not be independent).
  Subspace(std::size_t ambient_dim, const std::vector<ExactVector>& spanning);

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const ExactMatrix& basis() const { return basis_; }
  std::vector<ExactVector> basis_vectors() const;

  bool contains(const ExactVector& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Image under a complex-linear map given by an ambient x ambient matrix.
  Subspace image(const ExactMatrix& map) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  void check_compatible(const Subspace& other) const;

  std::size_t ambient_;
  ExactMatrix basis_;
};

}  // namespace skw
