#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "gradedlie/linalg.hpp"

namespace gradedlie {

/// A finite-dimensional Lie algebra over Q, presented by structure constants
/// on a fixed basis: the table stores [e_i, e_j] for i < j only, so
/// antisymmetry holds by construction. Omitted pairs bracket to zero.
/// Immutable after construction.
class LieAlgebra {
 public:
  using ConstantTable = std::map<std::pair<std::size_t, std::size_t>, Vector>;

  /// Structural validation only (index ranges, vector lengths); the Jacobi
  /// identity is checked separately by validate_algebra. Throws
  /// mismatch_error on a malformed table.
  LieAlgebra(std::size_t dim, ConstantTable constants);

  std::size_t dim() const { return dim_; }

  /// Stored pairs (i < j, zero vectors dropped).
  const ConstantTable& structure_constants() const { return constants_; }

  /// [e_i, e_j] for arbitrary i, j, with the sign handled.
  Vector basis_bracket(std::size_t i, std::size_t j) const;

 private:
  friend Vector bracket_vec(const LieAlgebra&, const Vector&, const Vector&);
  friend Vector bracket_basis_vec(const LieAlgebra&, std::size_t, const Vector&);

  struct AdjEntry {
    std::size_t other;
    int sign;             // +1 if stored as (i, other), -1 if flipped
    const Vector* value;  // points into constants_
  };

  std::size_t dim_;
  ConstantTable constants_;
  std::vector<std::vector<AdjEntry>> adjacency_;  // by first index
};

struct JacobiViolation {
  std::size_t i, j, k;
  Vector residual;  // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
};

/// Empty iff the Jacobi identity holds on every basis triple i < j < k
/// (enough, by trilinearity). Antisymmetry is structural and not re-checked.
std::vector<JacobiViolation> validate_algebra(const LieAlgebra& algebra);

/// Bilinear extension of the structure constants. bracket_vec(x, x) = 0.
Vector bracket_vec(const LieAlgebra& algebra, const Vector& x, const Vector& y);

/// [e_i, y]: the common inner loop of closures and validators, linear in the
/// number of constants touching i.
Vector bracket_basis_vec(const LieAlgebra& algebra, std::size_t i, const Vector& y);

/// Span of all pairwise brackets of basis rows; symmetric in its arguments.
Subspace bracket_sub(const LieAlgebra& algebra, const Subspace& u, const Subspace& v);

/// The whole algebra as a subspace.
Subspace full_space(const LieAlgebra& algebra);

/// Least ideal containing s: the fixed point of I -> I + [L, I], reached in
/// at most dim(L) rounds since the dimension strictly grows until stable.
Subspace ideal_closure(const LieAlgebra& algebra, const Subspace& s);

/// True iff [L, u] is contained in u.
bool is_ideal(const LieAlgebra& algebra, const Subspace& u);

}  // namespace gradedlie
