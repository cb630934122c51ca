#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gradedlie/rational.hpp"

namespace gradedlie {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

/// v + w; throws mismatch_error on length disagreement.
Vector add(const Vector& v, const Vector& w);
/// c * v.
Vector scaled(const Vector& v, const Rational& c);
/// v += c * w, in place.
void add_scaled(Vector& v, const Rational& c, const Vector& w);

/// Reduced row echelon form of the given rows: leading entries are 1, pivot
/// columns strictly increase, pivot columns are zero in every other row, and
/// zero rows are dropped. The result depends only on the row space, so it is
/// a canonical representative. Throws mismatch_error on ragged input.
Matrix rref(Matrix rows);

/// A linear subspace of Q^n held in canonical form. Two Subspace values over
/// the same ambient dimension are equal as sets iff they compare equal.
/// Immutable after construction; safe to share across threads.
class Subspace {
 public:
  /// Zero subspace of the zero ambient space.
  Subspace() : ambient_(0) {}

  /// The zero subspace: empty basis, explicit ambient dimension.
  static Subspace zero(std::size_t ambient) { return Subspace(ambient, {}); }

  /// Canonical subspace spanned by the given rows (any number, any rank).
  static Subspace span(std::size_t ambient, const Matrix& rows);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }

  /// Basis in reduced row echelon form; no zero rows.
  const Matrix& basis_rows() const { return rows_; }

  /// Membership test by elimination against the canonical basis.
  /// The zero vector is contained in every subspace.
  bool contains(const Vector& v) const;

  /// Deterministic serialization key ("1,0;0,1"), used wherever scans need a
  /// reproducible ordering of subspaces.
  std::string key() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Subspace(std::size_t ambient, Matrix rows)
      : ambient_(ambient), rows_(std::move(rows)) {}

  std::size_t ambient_;
  Matrix rows_;  // RREF invariant maintained by construction
};

/// Smallest subspace containing both arguments.
Subspace subspace_sum(const Subspace& u, const Subspace& v);

/// Largest subspace contained in both arguments (Zassenhaus block reduction).
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Free-function form of Subspace::contains.
bool contains(const Subspace& u, const Vector& v);

}  // namespace gradedlie
