#include "gradedlie/lie.hpp"

namespace gradedlie {

LieAlgebra::LieAlgebra(std::size_t dim, ConstantTable constants) : dim_(dim) {
  for (auto& [key, value] : constants) {
    const auto [i, j] = key;
    if (i >= j || j >= dim)
      throw mismatch_error("structure constant indices must satisfy i < j < dim");
    if (value.size() != dim)
      throw mismatch_error("structure constant vector length does not match dimension");
    if (!is_zero(value)) constants_.emplace(key, std::move(value));
  }
  adjacency_.resize(dim_);
  for (const auto& [key, value] : constants_) {
    const auto [i, j] = key;
    adjacency_[i].push_back({j, +1, &value});
    adjacency_[j].push_back({i, -1, &value});
  }
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw mismatch_error("basis index out of range");
  if (i == j) return zero_vector(dim_);
  const bool flip = i > j;
  const auto it = constants_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == constants_.end()) return zero_vector(dim_);
  return flip ? scaled(it->second, Rational(-1)) : it->second;
}

std::vector<JacobiViolation> validate_algebra(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<JacobiViolation> violations;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector residual = bracket_basis_vec(algebra, i, algebra.basis_bracket(j, k));
        residual = add(residual, bracket_basis_vec(algebra, j, algebra.basis_bracket(k, i)));
        residual = add(residual, bracket_basis_vec(algebra, k, algebra.basis_bracket(i, j)));
        if (!is_zero(residual)) violations.push_back({i, j, k, std::move(residual)});
      }
    }
  }
  return violations;
}

Vector bracket_vec(const LieAlgebra& algebra, const Vector& x, const Vector& y) {
  if (x.size() != algebra.dim() || y.size() != algebra.dim())
    throw mismatch_error("vector length does not match algebra dimension");
  Vector acc = zero_vector(algebra.dim());
  for (const auto& [key, value] : algebra.constants_) {
    const auto [i, j] = key;
    const Rational coef = x[i] * y[j] - x[j] * y[i];
    add_scaled(acc, coef, value);
  }
  return acc;
}

Vector bracket_basis_vec(const LieAlgebra& algebra, std::size_t i, const Vector& y) {
  if (y.size() != algebra.dim()) throw mismatch_error("vector length does not match algebra dimension");
  if (i >= algebra.dim()) throw mismatch_error("basis index out of range");
  Vector acc = zero_vector(algebra.dim());
  for (const auto& entry : algebra.adjacency_[i]) {
    const Rational& c = y[entry.other];
    if (c.is_zero()) continue;
    add_scaled(acc, entry.sign > 0 ? c : -c, *entry.value);
  }
  return acc;
}

Subspace bracket_sub(const LieAlgebra& algebra, const Subspace& u, const Subspace& v) {
  if (u.ambient() != algebra.dim() || v.ambient() != algebra.dim())
    throw mismatch_error("ambient dimension does not match algebra dimension");
  Matrix rows;
  for (const auto& a : u.basis_rows())
    for (const auto& b : v.basis_rows()) {
      Vector w = bracket_vec(algebra, a, b);
      if (!is_zero(w)) rows.push_back(std::move(w));
    }
  return Subspace::span(algebra.dim(), rows);
}

Subspace full_space(const LieAlgebra& algebra) {
  Matrix rows;
  for (std::size_t i = 0; i < algebra.dim(); ++i) rows.push_back(unit_vector(algebra.dim(), i));
  return Subspace::span(algebra.dim(), rows);
}

Subspace ideal_closure(const LieAlgebra& algebra, const Subspace& s) {
  if (s.ambient() != algebra.dim())
    throw mismatch_error("ambient dimension does not match algebra dimension");
  Subspace closed = s;
  Matrix frontier = closed.basis_rows();
  while (!frontier.empty()) {
    Matrix produced;
    for (const auto& row : frontier) {
      for (std::size_t i = 0; i < algebra.dim(); ++i) {
        Vector w = bracket_basis_vec(algebra, i, row);
        if (!is_zero(w) && !closed.contains(w)) produced.push_back(std::move(w));
      }
    }
    if (produced.empty()) break;
    const Subspace grown = subspace_sum(closed, Subspace::span(algebra.dim(), produced));
    // only the escape directions need re-bracketing next round
    frontier.clear();
    for (const auto& row : grown.basis_rows())
      if (!closed.contains(row)) frontier.push_back(row);
    closed = grown;
  }
  return closed;
}

bool is_ideal(const LieAlgebra& algebra, const Subspace& u) {
  if (u.ambient() != algebra.dim())
    throw mismatch_error("ambient dimension does not match algebra dimension");
  for (const auto& row : u.basis_rows())
    for (std::size_t i = 0; i < algebra.dim(); ++i)
      if (!u.contains(bracket_basis_vec(algebra, i, row))) return false;
  return true;
}

}  // namespace gradedlie
