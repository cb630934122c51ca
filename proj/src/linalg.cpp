#include "gradedlie/linalg.hpp"

#include <algorithm>

namespace gradedlie {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = Rational(1);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vector add(const Vector& v, const Vector& w) {
  if (v.size() != w.size()) throw mismatch_error("vector length mismatch in add");
  Vector r = v;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += w[i];
  return r;
}

Vector scaled(const Vector& v, const Rational& c) {
  Vector r = v;
  for (auto& x : r) x *= c;
  return r;
}

void add_scaled(Vector& v, const Rational& c, const Vector& w) {
  if (v.size() != w.size()) throw mismatch_error("vector length mismatch in add_scaled");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
}

Matrix rref(Matrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw mismatch_error("ragged rows in rref");

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < rows.size() && rows[found][col].is_zero()) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);

    const Rational inv = Rational(1) / rows[pivot_row][col];
    for (std::size_t c = col; c < cols; ++c) rows[pivot_row][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

Subspace Subspace::span(std::size_t ambient, const Matrix& rows) {
  for (const auto& r : rows)
    if (r.size() != ambient) throw mismatch_error("row length does not match ambient dimension");
  return Subspace(ambient, rref(rows));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw mismatch_error("vector length does not match ambient dimension");
  Vector residue = v;
  for (const auto& row : rows_) {
    std::size_t pivot = 0;
    while (pivot < ambient_ && row[pivot].is_zero()) ++pivot;
    if (!residue[pivot].is_zero()) add_scaled(residue, -residue[pivot], row);
  }
  return gradedlie::is_zero(residue);
}

std::string Subspace::key() const {
  std::string s;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += ';';
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (c) s += ',';
      s += rows_[r][c].str();
    }
  }
  return s;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw mismatch_error("ambient dimension mismatch in subspace_sum");
  Matrix stacked = u.basis_rows();
  stacked.insert(stacked.end(), v.basis_rows().begin(), v.basis_rows().end());
  return Subspace::span(u.ambient(), stacked);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient())
    throw mismatch_error("ambient dimension mismatch in subspace_intersect");
  const std::size_t n = u.ambient();

  // Zassenhaus: reduce [U | U; V | 0]; rows whose left half vanished carry a
  // basis of the intersection in their right half.
  Matrix block;
  for (const auto& r : u.basis_rows()) {
    Vector row(2 * n);
    for (std::size_t c = 0; c < n; ++c) row[c] = row[n + c] = r[c];
    block.push_back(std::move(row));
  }
  for (const auto& r : v.basis_rows()) {
    Vector row(2 * n);
    for (std::size_t c = 0; c < n; ++c) row[c] = r[c];
    block.push_back(std::move(row));
  }

  Matrix reduced = rref(std::move(block));
  Matrix inter;
  for (const auto& row : reduced) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n && left_zero; ++c) left_zero = row[c].is_zero();
    if (!left_zero) continue;
    inter.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return Subspace::span(n, inter);
}

bool contains(const Subspace& u, const Vector& v) { return u.contains(v); }

}  // namespace gradedlie
