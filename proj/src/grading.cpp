#include "gradedlie/grading.hpp"

#include <algorithm>
#include <stdexcept>

namespace gradedlie {

GradedAlgebra::GradedAlgebra(LieAlgebra algebra, Grading grading)
    : algebra_(std::move(algebra)),
      grading_(std::move(grading)),
      zero_(Subspace::zero(algebra_.dim())) {
  if (grading_.labels.size() != algebra_.dim())
    throw mismatch_error("label count does not match algebra dimension");
  for (const auto& g : grading_.labels)
    if (!conforms(grading_.ctx, g))
      throw mismatch_error("grading label does not conform to the group context");

  std::map<std::string, Matrix> rows_by_label;
  for (std::size_t i = 0; i < grading_.labels.size(); ++i)
    rows_by_label[element_key(grading_.labels[i])].push_back(unit_vector(algebra_.dim(), i));
  for (auto& [key, rows] : rows_by_label)
    components_.emplace(key, Subspace::span(algebra_.dim(), rows));

  support_ = grading_.labels;
  std::sort(support_.begin(), support_.end(), element_less);
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

const Subspace& GradedAlgebra::component(const GroupElement& g) const {
  if (!conforms(grading_.ctx, g))
    throw mismatch_error("component label does not conform to the group context");
  const auto it = components_.find(element_key(g));
  return it == components_.end() ? zero_ : it->second;
}

std::vector<GroupElement> GradedAlgebra::element_support(const Vector& x) const {
  if (x.size() != algebra_.dim())
    throw mismatch_error("vector length does not match algebra dimension");
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out.push_back(grading_.labels[i]);
  std::sort(out.begin(), out.end(), element_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GradingViolation> validate_grading(const GradedAlgebra& a) {
  const auto& labels = a.grading().labels;
  const std::size_t n = a.dim();
  std::vector<GradingViolation> violations;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Vector w = a.algebra().basis_bracket(i, j);
      if (is_zero(w)) continue;
      const GroupElement target = mul(a.ctx(), labels[i], labels[j]);
      std::vector<std::size_t> offending;
      for (std::size_t k = 0; k < n; ++k)
        if (!w[k].is_zero() && !(labels[k] == target)) offending.push_back(k);
      if (!offending.empty()) violations.push_back({i, j, std::move(offending)});
    }
  }
  return violations;
}

bool is_graded_ideal(const GradedAlgebra& a, const Subspace& u) {
  if (!is_ideal(a.algebra(), u)) return false;
  Subspace graded_part = Subspace::zero(a.dim());
  for (const auto& g : a.support())
    graded_part = subspace_sum(graded_part, subspace_intersect(u, a.component(g)));
  return graded_part == u;
}

Subspace nested_bracket(const GradedAlgebra& a, const std::vector<GroupElement>& gs) {
  if (gs.empty()) throw std::invalid_argument("nested_bracket requires a nonempty tuple");
  Subspace acc = a.component(gs.back());
  for (std::size_t k = gs.size() - 1; k-- > 0;)
    acc = bracket_sub(a.algebra(), a.component(gs[k]), acc);
  return acc;
}

}  // namespace gradedlie
