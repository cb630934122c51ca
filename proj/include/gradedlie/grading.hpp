#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gradedlie/groups.hpp"
#include "gradedlie/lie.hpp"

namespace gradedlie {

/// A homogeneous-basis grading: one group label per basis index. The
/// component L_g is the span of the basis vectors labeled g, so projections
/// are exact coordinate selections.
struct Grading {
  GroupContext ctx;
  std::vector<GroupElement> labels;
};

/// An algebra together with its grading. Construction checks structure only
/// (label count, context conformance); the grading axiom is checked by
/// validate_grading. Support and components are precomputed once, so shared
/// readers are safe.
class GradedAlgebra {
 public:
  GradedAlgebra(LieAlgebra algebra, Grading grading);

  const LieAlgebra& algebra() const { return algebra_; }
  const Grading& grading() const { return grading_; }
  const GroupContext& ctx() const { return grading_.ctx; }
  std::size_t dim() const { return algebra_.dim(); }

  /// Distinct labels in canonical order. Every basis vector is nonzero, so
  /// under the homogeneous-basis representation this is exactly the support.
  const std::vector<GroupElement>& support() const { return support_; }

  /// Span of the basis vectors labeled g; the zero subspace when none is.
  const Subspace& component(const GroupElement& g) const;

  /// Labels whose component projection of x is nonzero, canonical order.
  std::vector<GroupElement> element_support(const Vector& x) const;

 private:
  LieAlgebra algebra_;
  Grading grading_;
  std::vector<GroupElement> support_;
  std::map<std::string, Subspace> components_;  // by element_key
  Subspace zero_;
};

struct GradingViolation {
  std::size_t i, j;                    // basis pair with [e_i, e_j] outside L_{g_i g_j}
  std::vector<std::size_t> offending;  // coordinates carrying the wrong label
};

/// Empty iff [e_i, e_j] lies in the component of labels[i]*labels[j] for
/// every ordered basis pair. Violations are reported in scan order (i, then j).
std::vector<GradingViolation> validate_grading(const GradedAlgebra& a);

/// An ideal equal to the sum of its component intersections.
bool is_graded_ideal(const GradedAlgebra& a, const Subspace& u);

/// Right-nested component bracket [L_{g_1},[L_{g_2},[...,L_{g_n}]]].
/// Throws std::invalid_argument on an empty tuple.
Subspace nested_bracket(const GradedAlgebra& a, const std::vector<GroupElement>& gs);

}  // namespace gradedlie
