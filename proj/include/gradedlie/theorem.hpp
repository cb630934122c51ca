#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradedlie/grading.hpp"

namespace gradedlie {

/// Outcome of the nested-bracket commutation check on one label tuple.
/// For a valid grading, a nonzero bracket forces all label pairs to commute,
/// so violating_pair must stay empty; its presence is a counterexample
/// report against the whole stack, never a normal result.
struct StarResult {
  std::vector<GroupElement> tuple;
  std::size_t bracket_dim = 0;
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair;  // tuple indices
};

/// A self-contained witness of two orthogonal graded ideals. `pair` is set
/// when the ideals arise from a noncommuting support pair; ideal-search
/// witnesses carry no pair. A certificate is VALID iff every recorded flag
/// is true and, when a pair is present, the pair does not commute — all
/// re-checkable from the body plus the algebra document alone.
struct Certificate {
  std::optional<std::pair<GroupElement, GroupElement>> pair;
  Subspace ideal_i;
  Subspace ideal_j;
  bool ideals_nonzero = false;
  bool bracket_zero = false;
  bool ideals_graded = false;
  bool pair_noncommuting = false;  // meaningful only when pair is set

  bool valid() const {
    return ideals_nonzero && bracket_zero && ideals_graded &&
           (!pair.has_value() || pair_noncommuting);
  }
};

/// Computes all certificate flags from scratch for the given ideals.
Certificate make_certificate(const GradedAlgebra& a,
                             std::optional<std::pair<GroupElement, GroupElement>> pair,
                             const Subspace& ideal_i, const Subspace& ideal_j);

struct ScanBudget {
  std::size_t max_tuples = 100000;
};

/// Evaluates the nested bracket of the tuple; when nonzero, scans all index
/// pairs for a commutation failure. Throws std::invalid_argument on an
/// empty tuple.
StarResult check_star(const GradedAlgebra& a, const std::vector<GroupElement>& gs);

struct StarSweepReport {
  std::vector<StarResult> results;  // nonzero brackets only, canonical order
  std::size_t tuples_examined = 0;
  bool budget_truncated = false;
};

/// check_star over every tuple of support elements of length 2..max_len, in
/// canonical order (ascending length, then lexicographic by element order).
/// Shares suffix brackets across tuples and prunes zero subtrees, which does
/// not change the reported set. Stops at the tuple budget and flags it.
StarSweepReport star_sweep(const GradedAlgebra& a, std::size_t max_len,
                           const ScanBudget& budget = {});

/// One peel of the induction: the suffix starting at head_index was proved
/// to commute pairwise. branch is 'a' when the bracketed head pair is
/// nonzero, 'b' when the swapped-head bracket is, '=' for the two-element
/// base case, and '!' when neither branch is nonzero although the parent
/// bracket is (a Jacobi contradiction: invalid input or implementation
/// fault).
struct StarTraceLevel {
  std::size_t head_index = 0;
  char branch = '=';
  std::vector<std::pair<std::size_t, std::size_t>> conclusions;  // tuple index pairs
};

struct StarTrace {
  std::vector<GroupElement> tuple;
  std::vector<StarTraceLevel> levels;
  std::vector<std::pair<std::size_t, std::size_t>> concluded_pairs;  // sorted, deduplicated
  bool consistent = true;  // false iff some level reported branch '!'
  std::vector<std::string> lines;

  std::string text() const;
};

/// Replays the induction behind the star property on one tuple with a
/// nonzero nested bracket; throws std::invalid_argument when the bracket is
/// zero (nothing to derive).
StarTrace star_trace(const GradedAlgebra& a, const std::vector<GroupElement>& gs);

/// One certificate per noncommuting unordered support pair, canonical order:
/// the ideal closures of the two components, which the Proposition asserts
/// are nonzero-orthogonal-graded. Throws mismatch_error if either validator
/// rejects the input.
std::vector<Certificate> check_proposition(const GradedAlgebra& a);

struct FinalIdentityReport {
  GroupElement g;
  GroupElement g_prime;
  std::size_t max_len = 0;
  std::size_t tuples_checked = 0;
  std::vector<std::vector<GroupElement>> violations;  // middle tuples with nonzero bracket
};

/// Exhausts [L_{g'}, [L_{h_1}, [... [L_{h_n}, L_g]]]] = 0 over all middle
/// tuples of support elements with n <= max_len (n = 0 checks the bare
/// pair). Requires a noncommuting pair; commuting input is rejected with
/// std::invalid_argument since the identity is not claimed there.
FinalIdentityReport final_identity_check(const GradedAlgebra& a, const GroupElement& g,
                                         const GroupElement& g_prime, std::size_t max_len);

struct SupportSubgroupReport {
  bool abelian = true;
  std::optional<std::pair<GroupElement, GroupElement>> violation;
  std::optional<Certificate> certificate;  // set with violation: proof of non-graded-primeness
};

/// Pairwise commutation over the support. All pairs commuting means the
/// subgroup the support generates is abelian; otherwise the violating pair
/// comes back with its Proposition certificate.
SupportSubgroupReport support_subgroup_report(const GradedAlgebra& a);

/// Sound, incomplete search verdict. NoWitnessFound never claims
/// graded-primeness.
struct PrimeScanVerdict {
  bool witness_found = false;
  std::optional<Certificate> certificate;  // set iff witness_found
  std::size_t candidates_examined = 0;     // distinct candidate ideals
};

/// Searches the candidate family { ideal_closure(span(e_i)) } union
/// { ideal_closure(L_g) : g in support }, deduplicated and ordered by
/// subspace key; tests every unordered pair (equal pairs included) for
/// nonzero + orthogonal + graded and reports the first hit.
PrimeScanVerdict prime_scan(const GradedAlgebra& a);

}  // namespace gradedlie
