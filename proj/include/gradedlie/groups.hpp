#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradedlie/errors.hpp"

namespace gradedlie {

/// Grading-group backends. Each has canonical element forms, so equality of
/// payloads coincides with equality in the group and the word problem is
/// decidable in O(payload length).
enum class Backend { free_group, free_abelian, permutation, direct_product };

struct GroupContext {
  Backend kind = Backend::free_abelian;
  int rank = 0;                          // free_group / free_abelian
  int degree = 0;                        // permutation: acts on {1..degree}
  std::vector<GroupContext> components;  // direct_product

  /// Free group on `rank` letters a, b, c, ... (rank at most 26).
  static GroupContext free_group(int rank);
  /// Z^rank with additive notation.
  static GroupContext free_abelian(int rank);
  /// Symmetric group on {1..degree}.
  static GroupContext permutation(int degree);
  static GroupContext product(std::vector<GroupContext> components);

  friend bool operator==(const GroupContext& a, const GroupContext& b) = default;
};

/// One group element, tagged with its backend. Payloads are canonical:
/// free words are freely reduced, permutations are bijections in one-line
/// image form, product parts conform componentwise.
struct GroupElement {
  Backend kind = Backend::free_abelian;
  std::vector<int> word;            // free_group: +k / -k is the k-th letter / its inverse (1-based)
  std::vector<long long> exps;      // free_abelian
  std::vector<int> image;           // permutation: image[i] is where i+1 goes (values 1-based)
  std::vector<GroupElement> parts;  // direct_product

  friend bool operator==(const GroupElement& a, const GroupElement& b) = default;
};

bool conforms(const GroupContext& ctx, const GroupElement& g);
GroupElement identity(const GroupContext& ctx);
bool is_identity(const GroupContext& ctx, const GroupElement& g);

/// Canonical product. Permutations compose as (g*h)(x) = g(h(x)): the right
/// factor acts first. Throws mismatch_error unless both conform to ctx.
GroupElement mul(const GroupContext& ctx, const GroupElement& g, const GroupElement& h);
GroupElement inv(const GroupContext& ctx, const GroupElement& g);
GroupElement power(const GroupContext& ctx, const GroupElement& g, long long e);
bool commute(const GroupContext& ctx, const GroupElement& g, const GroupElement& h);

/// Canonical text form, identical to the document literal: free word "aB"
/// (inverses uppercase, identity empty), exponent list "[1,-2]", one-line
/// image "[2,1,3]", product "[lit,lit]".
std::string element_key(const GroupElement& g);

/// Deterministic scan order: (backend tag, element_key) with plain
/// lexicographic string comparison on the key.
bool element_less(const GroupElement& a, const GroupElement& b);

struct CommutationReport {
  bool all_commute = true;
  std::optional<std::pair<GroupElement, GroupElement>> first_violation;
};

/// Checks every unordered pair of the (deduplicated) set. When some pair
/// fails, first_violation is the lexicographically first one under
/// element_less, independent of input order.
///
/// Lemma used by callers: a subgroup generated by pairwise-commuting
/// elements is abelian. (Generators commute, so every product of generators
/// commutes with every other; inverses follow by conjugation.) all_commute
/// therefore certifies abelianness of the generated subgroup.
CommutationReport pairwise_commutation(const GroupContext& ctx,
                                       std::vector<GroupElement> elements);

/// All elements of a finite-backend context in canonical order.
/// Throws mismatch_error for infinite backends.
std::vector<GroupElement> enumerate_group(const GroupContext& ctx);

}  // namespace gradedlie
