#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradedlie/grading.hpp"

namespace gradedlie {

/// A label map between group contexts, given pointwise on the elements it
/// will be applied to (keyed by element_key). Homomorphy is not assumed;
/// embedding_violation checks it pointwise on the labels actually used.
struct Embedding {
  GroupContext source_ctx;
  GroupContext target_ctx;
  std::map<std::string, GroupElement> image_map;

  GroupElement apply(const GroupElement& g) const;

  /// Identity map on the given elements and all their pairwise products.
  static Embedding identity_on(const GroupContext& ctx,
                               const std::vector<GroupElement>& elements);

  /// Tabulates fn on the given elements and all their pairwise products.
  template <typename Fn>
  static Embedding tabulate(const GroupContext& source, const GroupContext& target,
                            const std::vector<GroupElement>& elements, Fn&& fn) {
    Embedding emb{source, target, {}};
    const auto put = [&](const GroupElement& g) { emb.image_map.emplace(element_key(g), fn(g)); };
    for (const auto& g : elements) put(g);
    for (const auto& g : elements)
      for (const auto& h : elements) put(mul(source, g, h));
    return emb;
  }
};

/// First label pair with image(g*h) != image(g)*image(h), if any.
std::optional<std::pair<GroupElement, GroupElement>> embedding_violation(
    const Embedding& emb, const std::vector<GroupElement>& labels);

// ---- the example zoo --------------------------------------------------

/// sl2 with [h,e] = 2e, [h,f] = -2f, [e,f] = h, graded by Z with
/// h -> 0, e -> 1, f -> -1. Basis order (h, e, f).
GradedAlgebra sl2_z();

/// sl2 in the Pauli basis a = diag(1,-1), b = antidiag(1,1),
/// c = antidiag(1,-1): [a,b] = 2c, [a,c] = 2b, [b,c] = -2a, graded by
/// Z2 x Z2 (two order-2 permutation factors): a -> (1,0), b -> (0,1),
/// c -> (1,1).
GradedAlgebra sl2_pauli();

/// Heisenberg algebra [x,y] = z, graded by Z^2: x -> (1,0), y -> (0,1),
/// z -> (1,1). Not graded-prime: the center is self-orthogonal.
GradedAlgebra heisenberg();

/// sl2 with the coarse Z2 grading L_0 = span(h), L_1 = span(e, f),
/// over the degree-2 permutation backend.
GradedAlgebra sl2_z2();

/// Two orthogonal lines labeled by the free letters a and b: the smallest
/// algebra whose support generates a nonabelian group.
GradedAlgebra free_witness();

/// Two copies of sl2_z2 embedded in S3 via 1 -> (1 2) and 1 -> (1 3):
/// support {id, (1 2), (1 3)} with a noncommuting pair, realized by
/// orthogonal graded ideals.
GradedAlgebra s3_witness();

/// sl2_z with the bracket [e,f] perturbed to h + e: fails the Jacobi
/// identity on the triple (0,1,2). Negative control for validate_algebra.
GradedAlgebra sl2_jacobi_broken();

/// The commutator algebra of the group ring of a finite group, with the
/// tautological labels sigma -> sigma. Passes validate_algebra always;
/// passes validate_grading iff the group is abelian. Throws mismatch_error
/// on infinite backends.
GradedAlgebra group_ring_commutator_negative(const GroupContext& ctx);

// ---- construction operators -------------------------------------------

/// Block-diagonal sum with relabeling: cross brackets vanish, labels are the
/// embedded labels. Throws mismatch_error when either embedding fails the
/// pointwise homomorphism check on its labels or targets the wrong context.
GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b,
                         const Embedding& emb_a, const Embedding& emb_b,
                         const GroupContext& target);

/// Random invertible change of basis, block-diagonal over the label classes
/// so the basis stays homogeneous. Seed 0 is the identity transform. Every
/// theorem-module verdict is invariant under this operation.
GradedAlgebra basis_shuffle(const GradedAlgebra& a, std::uint64_t seed);

struct RandomParams {
  std::size_t blocks = 2;               // number of zoo blocks to sum
  std::string backend = "permutation";  // free | free-abelian | permutation | product
  std::size_t max_dim = 24;             // hard budget on the result dimension
};

/// Seed-deterministic corpus generator: random zoo blocks, random label
/// embeddings into the chosen backend, folded by direct_sum, then shuffled.
/// Always passes both validators. Throws std::invalid_argument when the
/// params cannot fit the budget.
GradedAlgebra random_graded(std::uint64_t seed, const RandomParams& params = {});

/// Names accepted by example_by_name, in canonical order. Includes the two
/// negative controls.
std::vector<std::string> example_names();
GradedAlgebra example_by_name(const std::string& name);

}  // namespace gradedlie
