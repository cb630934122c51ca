#include "gradedlie/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace gradedlie {

GroupElement Embedding::apply(const GroupElement& g) const {
  const auto it = image_map.find(element_key(g));
  if (it == image_map.end())
    throw mismatch_error("embedding has no image for element " + element_key(g));
  return it->second;
}

Embedding Embedding::identity_on(const GroupContext& ctx,
                                 const std::vector<GroupElement>& elements) {
  return tabulate(ctx, ctx, elements, [](const GroupElement& g) { return g; });
}

std::optional<std::pair<GroupElement, GroupElement>> embedding_violation(
    const Embedding& emb, const std::vector<GroupElement>& labels) {
  for (const auto& g : labels)
    for (const auto& h : labels) {
      const GroupElement lhs = emb.apply(mul(emb.source_ctx, g, h));
      const GroupElement rhs = mul(emb.target_ctx, emb.apply(g), emb.apply(h));
      if (!(lhs == rhs)) return std::make_pair(g, h);
    }
  return std::nullopt;
}

namespace {

GroupElement abelian_elem(std::vector<long long> exps) {
  GroupElement g;
  g.kind = Backend::free_abelian;
  g.exps = std::move(exps);
  return g;
}

GroupElement perm_elem(std::vector<int> image) {
  GroupElement g;
  g.kind = Backend::permutation;
  g.image = std::move(image);
  return g;
}

GroupElement word_elem(std::vector<int> word) {
  GroupElement g;
  g.kind = Backend::free_group;
  g.word = std::move(word);
  return g;
}

Vector vec(std::initializer_list<long long> entries) {
  Vector v;
  for (long long e : entries) v.emplace_back(e);
  return v;
}

// sl2 structure constants in basis order (h, e, f)
LieAlgebra sl2_algebra() {
  LieAlgebra::ConstantTable t;
  t[{0, 1}] = vec({0, 2, 0});   // [h,e] = 2e
  t[{0, 2}] = vec({0, 0, -2});  // [h,f] = -2f
  t[{1, 2}] = vec({1, 0, 0});   // [e,f] = h
  return LieAlgebra(3, std::move(t));
}

}  // namespace

GradedAlgebra sl2_z() {
  Grading g{GroupContext::free_abelian(1),
            {abelian_elem({0}), abelian_elem({1}), abelian_elem({-1})}};
  return GradedAlgebra(sl2_algebra(), std::move(g));
}

GradedAlgebra sl2_pauli() {
  LieAlgebra::ConstantTable t;
  t[{0, 1}] = vec({0, 0, 2});   // [a,b] = 2c
  t[{0, 2}] = vec({0, 2, 0});   // [a,c] = 2b
  t[{1, 2}] = vec({-2, 0, 0});  // [b,c] = -2a
  const GroupContext z2 = GroupContext::permutation(2);
  const GroupContext ctx = GroupContext::product({z2, z2});
  const GroupElement one = perm_elem({2, 1});
  const GroupElement zero = perm_elem({1, 2});
  GroupElement ga, gb, gc;
  ga.kind = gb.kind = gc.kind = Backend::direct_product;
  ga.parts = {one, zero};
  gb.parts = {zero, one};
  gc.parts = {one, one};
  return GradedAlgebra(LieAlgebra(3, std::move(t)), Grading{ctx, {ga, gb, gc}});
}

GradedAlgebra heisenberg() {
  LieAlgebra::ConstantTable t;
  t[{0, 1}] = vec({0, 0, 1});  // [x,y] = z
  Grading g{GroupContext::free_abelian(2),
            {abelian_elem({1, 0}), abelian_elem({0, 1}), abelian_elem({1, 1})}};
  return GradedAlgebra(LieAlgebra(3, std::move(t)), std::move(g));
}

GradedAlgebra sl2_z2() {
  const GroupContext z2 = GroupContext::permutation(2);
  Grading g{z2, {perm_elem({1, 2}), perm_elem({2, 1}), perm_elem({2, 1})}};
  return GradedAlgebra(sl2_algebra(), std::move(g));
}

GradedAlgebra free_witness() {
  const GroupContext line = GroupContext::free_abelian(1);
  const GradedAlgebra block(LieAlgebra(1, {}), Grading{line, {abelian_elem({1})}});
  const GroupContext target = GroupContext::free_group(2);
  const auto letter_power = [&](int letter) {
    return [letter, target](const GroupElement& g) {
      GroupContext f = target;
      return power(f, word_elem({letter}), g.exps[0]);
    };
  };
  const Embedding emb_a =
      Embedding::tabulate(line, target, block.grading().labels, letter_power(1));
  const Embedding emb_b =
      Embedding::tabulate(line, target, block.grading().labels, letter_power(2));
  return direct_sum(block, block, emb_a, emb_b, target);
}

GradedAlgebra s3_witness() {
  const GradedAlgebra block = sl2_z2();
  const GroupContext s3 = GroupContext::permutation(3);
  const auto to_transposition = [&](std::vector<int> image) {
    return [image, s3](const GroupElement& g) {
      return g.image == std::vector<int>{2, 1} ? perm_elem(image) : identity(s3);
    };
  };
  const Embedding emb_a = Embedding::tabulate(block.ctx(), s3, block.grading().labels,
                                              to_transposition({2, 1, 3}));
  const Embedding emb_b = Embedding::tabulate(block.ctx(), s3, block.grading().labels,
                                              to_transposition({3, 2, 1}));
  return direct_sum(block, block, emb_a, emb_b, s3);
}

GradedAlgebra sl2_jacobi_broken() {
  LieAlgebra::ConstantTable t;
  t[{0, 1}] = vec({0, 2, 0});
  t[{0, 2}] = vec({0, 0, -2});
  t[{1, 2}] = vec({1, 1, 0});  // [e,f] = h + e breaks Jacobi on (h,e,f)
  Grading g{GroupContext::free_abelian(1),
            {abelian_elem({0}), abelian_elem({1}), abelian_elem({-1})}};
  return GradedAlgebra(LieAlgebra(3, std::move(t)), std::move(g));
}

GradedAlgebra group_ring_commutator_negative(const GroupContext& ctx) {
  const std::vector<GroupElement> elems = enumerate_group(ctx);
  const std::size_t n = elems.size();
  const auto index_of = [&](const GroupElement& g) {
    const auto it = std::lower_bound(elems.begin(), elems.end(), g, element_less);
    return static_cast<std::size_t>(it - elems.begin());
  };
  LieAlgebra::ConstantTable t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = zero_vector(n);
      v[index_of(mul(ctx, elems[i], elems[j]))] += Rational(1);
      v[index_of(mul(ctx, elems[j], elems[i]))] -= Rational(1);
      if (!is_zero(v)) t[{i, j}] = std::move(v);
    }
  return GradedAlgebra(LieAlgebra(n, std::move(t)), Grading{ctx, elems});
}

GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b,
                         const Embedding& emb_a, const Embedding& emb_b,
                         const GroupContext& target) {
  if (!(emb_a.target_ctx == target) || !(emb_b.target_ctx == target))
    throw mismatch_error("direct_sum embeddings must target the requested context");
  if (!(emb_a.source_ctx == a.ctx()) || !(emb_b.source_ctx == b.ctx()))
    throw mismatch_error("direct_sum embeddings must start at the summand contexts");
  if (const auto v = embedding_violation(emb_a, a.grading().labels))
    throw mismatch_error("left embedding is not a homomorphism on labels (" +
                         element_key(v->first) + ", " + element_key(v->second) + ")");
  if (const auto v = embedding_violation(emb_b, b.grading().labels))
    throw mismatch_error("right embedding is not a homomorphism on labels (" +
                         element_key(v->first) + ", " + element_key(v->second) + ")");

  const std::size_t na = a.dim(), n = na + b.dim();
  LieAlgebra::ConstantTable t;
  for (const auto& [key, value] : a.algebra().structure_constants()) {
    Vector v = value;
    v.resize(n);
    t[key] = std::move(v);
  }
  for (const auto& [key, value] : b.algebra().structure_constants()) {
    Vector v = zero_vector(n);
    for (std::size_t k = 0; k < value.size(); ++k) v[na + k] = value[k];
    t[{key.first + na, key.second + na}] = std::move(v);
  }

  std::vector<GroupElement> labels;
  labels.reserve(n);
  for (const auto& g : a.grading().labels) labels.push_back(emb_a.apply(g));
  for (const auto& g : b.grading().labels) labels.push_back(emb_b.apply(g));
  return GradedAlgebra(LieAlgebra(n, std::move(t)), Grading{target, std::move(labels)});
}

namespace {

/// Deterministic bounded draws on top of the fixed mt19937_64 stream;
/// std::uniform_int_distribution is implementation-defined, so it stays out.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next() { return eng(); }
  std::size_t below(std::size_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = eng();
    } while (v >= limit);
    return static_cast<std::size_t>(v % n);
  }
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::size_t>(hi - lo + 1)));
  }
};

Matrix invert(const Matrix& p) {
  const std::size_t k = p.size();
  Matrix block;
  for (std::size_t r = 0; r < k; ++r) {
    Vector row = p[r];
    row.resize(2 * k);
    row[k + r] = Rational(1);
    block.push_back(std::move(row));
  }
  Matrix reduced = rref(std::move(block));
  if (reduced.size() != k) throw std::logic_error("invert: singular matrix");
  Matrix inv;
  for (std::size_t r = 0; r < k; ++r)
    inv.emplace_back(reduced[r].begin() + static_cast<std::ptrdiff_t>(k), reduced[r].end());
  return inv;
}

}  // namespace

GradedAlgebra basis_shuffle(const GradedAlgebra& a, std::uint64_t seed) {
  const std::size_t n = a.dim();
  if (n == 0 || seed == 0) return a;

  // label classes in canonical key order
  std::map<std::string, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i)
    classes[element_key(a.grading().labels[i])].push_back(i);

  Rng rng(seed);
  Matrix p(n, zero_vector(n));      // rows: new basis in old coordinates
  Matrix p_inv(n, zero_vector(n));  // columns follow the same block pattern
  for (const auto& [key, idx] : classes) {
    const std::size_t k = idx.size();
    Matrix block;
    while (true) {
      block.assign(k, zero_vector(k));
      for (auto& row : block)
        for (auto& x : row) x = Rational(rng.range(-2, 2));
      if (rref(block).size() == k) break;
    }
    const Matrix block_inv = invert(block);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        p[idx[r]][idx[c]] = block[r][c];
        p_inv[idx[r]][idx[c]] = block_inv[r][c];
      }
  }

  LieAlgebra::ConstantTable t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector old_coords = bracket_vec(a.algebra(), p[i], p[j]);
      Vector new_coords = zero_vector(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (old_coords[k].is_zero()) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (!p_inv[k][c].is_zero()) new_coords[c] += old_coords[k] * p_inv[k][c];
      }
      if (!is_zero(new_coords)) t[{i, j}] = std::move(new_coords);
    }
  return GradedAlgebra(LieAlgebra(n, std::move(t)), a.grading());
}

namespace {

enum class BlockKind { sl2z, pauli, heis, sl2z2, line, s3w };

struct BlockSpec {
  BlockKind kind;
  std::size_t dim;
  std::size_t support_cost;
};

GradedAlgebra build_block(BlockKind kind) {
  switch (kind) {
    case BlockKind::sl2z: return sl2_z();
    case BlockKind::pauli: return sl2_pauli();
    case BlockKind::heis: return heisenberg();
    case BlockKind::sl2z2: return sl2_z2();
    case BlockKind::s3w: return s3_witness();
    case BlockKind::line: {
      const GroupContext line = GroupContext::free_abelian(1);
      return GradedAlgebra(LieAlgebra(1, {}), Grading{line, {abelian_elem({1})}});
    }
  }
  throw std::logic_error("unknown block kind");
}

GroupElement random_element(const GroupContext& ctx, Rng& rng) {
  switch (ctx.kind) {
    case Backend::free_group: {
      while (true) {
        const std::size_t len = rng.below(4);
        std::vector<int> word;
        for (std::size_t i = 0; i < len; ++i) {
          const int letter = static_cast<int>(rng.below(static_cast<std::size_t>(ctx.rank))) + 1;
          word.push_back(rng.below(2) ? letter : -letter);
        }
        GroupElement g = identity(ctx);
        for (int letter : word) g = mul(ctx, g, word_elem({letter}));
        if (len == 0 || !g.word.empty()) return g;  // resample words that cancel away
      }
    }
    case Backend::free_abelian: {
      std::vector<long long> e;
      for (int i = 0; i < ctx.rank; ++i) e.push_back(rng.range(-2, 2));
      return abelian_elem(std::move(e));
    }
    case Backend::permutation: {
      std::vector<int> image(static_cast<std::size_t>(ctx.degree));
      for (int i = 0; i < ctx.degree; ++i) image[static_cast<std::size_t>(i)] = i + 1;
      for (std::size_t i = image.size(); i > 1; --i)
        std::swap(image[i - 1], image[rng.below(i)]);
      return perm_elem(std::move(image));
    }
    case Backend::direct_product: {
      GroupElement g;
      g.kind = Backend::direct_product;
      for (const auto& c : ctx.components) g.parts.push_back(random_element(c, rng));
      return g;
    }
  }
  throw std::logic_error("unknown backend");
}

GroupElement random_involution(const GroupContext& ctx, Rng& rng) {
  while (true) {
    const GroupElement g = random_element(ctx, rng);
    if (mul(ctx, g, g) == identity(ctx)) return g;
  }
}

/// Builds a label map for one block into the target, homomorphic by
/// construction: abelian sources map through powers of commuting images,
/// torsion sources land on involutions (or collapse for torsion-free
/// targets), and the S3-labeled block embeds conjugated or through sign.
Embedding random_embedding(const GradedAlgebra& block, const GroupContext& target, Rng& rng) {
  const GroupContext& source = block.ctx();
  const bool torsion_free_target =
      target.kind == Backend::free_group || target.kind == Backend::free_abelian;

  if (source.kind == Backend::free_abelian) {
    if (target.kind == Backend::free_abelian) {
      std::vector<std::vector<long long>> images;  // generator -> exponent vector
      for (int i = 0; i < source.rank; ++i) {
        std::vector<long long> row;
        for (int j = 0; j < target.rank; ++j) row.push_back(rng.range(-2, 2));
        images.push_back(std::move(row));
      }
      return Embedding::tabulate(source, target, block.grading().labels,
                                 [&, images](const GroupElement& g) {
                                   std::vector<long long> e(static_cast<std::size_t>(target.rank), 0);
                                   for (std::size_t i = 0; i < images.size(); ++i)
                                     for (std::size_t j = 0; j < e.size(); ++j)
                                       e[j] += g.exps[i] * images[i][j];
                                   return abelian_elem(std::move(e));
                                 });
    }
    // powers of one element commute, so any abelian source maps cleanly
    const GroupElement t = random_element(target, rng);
    std::vector<long long> mults;
    for (int i = 0; i < source.rank; ++i) mults.push_back(rng.range(-2, 2));
    return Embedding::tabulate(source, target, block.grading().labels,
                               [&, t, mults](const GroupElement& g) {
                                 long long e = 0;
                                 for (std::size_t i = 0; i < mults.size(); ++i)
                                   e += g.exps[i] * mults[i];
                                 return power(target, t, e);
                               });
  }

  if (source == GroupContext::permutation(2)) {
    const GroupElement t = torsion_free_target ? identity(target) : random_involution(target, rng);
    return Embedding::tabulate(source, target, block.grading().labels,
                               [&, t](const GroupElement& g) {
                                 return is_identity(source, g) ? identity(target) : t;
                               });
  }

  if (source.kind == Backend::direct_product && source.components.size() == 2 &&
      source.components[0] == GroupContext::permutation(2)) {
    GroupElement t1 = identity(target), t2 = identity(target);
    if (!torsion_free_target) {
      t1 = random_involution(target, rng);
      do {
        t2 = random_involution(target, rng);
      } while (!commute(target, t1, t2));
    }
    return Embedding::tabulate(source, target, block.grading().labels,
                               [&, t1, t2](const GroupElement& g) {
                                 GroupElement r = identity(target);
                                 if (!is_identity(source.components[0], g.parts[0]))
                                   r = mul(target, r, t1);
                                 if (!is_identity(source.components[1], g.parts[1]))
                                   r = mul(target, r, t2);
                                 return r;
                               });
  }

  if (source == GroupContext::permutation(3)) {
    if (target.kind == Backend::permutation && target.degree >= 3) {
      const GroupElement sigma = random_element(target, rng);
      const GroupElement sigma_inv = inv(target, sigma);
      return Embedding::tabulate(source, target, block.grading().labels,
                                 [&, sigma, sigma_inv](const GroupElement& g) {
                                   std::vector<int> image;
                                   for (int x = 0; x < target.degree; ++x)
                                     image.push_back(x < 3 ? g.image[static_cast<std::size_t>(x)]
                                                           : x + 1);
                                   return mul(target, sigma,
                                              mul(target, perm_elem(image), sigma_inv));
                                 });
    }
    const GroupElement t = torsion_free_target ? identity(target) : random_involution(target, rng);
    return Embedding::tabulate(source, target, block.grading().labels,
                               [&, t](const GroupElement& g) {
                                 // sign homomorphism: odd permutations -> t
                                 int inversions = 0;
                                 for (std::size_t i = 0; i < g.image.size(); ++i)
                                   for (std::size_t j = i + 1; j < g.image.size(); ++j)
                                     if (g.image[i] > g.image[j]) ++inversions;
                                 return inversions % 2 ? t : identity(target);
                               });
  }

  throw std::logic_error("random_embedding: unsupported block label group");
}

constexpr std::size_t kSupportBudget = 8;

}  // namespace

GradedAlgebra random_graded(std::uint64_t seed, const RandomParams& params) {
  GroupContext target;
  std::vector<BlockSpec> catalog;
  if (params.backend == "permutation") {
    target = GroupContext::permutation(4);
    catalog = {{BlockKind::sl2z, 3, 3},  {BlockKind::pauli, 3, 3}, {BlockKind::heis, 3, 3},
               {BlockKind::sl2z2, 3, 2}, {BlockKind::s3w, 6, 3}};
  } else if (params.backend == "product") {
    target = GroupContext::product({GroupContext::permutation(2), GroupContext::permutation(2)});
    catalog = {{BlockKind::sl2z, 3, 3},
               {BlockKind::pauli, 3, 3},
               {BlockKind::heis, 3, 3},
               {BlockKind::sl2z2, 3, 2}};
  } else if (params.backend == "free") {
    target = GroupContext::free_group(2);
    catalog = {{BlockKind::sl2z, 3, 3}, {BlockKind::heis, 3, 3}, {BlockKind::line, 1, 1}};
  } else if (params.backend == "free-abelian") {
    target = GroupContext::free_abelian(2);
    catalog = {{BlockKind::sl2z, 3, 3}, {BlockKind::heis, 3, 3}, {BlockKind::line, 1, 1}};
  } else {
    throw std::invalid_argument("random_graded: unknown backend \"" + params.backend + "\"");
  }
  if (params.blocks == 0) throw std::invalid_argument("random_graded: blocks must be positive");

  Rng rng(seed);
  GradedAlgebra acc(LieAlgebra(0, {}), Grading{target, {}});
  std::size_t support_left = kSupportBudget;
  for (std::size_t b = 0; b < params.blocks; ++b) {
    std::vector<BlockSpec> eligible;
    for (const auto& spec : catalog)
      if (spec.support_cost <= support_left && acc.dim() + spec.dim <= params.max_dim)
        eligible.push_back(spec);
    if (eligible.empty())
      throw std::invalid_argument("random_graded: dimension/support budget exhausted");
    const BlockSpec spec = eligible[rng.below(eligible.size())];
    const GradedAlgebra block = build_block(spec.kind);
    const Embedding emb_block = random_embedding(block, target, rng);
    const Embedding emb_acc = Embedding::identity_on(target, acc.grading().labels);
    acc = direct_sum(acc, block, emb_acc, emb_block, target);
    support_left -= spec.support_cost;
  }
  return basis_shuffle(acc, rng.next());
}

std::vector<std::string> example_names() {
  return {"sl2-z",       "sl2-pauli",  "heisenberg",   "sl2-z2",
          "free-witness", "s3-witness", "group-ring-s3", "sl2-jacobi-broken"};
}

GradedAlgebra example_by_name(const std::string& name) {
  if (name == "sl2-z") return sl2_z();
  if (name == "sl2-pauli") return sl2_pauli();
  if (name == "heisenberg") return heisenberg();
  if (name == "sl2-z2") return sl2_z2();
  if (name == "free-witness") return free_witness();
  if (name == "s3-witness") return s3_witness();
  if (name == "group-ring-s3")
    return group_ring_commutator_negative(GroupContext::permutation(3));
  if (name == "sl2-jacobi-broken") return sl2_jacobi_broken();
  throw std::invalid_argument("unknown example \"" + name + "\"");
}

}  // namespace gradedlie
