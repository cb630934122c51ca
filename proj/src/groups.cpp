#include "gradedlie/groups.hpp"

#include <algorithm>
#include <cstdlib>

namespace gradedlie {

GroupContext GroupContext::free_group(int rank) {
  if (rank < 0 || rank > 26) throw mismatch_error("free group rank must be in 0..26");
  GroupContext c;
  c.kind = Backend::free_group;
  c.rank = rank;
  return c;
}

GroupContext GroupContext::free_abelian(int rank) {
  if (rank < 0) throw mismatch_error("free abelian rank must be nonnegative");
  GroupContext c;
  c.kind = Backend::free_abelian;
  c.rank = rank;
  return c;
}

GroupContext GroupContext::permutation(int degree) {
  if (degree < 1) throw mismatch_error("permutation degree must be positive");
  GroupContext c;
  c.kind = Backend::permutation;
  c.degree = degree;
  return c;
}

GroupContext GroupContext::product(std::vector<GroupContext> components) {
  GroupContext c;
  c.kind = Backend::direct_product;
  c.components = std::move(components);
  return c;
}

bool conforms(const GroupContext& ctx, const GroupElement& g) {
  if (g.kind != ctx.kind) return false;
  switch (ctx.kind) {
    case Backend::free_group: {
      for (std::size_t i = 0; i < g.word.size(); ++i) {
        const int letter = g.word[i];
        if (letter == 0 || std::abs(letter) > ctx.rank) return false;
        if (i > 0 && g.word[i - 1] == -letter) return false;  // not freely reduced
      }
      return g.exps.empty() && g.image.empty() && g.parts.empty();
    }
    case Backend::free_abelian:
      return g.exps.size() == static_cast<std::size_t>(ctx.rank) && g.word.empty() &&
             g.image.empty() && g.parts.empty();
    case Backend::permutation: {
      if (g.image.size() != static_cast<std::size_t>(ctx.degree)) return false;
      std::vector<bool> seen(g.image.size(), false);
      for (int v : g.image) {
        if (v < 1 || v > ctx.degree || seen[static_cast<std::size_t>(v - 1)]) return false;
        seen[static_cast<std::size_t>(v - 1)] = true;
      }
      return g.word.empty() && g.exps.empty() && g.parts.empty();
    }
    case Backend::direct_product: {
      if (g.parts.size() != ctx.components.size()) return false;
      for (std::size_t i = 0; i < g.parts.size(); ++i)
        if (!conforms(ctx.components[i], g.parts[i])) return false;
      return g.word.empty() && g.exps.empty() && g.image.empty();
    }
  }
  return false;
}

namespace {

void require_conforms(const GroupContext& ctx, const GroupElement& g, const char* op) {
  if (!conforms(ctx, g))
    throw mismatch_error(std::string("group element does not conform to context in ") + op);
}

}  // namespace

GroupElement identity(const GroupContext& ctx) {
  GroupElement g;
  g.kind = ctx.kind;
  switch (ctx.kind) {
    case Backend::free_group:
      break;
    case Backend::free_abelian:
      g.exps.assign(static_cast<std::size_t>(ctx.rank), 0);
      break;
    case Backend::permutation:
      g.image.resize(static_cast<std::size_t>(ctx.degree));
      for (int i = 0; i < ctx.degree; ++i) g.image[static_cast<std::size_t>(i)] = i + 1;
      break;
    case Backend::direct_product:
      for (const auto& c : ctx.components) g.parts.push_back(identity(c));
      break;
  }
  return g;
}

bool is_identity(const GroupContext& ctx, const GroupElement& g) {
  return g == identity(ctx);
}

GroupElement mul(const GroupContext& ctx, const GroupElement& g, const GroupElement& h) {
  require_conforms(ctx, g, "mul");
  require_conforms(ctx, h, "mul");
  GroupElement r;
  r.kind = ctx.kind;
  switch (ctx.kind) {
    case Backend::free_group: {
      r.word = g.word;
      for (int letter : h.word) {
        if (!r.word.empty() && r.word.back() == -letter)
          r.word.pop_back();
        else
          r.word.push_back(letter);
      }
      break;
    }
    case Backend::free_abelian: {
      r.exps = g.exps;
      for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += h.exps[i];
      break;
    }
    case Backend::permutation: {
      // right factor acts first: (g*h)(x) = g(h(x))
      r.image.resize(g.image.size());
      for (std::size_t x = 0; x < r.image.size(); ++x)
        r.image[x] = g.image[static_cast<std::size_t>(h.image[x] - 1)];
      break;
    }
    case Backend::direct_product: {
      for (std::size_t i = 0; i < ctx.components.size(); ++i)
        r.parts.push_back(mul(ctx.components[i], g.parts[i], h.parts[i]));
      break;
    }
  }
  return r;
}

GroupElement inv(const GroupContext& ctx, const GroupElement& g) {
  require_conforms(ctx, g, "inv");
  GroupElement r;
  r.kind = ctx.kind;
  switch (ctx.kind) {
    case Backend::free_group: {
      r.word.reserve(g.word.size());
      for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) r.word.push_back(-*it);
      break;
    }
    case Backend::free_abelian: {
      r.exps.reserve(g.exps.size());
      for (long long e : g.exps) r.exps.push_back(-e);
      break;
    }
    case Backend::permutation: {
      r.image.resize(g.image.size());
      for (std::size_t x = 0; x < g.image.size(); ++x)
        r.image[static_cast<std::size_t>(g.image[x] - 1)] = static_cast<int>(x) + 1;
      break;
    }
    case Backend::direct_product: {
      for (std::size_t i = 0; i < ctx.components.size(); ++i)
        r.parts.push_back(inv(ctx.components[i], g.parts[i]));
      break;
    }
  }
  return r;
}

GroupElement power(const GroupContext& ctx, const GroupElement& g, long long e) {
  GroupElement base = e < 0 ? inv(ctx, g) : g;
  long long k = e < 0 ? -e : e;
  GroupElement acc = identity(ctx);
  while (k > 0) {
    if (k & 1) acc = mul(ctx, acc, base);
    base = mul(ctx, base, base);
    k >>= 1;
  }
  return acc;
}

bool commute(const GroupContext& ctx, const GroupElement& g, const GroupElement& h) {
  return mul(ctx, g, h) == mul(ctx, h, g);
}

std::string element_key(const GroupElement& g) {
  switch (g.kind) {
    case Backend::free_group: {
      std::string s;
      for (int letter : g.word) {
        const char base = letter > 0 ? 'a' : 'A';
        s += static_cast<char>(base + std::abs(letter) - 1);
      }
      return s;
    }
    case Backend::free_abelian: {
      std::string s = "[";
      for (std::size_t i = 0; i < g.exps.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(g.exps[i]);
      }
      return s + "]";
    }
    case Backend::permutation: {
      std::string s = "[";
      for (std::size_t i = 0; i < g.image.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(g.image[i]);
      }
      return s + "]";
    }
    case Backend::direct_product: {
      std::string s = "[";
      for (std::size_t i = 0; i < g.parts.size(); ++i) {
        if (i) s += ',';
        if (g.parts[i].kind == Backend::free_group) {
          s += '"';
          s += element_key(g.parts[i]);
          s += '"';
        } else {
          s += element_key(g.parts[i]);
        }
      }
      return s + "]";
    }
  }
  return {};
}

bool element_less(const GroupElement& a, const GroupElement& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return element_key(a) < element_key(b);
}

CommutationReport pairwise_commutation(const GroupContext& ctx,
                                       std::vector<GroupElement> elements) {
  for (const auto& g : elements) require_conforms(ctx, g, "pairwise_commutation");
  std::sort(elements.begin(), elements.end(), element_less);
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  CommutationReport report;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!commute(ctx, elements[i], elements[j])) {
        report.all_commute = false;
        report.first_violation = {elements[i], elements[j]};
        return report;
      }
    }
  }
  return report;
}

namespace {

void enumerate_into(const GroupContext& ctx, std::vector<GroupElement>& out) {
  switch (ctx.kind) {
    case Backend::permutation: {
      std::vector<int> image(static_cast<std::size_t>(ctx.degree));
      for (int i = 0; i < ctx.degree; ++i) image[static_cast<std::size_t>(i)] = i + 1;
      do {
        GroupElement g;
        g.kind = Backend::permutation;
        g.image = image;
        out.push_back(std::move(g));
      } while (std::next_permutation(image.begin(), image.end()));
      break;
    }
    case Backend::direct_product: {
      std::vector<std::vector<GroupElement>> pools;
      for (const auto& c : ctx.components) pools.push_back(enumerate_group(c));
      std::vector<std::size_t> idx(pools.size(), 0);
      while (true) {
        GroupElement g;
        g.kind = Backend::direct_product;
        for (std::size_t i = 0; i < pools.size(); ++i) g.parts.push_back(pools[i][idx[i]]);
        out.push_back(std::move(g));
        std::size_t p = pools.size();
        while (p > 0) {
          --p;
          if (++idx[p] < pools[p].size()) break;
          idx[p] = 0;
          if (p == 0) return;
        }
        if (pools.empty()) return;
      }
    }
    case Backend::free_group:
    case Backend::free_abelian:
      throw mismatch_error("cannot enumerate an infinite group backend");
  }
}

}  // namespace

std::vector<GroupElement> enumerate_group(const GroupContext& ctx) {
  std::vector<GroupElement> out;
  if (ctx.kind == Backend::direct_product && ctx.components.empty()) {
    out.push_back(identity(ctx));
    return out;
  }
  enumerate_into(ctx, out);
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

}  // namespace gradedlie
