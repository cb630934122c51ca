#include "gradedlie/theorem.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace gradedlie {

namespace {

std::string tuple_text(const std::vector<GroupElement>& gs) {
  std::string s = "(";
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (i) s += ", ";
    s += element_key(gs[i]);
  }
  return s + ")";
}

bool tuple_less(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string ka = element_key(a[i]), kb = element_key(b[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

// sum_{e=1..steps} base^e, saturating
std::size_t geometric_tail(std::size_t base, std::size_t steps, std::size_t cap) {
  std::size_t total = 0, pow = 1;
  for (std::size_t e = 0; e < steps; ++e) {
    if (base != 0 && pow > cap / base) return cap;
    pow *= base;
    if (total > cap - pow) return cap;
    total += pow;
  }
  return total;
}

void require_valid(const GradedAlgebra& a, const char* op) {
  if (!validate_algebra(a.algebra()).empty())
    throw mismatch_error(std::string(op) + ": algebra fails the Jacobi identity");
  if (!validate_grading(a).empty())
    throw mismatch_error(std::string(op) + ": grading axiom violated");
}

}  // namespace

Certificate make_certificate(const GradedAlgebra& a,
                             std::optional<std::pair<GroupElement, GroupElement>> pair,
                             const Subspace& ideal_i, const Subspace& ideal_j) {
  Certificate cert;
  cert.pair = std::move(pair);
  cert.ideal_i = ideal_i;
  cert.ideal_j = ideal_j;
  cert.ideals_nonzero = !ideal_i.is_zero() && !ideal_j.is_zero();
  cert.bracket_zero = bracket_sub(a.algebra(), ideal_i, ideal_j).is_zero();
  cert.ideals_graded = is_graded_ideal(a, ideal_i) && is_graded_ideal(a, ideal_j);
  if (cert.pair)
    cert.pair_noncommuting = !commute(a.ctx(), cert.pair->first, cert.pair->second);
  return cert;
}

StarResult check_star(const GradedAlgebra& a, const std::vector<GroupElement>& gs) {
  if (gs.empty()) throw std::invalid_argument("check_star requires a nonempty tuple");
  StarResult result;
  result.tuple = gs;
  result.bracket_dim = nested_bracket(a, gs).dim();
  if (result.bracket_dim == 0) return result;
  for (std::size_t i = 0; i < gs.size() && !result.violating_pair; ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!commute(a.ctx(), gs[i], gs[j])) {
        result.violating_pair = {i, j};
        break;
      }
  return result;
}

namespace {

struct SweepState {
  const GradedAlgebra& a;
  const std::vector<GroupElement>& supp;
  std::size_t max_len;
  std::size_t budget;
  std::vector<StarResult> results;
  std::size_t evaluated = 0;
  std::size_t skipped_zero = 0;
  bool truncated = false;
  std::vector<GroupElement> suffix_rev;  // suffix_rev[0] is the rightmost element
};

// Depth-first over suffixes: each node is one tuple, children prepend one
// support element. A zero bracket annihilates the whole subtree, so it is
// only counted, never walked.
void sweep_visit(SweepState& st, const Subspace& bracket, std::size_t depth) {
  if (depth >= 2) {
    if (!bracket.is_zero()) {
      std::vector<GroupElement> tuple(st.suffix_rev.rbegin(), st.suffix_rev.rend());
      st.results.push_back(check_star(st.a, tuple));
    }
  }
  if (depth == st.max_len || st.truncated) return;
  if (bracket.is_zero()) {
    st.skipped_zero +=
        geometric_tail(st.supp.size(), st.max_len - depth, st.budget);
    return;
  }
  for (const auto& g : st.supp) {
    if (st.evaluated >= st.budget) {
      st.truncated = true;
      return;
    }
    ++st.evaluated;
    const Subspace child = bracket_sub(st.a.algebra(), st.a.component(g), bracket);
    st.suffix_rev.push_back(g);
    sweep_visit(st, child, depth + 1);
    st.suffix_rev.pop_back();
    if (st.truncated) return;
  }
}

}  // namespace

StarSweepReport star_sweep(const GradedAlgebra& a, std::size_t max_len,
                           const ScanBudget& budget) {
  if (max_len < 2) throw std::invalid_argument("star_sweep requires max_len >= 2");
  const auto& supp = a.support();
  SweepState st{a, supp, max_len, budget.max_tuples};
  for (const auto& g : supp) {
    if (st.truncated) break;
    st.suffix_rev.assign(1, g);
    sweep_visit(st, a.component(g), 1);
  }
  // the check_star recomputation above is cheap; bracket dims came from the
  // shared suffix walk, so assert agreement implicitly via the result order
  std::sort(st.results.begin(), st.results.end(),
            [](const StarResult& x, const StarResult& y) { return tuple_less(x.tuple, y.tuple); });
  StarSweepReport report;
  report.results = std::move(st.results);
  report.tuples_examined = st.evaluated + st.skipped_zero;
  report.budget_truncated = st.truncated;
  return report;
}

std::string StarTrace::text() const {
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

StarTrace star_trace(const GradedAlgebra& a, const std::vector<GroupElement>& gs) {
  if (gs.size() < 2) throw std::invalid_argument("star_trace requires a tuple of length >= 2");
  const std::size_t m = gs.size();

  // suffix brackets: suffix[k] = [L_{g_k}, [..., L_{g_{m-1}}]]
  std::vector<Subspace> suffix;
  suffix.reserve(m);
  suffix.push_back(a.component(gs[m - 1]));
  for (std::size_t k = m - 1; k-- > 0;)
    suffix.insert(suffix.begin(), bracket_sub(a.algebra(), a.component(gs[k]), suffix.front()));
  if (suffix.front().is_zero())
    throw std::invalid_argument("star_trace requires a nonzero nested bracket");

  StarTrace trace;
  trace.tuple = gs;
  trace.lines.push_back("star trace for tuple " + tuple_text(gs));

  for (std::size_t k = 0; k + 2 <= m; ++k) {
    StarTraceLevel level;
    level.head_index = k;
    const std::string hk = element_key(gs[k]);
    const std::string hk1 = element_key(gs[k + 1]);
    std::string line = "level " + std::to_string(k) + ": ";

    if (k + 2 == m) {
      level.branch = '=';
      level.conclusions.push_back({k, k + 1});
      line += "base case: 0 != [L_" + hk + ", L_" + hk1 + "] lands in both L_" + hk + "*" +
              hk1 + " and L_" + hk1 + "*" + hk + " => " + hk + "*" + hk1 + " = " + hk1 + "*" + hk;
    } else {
      // Jacobi split of [L_{g_k}, [L_{g_{k+1}}, U]] with U the deeper tail
      const Subspace& tail = suffix[k + 2];
      const Subspace head_pair =
          bracket_sub(a.algebra(), a.component(gs[k]), a.component(gs[k + 1]));
      const Subspace branch_a = bracket_sub(a.algebra(), head_pair, tail);
      if (!branch_a.is_zero()) {
        level.branch = 'a';
        line += "branch a: 0 != [[L_" + hk + ", L_" + hk1 + "], tail] => " + hk + "*" + hk1 +
                " = " + hk1 + "*" + hk + ", and the induction on (" + hk + "*" + hk1 +
                ", tail) spreads commutation of " + hk + " over the tail";
      } else {
        const Subspace swapped =
            bracket_sub(a.algebra(), a.component(gs[k + 1]),
                        bracket_sub(a.algebra(), a.component(gs[k]), tail));
        if (!swapped.is_zero()) {
          level.branch = 'b';
          line += "branch b: 0 != [L_" + hk1 + ", [L_" + hk + ", tail]] => " + hk +
                  " commutes with the tail labels, and with h = their product, " + hk1 + "*(" +
                  hk + "*h) = (" + hk + "*h)*" + hk1 + " forces " + hk + "*" + hk1 + " = " +
                  hk1 + "*" + hk;
        } else {
          level.branch = '!';
          trace.consistent = false;
          line += "inconsistency: parent bracket is nonzero but both Jacobi branches vanish "
                  "(invalid input or implementation fault)";
        }
      }
      if (level.branch != '!')
        for (std::size_t j = k + 1; j < m; ++j) level.conclusions.push_back({k, j});
    }
    trace.lines.push_back(line);
    for (const auto& p : level.conclusions) trace.concluded_pairs.push_back(p);
    trace.levels.push_back(std::move(level));
  }

  std::sort(trace.concluded_pairs.begin(), trace.concluded_pairs.end());
  trace.concluded_pairs.erase(
      std::unique(trace.concluded_pairs.begin(), trace.concluded_pairs.end()),
      trace.concluded_pairs.end());

  std::string pairs_line = "pairwise commutation established:";
  for (const auto& [i, j] : trace.concluded_pairs)
    pairs_line += " " + element_key(gs[i]) + "~" + element_key(gs[j]);
  trace.lines.push_back(pairs_line);
  return trace;
}

std::vector<Certificate> check_proposition(const GradedAlgebra& a) {
  require_valid(a, "check_proposition");
  const auto& supp = a.support();

  std::map<std::string, Subspace> closure_cache;
  const auto closure_of = [&](const GroupElement& g) -> const Subspace& {
    const std::string key = element_key(g);
    auto it = closure_cache.find(key);
    if (it == closure_cache.end())
      it = closure_cache.emplace(key, ideal_closure(a.algebra(), a.component(g))).first;
    return it->second;
  };

  std::vector<Certificate> certificates;
  for (std::size_t i = 0; i < supp.size(); ++i)
    for (std::size_t j = i + 1; j < supp.size(); ++j) {
      if (commute(a.ctx(), supp[i], supp[j])) continue;
      certificates.push_back(make_certificate(a, std::make_pair(supp[i], supp[j]),
                                              closure_of(supp[i]), closure_of(supp[j])));
    }
  return certificates;
}

FinalIdentityReport final_identity_check(const GradedAlgebra& a, const GroupElement& g,
                                         const GroupElement& g_prime, std::size_t max_len) {
  if (commute(a.ctx(), g, g_prime))
    throw std::invalid_argument("final_identity_check requires a noncommuting pair");
  const auto& supp = a.support();
  const auto in_support = [&](const GroupElement& x) {
    return std::binary_search(supp.begin(), supp.end(), x, element_less);
  };
  if (!in_support(g) || !in_support(g_prime))
    throw std::invalid_argument("final_identity_check requires both labels in the support");

  FinalIdentityReport report;
  report.g = g;
  report.g_prime = g_prime;
  report.max_len = max_len;

  const Subspace& outer = a.component(g_prime);
  std::vector<GroupElement> middle_rev;

  // recursive walk over middle tuples, rightmost element chosen first;
  // a zero inner bracket kills every extension and the outer bracket alike
  const std::function<void(const Subspace&, std::size_t)> walk =
      [&](const Subspace& inner, std::size_t depth) {
        ++report.tuples_checked;
        if (!inner.is_zero() &&
            !bracket_sub(a.algebra(), outer, inner).is_zero()) {
          report.violations.emplace_back(middle_rev.rbegin(), middle_rev.rend());
        }
        if (depth == max_len) return;
        if (inner.is_zero()) {
          report.tuples_checked +=
              geometric_tail(supp.size(), max_len - depth, ~std::size_t{0} / 2);
          return;
        }
        for (const auto& h : supp) {
          const Subspace next = bracket_sub(a.algebra(), a.component(h), inner);
          middle_rev.push_back(h);
          walk(next, depth + 1);
          middle_rev.pop_back();
        }
      };
  walk(a.component(g), 0);

  std::sort(report.violations.begin(), report.violations.end(), tuple_less);
  return report;
}

SupportSubgroupReport support_subgroup_report(const GradedAlgebra& a) {
  SupportSubgroupReport report;
  const CommutationReport comm = pairwise_commutation(a.ctx(), a.support());
  report.abelian = comm.all_commute;
  if (!comm.all_commute) {
    report.violation = comm.first_violation;
    const auto& [g, h] = *comm.first_violation;
    report.certificate =
        make_certificate(a, std::make_pair(g, h), ideal_closure(a.algebra(), a.component(g)),
                         ideal_closure(a.algebra(), a.component(h)));
  }
  return report;
}

PrimeScanVerdict prime_scan(const GradedAlgebra& a) {
  std::map<std::string, Subspace> candidates;  // keyed canonically => sorted scan
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Subspace c = ideal_closure(a.algebra(), Subspace::span(a.dim(), {unit_vector(a.dim(), i)}));
    candidates.emplace(c.key(), std::move(c));
  }
  for (const auto& g : a.support()) {
    Subspace c = ideal_closure(a.algebra(), a.component(g));
    candidates.emplace(c.key(), std::move(c));
  }

  std::vector<const Subspace*> ordered;
  ordered.reserve(candidates.size());
  for (const auto& [key, c] : candidates) ordered.push_back(&c);

  std::vector<char> graded(ordered.size());
  for (std::size_t i = 0; i < ordered.size(); ++i)
    graded[i] = is_graded_ideal(a, *ordered[i]) ? 1 : 0;

  PrimeScanVerdict verdict;
  verdict.candidates_examined = ordered.size();
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    for (std::size_t j = i; j < ordered.size(); ++j) {
      if (!graded[i] || !graded[j]) continue;
      if (ordered[i]->is_zero() || ordered[j]->is_zero()) continue;
      if (!bracket_sub(a.algebra(), *ordered[i], *ordered[j]).is_zero()) continue;
      Certificate cert;
      cert.ideal_i = *ordered[i];
      cert.ideal_j = *ordered[j];
      cert.ideals_nonzero = true;
      cert.bracket_zero = true;
      cert.ideals_graded = true;
      verdict.witness_found = true;
      verdict.certificate = std::move(cert);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace gradedlie
