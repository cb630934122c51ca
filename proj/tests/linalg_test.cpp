#include <doctest.h>

#include "gradedlie/linalg.hpp"
#include "test_support.hpp"

using namespace gradedlie;

namespace {

Vector qvec(std::initializer_list<long long> xs) {
  Vector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

Subspace span_of(std::initializer_list<std::initializer_list<long long>> rows) {
  Matrix m;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    m.push_back({});
    for (long long x : r) m.back().emplace_back(x);
    cols = m.back().size();
  }
  return Subspace::span(cols, m);
}

}  // namespace

TEST_CASE("rational parse and format round trip") {
  CHECK(Rational::parse("3/2").str() == "3/2");
  CHECK(Rational::parse("-6/4").str() == "-3/2");  // stored reduced
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("0/5").str() == "0");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(9, 4)).str() == "3/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), parse_error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), parse_error);
  CHECK_THROWS_AS(Rational::parse("a"), parse_error);
  CHECK_THROWS_AS(Rational::parse(""), parse_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational invariants: reduced, positive denominator") {
  test::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const Rational q(rng.range(-40, 40), rng.range(1, 40) * (rng.below(2) ? 1 : -1));
    CHECK(q.denominator() > 0);
    CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(q.numerator()),
                                     q.denominator()) == 1);
  }
}

TEST_CASE("rref: frozen examples") {
  CHECK(span_of({{2, 0}, {0, 4}}) == span_of({{1, 0}, {0, 1}}));
  CHECK(span_of({{1, 2}, {2, 4}}).basis_rows() == Matrix{qvec({1, 2})});
  // hand row-reduction: r2, r1 are pivots and r3 = r1 + r2
  const Subspace s = span_of({{0, 1, 1}, {1, 0, 1}, {1, 1, 2}});
  CHECK(s.dim() == 2);
  CHECK(s.basis_rows() == Matrix{qvec({1, 0, 1}), qvec({0, 1, 1})});
}

TEST_CASE("rref: idempotent and rejects ragged input") {
  const Subspace s = span_of({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}});
  CHECK(Subspace::span(3, s.basis_rows()) == s);
  CHECK_THROWS_AS(rref(Matrix{qvec({1, 2}), qvec({1, 2, 3})}), mismatch_error);
  CHECK_THROWS_AS(Subspace::span(2, {qvec({1, 2, 3})}), mismatch_error);
}

TEST_CASE("subspace_sum: frozen examples") {
  const Subspace e1 = span_of({{1, 0, 0}});
  const Subspace e2 = span_of({{0, 1, 0}});
  CHECK(subspace_sum(e1, e1) == e1);
  CHECK(subspace_sum(e1, e2) == span_of({{1, 0, 0}, {0, 1, 0}}));
  CHECK(subspace_sum(span_of({{1, 1, 0}}), span_of({{1, -1, 0}})) ==
        span_of({{1, 0, 0}, {0, 1, 0}}));
  CHECK_THROWS_AS(subspace_sum(e1, span_of({{1, 0}})), mismatch_error);
}

TEST_CASE("subspace_intersect: frozen examples") {
  const Subspace u = span_of({{1, 0, 0}, {0, 1, 0}});
  const Subspace v = span_of({{0, 1, 0}, {0, 0, 1}});
  CHECK(subspace_intersect(u, u) == u);
  CHECK(subspace_intersect(span_of({{1, 0}}), span_of({{0, 1}})).is_zero());
  CHECK(subspace_intersect(u, v) == span_of({{0, 1, 0}}));
  CHECK_THROWS_AS(subspace_intersect(u, span_of({{1, 0}})), mismatch_error);
}

TEST_CASE("contains: frozen examples") {
  const Subspace e1 = span_of({{1, 0}});
  CHECK(e1.contains(qvec({3, 0})));
  CHECK(!e1.contains(qvec({0, 1})));
  CHECK(span_of({{1, 2}, {0, 1}}).contains(qvec({5, 1})));  // 5*r1 - 9*r2
  CHECK(e1.contains(zero_vector(2)));
  CHECK(Subspace::zero(2).contains(zero_vector(2)));
  CHECK_THROWS_AS(e1.contains(qvec({1, 0, 0})), mismatch_error);
}

TEST_CASE("canonicity: random invertible recombinations give identical bases") {
  test::Rng rng(101);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng.below(5);
    const std::size_t k = 1 + rng.below(n);
    const Matrix base = test::random_matrix(rng, k, n);
    const Subspace s = Subspace::span(n, base);

    // invertible k x k recombination, resampled until full rank
    Matrix t_mat;
    do {
      t_mat = test::random_matrix(rng, k, k, -2, 2);
    } while (rref(t_mat).size() != k);

    Matrix mixed(k, zero_vector(n));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) add_scaled(mixed[r], t_mat[r][c], base[c]);
    CHECK(Subspace::span(n, mixed) == s);
  }
}

TEST_CASE("grassmann identity on 1000 random pairs, exact") {
  test::Rng rng(202);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng.below(8);
    const Subspace u = Subspace::span(n, test::random_matrix(rng, rng.below(n + 1), n));
    const Subspace v = Subspace::span(n, test::random_matrix(rng, rng.below(n + 1), n));
    CHECK(u.dim() + v.dim() ==
          subspace_sum(u, v).dim() + subspace_intersect(u, v).dim());
  }
}

TEST_CASE("membership is closed under addition and scaling") {
  test::Rng rng(303);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng.below(5);
    const Subspace u = Subspace::span(n, test::random_matrix(rng, 1 + rng.below(n), n));
    // random members: combinations of the basis
    Vector v = zero_vector(n), w = zero_vector(n);
    for (const auto& row : u.basis_rows()) {
      add_scaled(v, Rational(rng.range(-3, 3)), row);
      add_scaled(w, Rational(rng.range(-3, 3), rng.range(1, 4)), row);
    }
    REQUIRE(u.contains(v));
    REQUIRE(u.contains(w));
    CHECK(u.contains(add(v, w)));
    CHECK(u.contains(scaled(v, Rational(rng.range(-9, 9), rng.range(1, 9)))));
  }
}

TEST_CASE("sum and intersection respect containment and row-space equality") {
  test::Rng rng(404);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(6);
    const Subspace u = Subspace::span(n, test::random_matrix(rng, rng.below(n + 1), n));
    const Subspace v = Subspace::span(n, test::random_matrix(rng, rng.below(n + 1), n));
    const Subspace s = subspace_sum(u, v);
    const Subspace i = subspace_intersect(u, v);
    CHECK(test::is_subspace_of(u, s));
    CHECK(test::is_subspace_of(v, s));
    CHECK(test::is_subspace_of(i, u));
    CHECK(test::is_subspace_of(i, v));
  }
}
