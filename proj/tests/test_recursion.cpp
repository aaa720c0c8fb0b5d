#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hodge/recursion.hpp"
#include "hodge/xi_basis.hpp"

using namespace hodge;

namespace {

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("stable keys") {
  const auto keys = stable_keys(2);
  CHECK(keys == std::vector<HodgeKey>{{0, 3}, {1, 1}, {0, 4}, {1, 2}});
  CHECK_FALSE(HodgeKey{0, 2}.stable());
}

TEST_CASE("seeds") {
  HodgeCache cache;
  CHECK(cache.get({0, 3}) == xi_product({0, 0, 0}));
  MultiPoly h11(1);
  h11.add_term({3}, Rational(1, 24));
  h11.add_term({2}, Rational(-1, 24));
  h11.add_term({1}, Rational(-1, 24));
  h11.add_term({0}, Rational(1, 24));
  CHECK(cache.get({1, 1}) == h11);
  CHECK(cache.recursion_count() == 0);
  CHECK_THROWS(cache.get({0, 2}));
}

TEST_CASE("(0,4)") {
  HodgeCache cache;
  const MultiPoly &h = cache.get({0, 4});
  CHECK(h.degree() == 6);
  CHECK(is_symmetric(h));
  CHECK(to_xi_basis(h).at({1, 0, 0, 0}) == Rational(1));
}

TEST_CASE("LHS operator solve is an inverse") {
  HodgeCache cache;
  for (HodgeKey k : stable_keys(3)) {
    const MultiPoly &h = cache.get(k);
    CHECK(solve_lhs_operator(apply_lhs_operator(h, k.euler()), k.euler()) == h);
  }
  CHECK_THROWS_AS(solve_lhs_operator(MultiPoly::monomial({1}, Rational(1)), 1), NonPolynomialError);
}

TEST_CASE("both recursion forms agree") {
  HodgeCache poly(RecursionForm::polynomial), lap(RecursionForm::laplace);
  for (HodgeKey k : stable_keys(3)) {
    CHECK(compute_H(k.g, k.ell, poly) == compute_H_alt(k.g, k.ell, lap));
    CHECK(poly.get(k) == lap.get(k));
  }
}

TEST_CASE("extraction") {
  HodgeCache cache;
  CHECK(extract_hodge(0, 3, cache.get({0, 3})).get(0, {0, 0, 0}, 0) == Rational(1));
  CHECK(extract_hodge(1, 1, cache.get({1, 1})).get(1, {0}, 1) == Rational(1, 24));
  CHECK(extract_hodge(1, 1, cache.get({1, 1})).get(1, {1}, 0) == Rational(1, 24));
  CHECK(extract_hodge(1, 2, cache.get({1, 2})).get(1, {1, 0}, 1) == Rational(1, 24));
  // j = 2 > g = 1 for n = (0) in genus 1 with l = 1: degree too low.
  CHECK_THROWS_AS(extract_hodge(1, 1, xi_product({0}) * Rational(1) + xi_product({2})),
                  NonPolynomialError);
}

TEST_CASE("ELSV") {
  HodgeCache cache;
  HodgeTable table = build_hodge_table(cache, 3);
  CHECK(elsv_evaluate(0, {1, 1, 1}, table).value == Rational(4));
  CHECK(elsv_evaluate(1, {2}, table).value == Rational(1, 2));
  CHECK(elsv_evaluate(0, {3}, table).value == Rational(1));
  CHECK(elsv_evaluate(0, {2, 1}, table).value == Rational(4));
  CHECK(elsv_evaluate(1, {1}, table).value == Rational(0));
  CHECK(elsv_evaluate(0, {1, 1}, table).value == Rational(1, 2));
  CHECK(elsv_evaluate(0, {2, 1}, table).provenance == Provenance::elsv);
  CHECK_THROWS_AS(elsv_evaluate(3, {1}, table), std::out_of_range);
  for (int d = 1; d <= 3; ++d)
    for (const auto &mu : enumerate_partitions(d))
      for (int g = 0; g <= 1; ++g) {
        if (rh_count(g, mu) > 6 || 2 * g - 2 + static_cast<int>(mu.length()) > 3)
          continue;
        CHECK(elsv_evaluate(g, mu, table).value == hurwitz_oracle(g, mu).value);
      }
}

TEST_CASE("seeds follow from oracle values through ELSV") {
  // h_{0,(1,1,1)} = r!/|Aut| <tau_0^3> with r = 4, |Aut| = 6.
  const Rational h111 = hurwitz_oracle(0, {1, 1, 1}).value;
  CHECK(h111 * Rational(6) / Rational(24) == Rational(1));
  // Genus 1, one point: h_{1,(1)} = 2!(A - B), h_{1,(2)} = 3! 2 (2A - B) with
  // A = <tau_1>, B = <tau_0 lambda_1>.
  const Rational h1 = hurwitz_oracle(1, {1}).value, h2 = hurwitz_oracle(1, {2}).value;
  const Rational diff = h1 / Rational(2);
  const Rational combo = h2 / Rational(12);
  const Rational A = combo - diff, B = A - diff;
  CHECK(A == Rational(1, 24));
  CHECK(B == Rational(1, 24));
  HodgeCache cache;
  HodgeTable t = extract_hodge(1, 1, cache.get({1, 1}));
  CHECK(t.get(1, {1}, 0) == A);
  CHECK(t.get(1, {0}, 1) == B);
}

TEST_CASE("cache round trip") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto first = dir / "hodge_cache_test_1.json", second = dir / "hodge_cache_test_2.json";
  HodgeCache a;
  a.fill(3);
  CHECK(a.recursion_count() == stable_keys(3).size() - 2);
  a.save(first);

  HodgeCache b;
  b.load(first);
  b.fill(3);
  CHECK(b.recursion_count() == 0);
  CHECK(b.snapshot() == a.snapshot());
  b.save(second);
  CHECK(slurp(first) == slurp(second));

  std::ofstream(second) << "{\"version\":2}";
  HodgeCache c;
  CHECK_THROWS_AS(c.load(second), std::runtime_error);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
}

TEST_CASE("parallel fill is deterministic") {
  HodgeCache serial, parallel;
  serial.fill(4, 1);
  parallel.fill(4, 4);
  CHECK(serial.snapshot() == parallel.snapshot());
}
