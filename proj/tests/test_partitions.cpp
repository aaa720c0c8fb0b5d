#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "hodge/combinatorics.hpp"
#include "hodge/partition.hpp"

using namespace hodge;

TEST_CASE("partition construction sorts and validates") {
  Partition p{1, 3, 2};
  CHECK(p.parts() == std::vector<int>{3, 2, 1});
  CHECK(p.size() == 6);
  CHECK(p.length() == 3);
  CHECK(Partition().empty());
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("automorphisms") {
  CHECK(aut_order({2, 2, 1}) == 2);
  CHECK(aut_order({3, 2, 1}) == 1);
  CHECK(aut_order({1, 1, 1}) == 6);
}

TEST_CASE("branch point count") {
  CHECK(rh_count(1, {2, 2}) == 6);
  CHECK(rh_count(0, {1, 1}) == 2);
  CHECK(rh_count(0, {3}) == 2);
  CHECK(rh_count(0, {1}) == 0);
  CHECK_THROWS_AS(rh_count(0, Partition()), std::domain_error);
}

TEST_CASE("cut and join surgeries") {
  CHECK(join_parts({2, 1, 1}, 0, 1) == Partition{3, 1});
  CHECK(split_part({3, 1}, 0, 2, 1) == Partition{2, 1, 1});
  Partition joined = join_parts({4, 2}, 0, 1);
  CHECK(joined == Partition{6});
  CHECK(split_part(joined, 0, 4, 2) == Partition{4, 2});
  CHECK_THROWS(join_parts({2, 1}, 0, 0));
  CHECK_THROWS(join_parts({2, 1}, 0, 2));
  CHECK_THROWS(split_part({3}, 0, 2, 2));
  CHECK_THROWS(split_part({3}, 0, 3, 0));
}

TEST_CASE("enumeration") {
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(5, 2) == std::vector<Partition>{{4, 1}, {3, 2}});
  CHECK(enumerate_tuples(2, 2).size() == 4);
  const std::vector<int> p_of_n{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    auto parts = enumerate_partitions(n);
    CHECK(parts.size() == static_cast<std::size_t>(p_of_n[n]));
    CHECK(std::set<Partition>(parts.begin(), parts.end()).size() == parts.size());
  }
}

TEST_CASE("property: Aut of a join") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> part(1, 4), len(2, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> raw(len(rng));
    for (auto &x : raw)
      x = part(rng);
    Partition mu(raw);
    std::uniform_int_distribution<std::size_t> idx(0, mu.length() - 1);
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j)
      continue;
    const int a = mu[i], b = mu[j];
    Rational expected = Rational(aut_order(mu)) * Rational(mu.multiplicity(a + b) + 1);
    expected /= a != b ? Rational(mu.multiplicity(a) * mu.multiplicity(b))
                       : Rational(mu.multiplicity(a) * (mu.multiplicity(a) - 1));
    CHECK(Rational(aut_order(join_parts(mu, i, j))) == expected);
  }
}

TEST_CASE("property: summing a symmetric function over tuples vs partitions") {
  auto f = [](const std::vector<int> &mu) {
    // Symmetric: power sums and a product.
    long p1 = 0, p2 = 0, prod = 1;
    for (int x : mu) {
      p1 += x;
      p2 += x * x;
      prod *= x + 1;
    }
    return Rational(p1 * p1 * p1 - 2 * p2 + prod, 1 + p1);
  };
  for (int ell = 1; ell <= 3; ++ell) {
    const int part_max = 4;
    Rational over_tuples;
    for (const auto &tuple : enumerate_tuples(ell, part_max))
      over_tuples += f(tuple);
    Rational over_partitions;
    for (int n = ell; n <= ell * part_max; ++n)
      for (const auto &mu : enumerate_partitions(n, ell)) {
        if (mu[0] > part_max)
          continue;
        over_partitions += Rational(factorial(ell)) / Rational(aut_order(mu)) * f(mu.parts());
      }
    CHECK(over_tuples == over_partitions);
  }
}
