#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

/// Weakly decreasing tuple of positive integers. The empty partition is
/// allowed.
class Partition {
public:
  Partition() = default;
  /// Sorts the parts; throws std::invalid_argument on a part < 1.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int> &parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_.at(i); }
  std::size_t length() const { return parts_.size(); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  /// m_k: number of parts equal to k.
  int multiplicity(int k) const;
  std::map<int, int> multiplicities() const;

  std::string to_string() const;

  friend auto operator<=>(const Partition &, const Partition &) = default;
  friend bool operator==(const Partition &, const Partition &) = default;

private:
  std::vector<int> parts_;
};

/// |Aut(mu)| = prod_k m_k(mu)!.
BigInt aut_order(const Partition &mu);

/// Number of simple branch points, r = 2g - 2 + l(mu) + |mu|. Throws
/// std::domain_error if mu is empty or the result is negative.
int rh_count(int g, const Partition &mu);

/// Replaces parts i and j (0-based, distinct) by their sum.
Partition join_parts(const Partition &mu, std::size_t i, std::size_t j);

/// Replaces part i (0-based) by alpha and beta, alpha + beta = mu_i.
Partition split_part(const Partition &mu, std::size_t i, int alpha, int beta);

/// Removes part i.
Partition remove_part(const Partition &mu, std::size_t i);

/// Appends parts and re-sorts.
Partition with_parts(const Partition &mu, std::initializer_list<int> extra);

/// Partitions of n in reverse-lexicographic order ((n) first).
std::vector<Partition> enumerate_partitions(int n);

/// Partitions of n with exactly `length` parts.
std::vector<Partition> enumerate_partitions(int n, int length);

/// All vectors in {1..part_max}^ell, lexicographic order.
std::vector<std::vector<int>> enumerate_tuples(int ell, int part_max);

} // namespace hodge
