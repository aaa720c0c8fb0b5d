#include "hodge/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "hodge/combinatorics.hpp"

namespace hodge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1)
      throw std::invalid_argument("Partition: parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_)
    ++m[p];
  return m;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

BigInt aut_order(const Partition &mu) {
  BigInt result(1);
  for (const auto &[part, m] : mu.multiplicities())
    result *= factorial(m);
  return result;
}

int rh_count(int g, const Partition &mu) {
  if (mu.empty())
    throw std::domain_error("rh_count: empty partition");
  int r = 2 * g - 2 + static_cast<int>(mu.length()) + mu.size();
  if (r < 0)
    throw std::domain_error("rh_count: negative branch-point count for g=" +
                            std::to_string(g) + ", mu=" + mu.to_string());
  return r;
}

Partition join_parts(const Partition &mu, std::size_t i, std::size_t j) {
  if (i == j || i >= mu.length() || j >= mu.length())
    throw std::out_of_range("join_parts: invalid indices");
  std::vector<int> parts;
  for (std::size_t k = 0; k < mu.length(); ++k)
    if (k != i && k != j)
      parts.push_back(mu[k]);
  parts.push_back(mu[i] + mu[j]);
  return Partition(std::move(parts));
}

Partition split_part(const Partition &mu, std::size_t i, int alpha, int beta) {
  if (i >= mu.length())
    throw std::out_of_range("split_part: invalid index");
  if (alpha < 1 || beta < 1 || alpha + beta != mu[i])
    throw std::invalid_argument("split_part: need alpha, beta >= 1 with alpha + beta = mu_i");
  std::vector<int> parts = remove_part(mu, i).parts();
  parts.push_back(alpha);
  parts.push_back(beta);
  return Partition(std::move(parts));
}

Partition remove_part(const Partition &mu, std::size_t i) {
  if (i >= mu.length())
    throw std::out_of_range("remove_part: invalid index");
  std::vector<int> parts = mu.parts();
  parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
  return Partition(std::move(parts));
}

Partition with_parts(const Partition &mu, std::initializer_list<int> extra) {
  std::vector<int> parts = mu.parts();
  parts.insert(parts.end(), extra);
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int> &current,
                    std::vector<Partition> &out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0)
    throw std::domain_error("enumerate_partitions: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int n, int length) {
  std::vector<Partition> out;
  for (auto &p : enumerate_partitions(n))
    if (static_cast<int>(p.length()) == length)
      out.push_back(std::move(p));
  return out;
}

std::vector<std::vector<int>> enumerate_tuples(int ell, int part_max) {
  if (ell < 1 || part_max < 1)
    throw std::domain_error("enumerate_tuples: bounds must be >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> current(ell, 1);
  while (true) {
    out.push_back(current);
    int k = ell - 1;
    while (k >= 0 && current[k] == part_max)
      current[k--] = 1;
    if (k < 0)
      break;
    ++current[k];
  }
  return out;
}

} // namespace hodge
