#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bgf/rational.hpp"

namespace bgf {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is allowed and has size 0 and length 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  /// Sorts into nonincreasing order; rejects nonpositive entries.
  static Partition from_parts(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// ν + (d): joins a single part d. Adding 0 returns ν unchanged.
  Partition with_part(int d) const;
  /// ν with one occurrence of `value` removed. Throws if absent.
  Partition without_part(int value) const;
  /// Joins all parts of both partitions.
  Partition join(const Partition& other) const;

  /// Multiplicity of part value d.
  int multiplicity(int d) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// π(a): drop zeros and sort nonincreasing.
Partition equivalent_partition(std::span<const int> a);

/// P(ν) = ℓ(ν)! / ∏ (multiplicity)!; P(∅) = 1.
std::uint64_t perm_count(const Partition& nu);

/// σ(S): the partition formed by the multiplicities of the values in S.
/// Throws std::invalid_argument for an empty list or nonpositive entries.
Partition sigma(std::span<const int> indices);

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All partitions with size in [0, n].
std::vector<Partition> partitions_up_to(int n);

struct SplitPair {
  std::vector<int> first;
  std::vector<int> second;
};

/// S(ν): all componentwise splits p1 + p2 = ν. |S(ν)| = ∏(ν_j + 1).
std::vector<SplitPair> split_pairs(const Partition& nu);

/// Set partition of {1..k} with no crossing blocks. Blocks are sorted and
/// ordered by their minimum.
class NoncrossingPartition {
 public:
  /// Canonicalizes block order and validates; throws std::invalid_argument
  /// if the blocks do not partition {1..k} or if two blocks cross.
  explicit NoncrossingPartition(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int ground_size() const { return ground_size_; }
  int length() const { return static_cast<int>(blocks_.size()); }

  friend bool operator==(const NoncrossingPartition&, const NoncrossingPartition&) = default;
  friend auto operator<=>(const NoncrossingPartition& a, const NoncrossingPartition& b) {
    return a.blocks_ <=> b.blocks_;
  }

  static bool crosses(std::span<const int> a, std::span<const int> b);

 private:
  std::vector<std::vector<int>> blocks_;
  int ground_size_ = 0;
};

/// NC(k) built recursively from the block containing 1. |NC(k)| = Catalan(k).
std::vector<NoncrossingPartition> enumerate_nc(int k);

/// Shared read-only copy of NC(k); safe to call concurrently.
const std::vector<NoncrossingPartition>& nc_partitions(int k);

Integer catalan(int n);
Integer binomial(int n, int k);
Integer factorial(int n);

/// Number of π ∈ NC(n) with m_k blocks of size k, n = multiplicities.size():
/// n! / ((n − Σm_k + 1)! ∏ m_k!). Throws if Σ k·m_k ≠ n.
Integer kreweras_count(std::span<const int> multiplicities);

struct IdentitySides {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// Σ_{k=m}^{a} C(a,k) C(b,k−m) / C(a+b,k) (−1)^k  versus  (−1)^m a! b! / (a+b)!.
IdentitySides binom_identity_sides(int a, int b, int m);
bool binom_identity_check(int a, int b, int m);

/// Sequences are 1-indexed in meaning: values[0] holds the order-1 entry.
/// Both sides of the first-block recursion over NC(k+1) and NC(k).
IdentitySides nc_recursion_sides(int k, std::span<const Rational> a, std::span<const Rational> b);
bool nc_recursion_check(int k, std::span<const Rational> a, std::span<const Rational> b);

/// Σ_{π ∈ NC(n)} ∏_{B ∈ π} r_{|B|} by enumeration.
Rational nc_block_sum(int n, std::span<const Rational> r);
/// The same sum via (1/(n+1)) [z^{-1}] (1/z + Σ_j r_j z^{j−1})^{n+1}.
Rational nc_block_sum_residue(int n, std::span<const Rational> r);
IdentitySides nc_generating_sides(int n, std::span<const Rational> r);
bool nc_generating_check(int n, std::span<const Rational> r);

/// Count of ways M_{ν1}·M_{ν2} over ℓ1+ℓ2−k variables produces monomials using
/// every variable: Σ |T(ν)| P(ν) by split enumeration (lhs) against the
/// closed binomial form (rhs).
IdentitySides coeffsum_sides(const Partition& nu1, const Partition& nu2, int k);

}  // namespace bgf
