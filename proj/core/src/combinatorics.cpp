#include "bgf/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bgf {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t t = 0; t < parts_.size(); ++t) {
    if (parts_[t] < 1) throw std::invalid_argument("partition parts must be positive");
    if (t + 1 < parts_.size() && parts_[t] < parts_[t + 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ += parts_[t];
  }
}

Partition Partition::from_parts(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::with_part(int d) const {
  if (d < 0) throw std::invalid_argument("cannot add a negative part");
  if (d == 0) return *this;
  std::vector<int> p = parts_;
  p.insert(std::upper_bound(p.begin(), p.end(), d, std::greater<>()), d);
  return Partition(std::move(p));
}

Partition Partition::without_part(int value) const {
  std::vector<int> p = parts_;
  auto it = std::find(p.begin(), p.end(), value);
  if (it == p.end()) throw std::invalid_argument("part not present in partition");
  p.erase(it);
  return Partition(std::move(p));
}

Partition Partition::join(const Partition& other) const {
  std::vector<int> p = parts_;
  p.insert(p.end(), other.parts_.begin(), other.parts_.end());
  return from_parts(std::move(p));
}

int Partition::multiplicity(int d) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), d));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t t = 0; t < parts_.size(); ++t) {
    if (t) os << ',';
    os << parts_[t];
  }
  os << ')';
  return os.str();
}

Partition equivalent_partition(std::span<const int> a) {
  std::vector<int> parts;
  for (int v : a) {
    if (v < 0) throw std::invalid_argument("equivalent_partition expects nonnegative entries");
    if (v > 0) parts.push_back(v);
  }
  return Partition::from_parts(std::move(parts));
}

std::uint64_t perm_count(const Partition& nu) {
  // Multinomial built from successive binomials to stay within 64 bits.
  std::uint64_t result = 1;
  int placed = 0;
  auto parts = nu.parts();
  std::size_t t = 0;
  while (t < parts.size()) {
    std::size_t run = t;
    while (run < parts.size() && parts[run] == parts[t]) ++run;
    const int m = static_cast<int>(run - t);
    placed += m;
    result *= binomial(placed, m).convert_to<std::uint64_t>();
    t = run;
  }
  return result;
}

Partition sigma(std::span<const int> indices) {
  if (indices.empty()) throw std::invalid_argument("sigma requires a nonempty index list");
  std::map<int, int> counts;
  for (int i : indices) {
    if (i < 1) throw std::invalid_argument("sigma expects positive indices");
    ++counts[i];
  }
  std::vector<int> parts;
  for (const auto& [value, count] : counts) parts.push_back(count);
  return Partition::from_parts(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int s = 0; s <= n; ++s) {
    auto ps = partitions_of(s);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<SplitPair> split_pairs(const Partition& nu) {
  std::vector<SplitPair> out;
  const auto parts = nu.parts();
  const std::size_t m = parts.size();
  std::vector<int> first(m, 0);
  while (true) {
    SplitPair pair{first, std::vector<int>(m)};
    for (std::size_t j = 0; j < m; ++j) pair.second[j] = parts[j] - first[j];
    out.push_back(std::move(pair));
    // Odometer increment over 0..parts[j].
    std::size_t j = 0;
    while (j < m && first[j] == parts[j]) first[j++] = 0;
    if (j == m) break;
    ++first[j];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Noncrossing partitions

bool NoncrossingPartition::crosses(std::span<const int> a, std::span<const int> b) {
  // a, b sorted; crossing iff some x<y in a and u<v in b interleave.
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      for (std::size_t s = 0; s < b.size(); ++s) {
        if (!(a[i] < b[s] && b[s] < a[j])) continue;
        for (std::size_t t = 0; t < b.size(); ++t) {
          if (b[t] > a[j] || b[t] < a[i]) return true;
        }
      }
    }
  }
  return false;
}

NoncrossingPartition::NoncrossingPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  int total = 0;
  for (auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("noncrossing partition has an empty block");
    std::sort(block.begin(), block.end());
    total += static_cast<int>(block.size());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  ground_size_ = total;
  std::vector<bool> seen(static_cast<std::size_t>(total) + 1, false);
  for (const auto& block : blocks_) {
    for (int e : block) {
      if (e < 1 || e > total || seen[e]) {
        throw std::invalid_argument("blocks do not partition {1..k}");
      }
      seen[e] = true;
    }
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
      if (crosses(blocks_[i], blocks_[j])) {
        throw std::invalid_argument("blocks cross");
      }
    }
  }
}

namespace {

using BlockList = std::vector<std::vector<int>>;

// NC partitions of the interval [lo, hi]. The block of lo either is {lo}
// alone, or has a next element m; then [lo+1, m-1] is closed off and lo joins
// the block of m in a partition of [m, hi].
std::vector<BlockList> nc_interval(int lo, int hi) {
  if (lo > hi) return {BlockList{}};
  std::vector<BlockList> out;
  for (auto rest : nc_interval(lo + 1, hi)) {
    rest.insert(rest.begin(), std::vector<int>{lo});
    out.push_back(std::move(rest));
  }
  for (int m = lo + 1; m <= hi; ++m) {
    const auto inner = nc_interval(lo + 1, m - 1);
    const auto tail = nc_interval(m, hi);
    for (const auto& t : tail) {
      BlockList merged_tail = t;
      for (auto& block : merged_tail) {
        if (block.front() == m) {
          block.insert(block.begin(), lo);
          break;
        }
      }
      for (const auto& in : inner) {
        BlockList combined = merged_tail;
        combined.insert(combined.end(), in.begin(), in.end());
        out.push_back(std::move(combined));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<NoncrossingPartition> enumerate_nc(int k) {
  if (k < 1) throw std::invalid_argument("enumerate_nc requires k >= 1");
  std::vector<NoncrossingPartition> out;
  for (auto& blocks : nc_interval(1, k)) out.emplace_back(std::move(blocks));
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<NoncrossingPartition>& nc_partitions(int k) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<NoncrossingPartition>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[k];
  if (!slot) slot = std::make_unique<const std::vector<NoncrossingPartition>>(enumerate_nc(k));
  return *slot;
}

// ---------------------------------------------------------------------------
// Counting

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Integer catalan(int n) { return binomial(2 * n, n) / (n + 1); }

Integer kreweras_count(std::span<const int> multiplicities) {
  const int n = static_cast<int>(multiplicities.size());
  if (n < 1) throw std::invalid_argument("kreweras_count needs n >= 1");
  int weighted = 0;
  int blocks = 0;
  for (int k = 1; k <= n; ++k) {
    const int m = multiplicities[k - 1];
    if (m < 0) throw std::invalid_argument("negative block multiplicity");
    weighted += k * m;
    blocks += m;
  }
  if (weighted != n) throw std::invalid_argument("block multiplicities do not sum to n");
  Integer denom = factorial(n - blocks + 1);
  for (int m : multiplicities) denom *= factorial(m);
  return factorial(n) / denom;
}

// ---------------------------------------------------------------------------
// Counting identities

IdentitySides binom_identity_sides(int a, int b, int m) {
  if (a < 0 || b < 0 || m < 0 || m > a) {
    throw std::invalid_argument("binom identity requires 0 <= m <= a and b >= 0");
  }
  Rational lhs = 0;
  for (int k = m; k <= a; ++k) {
    Rational term = Rational(binomial(a, k) * binomial(b, k - m)) / Rational(binomial(a + b, k));
    lhs += (k % 2 == 0) ? term : Rational(-term);
  }
  Rational rhs = Rational(factorial(a) * factorial(b)) / Rational(factorial(a + b));
  if (m % 2 == 1) rhs = -rhs;
  return {lhs, rhs};
}

bool binom_identity_check(int a, int b, int m) { return binom_identity_sides(a, b, m).holds(); }

namespace {

void require_length(std::span<const Rational> seq, int needed, const char* what) {
  if (static_cast<int>(seq.size()) < needed) {
    throw std::invalid_argument(std::string(what) + " sequence too short");
  }
}

}  // namespace

IdentitySides nc_recursion_sides(int k, std::span<const Rational> a, std::span<const Rational> b) {
  if (k < 1) throw std::invalid_argument("nc recursion requires k >= 1");
  require_length(a, k + 1, "a");
  require_length(b, k + 1, "b");
  auto at = [](std::span<const Rational> s, std::size_t order) -> const Rational& {
    return s[order - 1];
  };

  Rational lhs = 0;
  for (const auto& pi : nc_partitions(k + 1)) {
    Rational term = at(b, pi.blocks()[0].size());
    for (std::size_t i = 1; i < pi.blocks().size(); ++i) term *= at(a, pi.blocks()[i].size());
    lhs += term;
  }

  Rational rhs = 0;
  for (const auto& pi : nc_partitions(k)) {
    const std::size_t first = pi.blocks()[0].size();
    Rational head = at(b, first + 1);
    for (std::size_t j = 1; j <= first; ++j) head += at(a, j) * at(b, first + 1 - j);
    for (std::size_t i = 1; i < pi.blocks().size(); ++i) head *= at(a, pi.blocks()[i].size());
    rhs += head;
  }
  return {lhs, rhs};
}

bool nc_recursion_check(int k, std::span<const Rational> a, std::span<const Rational> b) {
  return nc_recursion_sides(k, a, b).holds();
}

Rational nc_block_sum(int n, std::span<const Rational> r) {
  if (n < 1) throw std::invalid_argument("nc_block_sum requires n >= 1");
  require_length(r, n, "r");
  Rational total = 0;
  for (const auto& pi : nc_partitions(n)) {
    Rational term = 1;
    for (const auto& block : pi.blocks()) term *= r[block.size() - 1];
    total += term;
  }
  return total;
}

Rational nc_block_sum_residue(int n, std::span<const Rational> r) {
  if (n < 1) throw std::invalid_argument("nc_block_sum_residue requires n >= 1");
  require_length(r, n, "r");
  // Laurent polynomial stored with exponent offset; only [-(n+1), n^2] kept.
  const int lo = -(n + 1);
  const int hi = n * n;
  const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  std::vector<Rational> base(width, Rational{0});
  base[static_cast<std::size_t>(-1 - lo)] = 1;  // 1/z
  for (int j = 1; j <= n; ++j) base[static_cast<std::size_t>(j - 1 - lo)] += r[j - 1];

  std::vector<Rational> acc(width, Rational{0});
  acc[static_cast<std::size_t>(0 - lo)] = 1;
  for (int step = 0; step < n + 1; ++step) {
    std::vector<Rational> next(width, Rational{0});
    for (std::size_t u = 0; u < width; ++u) {
      if (acc[u] == 0) continue;
      for (std::size_t v = 0; v < width; ++v) {
        if (base[v] == 0) continue;
        const int e = static_cast<int>(u) + lo + static_cast<int>(v) + lo;
        if (e < lo || e > hi) continue;
        next[static_cast<std::size_t>(e - lo)] += acc[u] * base[v];
      }
    }
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(-1 - lo)] / Rational(n + 1);
}

IdentitySides nc_generating_sides(int n, std::span<const Rational> r) {
  return {nc_block_sum(n, r), nc_block_sum_residue(n, r)};
}

bool nc_generating_check(int n, std::span<const Rational> r) {
  return nc_generating_sides(n, r).holds();
}

IdentitySides coeffsum_sides(const Partition& nu1, const Partition& nu2, int k) {
  const int l1 = nu1.length();
  const int l2 = nu2.length();
  if (k < 0 || k > std::min(l1, l2)) throw std::invalid_argument("k out of range");
  const int target_length = l1 + l2 - k;
  Integer lhs = 0;
  for (const auto& nu : partitions_of(nu1.size() + nu2.size())) {
    if (nu.length() != target_length) continue;
    Integer t_count = 0;
    for (const auto& split : split_pairs(nu)) {
      if (equivalent_partition(split.first) == nu1 && equivalent_partition(split.second) == nu2) {
        ++t_count;
      }
    }
    lhs += t_count * perm_count(nu);
  }
  const Integer rhs = factorial(target_length) /
                      (factorial(k) * factorial(l1 - k) * factorial(l2 - k)) *
                      perm_count(nu1) * perm_count(nu2);
  return {Rational(lhs), Rational(rhs)};
}

}  // namespace bgf
