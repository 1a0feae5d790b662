#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mapfold/pattern1d.hpp"

namespace mapfold {

enum class LabelStrategy { Hashed, Sorted };

// Integer relabeling of a fold string. Length values map injectively to
// 0..n'-1; creases take the two reserved labels n' (M) and n'+1 (V), so a
// length can never match a crease.
struct LabeledString {
  std::vector<std::int32_t> labels;  // one per symbol, 0-based storage
  std::int32_t n_distinct = 2;       // n' = max(2, number of distinct lengths)

  std::int32_t label_m() const { return n_distinct; }
  std::int32_t label_v() const { return n_distinct + 1; }

  std::int32_t complement_label(std::int32_t l) const {
    if (l == label_m()) return label_v();
    if (l == label_v()) return label_m();
    return l;
  }
};

// Hashed: expected-linear labeling via hashing of rationals.
// Sorted: deterministic comparison sort, O(N log n').
LabeledString assign_labels(const FoldString& s, LabelStrategy strategy);

// Longest-prefix-match index over the complement string S^C and the reverse
// string S^R. Queries cost O(1) after construction (suffix array + LCP array
// + block range-minimum table).
class LcpIndex {
 public:
  explicit LcpIndex(const FoldString& s)
      : LcpIndex(assign_labels(s, LabelStrategy::Sorted)) {}
  explicit LcpIndex(const LabeledString& ls);

  std::size_t text_size() const { return n_; }

  // Length of the longest common prefix of the suffix of S^C starting at
  // position i and the suffix of S^R starting at position j (1-based).
  // Positions N+1 denote the empty suffix. Out-of-range positions throw.
  std::size_t lcp(std::size_t i, std::size_t j) const;

 private:
  std::size_t n_ = 0;                  // N = |S|
  std::vector<std::int32_t> rank_;     // rank in the joint suffix array
  std::vector<std::int32_t> lcp_;      // lcp between sa[k] and sa[k+1]
  std::vector<std::int32_t> block_min_;
  std::vector<std::vector<std::int32_t>> sparse_;
  std::size_t range_min(std::size_t lo, std::size_t hi) const;  // [lo, hi)
};

// Rolling Karp-Rabin fingerprint extendable at both ends in O(1).
// Forward: h <- h*base + label. Backward (prepending): h <- h + label*base^k
// with base^k maintained incrementally.
struct Fingerprinter {
  std::uint64_t modulus = 0;
  std::uint64_t base = 0;
  std::uint64_t forward_hash = 0;
  std::uint64_t forward_len = 0;
  std::uint64_t backward_hash = 0;
  std::uint64_t backward_len = 0;
  std::uint64_t pow_len = 1;  // base^backward_len mod modulus

  static Fingerprinter make(std::uint64_t prime, std::uint64_t base);

  void extend_forward(std::uint64_t label);
  void extend_backward(std::uint64_t label);
};

// Deterministic 64-bit Miller-Rabin.
bool is_prime_u64(std::uint64_t v);

// Uniform prime in [2, bound] by rejection sampling. Throws if bound < 2.
std::uint64_t random_prime_up_to(std::uint64_t bound, std::mt19937_64& rng);

// N^c with saturation at 2^62 to keep modular products in 128 bits sane.
std::uint64_t prime_bound(std::size_t n, unsigned exponent);

}  // namespace mapfold
