#include "mapfold/string_index.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace mapfold {

namespace {

// SA-IS suffix array construction over an integer alphabet. `text` must end
// with a unique smallest sentinel (0).
void sais(const std::vector<std::int32_t>& text, std::int32_t alphabet,
          std::vector<std::int32_t>& sa) {
  const std::int32_t n = static_cast<std::int32_t>(text.size());
  sa.assign(n, -1);
  if (n == 0) return;
  if (n == 1) {
    sa[0] = 0;
    return;
  }
  std::vector<bool> is_s(n);
  is_s[n - 1] = true;
  for (std::int32_t i = n - 2; i >= 0; --i)
    is_s[i] = text[i] < text[i + 1] || (text[i] == text[i + 1] && is_s[i + 1]);
  auto is_lms = [&](std::int32_t i) { return i > 0 && is_s[i] && !is_s[i - 1]; };

  std::vector<std::int32_t> bucket(alphabet + 1, 0);
  for (std::int32_t c : text) bucket[c + 1]++;
  for (std::int32_t c = 0; c < alphabet; ++c) bucket[c + 1] += bucket[c];

  auto induce = [&](const std::vector<std::int32_t>& lms) {
    std::fill(sa.begin(), sa.end(), -1);
    std::vector<std::int32_t> tail(bucket.begin() + 1, bucket.end());
    for (auto it = lms.rbegin(); it != lms.rend(); ++it) sa[--tail[text[*it]]] = *it;
    std::vector<std::int32_t> head(bucket.begin(), bucket.end() - 1);
    for (std::int32_t k = 0; k < n; ++k) {
      std::int32_t j = sa[k];
      if (j > 0 && !is_s[j - 1]) sa[head[text[j - 1]]++] = j - 1;
    }
    std::vector<std::int32_t> tail2(bucket.begin() + 1, bucket.end());
    for (std::int32_t k = n - 1; k >= 0; --k) {
      std::int32_t j = sa[k];
      if (j > 0 && is_s[j - 1]) sa[--tail2[text[j - 1]]] = j - 1;
    }
  };

  std::vector<std::int32_t> lms;
  for (std::int32_t i = 1; i < n; ++i)
    if (is_lms(i)) lms.push_back(i);
  induce(lms);

  // Name LMS substrings in suffix-array order.
  std::vector<std::int32_t> order;
  order.reserve(lms.size());
  for (std::int32_t k = 0; k < n; ++k)
    if (is_lms(sa[k])) order.push_back(sa[k]);
  std::vector<std::int32_t> name(n, -1);
  std::int32_t names = 0;
  std::int32_t prev = -1;
  for (std::int32_t i : order) {
    if (prev >= 0) {
      bool same = true;
      for (std::int32_t d = 0;; ++d) {
        if (text[prev + d] != text[i + d] || is_lms(prev + d) != is_lms(i + d)) {
          same = false;
          break;
        }
        if (d > 0 && (is_lms(prev + d) || is_lms(i + d))) break;
      }
      if (!same) ++names;
    }
    name[i] = names;
    prev = i;
  }
  std::vector<std::int32_t> reduced(lms.size());
  for (std::size_t i = 0; i < lms.size(); ++i) reduced[i] = name[lms[i]];

  std::vector<std::int32_t> lms_sorted(lms.size());
  if (names + 1 == static_cast<std::int32_t>(lms.size())) {
    for (std::size_t i = 0; i < lms.size(); ++i) lms_sorted[reduced[i]] = lms[i];
  } else {
    std::vector<std::int32_t> sub_sa;
    sais(reduced, names + 1, sub_sa);
    for (std::size_t i = 0; i < lms.size(); ++i) lms_sorted[i] = lms[sub_sa[i]];
  }
  induce(lms_sorted);
}

constexpr std::size_t kBlock = 32;

}  // namespace

LabeledString assign_labels(const FoldString& s, LabelStrategy strategy) {
  LabeledString out;
  out.labels.resize(s.size());
  std::vector<std::pair<Rat, std::size_t>> lengths;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!s.syms[i].is_crease) lengths.emplace_back(s.syms[i].length, i);

  std::int32_t next = 0;
  if (strategy == LabelStrategy::Hashed) {
    std::unordered_map<Rat, std::int32_t> ids;
    ids.reserve(lengths.size() * 2);
    for (auto& [len, idx] : lengths) {
      auto [it, fresh] = ids.emplace(len, next);
      if (fresh) ++next;
      out.labels[idx] = it->second;
    }
  } else {
    std::map<Rat, std::int32_t> ids;  // comparison sort of the alphabet
    for (auto& [len, idx] : lengths) ids.emplace(len, 0);
    for (auto& [len, id] : ids) id = next++;
    for (auto& [len, idx] : lengths) out.labels[idx] = ids[len];
  }
  out.n_distinct = std::max<std::int32_t>(2, next);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.syms[i].is_crease)
      out.labels[i] = s.syms[i].dir == Dir::M ? out.label_m() : out.label_v();
  return out;
}

LcpIndex::LcpIndex(const LabeledString& ls) {
  n_ = ls.labels.size();
  const std::int32_t sep = ls.n_distinct + 2;
  // Joint text: S^C, separator, S^R, sentinel. Shift labels by 1 so the
  // sentinel 0 is strictly smallest.
  std::vector<std::int32_t> text;
  text.reserve(2 * n_ + 2);
  for (std::size_t i = 0; i < n_; ++i) text.push_back(ls.complement_label(ls.labels[i]) + 1);
  text.push_back(sep + 1);
  for (std::size_t i = 0; i < n_; ++i) text.push_back(ls.labels[n_ - 1 - i] + 1);
  text.push_back(0);

  std::vector<std::int32_t> sa;
  sais(text, sep + 2, sa);

  const std::size_t tn = text.size();
  rank_.assign(tn, 0);
  for (std::size_t k = 0; k < tn; ++k) rank_[sa[k]] = static_cast<std::int32_t>(k);

  // Kasai LCP between adjacent suffixes in SA order.
  lcp_.assign(tn, 0);
  std::int32_t h = 0;
  for (std::size_t i = 0; i < tn; ++i) {
    if (h > 0) --h;
    std::int32_t r = rank_[i];
    if (r == static_cast<std::int32_t>(tn) - 1) {
      h = 0;
      continue;
    }
    std::int32_t j = sa[r + 1];
    while (i + h < tn && j + h < static_cast<std::int32_t>(tn) && text[i + h] == text[j + h]) ++h;
    lcp_[r] = h;
  }

  std::size_t blocks = (tn + kBlock - 1) / kBlock;
  block_min_.assign(blocks, INT32_MAX);
  for (std::size_t i = 0; i < tn; ++i)
    block_min_[i / kBlock] = std::min(block_min_[i / kBlock], lcp_[i]);
  std::size_t levels = 1;
  while ((std::size_t{1} << levels) <= blocks) ++levels;
  sparse_.assign(levels, block_min_);
  for (std::size_t l = 1; l < levels; ++l) {
    std::size_t span = std::size_t{1} << l;
    for (std::size_t b = 0; b + span <= blocks; ++b)
      sparse_[l][b] = std::min(sparse_[l - 1][b], sparse_[l - 1][b + span / 2]);
  }
}

std::size_t LcpIndex::range_min(std::size_t lo, std::size_t hi) const {
  // Minimum of lcp_[lo..hi).
  std::int32_t best = INT32_MAX;
  std::size_t blo = lo / kBlock, bhi = (hi - 1) / kBlock;
  if (blo == bhi) {
    for (std::size_t i = lo; i < hi; ++i) best = std::min(best, lcp_[i]);
    return static_cast<std::size_t>(best);
  }
  for (std::size_t i = lo; i < (blo + 1) * kBlock; ++i) best = std::min(best, lcp_[i]);
  for (std::size_t i = bhi * kBlock; i < hi; ++i) best = std::min(best, lcp_[i]);
  if (blo + 1 < bhi) {
    std::size_t b0 = blo + 1, b1 = bhi;  // block range [b0, b1)
    std::size_t l = 0;
    while ((std::size_t{2} << l) <= b1 - b0) ++l;
    best = std::min(best, std::min(sparse_[l][b0], sparse_[l][b1 - (std::size_t{1} << l)]));
  }
  return static_cast<std::size_t>(best);
}

std::size_t LcpIndex::lcp(std::size_t i, std::size_t j) const {
  if (i < 1 || i > n_ + 1 || j < 1 || j > n_ + 1)
    throw PreconditionError("lcp query position out of range");
  if (i > n_ || j > n_) return 0;  // empty suffix
  std::size_t a = i - 1;            // S^C suffix start in joint text
  std::size_t b = n_ + 1 + (j - 1);  // S^R suffix start
  std::size_t ra = rank_[a], rb = rank_[b];
  if (ra > rb) std::swap(ra, rb);
  std::size_t raw = range_min(ra, rb);
  // The separator already prevents matches across string boundaries, so raw
  // is bounded by the remaining lengths; clamp anyway.
  return std::min(raw, std::min(n_ - (i - 1), n_ - (j - 1)));
}

Fingerprinter Fingerprinter::make(std::uint64_t prime, std::uint64_t base) {
  Fingerprinter f;
  f.modulus = prime;
  f.base = base % prime;
  f.pow_len = 1 % prime;
  return f;
}

namespace {
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}
}  // namespace

void Fingerprinter::extend_forward(std::uint64_t label) {
  forward_hash = (mulmod(forward_hash, base, modulus) + label) % modulus;
  ++forward_len;
}

void Fingerprinter::extend_backward(std::uint64_t label) {
  backward_hash = (backward_hash + mulmod(label % modulus, pow_len, modulus)) % modulus;
  pow_len = mulmod(pow_len, base, modulus);
  ++backward_len;
}

bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (v % p == 0) return v == p;
  }
  std::uint64_t d = v - 1;
  int r = 0;
  while (d % 2 == 0) d /= 2, ++r;
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t acc = 1;
    b %= v;
    while (e) {
      if (e & 1) acc = mulmod(acc, b, v);
      b = mulmod(b, b, v);
      e >>= 1;
    }
    return acc;
  };
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == v - 1) continue;
    bool witness = true;
    for (int k = 1; k < r; ++k) {
      x = mulmod(x, x, v);
      if (x == v - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t random_prime_up_to(std::uint64_t bound, std::mt19937_64& rng) {
  if (bound < 2) throw PreconditionError("no prime below 2");
  std::uniform_int_distribution<std::uint64_t> dist(2, bound);
  while (true) {
    std::uint64_t v = dist(rng);
    if (is_prime_u64(v)) return v;
  }
}

std::uint64_t prime_bound(std::size_t n, unsigned exponent) {
  const std::uint64_t cap = std::uint64_t{1} << 62;
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (acc > cap / std::max<std::size_t>(n, 2)) return cap;
    acc *= std::max<std::size_t>(n, 2);
  }
  return std::max<std::uint64_t>(acc, 3);
}

}  // namespace mapfold
