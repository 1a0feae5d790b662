#include <doctest.h>

#include <random>

#include <mapfold/string_index.hpp>

using namespace mapfold;

namespace {
FoldString fs(const char* s) { return FoldString::from_pattern(MVPattern1D::parse(s)); }

// Independent oracle: naive symbol-by-symbol scan of S^C suffix at i vs S^R
// suffix at j.
std::size_t naive_lcp(const FoldString& s, std::size_t i, std::size_t j) {
  FoldString sc = complement_string(s);
  FoldString sr = reverse_string(s);
  std::size_t k = 0;
  while (i + k <= s.size() && j + k <= s.size() && sc.at(i + k) == sr.at(j + k)) ++k;
  return k;
}

FoldString random_string(std::mt19937_64& rng, std::size_t creases, int len_vals) {
  MVPattern1D p;
  std::uniform_int_distribution<int> len(1, len_vals);
  std::uniform_int_distribution<int> d(0, 1);
  for (std::size_t i = 0; i <= creases; ++i) p.lengths.push_back(Rat(len(rng)));
  for (std::size_t i = 0; i < creases; ++i) p.dirs.push_back(d(rng) ? Dir::V : Dir::M);
  return FoldString::from_pattern(p);
}
}  // namespace

TEST_CASE("assign_labels: spec examples") {
  for (LabelStrategy st : {LabelStrategy::Hashed, LabelStrategy::Sorted}) {
    LabeledString a = assign_labels(fs("1 M 1 V 1"), st);
    CHECK(a.n_distinct == 2);  // one length class, floored at 2
    CHECK(a.labels[0] == a.labels[2]);
    CHECK(a.labels[0] == a.labels[4]);
    CHECK(a.labels[1] == a.label_m());
    CHECK(a.labels[3] == a.label_v());

    LabeledString b = assign_labels(fs("1 M 2 V 1"), st);
    CHECK(b.labels[0] != b.labels[2]);
    CHECK(b.labels[0] == b.labels[4]);

    LabeledString c = assign_labels(fs("1/2 M 2/4"), st);
    CHECK(c.labels[0] == c.labels[2]);
  }
}

TEST_CASE("labeling injectivity on random rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(1, 12), den(1, 12);
  for (int round = 0; round < 200; ++round) {
    MVPattern1D p;
    int n = 6;
    for (int i = 0; i <= n; ++i) p.lengths.push_back(Rat(num(rng), den(rng)));
    for (int i = 0; i < n; ++i) p.dirs.push_back(Dir::M);
    FoldString s = FoldString::from_pattern(p);
    LabeledString ls = assign_labels(s, round % 2 ? LabelStrategy::Hashed : LabelStrategy::Sorted);
    for (std::size_t i = 0; i < s.size(); i += 2)
      for (std::size_t j = 0; j < s.size(); j += 2)
        CHECK((ls.labels[i] == ls.labels[j]) == (s.syms[i].length == s.syms[j].length));
  }
}

TEST_CASE("lcp index: spec examples") {
  {
    FoldString s = fs("1 M 1");
    LcpIndex idx(s);
    CHECK(idx.lcp(3, 3) == 1);
    CHECK(idx.lcp(4, 1) == 0);  // empty suffix
  }
  {
    FoldString s = fs("1 M 1 V 1");
    LcpIndex idx(s);
    CHECK(idx.lcp(1, 1) == 5);  // here S^C equals S^R
  }
  CHECK_THROWS_AS(LcpIndex(fs("1 M 1")).lcp(0, 1), PreconditionError);
  CHECK_THROWS_AS(LcpIndex(fs("1 M 1")).lcp(1, 9), PreconditionError);
}

TEST_CASE("lcp index agrees with the naive scan on random strings") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 400; ++round) {
    FoldString s = random_string(rng, 1 + round % 15, 3);
    LcpIndex idx(s);
    std::uniform_int_distribution<std::size_t> pos(1, s.size() + 1);
    for (int q = 0; q < 30; ++q) {
      std::size_t i = pos(rng), j = pos(rng);
      CHECK(idx.lcp(i, j) == naive_lcp(s, i, j));
    }
  }
}

TEST_CASE("fingerprinter: spec examples") {
  Fingerprinter f = Fingerprinter::make(101, 3);
  CHECK(f.forward_hash == 0);
  f.extend_forward(2);
  f.extend_forward(1);
  CHECK(f.forward_hash == 7);  // (2*3+1) mod 101

  Fingerprinter z = Fingerprinter::make(101, 3);
  z.extend_forward(0);
  CHECK(z.forward_hash == 0);

  // Identical sequences built forward agree.
  Fingerprinter a = Fingerprinter::make(97, 5), b = Fingerprinter::make(97, 5);
  for (std::uint64_t l : {1ULL, 4ULL, 2ULL, 2ULL}) a.extend_forward(l);
  for (std::uint64_t l : {1ULL, 4ULL, 2ULL, 2ULL}) b.extend_forward(l);
  CHECK(a.forward_hash == b.forward_hash);

  // Backward build of the reversed sequence equals the forward build.
  Fingerprinter c = Fingerprinter::make(97, 5);
  for (std::uint64_t l : {2ULL, 2ULL, 4ULL, 1ULL}) c.extend_backward(l);
  CHECK(c.backward_hash == a.forward_hash);
}

TEST_CASE("fingerprint soundness: equal windows have equal fingerprints") {
  std::mt19937_64 rng(23);
  FoldString s = random_string(rng, 7, 2);  // N = 15
  LabeledString ls = assign_labels(s, LabelStrategy::Sorted);
  std::uint64_t prime = 1000003;
  auto hash_range = [&](std::size_t a, std::size_t b) {
    Fingerprinter f = Fingerprinter::make(prime, ls.n_distinct);
    for (std::size_t k = a; k <= b; ++k) f.extend_forward(ls.labels[k - 1]);
    return f.forward_hash;
  };
  for (std::size_t a = 1; a <= s.size(); ++a)
    for (std::size_t b = a; b <= s.size(); ++b)
      for (std::size_t c = 1; c + (b - a) <= s.size(); ++c) {
        std::size_t d = c + (b - a);
        bool equal = true;
        for (std::size_t k = 0; k <= b - a; ++k)
          if (!(s.at(a + k) == s.at(c + k))) { equal = false; break; }
        if (equal) CHECK(hash_range(a, b) == hash_range(c, d));
      }
}

TEST_CASE("collision rate stays small for random primes in [2, N^3]") {
  std::mt19937_64 rng(31);
  std::size_t mismatches = 0, trials = 0;
  for (int round = 0; round < 20; ++round) {
    FoldString s = random_string(rng, 31, 4);  // N = 63
    LabeledString ls = assign_labels(s, LabelStrategy::Sorted);
    std::uint64_t prime = random_prime_up_to(prime_bound(s.size(), 3), rng);
    auto hash_range = [&](std::size_t a, std::size_t b) {
      Fingerprinter f = Fingerprinter::make(prime, ls.n_distinct);
      for (std::size_t k = a; k <= b; ++k) f.extend_forward(ls.labels[k - 1]);
      return f.forward_hash;
    };
    for (std::size_t len = 1; len <= 8; ++len)
      for (std::size_t a = 1; a + len - 1 <= s.size(); a += 3)
        for (std::size_t c = a + 1; c + len - 1 <= s.size(); c += 3) {
          bool equal = true;
          for (std::size_t k = 0; k < len; ++k)
            if (!(s.at(a + k) == s.at(c + k))) { equal = false; break; }
          if (equal) continue;
          ++trials;
          if (hash_range(a, a + len - 1) == hash_range(c, c + len - 1)) ++mismatches;
        }
  }
  REQUIRE(trials > 1000);
  CHECK(static_cast<double>(mismatches) / trials < 0.05);
}

TEST_CASE("prime sampling") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    std::uint64_t p = random_prime_up_to(1000, rng);
    CHECK(is_prime_u64(p));
    CHECK(p <= 1000);
  }
  CHECK(is_prime_u64(2));
  CHECK(!is_prime_u64(1));
  CHECK(is_prime_u64(999999937ULL));
  CHECK(!is_prime_u64(999999937ULL * 3));
}
