#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mapfold/rational.hpp"

namespace mapfold {

// Crease direction. Mountain brings the paper's bottom sides together,
// valley the top sides.
enum class Dir : std::uint8_t { M, V };

inline Dir complement(Dir d) { return d == Dir::M ? Dir::V : Dir::M; }
inline char dir_char(Dir d) { return d == Dir::M ? 'M' : 'V'; }
Dir parse_dir(std::string_view s);

// A 1D mountain-valley pattern: n+1 strictly positive segment lengths
// l0..ln separated by n directed creases d1..dn. Immutable by convention
// after construction.
struct MVPattern1D {
  std::vector<Rat> lengths;  // size n+1
  std::vector<Dir> dirs;     // size n

  std::size_t crease_count() const { return dirs.size(); }

  // Throws PreconditionError unless sizes are consistent and lengths positive.
  void validate() const;

  // Crease positions c1..cn as prefix sums of the lengths.
  std::vector<Rat> crease_positions() const;
  Rat total_length() const;

  // Whitespace-separated tokens alternating length and direction, starting
  // and ending with a length: "1 M 3/2 V 1". Throws ParseError with the
  // 1-based index of the offending token.
  static MVPattern1D parse(std::string_view text);

  // Canonical form: lengths in lowest terms, single spaces, no trailing
  // whitespace.
  std::string format() const;

  bool operator==(const MVPattern1D&) const = default;
};

// One symbol of the fold string S: either a length or a directed crease.
struct Symbol {
  bool is_crease = false;
  Rat length;  // valid when !is_crease
  Dir dir = Dir::M;

  static Symbol make_length(Rat r) { return Symbol{false, r, Dir::M}; }
  static Symbol make_crease(Dir d) { return Symbol{true, Rat(0), d}; }
  bool operator==(const Symbol&) const = default;
};

// The string view of a pattern: S[1] = l0, S[2] = d1, ..., S[N] = ln with
// N = 2n+1. Indexing is 1-based to match the usual S[i] formulas.
struct FoldString {
  std::vector<Symbol> syms;  // stored 0-based internally

  std::size_t size() const { return syms.size(); }  // N
  const Symbol& at(std::size_t i) const { return syms.at(i - 1); }
  Symbol& at(std::size_t i) { return syms.at(i - 1); }
  std::size_t crease_count() const { return syms.size() / 2; }

  static FoldString from_pattern(const MVPattern1D& p);
  MVPattern1D to_pattern() const;

  bool operator==(const FoldString&) const = default;
};

// Complement: fixes lengths, flips each crease direction. An involution.
FoldString complement_string(const FoldString& s);
// Reverse: reverses symbol order. An involution; commutes with complement.
FoldString reverse_string(const FoldString& s);

}  // namespace mapfold
