#include "mapfold/pattern1d.hpp"

#include <sstream>

namespace mapfold {

Dir parse_dir(std::string_view s) {
  if (s == "M" || s == "m") return Dir::M;
  if (s == "V" || s == "v") return Dir::V;
  throw ParseError("expected direction M or V, got '" + std::string(s) + "'");
}

void MVPattern1D::validate() const {
  if (lengths.size() != dirs.size() + 1)
    throw PreconditionError("pattern needs exactly one more length than creases");
  for (const Rat& l : lengths)
    if (!l.is_positive()) throw PreconditionError("pattern lengths must be strictly positive");
}

std::vector<Rat> MVPattern1D::crease_positions() const {
  std::vector<Rat> pos;
  pos.reserve(dirs.size());
  Rat acc(0);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    acc += lengths[i];
    pos.push_back(acc);
  }
  return pos;
}

Rat MVPattern1D::total_length() const {
  Rat acc(0);
  for (const Rat& l : lengths) acc += l;
  return acc;
}

MVPattern1D MVPattern1D::parse(std::string_view text) {
  std::vector<std::string> tokens;
  {
    std::string cur;
    for (char c : text) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
  }
  if (tokens.empty()) throw ParseError("empty 1D pattern", 1);

  MVPattern1D p;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    bool want_length = i % 2 == 0;
    if (want_length) {
      Rat r;
      try {
        r = Rat::parse(t);
      } catch (const ParseError&) {
        throw ParseError("expected a length at token " + std::to_string(i + 1) + ", got '" + t + "'", i + 1);
      }
      if (!r.is_positive())
        throw ParseError("non-positive length at token " + std::to_string(i + 1), i + 1);
      p.lengths.push_back(r);
    } else {
      if (t != "M" && t != "V" && t != "m" && t != "v")
        throw ParseError("expected M or V at token " + std::to_string(i + 1) + ", got '" + t + "'", i + 1);
      p.dirs.push_back(parse_dir(t));
    }
  }
  if (tokens.size() % 2 == 0)
    throw ParseError("1D pattern must end with a length", tokens.size());
  p.validate();
  return p;
}

std::string MVPattern1D::format() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i) out << ' ' << dir_char(dirs[i - 1]) << ' ';
    out << lengths[i].str();
  }
  return out.str();
}

FoldString FoldString::from_pattern(const MVPattern1D& p) {
  p.validate();
  FoldString s;
  s.syms.reserve(2 * p.dirs.size() + 1);
  for (std::size_t i = 0; i < p.lengths.size(); ++i) {
    if (i) s.syms.push_back(Symbol::make_crease(p.dirs[i - 1]));
    s.syms.push_back(Symbol::make_length(p.lengths[i]));
  }
  return s;
}

MVPattern1D FoldString::to_pattern() const {
  MVPattern1D p;
  for (std::size_t i = 0; i < syms.size(); ++i) {
    if (i % 2 == 0) {
      if (syms[i].is_crease) throw PreconditionError("fold string alternation broken");
      p.lengths.push_back(syms[i].length);
    } else {
      if (!syms[i].is_crease) throw PreconditionError("fold string alternation broken");
      p.dirs.push_back(syms[i].dir);
    }
  }
  p.validate();
  return p;
}

FoldString complement_string(const FoldString& s) {
  FoldString r = s;
  for (Symbol& sym : r.syms)
    if (sym.is_crease) sym.dir = complement(sym.dir);
  return r;
}

FoldString reverse_string(const FoldString& s) {
  FoldString r = s;
  std::reverse(r.syms.begin(), r.syms.end());
  return r;
}

}  // namespace mapfold
