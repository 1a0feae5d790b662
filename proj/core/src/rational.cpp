#include "mapfold/rational.hpp"

#include <charconv>
#include <numeric>

namespace mapfold {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("rational add overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("rational mul overflow");
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  std::int64_t r;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &r)) throw OverflowError("rational negate overflow");
  return r;
}

std::int64_t parse_i64(std::string_view s, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(std::string("invalid ") + what + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace

Rat::Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
  if (den_ == 0) throw PreconditionError("rational with zero denominator");
  if (den_ < 0) {
    num_ = checked_neg(num_);
    den_ = checked_neg(den_);
  }
  std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::int64_t p = parse_i64(text.substr(0, slash), "numerator");
    std::int64_t q = parse_i64(text.substr(slash + 1), "denominator");
    if (q == 0) throw ParseError("rational literal with zero denominator: '" + std::string(text) + "'");
    return Rat(p, q);
  }
  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    if (fp.empty()) throw ParseError("decimal literal missing fraction digits: '" + std::string(text) + "'");
    bool neg = !ip.empty() && ip[0] == '-';
    std::int64_t whole = ip.empty() || ip == "-" ? 0 : parse_i64(ip, "integer part");
    std::int64_t frac = parse_i64(fp, "fraction part");
    if (frac < 0) throw ParseError("invalid decimal literal: '" + std::string(text) + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den = checked_mul(den, 10);
    std::int64_t mag = checked_add(checked_mul(whole < 0 ? checked_neg(whole) : whole, den), frac);
    return Rat(neg ? checked_neg(mag) : mag, den);
  }
  return Rat(parse_i64(text, "integer"), 1);
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = checked_neg(num_);
  r.den_ = den_;
  return r;
}

Rat Rat::abs() const { return num_ < 0 ? -*this : *this; }

Rat Rat::operator+(const Rat& o) const {
  // a/b + c/d with b,d already positive and reduced.
  std::int64_t g = std::gcd(den_, o.den_);
  std::int64_t b = den_ / g;
  std::int64_t d = o.den_ / g;
  std::int64_t n = checked_add(checked_mul(num_, d), checked_mul(o.num_, b));
  std::int64_t den = checked_mul(checked_mul(b, d), g);
  return Rat(n, den);
}

Rat Rat::operator-(const Rat& o) const { return *this + (-o); }

Rat Rat::operator*(const Rat& o) const {
  std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
  std::int64_t g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
  std::int64_t n = checked_mul(num_ / g1, o.num_ / g2);
  std::int64_t d = checked_mul(den_ / g2, o.den_ / g1);
  return Rat(n, d);
}

Rat Rat::operator/(const Rat& o) const {
  if (o.num_ == 0) throw PreconditionError("rational division by zero");
  return *this * Rat(o.den_, o.num_);
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
  // Cross multiplication in 128 bits cannot overflow.
  __int128 lhs = static_cast<__int128>(num_) * o.den_;
  __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

Rat lcm_denominator_scale(const Rat* begin, const Rat* end) {
  std::int64_t l = 1;
  for (const Rat* p = begin; p != end; ++p) {
    std::int64_t d = p->den();
    std::int64_t g = std::gcd(l, d);
    std::int64_t q = d / g;
    std::int64_t r;
    if (__builtin_mul_overflow(l, q, &r)) throw OverflowError("denominator lcm overflow");
    l = r;
  }
  return Rat(l, 1);
}

}  // namespace mapfold
