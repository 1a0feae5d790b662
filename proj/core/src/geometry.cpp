#include "mapfold/geometry.hpp"

#include <algorithm>

namespace mapfold {

namespace {

// Dihedral group of the square: matrices [[a,b],[c,d]].
struct Lin {
  int a, b, c, d;
};
constexpr Lin kLin[8] = {
    {1, 0, 0, 1},    // 0 identity
    {0, -1, 1, 0},   // 1 rot 90
    {-1, 0, 0, -1},  // 2 rot 180
    {0, 1, -1, 0},   // 3 rot 270
    {1, 0, 0, -1},   // 4 mirror across x axis
    {-1, 0, 0, 1},   // 5 mirror across y axis
    {0, 1, 1, 0},    // 6 mirror across y = x
    {0, -1, -1, 0},  // 7 mirror across y = -x
};

int lin_compose(int f, int g) {  // matrix product kLin[f] * kLin[g]
  const Lin& F = kLin[f];
  const Lin& G = kLin[g];
  Lin r{F.a * G.a + F.b * G.c, F.a * G.b + F.b * G.d, F.c * G.a + F.d * G.c,
        F.c * G.b + F.d * G.d};
  for (int i = 0; i < 8; ++i)
    if (kLin[i].a == r.a && kLin[i].b == r.b && kLin[i].c == r.c && kLin[i].d == r.d) return i;
  throw Error("internal: dihedral composition left the group");
}

Vec2 lin_apply(int m, const Vec2& p) {
  const Lin& L = kLin[m];
  return {Rat(L.a) * p.x + Rat(L.b) * p.y, Rat(L.c) * p.x + Rat(L.d) * p.y};
}

}  // namespace

Rat cross(const Vec2& a, const Vec2& b, const Vec2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Rat line_side(const Line2D& l, const Vec2& p) {
  switch (l.kind) {
    case Line2D::Kind::X: return p.x - l.offset;
    case Line2D::Kind::Y: return p.y - l.offset;
    case Line2D::Kind::DiagPos: return p.y - p.x - l.offset;
    case Line2D::Kind::DiagNeg: return p.y + p.x - l.offset;
  }
  throw Error("bad line kind");
}

Rat line_param(const Line2D& l, const Vec2& p) {
  return l.kind == Line2D::Kind::X ? p.y : p.x;
}

std::optional<Line2D> line_through(const Vec2& a, const Vec2& b) {
  Rat dx = b.x - a.x, dy = b.y - a.y;
  if (dx.is_zero() && dy.is_zero()) return std::nullopt;
  if (dx.is_zero()) return Line2D{Line2D::Kind::X, a.x};
  if (dy.is_zero()) return Line2D{Line2D::Kind::Y, a.y};
  if (dx == dy) return Line2D{Line2D::Kind::DiagPos, a.y - a.x};
  if (dx == -dy) return Line2D{Line2D::Kind::DiagNeg, a.y + a.x};
  return std::nullopt;
}

Vec2 Iso2::apply(const Vec2& p) const { return lin_apply(lin, p) + t; }

Iso2 Iso2::after(const Iso2& inner) const {
  Iso2 r;
  r.lin = lin_compose(lin, inner.lin);
  r.t = lin_apply(lin, inner.t) + t;
  return r;
}

bool Iso2::reverses_orientation() const { return lin >= 4; }

Iso2 Iso2::reflection(const Line2D& l) {
  Iso2 r;
  Rat two_c = l.offset + l.offset;
  switch (l.kind) {
    case Line2D::Kind::X:  // (x,y) -> (2c - x, y)
      r.lin = 5;
      r.t = {two_c, Rat(0)};
      break;
    case Line2D::Kind::Y:  // (x,y) -> (x, 2c - y)
      r.lin = 4;
      r.t = {Rat(0), two_c};
      break;
    case Line2D::Kind::DiagPos:  // (x,y) -> (y - c, x + c)
      r.lin = 6;
      r.t = {-l.offset, l.offset};
      break;
    case Line2D::Kind::DiagNeg:  // (x,y) -> (c - y, c - x)
      r.lin = 7;
      r.t = {l.offset, l.offset};
      break;
  }
  return r;
}

Line2D apply_to_line(const Iso2& iso, const Line2D& l) {
  // Take two points on the line and rebuild it.
  Vec2 p, q;
  switch (l.kind) {
    case Line2D::Kind::X: p = {l.offset, Rat(0)}; q = {l.offset, Rat(1)}; break;
    case Line2D::Kind::Y: p = {Rat(0), l.offset}; q = {Rat(1), l.offset}; break;
    case Line2D::Kind::DiagPos: p = {Rat(0), l.offset}; q = {Rat(1), l.offset + Rat(1)}; break;
    case Line2D::Kind::DiagNeg: p = {Rat(0), l.offset}; q = {Rat(1), l.offset - Rat(1)}; break;
  }
  auto out = line_through(iso.apply(p), iso.apply(q));
  if (!out) throw Error("internal: isometry destroyed a line");
  return *out;
}

Rat Polygon::area2() const {
  Rat acc(0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec2& a = pts[i];
    const Vec2& b = pts[(i + 1) % pts.size()];
    acc += a.x * b.y - b.x * a.y;
  }
  return acc;
}

void Polygon::normalize() {
  if (area2().is_negative()) std::reverse(pts.begin(), pts.end());
}

bool Polygon::contains_point_strict(const Vec2& p) const {
  bool inside = false;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec2& a = pts[i];
    const Vec2& b = pts[(i + 1) % pts.size()];
    if (cross(a, b, p).is_zero() && min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) &&
        min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y))
      return false;  // boundary point
    bool a_below = a.y <= p.y;
    bool b_below = b.y <= p.y;
    if (a_below != b_below) {
      Rat c = cross(a, b, p);
      if (b.y > a.y ? c.is_positive() : c.is_negative()) inside = !inside;
    }
  }
  return inside;
}

std::vector<std::array<Vec2, 3>> Polygon::triangulate() const {
  std::vector<std::array<Vec2, 3>> tris;
  std::vector<Vec2> v = pts;
  if (v.size() < 3) return tris;
  // Ear clipping with exact predicates; assumes a simple CCW polygon.
  auto is_ear = [&](std::size_t i) {
    std::size_t n = v.size();
    const Vec2& a = v[(i + n - 1) % n];
    const Vec2& b = v[i];
    const Vec2& c = v[(i + 1) % n];
    Rat orient = cross(a, b, c);
    if (!orient.is_positive()) return false;  // reflex or collinear corner
    for (std::size_t k = 0; k < n; ++k) {
      if (k == (i + n - 1) % n || k == i || k == (i + 1) % n) continue;
      const Vec2& p = v[k];
      Rat s1 = cross(a, b, p), s2 = cross(b, c, p), s3 = cross(c, a, p);
      bool outside = s1.is_negative() || s2.is_negative() || s3.is_negative();
      if (!outside) return false;
    }
    return true;
  };
  std::size_t guard = 0;
  while (v.size() > 3) {
    bool clipped = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_ear(i)) {
        std::size_t n = v.size();
        tris.push_back({v[(i + n - 1) % n], v[i], v[(i + 1) % n]});
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        clipped = true;
        break;
      }
    }
    if (!clipped) {
      bool dropped = false;
      for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t n = v.size();
        if (cross(v[(i + n - 1) % n], v[i], v[(i + 1) % n]).is_zero()) {
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
          dropped = true;
          break;
        }
      }
      if (!dropped) throw PreconditionError("triangulation failed: polygon not simple?");
    }
    if (++guard > 10000) throw PreconditionError("triangulation did not terminate");
  }
  if (v.size() == 3 && !cross(v[0], v[1], v[2]).is_zero()) tris.push_back({v[0], v[1], v[2]});
  return tris;
}

namespace {

// Clip a convex polygon by the half plane keeping side(l,p)*sign >= 0.
std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, const Line2D& l, int sign) {
  std::vector<Vec2> out;
  std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % n];
    Rat sa = line_side(l, a) * Rat(sign);
    Rat sb = line_side(l, b) * Rat(sign);
    bool ina = !sa.is_negative();
    bool inb = !sb.is_negative();
    if (ina) out.push_back(a);
    if (ina != inb) {
      Rat u = sa / (sa - sb);
      out.push_back({a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)});
    }
  }
  return out;
}

// Clip by the half plane left of directed edge (a,b): keeps cross(a,b,p) >= 0.
std::vector<Vec2> clip_edge(const std::vector<Vec2>& poly, const Vec2& a, const Vec2& b) {
  std::vector<Vec2> out;
  std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    Rat sp = cross(a, b, p);
    Rat sq = cross(a, b, q);
    bool inp = !sp.is_negative();
    bool inq = !sq.is_negative();
    if (inp) out.push_back(p);
    if (inp != inq) {
      Rat u = sp / (sp - sq);
      out.push_back({p.x + u * (q.x - p.x), p.y + u * (q.y - p.y)});
    }
  }
  return out;
}

Rat poly_area2(const std::vector<Vec2>& v) {
  Rat acc(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % v.size()];
    acc += a.x * b.y - b.x * a.y;
  }
  return acc;
}

std::array<Vec2, 3> ccw(const std::array<Vec2, 3>& t) {
  if (cross(t[0], t[1], t[2]).is_negative()) return {t[0], t[2], t[1]};
  return t;
}

}  // namespace

bool triangles_overlap(const std::array<Vec2, 3>& ta, const std::array<Vec2, 3>& tb) {
  std::array<Vec2, 3> a = ccw(ta), b = ccw(tb);
  std::vector<Vec2> poly(a.begin(), a.end());
  for (int i = 0; i < 3 && !poly.empty(); ++i) poly = clip_edge(poly, b[i], b[(i + 1) % 3]);
  return poly.size() >= 3 && poly_area2(poly).is_positive();
}

Rat triangle_halfplane_area2(const std::array<Vec2, 3>& t, const Line2D& l, int sign) {
  std::array<Vec2, 3> a = ccw(t);
  std::vector<Vec2> poly(a.begin(), a.end());
  poly = clip_halfplane(poly, l, sign);
  if (poly.size() < 3) return Rat(0);
  return poly_area2(poly);
}

std::optional<std::pair<Rat, Rat>> triangle_line_crossing(const std::array<Vec2, 3>& t,
                                                          const Line2D& l) {
  bool pos = false, neg = false;
  for (const Vec2& p : t) {
    Rat s = line_side(l, p);
    if (s.is_positive()) pos = true;
    if (s.is_negative()) neg = true;
  }
  if (!pos || !neg) return std::nullopt;
  std::vector<Rat> params;
  for (int i = 0; i < 3; ++i) {
    const Vec2& a = t[i];
    const Vec2& b = t[(i + 1) % 3];
    Rat sa = line_side(l, a), sb = line_side(l, b);
    if (sa.is_zero()) params.push_back(line_param(l, a));
    if ((sa.is_positive() && sb.is_negative()) || (sa.is_negative() && sb.is_positive())) {
      Rat u = sa / (sa - sb);
      Vec2 x{a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
      params.push_back(line_param(l, x));
    }
  }
  if (params.empty()) return std::nullopt;
  Rat lo = params[0], hi = params[0];
  for (const Rat& v : params) {
    lo = min(lo, v);
    hi = max(hi, v);
  }
  return std::make_pair(lo, hi);
}

std::vector<LineContact> triangle_line_contacts(const std::array<Vec2, 3>& t, const Line2D& l) {
  std::vector<LineContact> out;
  if (auto c = triangle_line_crossing(t, l)) {
    if (c->first < c->second) out.push_back({c->first, c->second, 0});
    return out;
  }
  std::array<Vec2, 3> a = ccw(t);
  for (int i = 0; i < 3; ++i) {
    const Vec2& p = a[i];
    const Vec2& q = a[(i + 1) % 3];
    if (!line_side(l, p).is_zero() || !line_side(l, q).is_zero()) continue;
    const Vec2& r = a[(i + 2) % 3];
    Rat s = line_side(l, r);
    if (s.is_zero()) continue;
    Rat u = line_param(l, p), v = line_param(l, q);
    LineContact c{min(u, v), max(u, v), s.is_positive() ? 1 : -1};
    if (c.lo < c.hi) out.push_back(c);
  }
  return out;
}

}  // namespace mapfold
