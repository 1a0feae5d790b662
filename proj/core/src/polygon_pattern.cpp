#include "mapfold/polygon_pattern.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace mapfold {

using nlohmann::json;

namespace {

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  if (!cross(a, b, p).is_zero()) return false;
  return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) && min(a.y, b.y) <= p.y &&
         p.y <= max(a.y, b.y);
}

// Do closed segments (a,b) and (c,d) share a point other than common
// endpoints of the inputs?
bool segments_conflict(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  auto is_shared_endpoint = [&](const Vec2& p) {
    return (p == a || p == b) && (p == c || p == d);
  };
  Rat d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
  auto sgn = [](const Rat& r) { return r.is_positive() ? 1 : (r.is_negative() ? -1 : 0); };
  int s1 = sgn(d1), s2 = sgn(d2), s3 = sgn(d3), s4 = sgn(d4);
  if (s1 * s2 < 0 && s3 * s4 < 0) return true;  // proper crossing
  // Touching/overlap cases: any endpoint of one on the other segment that is
  // not a shared endpoint conflicts.
  for (const Vec2* p : {&a, &b}) {
    if (on_segment(c, d, *p) && !is_shared_endpoint(*p)) return true;
  }
  for (const Vec2* p : {&c, &d}) {
    if (on_segment(a, b, *p) && !is_shared_endpoint(*p)) return true;
  }
  return false;
}

int dir_octant(const Vec2& from, const Vec2& to) {
  Rat dx = to.x - from.x, dy = to.y - from.y;
  int sx = dx.is_positive() ? 1 : (dx.is_negative() ? -1 : 0);
  int sy = dy.is_positive() ? 1 : (dy.is_negative() ? -1 : 0);
  if (sx == 1 && sy == 0) return 0;
  if (sx == 1 && sy == 1) return 1;
  if (sx == 0 && sy == 1) return 2;
  if (sx == -1 && sy == 1) return 3;
  if (sx == -1 && sy == 0) return 4;
  if (sx == -1 && sy == -1) return 5;
  if (sx == 0 && sy == -1) return 6;
  if (sx == 1 && sy == -1) return 7;
  throw PreconditionError("degenerate edge");
}

}  // namespace

bool OrthoPolygonPattern::directed() const {
  return !creases.empty() && creases.front().dir.has_value();
}

void OrthoPolygonPattern::validate() {
  if (boundary.pts.size() < 4) throw PreconditionError("boundary needs at least 4 vertices");
  if (!boundary.area2().is_positive() && !boundary.area2().is_negative())
    throw PreconditionError("degenerate boundary");
  boundary.normalize();
  std::size_t n = boundary.pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = boundary.pts[i];
    const Vec2& b = boundary.pts[(i + 1) % n];
    if (a == b) throw PreconditionError("repeated boundary vertex");
    if (!(a.x == b.x) && !(a.y == b.y))
      throw PreconditionError("boundary edges must be axis-parallel");
  }
  // Simplicity: non-adjacent edges must not touch.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_conflict(boundary.pts[i], boundary.pts[(i + 1) % n], boundary.pts[j],
                            boundary.pts[(j + 1) % n]))
        throw PreconditionError("boundary is self-intersecting");
    }
  }
  // Direction presence: all or none.
  for (const CreaseSeg& c : creases)
    if (c.dir.has_value() != creases.front().dir.has_value())
      throw PreconditionError("creases must be all directed or all undirected");

  auto on_boundary = [&](const Vec2& p) {
    for (std::size_t i = 0; i < n; ++i)
      if (on_segment(boundary.pts[i], boundary.pts[(i + 1) % n], p)) return true;
    return false;
  };
  for (std::size_t i = 0; i < creases.size(); ++i) {
    const CreaseSeg& c = creases[i];
    if (c.a == c.b) throw PreconditionError("degenerate crease");
    if (!line_through(c.a, c.b))
      throw PreconditionError("crease must be axis-parallel or 45 degrees");
    for (const Vec2* p : {&c.a, &c.b}) {
      if (on_boundary(*p)) continue;
      bool shared = false;
      for (std::size_t j = 0; j < creases.size() && !shared; ++j)
        if (j != i && (creases[j].a == *p || creases[j].b == *p)) shared = true;
      if (!shared)
        throw PreconditionError("crease endpoint is neither on the boundary nor shared");
    }
    Vec2 mid{(c.a.x + c.b.x) * Rat(1, 2), (c.a.y + c.b.y) * Rat(1, 2)};
    if (!boundary.contains_point_strict(mid))
      throw PreconditionError("crease leaves the paper");
    // The crease may touch the boundary only at its endpoints.
    for (std::size_t e = 0; e < n; ++e) {
      const Vec2& u = boundary.pts[e];
      const Vec2& v = boundary.pts[(e + 1) % n];
      Rat d1 = cross(u, v, c.a), d2 = cross(u, v, c.b);
      auto sgn = [](const Rat& r) { return r.is_positive() ? 1 : (r.is_negative() ? -1 : 0); };
      if (sgn(d1) * sgn(d2) < 0) {
        Rat d3 = cross(c.a, c.b, u), d4 = cross(c.a, c.b, v);
        if (sgn(d3) * sgn(d4) < 0) throw PreconditionError("crease crosses the boundary");
      }
    }
    for (std::size_t j = i + 1; j < creases.size(); ++j)
      if (segments_conflict(c.a, c.b, creases[j].a, creases[j].b))
        throw PreconditionError("creases intersect away from shared endpoints");
  }
}

std::string OrthoPolygonPattern::to_json() const {
  json j;
  j["format"] = 1;
  json b = json::array();
  for (const Vec2& p : boundary.pts) b.push_back({p.x.str(), p.y.str()});
  j["boundary"] = b;
  json cs = json::array();
  for (const CreaseSeg& c : creases) {
    json e;
    e["a"] = {c.a.x.str(), c.a.y.str()};
    e["b"] = {c.b.x.str(), c.b.y.str()};
    if (c.dir) e["dir"] = std::string(1, dir_char(*c.dir));
    cs.push_back(e);
  }
  j["creases"] = cs;
  return j.dump(2);
}

OrthoPolygonPattern OrthoPolygonPattern::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid polygon JSON: ") + e.what());
  }
  OrthoPolygonPattern p;
  auto vec = [](const json& v) {
    return Vec2{Rat::parse(v.at(0).get<std::string>()), Rat::parse(v.at(1).get<std::string>())};
  };
  for (const auto& v : j.at("boundary")) p.boundary.pts.push_back(vec(v));
  for (const auto& c : j.at("creases")) {
    CreaseSeg s;
    s.a = vec(c.at("a"));
    s.b = vec(c.at("b"));
    if (c.contains("dir")) s.dir = parse_dir(c["dir"].get<std::string>());
    p.creases.push_back(s);
  }
  p.validate();
  return p;
}

PatternCells build_cells(const OrthoPolygonPattern& p) {
  // Vertex table.
  std::map<std::pair<Rat, Rat>, int> vid;
  std::vector<Vec2> verts;
  auto add_vertex = [&](const Vec2& v) {
    auto [it, fresh] = vid.emplace(std::make_pair(v.x, v.y), static_cast<int>(verts.size()));
    if (fresh) verts.push_back(v);
    return it->second;
  };
  std::size_t nb = p.boundary.pts.size();
  for (const Vec2& v : p.boundary.pts) add_vertex(v);
  for (const CreaseSeg& c : p.creases) {
    add_vertex(c.a);
    add_vertex(c.b);
  }

  struct Edge {
    int u, v;
    int crease = -1;  // index into the split crease list, -1 for boundary
  };
  std::vector<Edge> edges;
  std::vector<PatternCells::CreaseEdge> crease_edges;

  auto split_and_emit = [&](const Vec2& a, const Vec2& b, int crease_source,
                            std::optional<Dir> dir) {
    // Split (a,b) at every known vertex in its interior.
    std::vector<Vec2> stops{a, b};
    for (const Vec2& v : verts)
      if (!(v == a) && !(v == b) && on_segment(a, b, v)) stops.push_back(v);
    std::sort(stops.begin(), stops.end(), [&](const Vec2& x, const Vec2& y) {
      if (!(x.x == y.x)) return x.x < y.x;
      return x.y < y.y;
    });
    for (std::size_t k = 0; k + 1 < stops.size(); ++k) {
      if (stops[k] == stops[k + 1]) continue;
      Edge e;
      e.u = add_vertex(stops[k]);
      e.v = add_vertex(stops[k + 1]);
      if (crease_source >= 0) {
        PatternCells::CreaseEdge ce;
        ce.a = stops[k];
        ce.b = stops[k + 1];
        ce.dir = dir;
        auto line = line_through(ce.a, ce.b);
        if (!line) throw PreconditionError("crease direction invalid");
        ce.line = *line;
        ce.source = static_cast<std::size_t>(crease_source);
        e.crease = static_cast<int>(crease_edges.size());
        crease_edges.push_back(ce);
      }
      edges.push_back(e);
    }
  };

  for (std::size_t i = 0; i < nb; ++i)
    split_and_emit(p.boundary.pts[i], p.boundary.pts[(i + 1) % nb], -1, std::nullopt);
  for (std::size_t i = 0; i < p.creases.size(); ++i)
    split_and_emit(p.creases[i].a, p.creases[i].b, static_cast<int>(i), p.creases[i].dir);

  // Half-edge structure: 2 directed half-edges per edge.
  struct Half {
    int from, to;
    int edge;
    int next = -1;
    int face = -1;
  };
  std::vector<Half> hes;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    hes.push_back({edges[e].u, edges[e].v, static_cast<int>(e)});
    hes.push_back({edges[e].v, edges[e].u, static_cast<int>(e)});
  }
  // Outgoing half-edges per vertex sorted by direction octant.
  std::vector<std::vector<int>> out(verts.size());
  for (std::size_t h = 0; h < hes.size(); ++h) out[hes[h].from].push_back(static_cast<int>(h));
  for (auto& lst : out) {
    std::sort(lst.begin(), lst.end(), [&](int x, int y) {
      return dir_octant(verts[hes[x].from], verts[hes[x].to]) <
             dir_octant(verts[hes[y].from], verts[hes[y].to]);
    });
    for (std::size_t k = 0; k + 1 < lst.size(); ++k)
      if (dir_octant(verts[hes[lst[k]].from], verts[hes[lst[k]].to]) ==
          dir_octant(verts[hes[lst[k + 1]].from], verts[hes[lst[k + 1]].to]))
        throw PreconditionError("overlapping collinear edges at a vertex");
  }
  // next(u->v): at v, the outgoing edge clockwise-next from (v->u): for the
  // face on the left of each half-edge.
  for (std::size_t h = 0; h < hes.size(); ++h) {
    int v = hes[h].to;
    int twin = static_cast<int>(h ^ 1);
    const auto& lst = out[v];
    int pos = -1;
    for (std::size_t k = 0; k < lst.size(); ++k)
      if (lst[k] == twin) pos = static_cast<int>(k);
    if (pos < 0) throw Error("internal: twin not found");
    int pick = lst[(pos + lst.size() - 1) % lst.size()];
    hes[h].next = pick;
  }

  PatternCells out_cells;
  // Trace faces; keep bounded (CCW) ones.
  for (std::size_t h0 = 0; h0 < hes.size(); ++h0) {
    if (hes[h0].face >= 0) continue;
    std::vector<int> cycle;
    int h = static_cast<int>(h0);
    do {
      cycle.push_back(h);
      hes[h].face = -2;  // visiting
      h = hes[h].next;
    } while (h != static_cast<int>(h0));
    Polygon poly;
    for (int he : cycle) poly.pts.push_back(verts[hes[he].from]);
    Rat a2 = poly.area2();
    int face_id;
    if (a2.is_positive()) {
      PatternCells::Cell cell;
      cell.poly = poly;
      cell.tris = poly.triangulate();
      cell.area2 = a2;
      face_id = static_cast<int>(out_cells.cells.size());
      out_cells.cells.push_back(std::move(cell));
    } else {
      face_id = -3;  // outer face
    }
    for (int he : cycle) hes[he].face = face_id;
  }

  // Attach cells to crease subedges by side.
  out_cells.creases = std::move(crease_edges);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].crease < 0) continue;
    PatternCells::CreaseEdge& ce = out_cells.creases[edges[e].crease];
    int f1 = hes[2 * e].face;
    int f2 = hes[2 * e + 1].face;
    if (f1 < 0 || f2 < 0) throw PreconditionError("crease bordering the outside");
    // Which face is on the negative side of ce.line?
    auto side_of_cell = [&](int cell) {
      const auto& tris = out_cells.cells[cell].tris;
      for (const auto& t : tris) {
        Vec2 centroid{(t[0].x + t[1].x + t[2].x) / Rat(3), (t[0].y + t[1].y + t[2].y) / Rat(3)};
        Rat s = line_side(ce.line, centroid);
        if (!s.is_zero()) return s.is_positive() ? 1 : -1;
      }
      throw Error("internal: cell with no off-line triangle");
    };
    // The half-edge with the crease to its left: face f1 for (u->v).
    if (side_of_cell(f1) < 0) {
      ce.cell_neg = f1;
      ce.cell_pos = f2;
    } else {
      ce.cell_neg = f2;
      ce.cell_pos = f1;
    }
    if (side_of_cell(ce.cell_neg) >= 0 || side_of_cell(ce.cell_pos) <= 0)
      throw PreconditionError("crease with both cells on one side");
  }
  return out_cells;
}

}  // namespace mapfold
