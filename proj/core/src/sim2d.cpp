#include "mapfold/sim2d.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace mapfold {

namespace {

void append_i64(std::string& s, std::int64_t v) {
  s.append(reinterpret_cast<const char*>(&v), sizeof(v));
}
void append_rat(std::string& s, const Rat& r) {
  append_i64(s, r.num());
  append_i64(s, r.den());
}

bool lines_equal(const Line2D& a, const Line2D& b) {
  return a.kind == b.kind && a.offset == b.offset;
}

// Strict placed side of a cell relative to a line: -1, +1, or 0 when the
// cell straddles it.
int cell_side(const PatternCells::Cell& cell, const Iso2& iso, const Line2D& l) {
  bool pos = false, neg = false;
  for (const Vec2& v : cell.poly.pts) {
    Rat s = line_side(l, iso.apply(v));
    if (s.is_positive()) pos = true;
    if (s.is_negative()) neg = true;
  }
  if (pos && neg) return 0;
  return pos ? 1 : -1;
}

}  // namespace

FoldedState2D FoldedState2D::initial(const OrthoPolygonPattern& p) {
  OrthoPolygonPattern q = p;
  q.validate();
  FoldedState2D st;
  st.pat = std::make_shared<PatternCells>(build_cells(q));
  st.directed = q.directed();
  st.cells.assign(st.pat->cells.size(), PlacedCell{});
  for (std::size_t i = 0; i < st.cells.size(); ++i) st.cells[i].layer = 0;
  st.folded.assign(st.pat->creases.size(), false);
  // All cells start coplanar on layer 0? Layers must be distinct only where
  // cells overlap; the flat sheet has no overlaps, but a global total order
  // keeps the machinery uniform.
  for (std::size_t i = 0; i < st.cells.size(); ++i) st.cells[i].layer = static_cast<int>(i);
  return st;
}

std::size_t FoldedState2D::folded_count() const {
  std::size_t k = 0;
  for (bool b : folded) k += b;
  return k;
}

Line2D FoldedState2D::placed_crease_line(std::size_t e) const {
  const auto& ce = pat->creases[e];
  const Iso2& iso = cells[ce.cell_neg].iso;
  return apply_to_line(iso, ce.line);
}

std::pair<Vec2, Vec2> FoldedState2D::placed_crease_segment(std::size_t e) const {
  const auto& ce = pat->creases[e];
  const Iso2& iso = cells[ce.cell_neg].iso;
  return {iso.apply(ce.a), iso.apply(ce.b)};
}

std::string FoldedState2D::canonical_key() const {
  // Quotient by global plane motions: rotations act plainly, reflections
  // only together with a layer reversal (turning the packet over). A naked
  // reflection would complement every hinge direction.
  std::string best;
  int top = static_cast<int>(cells.size()) - 1;
  for (int g = 0; g < 8; ++g) {
    Iso2 gl;
    gl.lin = g;
    bool reversed = gl.reverses_orientation();
    bool first = true;
    Rat mx(0), my(0);
    std::vector<Iso2> isos(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      isos[i] = gl.after(cells[i].iso);
      for (const Vec2& v : pat->cells[i].poly.pts) {
        Vec2 p = isos[i].apply(v);
        if (first) { mx = p.x; my = p.y; first = false; }
        mx = min(mx, p.x);
        my = min(my, p.y);
      }
    }
    std::string key;
    key.reserve(cells.size() * 48);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      key.push_back(static_cast<char>(isos[i].lin));
      append_rat(key, isos[i].t.x - mx);
      append_rat(key, isos[i].t.y - my);
      append_i64(key, reversed ? top - cells[i].layer : cells[i].layer);
    }
    if (best.empty() || key < best) best = key;
  }
  return best;
}

std::string FoldedState2D::placement_signature() const {
  // Minimum over the eight global dihedral transforms, translations removed,
  // layers ignored.
  std::string best;
  for (int g = 0; g < 8; ++g) {
    Iso2 gl;
    gl.lin = g;
    bool first = true;
    Rat mx(0), my(0);
    std::vector<Iso2> isos;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      Iso2 comp = gl.after(cells[i].iso);
      isos.push_back(comp);
      for (const Vec2& v : pat->cells[i].poly.pts) {
        Vec2 p = comp.apply(v);
        if (first) { mx = p.x; my = p.y; first = false; }
        mx = min(mx, p.x);
        my = min(my, p.y);
      }
    }
    std::string key;
    for (const Iso2& iso : isos) {
      key.push_back(static_cast<char>(iso.lin));
      append_rat(key, iso.t.x - mx);
      append_rat(key, iso.t.y - my);
    }
    if (best.empty() || key < best) best = key;
  }
  return best;
}

namespace {

struct Hinge2D {
  std::size_t crease;
  Line2D line;
  Rat seg_lo, seg_hi;  // parameter interval of the placed crease segment
  int side = 0;        // side the two cells extend toward
  int lo = 0, hi = 0;  // layer span
};

int sample_cell_side(const PatternCells& pat, const PlacedCell& pc, std::size_t cell,
                     const Line2D& line) {
  for (const auto& t : pat.cells[cell].tris) {
    Vec2 c{(t[0].x + t[1].x + t[2].x) / Rat(3), (t[0].y + t[1].y + t[2].y) / Rat(3)};
    Rat s = line_side(line, pc.iso.apply(c));
    if (!s.is_zero()) return s.is_positive() ? 1 : -1;
  }
  throw Error("internal: cell has no area off the line");
}

std::vector<Hinge2D> collect_hinges(const FoldedState2D& st) {
  std::vector<Hinge2D> hinges;
  for (std::size_t e = 0; e < st.folded.size(); ++e) {
    if (!st.folded[e]) continue;
    const auto& ce = st.pat->creases[e];
    const PlacedCell& cn = st.cells[ce.cell_neg];
    const PlacedCell& cp = st.cells[ce.cell_pos];
    Vec2 a = cn.iso.apply(ce.a), b = cn.iso.apply(ce.b);
    if (!(cp.iso.apply(ce.a) == a) || !(cp.iso.apply(ce.b) == b))
      throw PreconditionError("folded crease with detached cells");
    Hinge2D h;
    h.crease = e;
    auto line = line_through(a, b);
    if (!line) throw Error("internal: degenerate placed crease");
    h.line = *line;
    Rat pa = line_param(h.line, a), pb = line_param(h.line, b);
    h.seg_lo = min(pa, pb);
    h.seg_hi = max(pa, pb);
    int sn = sample_cell_side(*st.pat, cn, ce.cell_neg, h.line);
    int sp = sample_cell_side(*st.pat, cp, ce.cell_pos, h.line);
    if (sn != sp) throw PreconditionError("folded crease is geometrically unfolded");
    h.side = sn;
    h.lo = std::min(cn.layer, cp.layer);
    h.hi = std::max(cn.layer, cp.layer);
    hinges.push_back(h);
  }
  return hinges;
}

}  // namespace

void FoldedState2D::check_valid() const {
  std::vector<Hinge2D> hinges = collect_hinges(*this);
  // Paper between a hinge's layers must not cross or poke out of its mouth.
  for (const Hinge2D& h : hinges) {
    const auto& ce = pat->creases[h.crease];
    for (std::size_t g = 0; g < cells.size(); ++g) {
      if (static_cast<int>(g) == ce.cell_neg || static_cast<int>(g) == ce.cell_pos) continue;
      int lay = cells[g].layer;
      if (lay <= h.lo || lay >= h.hi) continue;
      for (const auto& t : pat->cells[g].tris) {
        std::array<Vec2, 3> pt{cells[g].iso.apply(t[0]), cells[g].iso.apply(t[1]),
                               cells[g].iso.apply(t[2])};
        for (const LineContact& c : triangle_line_contacts(pt, h.line)) {
          if (c.side == h.side) continue;  // nested inside the mouth
          Rat lo = max(c.lo, h.seg_lo), hi = min(c.hi, h.seg_hi);
          if (lo < hi)
            throw PreconditionError("paper passes through a crease hinge");
        }
      }
    }
  }
  for (std::size_t i = 0; i < hinges.size(); ++i) {
    for (std::size_t j = i + 1; j < hinges.size(); ++j) {
      const Hinge2D& x = hinges[i];
      const Hinge2D& y = hinges[j];
      if (!lines_equal(x.line, y.line) || x.side != y.side) continue;
      Rat lo = max(x.seg_lo, y.seg_lo), hi = min(x.seg_hi, y.seg_hi);
      if (!(lo < hi)) continue;
      bool interleaved = (x.lo < y.lo && y.lo < x.hi && x.hi < y.hi) ||
                         (y.lo < x.lo && x.lo < y.hi && y.hi < x.hi);
      if (interleaved)
        throw PreconditionError("crossing hinges along a shared crease line");
    }
  }
}

namespace {

// Union-find with parity (same/opposite color constraints).
struct ParityDsu {
  std::vector<int> parent;
  std::vector<int> parity;  // parity to parent
  explicit ParityDsu(std::size_t n) : parent(n), parity(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [root, par] = find(parent[x]);
    parent[x] = root;
    parity[x] ^= par;
    return {root, parity[x]};
  }
  bool unite(int a, int b, int rel) {  // rel 0 = same, 1 = opposite
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return true;
  }
};

struct FoldOutcome2D {
  FoldStep step;
  FoldedState2D state;
};

FoldedState2D apply_impl_2d(const FoldedState2D& st, const FoldStep& step) {
  if (!step.is_2d) throw PreconditionError("1D step applied to a 2D state");
  if (step.model != FoldModel::AllLayers || !step.all_layers())
    throw PreconditionError("2D simulation supports all-layers folds only");
  const Line2D lambda = step.line;
  const bool top_up = step.top == TopSide::AsOriented;
  const bool rot_up = top_up == (step.dir == Dir::V);
  const PatternCells& pat = *st.pat;

  // The creased set K: unfolded creases on the line, restricted to the
  // step's extent, then closed under the pinch hull.
  std::vector<char> in_k(pat.creases.size(), 0);
  struct OnLine {
    std::size_t e;
    Rat lo, hi;
  };
  std::vector<OnLine> on_line;
  for (std::size_t e = 0; e < pat.creases.size(); ++e) {
    if (st.folded[e]) continue;
    const auto& ce = pat.creases[e];
    const Iso2& iso = st.cells[ce.cell_neg].iso;
    if (!(st.cells[ce.cell_pos].iso == iso))
      throw PreconditionError("unfolded crease with inconsistent cells");
    Vec2 a = iso.apply(ce.a), b = iso.apply(ce.b);
    Rat sa = line_side(lambda, a), sb = line_side(lambda, b);
    if (!sa.is_zero() || !sb.is_zero()) continue;
    Rat pa = line_param(lambda, a), pb = line_param(lambda, b);
    on_line.push_back({e, min(pa, pb), max(pa, pb)});
  }
  if (on_line.empty()) throw PreconditionError("no unfolded crease on the fold line");
  Rat hull_lo, hull_hi;
  bool have = false;
  for (const OnLine& c : on_line) {
    if (step.has_extent && !(c.lo < step.extent_hi && step.extent_lo < c.hi)) continue;
    in_k[c.e] = 1;
    if (!have) { hull_lo = c.lo; hull_hi = c.hi; have = true; }
    hull_lo = min(hull_lo, c.lo);
    hull_hi = max(hull_hi, c.hi);
  }
  if (!have) throw PreconditionError("extent selects no crease on the line");
  // Pinch closure: all layers under the folded segment fold together.
  bool grew = true;
  while (grew) {
    grew = false;
    for (const OnLine& c : on_line) {
      if (in_k[c.e]) continue;
      if (c.lo < hull_hi && hull_lo < c.hi) {
        in_k[c.e] = 1;
        hull_lo = min(hull_lo, c.lo);
        hull_hi = max(hull_hi, c.hi);
        grew = true;
      }
    }
  }

  // No cell interior may cross the line inside the pinched hull.
  for (std::size_t g = 0; g < st.cells.size(); ++g) {
    for (const auto& t : pat.cells[g].tris) {
      std::array<Vec2, 3> pt{st.cells[g].iso.apply(t[0]), st.cells[g].iso.apply(t[1]),
                             st.cells[g].iso.apply(t[2])};
      if (auto crossing = triangle_line_crossing(pt, lambda)) {
        Rat lo = max(crossing->first, hull_lo), hi = min(crossing->second, hull_hi);
        if (lo < hi)
          throw PreconditionError("fold would crease paper without a crease there");
      }
    }
  }

  // Two-coloring: K creases separate their cells, every other crease keeps
  // its cells together (folded hinges never unfold; rigid paper never bends
  // away from the fold line).
  ParityDsu dsu(st.cells.size());
  for (std::size_t e = 0; e < pat.creases.size(); ++e) {
    const auto& ce = pat.creases[e];
    int rel = in_k[e] ? 1 : 0;
    if (!dsu.unite(ce.cell_neg, ce.cell_pos, rel))
      throw PreconditionError("fold tears the paper (color conflict)");
  }
  // Blue = rotating side: cells on side `s` of the K creases.
  int want_side = step.side == FoldSide::Left ? -1 : 1;
  std::vector<int> color(st.cells.size(), -1);
  {
    int anchor = -1, anchor_color = -1;
    for (std::size_t e = 0; e < pat.creases.size() && anchor < 0; ++e) {
      if (!in_k[e]) continue;
      const auto& ce = pat.creases[e];
      int sn = cell_side(pat.cells[ce.cell_neg], st.cells[ce.cell_neg].iso, lambda);
      int sp = cell_side(pat.cells[ce.cell_pos], st.cells[ce.cell_pos].iso, lambda);
      if (sn == 0 || sp == 0 || sn == sp)
        throw PreconditionError("creased cells straddle the fold line");
      anchor = ce.cell_neg;
      anchor_color = sn == want_side ? 1 : 0;
    }
    if (anchor < 0) throw PreconditionError("empty creased set");
    auto [ra, pa] = dsu.find(anchor);
    for (std::size_t i = 0; i < st.cells.size(); ++i) {
      auto [r, p] = dsu.find(static_cast<int>(i));
      if (r != ra)
        throw PreconditionError("pattern is disconnected");
      color[i] = (p == pa) ? anchor_color : 1 - anchor_color;
    }
  }

  // Direction consistency on every crease that bends.
  for (std::size_t e = 0; e < pat.creases.size(); ++e) {
    if (!in_k[e]) continue;
    const auto& ce = pat.creases[e];
    if (st.directed) {
      bool paper_top_up = !st.cells[ce.cell_neg].iso.reverses_orientation();
      Dir want = rot_up ? (paper_top_up ? Dir::V : Dir::M) : (paper_top_up ? Dir::M : Dir::V);
      if (ce.dir && *ce.dir != want)
        throw PreconditionError("fold direction conflicts with a crease direction");
    }
  }

  // Peeling: wherever blue and red overlap before the rotation, the blue
  // paper must lift away without passing through red. Overlap regions on the
  // blue side sweep toward the rotation side, regions across the line sweep
  // the other way.
  auto overlap_region_sides = [&](std::size_t bi, std::size_t ri, const Iso2& biso,
                                  const Iso2& riso, bool& on_neg, bool& on_pos) {
    on_neg = on_pos = false;
    for (const auto& tb : pat.cells[bi].tris) {
      std::array<Vec2, 3> pb{biso.apply(tb[0]), biso.apply(tb[1]), biso.apply(tb[2])};
      for (const auto& tr : pat.cells[ri].tris) {
        std::array<Vec2, 3> pr{riso.apply(tr[0]), riso.apply(tr[1]), riso.apply(tr[2])};
        if (!triangles_overlap(pb, pr)) continue;
        // Overlap polygon by Sutherland-Hodgman; then note which sides of
        // the fold line it touches.
        std::vector<Vec2> poly(pb.begin(), pb.end());
        if (cross(pb[0], pb[1], pb[2]).is_negative()) std::swap(poly[1], poly[2]);
        std::array<Vec2, 3> rr = pr;
        if (cross(rr[0], rr[1], rr[2]).is_negative()) std::swap(rr[1], rr[2]);
        for (int k = 0; k < 3 && !poly.empty(); ++k) {
          const Vec2& u = rr[k];
          const Vec2& v = rr[(k + 1) % 3];
          std::vector<Vec2> out;
          for (std::size_t q = 0; q < poly.size(); ++q) {
            const Vec2& p0 = poly[q];
            const Vec2& p1 = poly[(q + 1) % poly.size()];
            Rat s0 = cross(u, v, p0), s1 = cross(u, v, p1);
            bool in0 = !s0.is_negative(), in1 = !s1.is_negative();
            if (in0) out.push_back(p0);
            if (in0 != in1) {
              Rat tparam = s0 / (s0 - s1);
              out.push_back({p0.x + tparam * (p1.x - p0.x), p0.y + tparam * (p1.y - p0.y)});
            }
          }
          poly = std::move(out);
        }
        if (poly.size() < 3) continue;
        for (const Vec2& v : poly) {
          Rat s = line_side(lambda, v);
          if (s.is_negative()) on_neg = true;
          if (s.is_positive()) on_pos = true;
        }
      }
    }
  };

  for (std::size_t b = 0; b < st.cells.size(); ++b) {
    if (color[b] != 1) continue;
    for (std::size_t r = 0; r < st.cells.size(); ++r) {
      if (color[r] != 0) continue;
      bool on_neg = false, on_pos = false;
      overlap_region_sides(b, r, st.cells[b].iso, st.cells[r].iso, on_neg, on_pos);
      auto check_region = [&](int region_side) {
        bool on_blue_side = region_side == want_side;
        bool need_blue_above = on_blue_side == rot_up;
        if ((st.cells[b].layer > st.cells[r].layer) != need_blue_above)
          throw PreconditionError("rotation collides with stationary paper");
      };
      if (on_neg) check_region(-1);
      if (on_pos) check_region(1);
    }
  }

  // Move blue cells.
  Iso2 refl = Iso2::reflection(lambda);
  std::vector<Iso2> new_iso(st.cells.size());
  for (std::size_t i = 0; i < st.cells.size(); ++i)
    new_iso[i] = color[i] == 1 ? refl.after(st.cells[i].iso) : st.cells[i].iso;

  // Landing order: red keeps its order, blue reverses, blue-red pairs are
  // ordered by which side of the line their new overlap lies on.
  std::size_t C = st.cells.size();
  std::vector<std::vector<int>> adj(C);
  std::vector<int> indeg(C, 0);
  auto add_edge = [&](int u, int v) {
    adj[u].push_back(v);
    indeg[v]++;
  };
  for (std::size_t i = 0; i < C; ++i) {
    for (std::size_t j = 0; j < C; ++j) {
      if (i == j) continue;
      if (color[i] == color[j]) {
        if (st.cells[i].layer < st.cells[j].layer) {
          if (color[i] == 0)
            add_edge(static_cast<int>(i), static_cast<int>(j));
          else
            add_edge(static_cast<int>(j), static_cast<int>(i));
        }
        continue;
      }
      if (color[i] != 1 || color[j] != 0) continue;
      bool on_neg = false, on_pos = false;
      overlap_region_sides(i, j, new_iso[i], new_iso[j], on_neg, on_pos);
      auto constrain = [&](int region_side) {
        bool landed_from_rot_side = region_side != want_side;
        bool blue_above = landed_from_rot_side == rot_up;
        if (blue_above)
          add_edge(static_cast<int>(j), static_cast<int>(i));
        else
          add_edge(static_cast<int>(i), static_cast<int>(j));
      };
      if (on_neg) constrain(-1);
      if (on_pos) constrain(1);
    }
  }
  std::vector<int> order;
  {
    std::vector<int> ready;
    auto cmp = [&](int x, int y) {
      return st.cells[x].layer != st.cells[y].layer ? st.cells[x].layer < st.cells[y].layer
                                                    : x < y;
    };
    for (std::size_t i = 0; i < C; ++i)
      if (indeg[i] == 0) ready.push_back(static_cast<int>(i));
    std::sort(ready.begin(), ready.end(), cmp);
    while (!ready.empty()) {
      int u = ready.front();
      ready.erase(ready.begin());
      order.push_back(u);
      for (int v : adj[u])
        if (--indeg[v] == 0) {
          auto it = std::lower_bound(ready.begin(), ready.end(), v, cmp);
          ready.insert(it, v);
        }
    }
    if (order.size() != C)
      throw PreconditionError("rotation has no consistent landing order");
  }

  FoldedState2D out;
  out.pat = st.pat;
  out.directed = st.directed;
  out.folded = st.folded;
  for (std::size_t e = 0; e < pat.creases.size(); ++e)
    if (in_k[e]) out.folded[e] = true;
  out.cells.resize(C);
  for (std::size_t rank = 0; rank < C; ++rank) {
    out.cells[order[rank]].iso = new_iso[order[rank]];
    out.cells[order[rank]].layer = static_cast<int>(rank);
  }
  out.check_valid();
  return out;
}

}  // namespace

std::vector<FoldStep> legal_folds_2d_all(const FoldedState2D& st) {
  std::vector<FoldStep> steps;
  std::unordered_map<std::string, bool> seen;
  const PatternCells& pat = *st.pat;

  // Candidate lines: placed lines of unfolded creases.
  std::vector<Line2D> lines;
  for (std::size_t e = 0; e < pat.creases.size(); ++e) {
    if (st.folded[e]) continue;
    Line2D l = st.placed_crease_line(e);
    bool dup = false;
    for (const Line2D& k : lines) dup = dup || lines_equal(k, l);
    if (!dup) lines.push_back(l);
  }

  for (const Line2D& lambda : lines) {
    // Intervals of unfolded creases on this line, merged into pinch groups.
    struct Iv { Rat lo, hi; };
    std::vector<Iv> ivs;
    for (std::size_t e = 0; e < pat.creases.size(); ++e) {
      if (st.folded[e]) continue;
      if (!lines_equal(st.placed_crease_line(e), lambda)) continue;
      auto [a, b] = st.placed_crease_segment(e);
      Rat pa = line_param(lambda, a), pb = line_param(lambda, b);
      ivs.push_back({min(pa, pb), max(pa, pb)});
    }
    std::sort(ivs.begin(), ivs.end(), [](const Iv& a, const Iv& b) { return a.lo < b.lo; });
    std::vector<Iv> groups;
    for (const Iv& iv : ivs) {
      if (!groups.empty() && iv.lo < groups.back().hi) {
        groups.back().hi = max(groups.back().hi, iv.hi);
      } else {
        groups.push_back(iv);
      }
    }
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::size_t j = i; j < groups.size(); ++j) {
        Rat lo = groups[i].lo, hi = groups[j].hi;
        for (FoldSide side : {FoldSide::Left, FoldSide::Right}) {
          for (bool rot_up : {true, false}) {
            FoldStep step = FoldStep::all_layers_2d(lambda, side, rot_up ? Dir::V : Dir::M);
            step.has_extent = true;
            step.extent_lo = lo;
            step.extent_hi = hi;
            try {
              FoldedState2D next = apply_impl_2d(st, step);
              std::string key = next.canonical_key();
              if (seen.emplace(key, true).second) steps.push_back(step);
            } catch (const PreconditionError&) {
            }
          }
        }
      }
    }
  }
  return steps;
}

FoldedState2D apply_fold_2d_all(const FoldedState2D& st, const FoldStep& step) {
  return apply_impl_2d(st, step);
}

OracleVerdict oracle_decide_2d_all(const OrthoPolygonPattern& p, const OracleLimits2D& limits) {
  OrthoPolygonPattern q = p;
  q.validate();
  if (q.creases.size() > limits.max_creases)
    throw BoundExceeded("pattern has " + std::to_string(q.creases.size()) +
                        " creases, 2D oracle bound is " + std::to_string(limits.max_creases));
  OracleVerdict verdict;
  FoldedState2D init = FoldedState2D::initial(q);

  std::unordered_map<std::string, bool> memo;
  std::function<bool(const FoldedState2D&, const std::string&)> go =
      [&](const FoldedState2D& st, const std::string& key) -> bool {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    if (++verdict.states_explored > limits.max_states)
      throw BoundExceeded("2D oracle state budget exhausted");
    if (st.fully_folded()) {
      memo[key] = true;
      return true;
    }
    bool ok = false;
    for (const FoldStep& step : legal_folds_2d_all(st)) {
      FoldedState2D next = apply_impl_2d(st, step);
      std::string k = next.canonical_key();
      if (go(next, k)) {
        ok = true;
        break;
      }
    }
    memo[key] = ok;
    return ok;
  };
  std::string k0 = init.canonical_key();
  verdict.foldable = go(init, k0);
  if (verdict.foldable) {
    FoldSequence seq;
    FoldedState2D cur = init;
    while (!cur.fully_folded()) {
      bool moved = false;
      for (const FoldStep& step : legal_folds_2d_all(cur)) {
        FoldedState2D next = apply_impl_2d(cur, step);
        auto it = memo.find(next.canonical_key());
        if (it != memo.end() && it->second) {
          seq.steps.push_back(step);
          cur = std::move(next);
          moved = true;
          break;
        }
      }
      if (!moved) throw Error("internal: 2D witness reconstruction lost the trail");
    }
    verdict.witness = std::move(seq);
  }
  return verdict;
}

FoldedState2D replay_2d(const OrthoPolygonPattern& p, const FoldSequence& seq) {
  FoldedState2D st = FoldedState2D::initial(p);
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    try {
      st = apply_impl_2d(st, seq.steps[i]);
    } catch (const PreconditionError& e) {
      throw PreconditionError("replay failed at step " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return st;
}

}  // namespace mapfold
