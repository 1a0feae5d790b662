#include "mapfold/map2d.hpp"

#include <json.hpp>

namespace mapfold {

using nlohmann::json;

std::size_t MapPattern2D::crease_segments() const {
  return (rows() - 1) * cols() + (cols() - 1) * rows();
}

void MapPattern2D::validate() const {
  if (row_heights.empty() || col_widths.empty())
    throw PreconditionError("map needs at least one row and one column");
  for (const Rat& r : row_heights)
    if (!r.is_positive()) throw PreconditionError("row heights must be positive");
  for (const Rat& c : col_widths)
    if (!c.is_positive()) throw PreconditionError("column widths must be positive");
  if (hlines.size() != rows() - 1)
    throw PreconditionError("need exactly rows-1 horizontal crease lines");
  if (vlines.size() != cols() - 1)
    throw PreconditionError("need exactly cols-1 vertical crease lines");
  for (const auto& l : hlines)
    if (l.size() != cols())
      throw PreconditionError("each horizontal line needs one direction per column");
  for (const auto& l : vlines)
    if (l.size() != rows())
      throw PreconditionError("each vertical line needs one direction per row");
}

std::vector<Rat> MapPattern2D::hline_offsets() const {
  std::vector<Rat> off;
  Rat acc(0);
  for (std::size_t i = 0; i + 1 < rows(); ++i) {
    acc += row_heights[i];
    off.push_back(acc);
  }
  return off;
}

std::vector<Rat> MapPattern2D::vline_offsets() const {
  std::vector<Rat> off;
  Rat acc(0);
  for (std::size_t j = 0; j + 1 < cols(); ++j) {
    acc += col_widths[j];
    off.push_back(acc);
  }
  return off;
}

std::string MapPattern2D::to_json() const {
  json j;
  j["format"] = 1;
  json rows_j = json::array(), cols_j = json::array();
  for (const Rat& r : row_heights) rows_j.push_back(r.str());
  for (const Rat& c : col_widths) cols_j.push_back(c.str());
  j["rows"] = rows_j;
  j["cols"] = cols_j;
  auto lines = [](const std::vector<std::vector<Dir>>& ls) {
    json out = json::array();
    for (const auto& l : ls) {
      json seg = json::array();
      for (Dir d : l) seg.push_back(std::string(1, dir_char(d)));
      out.push_back(seg);
    }
    return out;
  };
  j["hlines"] = lines(hlines);
  j["vlines"] = lines(vlines);
  return j.dump(2);
}

MapPattern2D MapPattern2D::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid map JSON: ") + e.what());
  }
  MapPattern2D m;
  for (const auto& r : j.at("rows")) m.row_heights.push_back(Rat::parse(r.get<std::string>()));
  for (const auto& c : j.at("cols")) m.col_widths.push_back(Rat::parse(c.get<std::string>()));
  auto lines = [](const json& ls) {
    std::vector<std::vector<Dir>> out;
    for (const auto& l : ls) {
      std::vector<Dir> seg;
      for (const auto& d : l) seg.push_back(parse_dir(d.get<std::string>()));
      out.push_back(seg);
    }
    return out;
  };
  m.hlines = lines(j.at("hlines"));
  m.vlines = lines(j.at("vlines"));
  m.validate();
  return m;
}

OrthoPolygonPattern MapPattern2D::to_ortho_pattern() const {
  validate();
  OrthoPolygonPattern p;
  Rat W(0), H(0);
  for (const Rat& c : col_widths) W += c;
  for (const Rat& r : row_heights) H += r;
  p.boundary.pts = {{Rat(0), Rat(0)}, {W, Rat(0)}, {W, H}, {Rat(0), H}};
  std::vector<Rat> xs = vline_offsets();
  std::vector<Rat> ys = hline_offsets();
  std::vector<Rat> col_edges{Rat(0)};
  for (const Rat& x : xs) col_edges.push_back(x);
  col_edges.push_back(W);
  std::vector<Rat> row_edges{Rat(0)};
  for (const Rat& y : ys) row_edges.push_back(y);
  row_edges.push_back(H);
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t c = 0; c < cols(); ++c)
      p.creases.push_back({{col_edges[c], ys[i]}, {col_edges[c + 1], ys[i]}, hlines[i][c]});
  for (std::size_t j = 0; j < xs.size(); ++j)
    for (std::size_t r = 0; r < rows(); ++r)
      p.creases.push_back({{xs[j], row_edges[r]}, {xs[j], row_edges[r + 1]}, vlines[j][r]});
  p.validate();
  return p;
}

}  // namespace mapfold
