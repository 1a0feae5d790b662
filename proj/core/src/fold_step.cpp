#include "mapfold/fold_step.hpp"

#include <json.hpp>

namespace mapfold {

using nlohmann::json;

const char* model_name(FoldModel m) {
  switch (m) {
    case FoldModel::OneLayer: return "one";
    case FoldModel::SomeLayers: return "some";
    case FoldModel::AllLayers: return "all";
  }
  return "?";
}

FoldModel parse_model(std::string_view s) {
  if (s == "one" || s == "one-layer") return FoldModel::OneLayer;
  if (s == "some" || s == "some-layers") return FoldModel::SomeLayers;
  if (s == "all" || s == "all-layers") return FoldModel::AllLayers;
  throw ParseError("unknown model '" + std::string(s) + "' (want one|some|all)");
}

FoldStep FoldStep::one_layer_1d(Rat crease, FoldSide side, Dir dir, TopSide top) {
  FoldStep st;
  st.model = FoldModel::OneLayer;
  st.top = top;
  st.at = crease;
  st.side = side;
  st.layers = 1;
  st.dir = dir;
  return st;
}

FoldStep FoldStep::all_layers_1d(Rat crease, FoldSide side, Dir dir, TopSide top) {
  FoldStep st = one_layer_1d(crease, side, dir, top);
  st.model = FoldModel::AllLayers;
  st.layers = -1;
  return st;
}

FoldStep FoldStep::all_layers_2d(Line2D line, FoldSide side, Dir dir, TopSide top) {
  FoldStep st;
  st.model = FoldModel::AllLayers;
  st.top = top;
  st.is_2d = true;
  st.line = line;
  st.side = side;
  st.layers = -1;
  st.dir = dir;
  return st;
}

std::string FoldStep::describe() const {
  std::string s = model_name(model);
  s += " fold, ";
  s += dir_char(dir);
  s += ", side=";
  s += side == FoldSide::Left ? "left" : "right";
  if (is_2d) {
    s += ", line=";
    switch (line.kind) {
      case Line2D::Kind::X: s += "x=" + line.offset.str(); break;
      case Line2D::Kind::Y: s += "y=" + line.offset.str(); break;
      case Line2D::Kind::DiagPos: s += "y=x+" + line.offset.str(); break;
      case Line2D::Kind::DiagNeg: s += "y=-x+" + line.offset.str(); break;
    }
  } else {
    s += ", at=" + at.str();
  }
  if (top == TopSide::Flipped) s += ", flipped";
  return s;
}

namespace {

json line_to_json(const Line2D& l) {
  json j;
  switch (l.kind) {
    case Line2D::Kind::X: j["axis"] = "x"; break;
    case Line2D::Kind::Y: j["axis"] = "y"; break;
    case Line2D::Kind::DiagPos: j["diag"] = 1; break;
    case Line2D::Kind::DiagNeg: j["diag"] = -1; break;
  }
  j["offset"] = l.offset.str();
  return j;
}

Line2D line_from_json(const json& j) {
  Line2D l;
  l.offset = Rat::parse(j.at("offset").get<std::string>());
  if (j.contains("axis")) {
    std::string a = j["axis"].get<std::string>();
    if (a == "x") l.kind = Line2D::Kind::X;
    else if (a == "y") l.kind = Line2D::Kind::Y;
    else throw ParseError("line axis must be x or y");
  } else if (j.contains("diag")) {
    int d = j["diag"].get<int>();
    if (d == 1) l.kind = Line2D::Kind::DiagPos;
    else if (d == -1) l.kind = Line2D::Kind::DiagNeg;
    else throw ParseError("line diag must be 1 or -1");
  } else {
    throw ParseError("line needs axis or diag");
  }
  return l;
}

json step_to_json(const FoldStep& st) {
  json j;
  j["model"] = model_name(st.model);
  j["top"] = st.top == TopSide::AsOriented ? "as-oriented" : "flipped";
  if (st.is_2d)
    j["at"] = line_to_json(st.line);
  else
    j["at"] = st.at.str();
  j["side"] = st.side == FoldSide::Left ? "left" : "right";
  if (st.layers < 0) {
    j["layers"] = "all";
  } else if (!st.portions.empty()) {
    json arr = json::array();
    for (const auto& p : st.portions)
      arr.push_back({{"from", p.from.str()}, {"to", p.to.str()}, {"count", p.layers}});
    j["layers"] = arr;
  } else {
    j["layers"] = st.layers;
  }
  j["dir"] = std::string(1, dir_char(st.dir));
  if (st.has_extent) j["extent"] = {st.extent_lo.str(), st.extent_hi.str()};
  return j;
}

FoldStep step_from_json(const json& j) {
  FoldStep st;
  st.model = parse_model(j.at("model").get<std::string>());
  std::string top = j.value("top", "as-oriented");
  if (top == "as-oriented") st.top = TopSide::AsOriented;
  else if (top == "flipped") st.top = TopSide::Flipped;
  else throw ParseError("top must be as-oriented or flipped");
  const json& at = j.at("at");
  if (at.is_string()) {
    st.is_2d = false;
    st.at = Rat::parse(at.get<std::string>());
  } else {
    st.is_2d = true;
    st.line = line_from_json(at);
  }
  std::string side = j.at("side").get<std::string>();
  if (side == "left" || side == "neg") st.side = FoldSide::Left;
  else if (side == "right" || side == "pos") st.side = FoldSide::Right;
  else throw ParseError("side must be left|right|neg|pos");
  const json& layers = j.at("layers");
  if (layers.is_string() && layers.get<std::string>() == "all") {
    st.layers = -1;
  } else if (layers.is_array()) {
    st.layers = 0;
    for (const auto& p : layers) {
      PortionCount pc;
      pc.from = Rat::parse(p.at("from").get<std::string>());
      pc.to = Rat::parse(p.at("to").get<std::string>());
      pc.layers = p.at("count").get<int>();
      st.portions.push_back(pc);
    }
  } else {
    st.layers = layers.get<int>();
    if (st.layers < 1) throw ParseError("layer count must be positive");
  }
  st.dir = parse_dir(j.at("dir").get<std::string>());
  if (j.contains("extent")) {
    st.has_extent = true;
    st.extent_lo = Rat::parse(j["extent"].at(0).get<std::string>());
    st.extent_hi = Rat::parse(j["extent"].at(1).get<std::string>());
  }
  return st;
}

}  // namespace

std::string FoldSequence::to_json() const {
  json j;
  j["format"] = 1;
  json arr = json::array();
  for (const FoldStep& st : steps) arr.push_back(step_to_json(st));
  j["steps"] = arr;
  return j.dump(2);
}

FoldSequence FoldSequence::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid sequence JSON: ") + e.what());
  }
  FoldSequence seq;
  for (const auto& s : j.at("steps")) seq.steps.push_back(step_from_json(s));
  return seq;
}

}  // namespace mapfold
