#include "slimlat/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace slimlat {

namespace {

Json rat_to_json(const Rat& r) {
  if (r.denominator() == 1) return Json(r.numerator());
  return Json::array({r.numerator(), r.denominator()});
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    long long den = j[1].get<long long>();
    if (den == 0) fail(Err::Schema, "coordinate with zero denominator");
    return Rat(j[0].get<long long>(), den);
  }
  fail(Err::Schema, "coordinate must be an integer or a [num,den] pair");
}

}  // namespace

Json lattice_to_json(const FiniteLattice& L, const DiagramLayout* lay) {
  Json j;
  std::vector<std::string> elems = L.ids();
  std::sort(elems.begin(), elems.end());
  j["elements"] = elems;
  Json covers = Json::array();
  for (const auto& [a, b] : L.cover_ids_sorted()) covers.push_back(Json::array({a, b}));
  j["covers"] = std::move(covers);
  if (lay) {
    Json coords;
    for (const std::string& id : elems) {
      const Point& p = lay->at(L.index(id));
      coords[id] = Json::array({rat_to_json(p.x), rat_to_json(p.y)});
    }
    j["coords"] = std::move(coords);
  }
  return j;
}

LoadedLattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    fail(Err::Schema, "lattice JSON requires 'elements' and 'covers'");
  std::vector<std::string> ids;
  for (const Json& e : j.at("elements")) {
    if (!e.is_string()) fail(Err::Schema, "element identifiers must be strings");
    ids.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const Json& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) fail(Err::Schema, "covers must be [lower,upper] pairs");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  LoadedLattice out{FiniteLattice::build(ids, covers), std::nullopt};
  if (j.contains("coords")) {
    DiagramLayout lay;
    lay.pos.resize(static_cast<size_t>(out.lattice.size()));
    for (const auto& [id, val] : j.at("coords").items()) {
      if (!val.is_array() || val.size() != 2) fail(Err::Schema, "coords values must be [x,y]");
      lay.pos[static_cast<size_t>(out.lattice.index(id))] =
          Point{rat_from_json(val[0]), rat_from_json(val[1])};
    }
    out.layout = std::move(lay);
  }
  return out;
}

Json recipe_to_json(const ConstructionRecipe& r) {
  Json j;
  j["grid"] = Json::array({r.grid_m, r.grid_k});
  Json steps = Json::array();
  for (const RecipeStep& st : r.steps) {
    if (st.fork) {
      Json f;
      f["left"] = st.fork->cell_left;
      f["top"] = st.fork->cell_top;
      f["n"] = st.fork->n;
      steps.push_back(Json{{"multifork", f}});
    } else if (st.removal) {
      steps.push_back(Json{{"remove_corner", *st.removal}});
    }
  }
  j["steps"] = std::move(steps);
  return j;
}

ConstructionRecipe recipe_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("grid") || !j.at("grid").is_array() || j.at("grid").size() != 2)
    fail(Err::Schema, "recipe JSON requires 'grid':[m,k]");
  ConstructionRecipe r;
  r.grid_m = j.at("grid")[0].get<int>();
  r.grid_k = j.at("grid")[1].get<int>();
  if (j.contains("steps")) {
    for (const Json& st : j.at("steps")) {
      RecipeStep step;
      if (st.contains("multifork")) {
        const Json& f = st.at("multifork");
        step.fork = MultiforkStep{f.at("left").get<std::string>(), f.at("top").get<std::string>(),
                                  f.at("n").get<int>()};
      } else if (st.contains("remove_corner")) {
        step.removal = st.at("remove_corner").get<std::string>();
      } else {
        fail(Err::Schema, "recipe step must be 'multifork' or 'remove_corner'");
      }
      r.steps.push_back(std::move(step));
    }
  }
  return r;
}

Json report_to_json(const Report& rep) {
  Json j;
  j["ok"] = rep.ok();
  Json v = Json::array();
  for (const Violation& viol : rep.violations)
    v.push_back(Json{{"check", viol.check}, {"detail", viol.detail}});
  j["violations"] = std::move(v);
  return j;
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Err::Schema, "malformed JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::Io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::Io, "cannot write '" + path + "'");
  out << content;
  if (!out.good()) fail(Err::Io, "write failed for '" + path + "'");
}

}  // namespace slimlat
