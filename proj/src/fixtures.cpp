#include "nova/fixtures.hpp"

#include <algorithm>
#include <initializer_list>
#include <utility>

namespace nova {

namespace {

using Terms = std::initializer_list<std::pair<const char*, const char*>>;

struct Term2 {
  const char* left;
  const char* right;
  const char* value;
};

Json header(const char* kind, const char* name, std::vector<std::string> basis, const char* cls) {
  Json j;
  j["kind"] = kind;
  j["name"] = name;
  j["dim"] = basis.size();
  j["basis"] = std::move(basis);
  j["entries"] = Json::array();
  if (cls && *cls) j["class"] = cls;
  return j;
}

Json terms(Terms ts) {
  Json out = Json::array();
  for (const auto& [label, value] : ts) out.push_back(Json::array({label, value}));
  return out;
}

struct AlgebraBuilder {
  Json j;
  AlgebraBuilder& product(const char* l, const char* r, Terms result) {
    j["entries"].push_back({{"left", l}, {"right", r}, {"result", terms(result)}});
    return *this;
  }
};

struct CoproductBuilder {
  Json j;
  CoproductBuilder& of(const char* x, std::initializer_list<Term2> result) {
    Json t = Json::array();
    for (const auto& r : result) t.push_back(Json::array({r.left, r.right, r.value}));
    j["entries"].push_back({{"of", x}, {"result", t}});
    return *this;
  }
};

struct MapBuilder {
  Json j;
  MapBuilder& of(const char* x, Terms result) {
    j["entries"].push_back({{"of", x}, {"result", terms(result)}});
    return *this;
  }
};

Json pairs(const char* kind, const char* name, std::vector<std::string> basis, const char* cls,
           std::initializer_list<Term2> values) {
  Json j = header(kind, name, std::move(basis), cls);
  for (const auto& v : values) j["entries"].push_back({{"left", v.left}, {"right", v.right}, {"value", v.value}});
  return j;
}

Json bundle(const char* name, const char* cls, std::vector<Json> parts) {
  Json j = header("bundle", name, parts.front()["basis"].get<std::vector<std::string>>(), cls);
  j["parts"] = std::move(parts);
  return j;
}

const std::vector<std::string> E2{"e1", "e2"}, E3{"e1", "e2", "e3"}, E4{"e1", "e2", "e3", "e4"},
    X2{"x1", "x2"}, D4{"e1", "e2", "f1", "f2"};

Json fix_n2() {
  auto a = AlgebraBuilder{header("algebra", "N2", E2, "left-novikov")}.product("e1", "e1", {{"e2", "1"}});
  return bundle("FIX-N2", "novikov-algebra", {a.j});
}

Json fix_nb2() {
  auto a = AlgebraBuilder{header("algebra", "N2", E2, "left-novikov")}.product("e1", "e1", {{"e2", "1"}});
  auto c = CoproductBuilder{header("coproduct", "delta", E2, "novikov")}.of("e1", {{"e2", "e2", "1"}});
  return bundle("FIX-NB2", "novikov-bialgebra", {a.j, c.j});
}

Json fix_dd4() {
  auto a = AlgebraBuilder{header("algebra", "double", D4, "left-novikov")}
               .product("e1", "e1", {{"e2", "1"}})
               .product("f2", "f2", {{"f1", "1"}})
               .product("e1", "f2", {{"e2", "1"}, {"f1", "-2"}})
               .product("f2", "e1", {{"e2", "-2"}, {"f1", "1"}});
  auto r = pairs("rmatrix", "r_tilde", D4, "", {{"e1", "f1", "1"}, {"e2", "f2", "1"}});
  auto c = CoproductBuilder{header("coproduct", "delta_r_tilde", D4, "novikov")}
               .of("e1", {{"e2", "e2", "1"}})
               .of("f2", {{"f1", "f1", "-1"}});
  return bundle("FIX-DD4", "novikov-bialgebra", {a.j, r, c.j});
}

Json fix_ca2() {
  auto a = AlgebraBuilder{header("algebra", "CA2", E2, "comm-assoc")}
               .product("e1", "e1", {{"e1", "1"}})
               .product("e1", "e2", {{"e2", "1"}})
               .product("e2", "e1", {{"e2", "1"}});
  auto c = CoproductBuilder{header("coproduct", "Delta", E2, "coassoc-cocomm")}.of("e2", {{"e2", "e2", "1"}});
  auto d = MapBuilder{header("map", "d", E2, "derivation")}.of("e2", {{"e2", "1"}});
  auto t = MapBuilder{header("map", "theta", E2, "admissible-theta")}.of("e1", {{"e1", "1"}});
  return bundle("FIX-CA2", "diff-infinitesimal-bialgebra", {a.j, c.j, d.j, t.j});
}

Json fix_da3() {
  auto a = AlgebraBuilder{header("algebra", "DA3", E3, "comm-assoc")}
               .product("e1", "e1", {{"e2", "1"}})
               .product("e1", "e2", {{"e3", "1"}})
               .product("e2", "e1", {{"e3", "1"}});
  auto d = MapBuilder{header("map", "d", E3, "derivation")}.of("e1", {{"e2", "1"}}).of("e2", {{"e3", "2"}});
  auto t = MapBuilder{header("map", "theta", E3, "admissible-theta")}.of("e1", {{"e2", "-1"}}).of("e2", {{"e3", "-2"}});
  auto r = pairs("rmatrix", "r", E3, "", {{"e2", "e3", "1"}, {"e3", "e2", "-1"}});
  auto c = CoproductBuilder{header("coproduct", "Delta_r", E3, "coassoc-cocomm")}.of("e1", {{"e3", "e3", "-2"}});
  return bundle("FIX-DA3", "diff-infinitesimal-bialgebra", {a.j, c.j, d.j, t.j, r});
}

Json fix_rn2() {
  auto a = AlgebraBuilder{header("algebra", "RN2", X2, "right-novikov")}
               .product("x1", "x2", {{"x1", "-2"}})
               .product("x2", "x1", {{"x1", "1"}})
               .product("x2", "x2", {{"x2", "1"}});
  auto w = pairs("form", "omega", X2, "right-novikov-invariant", {{"x1", "x2", "1"}, {"x2", "x1", "1"}});
  return bundle("FIX-RN2", "quadratic-right-novikov", {a.j, w});
}

Json fix_nt2() {
  auto a = AlgebraBuilder{header("algebra", "NT2", E2, "left-novikov")}
               .product("e1", "e2", {{"e2", "-1"}})
               .product("e2", "e1", {{"e2", "1"}});
  auto r = pairs("rmatrix", "r", E2, "", {{"e1", "e2", "1"}, {"e2", "e1", "-1"}});
  auto c = CoproductBuilder{header("coproduct", "delta_r", E2, "novikov")}
               .of("e1", {{"e2", "e1", "-1"}})
               .of("e2", {{"e2", "e2", "-1"}});
  return bundle("FIX-NT2", "novikov-bialgebra", {a.j, c.j, r});
}

Json fix_nf4() {
  auto a = AlgebraBuilder{header("algebra", "NF4", E4, "left-novikov")}
               .product("e1", "e1", {{"e2", "1"}})
               .product("e1", "e4", {{"e2", "1"}, {"e3", "-2"}})
               .product("e4", "e1", {{"e2", "-2"}, {"e3", "1"}})
               .product("e4", "e4", {{"e3", "1"}});
  auto r = pairs("rmatrix", "r", E4, "", {{"e1", "e3", "1"}, {"e2", "e4", "1"}});
  auto c = CoproductBuilder{header("coproduct", "delta_r", E4, "novikov")}
               .of("e1", {{"e2", "e2", "1"}})
               .of("e4", {{"e3", "e3", "-1"}});
  return bundle("FIX-NF4", "novikov-bialgebra", {a.j, c.j, r});
}

struct Entry {
  FixtureInfo info;
  Json (*make)();
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all{
      {{"FIX-N2", "2-dim Novikov algebra, e1 e1 = e2"}, fix_n2},
      {{"FIX-NB2", "FIX-N2 with delta(e1) = e2 (x) e2, a Novikov bialgebra"}, fix_nb2},
      {{"FIX-DD4", "4-dim double of FIX-NB2 on e1, e2, f1, f2 with r~ = e1 (x) f1 + e2 (x) f2"}, fix_dd4},
      {{"FIX-CA2", "2-dim comm. assoc. algebra with d, theta and Delta(e2) = e2 (x) e2"}, fix_ca2},
      {{"FIX-DA3", "3-dim admissible differential algebra, theta = -d, r = e2 (x) e3 - e3 (x) e2"}, fix_da3},
      {{"FIX-RN2", "2-dim right Novikov algebra with invariant form omega(x1, x2) = 1"}, fix_rn2},
      {{"FIX-NT2", "2-dim table e1 e2 = -e2, e2 e1 = e2 (not pre-Lie) with skew r = e1 (x) e2 - e2 (x) e1"}, fix_nt2},
      {{"FIX-NF4", "4-dim Novikov algebra with r = e1 (x) e3 + e2 (x) e4"}, fix_nf4},
  };
  return all;
}

}  // namespace

const std::vector<FixtureInfo>& fixture_catalog() {
  static const std::vector<FixtureInfo> infos = [] {
    std::vector<FixtureInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

bool is_fixture(std::string_view name) {
  const auto& es = entries();
  return std::any_of(es.begin(), es.end(), [&](const Entry& e) { return e.info.name == name; });
}

Definition fixture(std::string_view name) {
  for (const auto& e : entries())
    if (e.info.name == name) return parse_definition(e.make(), e.info.name);
  throw ParseError("unknown fixture '" + std::string(name) + "'");
}

Definition fixture_part(std::string_view name, DefKind kind, std::string_view cls) {
  for (const auto& p : flatten(fixture(name)))
    if (p.kind == kind && (cls.empty() || p.cls == cls)) return p;
  throw ParseError(std::string(name) + ": no " + std::string(to_string(kind)) + " part" +
                   (cls.empty() ? "" : " of class " + std::string(cls)));
}

}  // namespace nova
