#include "nova/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace nova {

std::string_view to_string(DefKind k) {
  switch (k) {
    case DefKind::Algebra: return "algebra";
    case DefKind::Coproduct: return "coproduct";
    case DefKind::RMatrix: return "rmatrix";
    case DefKind::Map: return "map";
    case DefKind::Form: return "form";
    case DefKind::Bundle: return "bundle";
  }
  return "?";
}

namespace {

DefKind parse_kind(const std::string& s, const std::string& where) {
  for (auto k : {DefKind::Algebra, DefKind::Coproduct, DefKind::RMatrix, DefKind::Map, DefKind::Form, DefKind::Bundle})
    if (to_string(k) == s) return k;
  throw ParseError(where + ": unknown kind '" + s + "'");
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing key '" + key + "'");
  return *it;
}

std::string string_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) throw ParseError(where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

Scalar scalar_at(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": rationals must be JSON strings");
  try {
    return parse_scalar(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::size_t label_at(const Json& v, const std::vector<std::string>& basis, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": labels must be strings");
  const auto s = v.get<std::string>();
  const auto it = std::find(basis.begin(), basis.end(), s);
  if (it == basis.end()) throw ParseError(where + ": unknown label '" + s + "'");
  return static_cast<std::size_t>(it - basis.begin());
}

const Json& array_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_array()) throw ParseError(where + ": '" + key + "' must be an array");
  return v;
}

// Checks every entry against the kind's schema; polynomial values are only
// accepted for rmatrices.
void validate_entries(const Definition& d, const std::string& where) {
  if (!d.entries.is_array()) throw ParseError(where + ": 'entries' must be an array");
  for (std::size_t e = 0; e < d.entries.size(); ++e) {
    const Json& en = d.entries[e];
    const std::string at = where + ": entries[" + std::to_string(e) + "]";
    switch (d.kind) {
      case DefKind::Algebra:
        label_at(field(en, "left", at), d.basis, at);
        label_at(field(en, "right", at), d.basis, at);
        for (const auto& t : array_field(en, "result", at)) {
          if (!t.is_array() || t.size() != 2) throw ParseError(at + ": result terms are [label, rational]");
          label_at(t[0], d.basis, at);
          scalar_at(t[1], at);
        }
        break;
      case DefKind::Map:
        label_at(field(en, "of", at), d.basis, at);
        for (const auto& t : array_field(en, "result", at)) {
          if (!t.is_array() || t.size() != 2) throw ParseError(at + ": result terms are [label, rational]");
          label_at(t[0], d.basis, at);
          scalar_at(t[1], at);
        }
        break;
      case DefKind::Coproduct:
        label_at(field(en, "of", at), d.basis, at);
        for (const auto& t : array_field(en, "result", at)) {
          if (!t.is_array() || t.size() != 3) throw ParseError(at + ": result terms are [label, label, rational]");
          label_at(t[0], d.basis, at);
          label_at(t[1], d.basis, at);
          scalar_at(t[2], at);
        }
        break;
      case DefKind::RMatrix:
      case DefKind::Form: {
        label_at(field(en, "left", at), d.basis, at);
        label_at(field(en, "right", at), d.basis, at);
        const Json& v = field(en, "value", at);
        if (!v.is_string()) throw ParseError(at + ": values must be JSON strings");
        if (d.kind == DefKind::Form) {
          scalar_at(v, at);
        } else {
          try {
            parse_poly(v.get<std::string>());
          } catch (const Error& ex) {
            throw ParseError(at + ": " + ex.what());
          }
        }
        break;
      }
      case DefKind::Bundle:
        throw ParseError(at + ": bundles keep their content in 'parts'");
    }
  }
}

}  // namespace

Definition parse_definition(const Json& j, const std::string& where) {
  Definition d;
  d.kind = parse_kind(string_field(j, "kind", where), where);
  d.name = j.contains("name") ? string_field(j, "name", where) : std::string();
  const std::string at = where + (d.name.empty() ? "" : " (" + d.name + ")");
  const Json& dim = field(j, "dim", at);
  if (!dim.is_number_unsigned()) throw ParseError(at + ": 'dim' must be a nonnegative integer");
  for (const auto& b : array_field(j, "basis", at)) {
    if (!b.is_string()) throw ParseError(at + ": basis labels must be strings");
    d.basis.push_back(b.get<std::string>());
  }
  if (d.basis.size() != dim.get<std::size_t>()) throw ParseError(at + ": 'dim' does not match the basis length");
  if (std::set<std::string>(d.basis.begin(), d.basis.end()).size() != d.basis.size())
    throw ParseError(at + ": basis labels must be unique");
  if (j.contains("class")) d.cls = string_field(j, "class", at);
  if (j.contains("weight")) d.weight = scalar_at(j["weight"], at + ": weight");
  if (j.contains("q")) d.q = scalar_at(j["q"], at + ": q");
  d.entries = array_field(j, "entries", at);
  if (d.kind == DefKind::Bundle) {
    if (!d.entries.empty()) throw ParseError(at + ": bundle entries must be empty");
    const Json& parts = array_field(j, "parts", at);
    for (std::size_t p = 0; p < parts.size(); ++p)
      d.parts.push_back(parse_definition(parts[p], at + ": parts[" + std::to_string(p) + "]"));
  } else {
    validate_entries(d, at);
  }
  return d;
}

Definition parse_definition_text(std::string_view text, const std::string& where) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  }
  return parse_definition(j, where);
}

Definition load_definition_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_definition_text(ss.str(), path.string());
}

Json to_json(const Definition& d) {
  Json j;
  j["kind"] = std::string(to_string(d.kind));
  j["name"] = d.name;
  j["dim"] = d.basis.size();
  j["basis"] = d.basis;
  j["entries"] = d.entries;
  if (!d.cls.empty()) j["class"] = d.cls;
  if (d.weight) j["weight"] = to_string(*d.weight);
  if (d.q) j["q"] = to_string(*d.q);
  if (d.kind == DefKind::Bundle) {
    Json parts = Json::array();
    for (const auto& p : d.parts) parts.push_back(to_json(p));
    j["parts"] = parts;
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

void require(const Definition& d, DefKind k) {
  if (d.kind != k)
    throw KindMismatch("expected a " + std::string(to_string(k)) + " definition, got " +
                       std::string(to_string(d.kind)) + (d.name.empty() ? "" : " '" + d.name + "'"));
}

Json terms1(const Vector& v, const std::vector<std::string>& basis) {
  Json t = Json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) t.push_back(Json::array({basis[k], to_string(v[k])}));
  return t;
}

}  // namespace

Algebra to_algebra(const Definition& d) {
  require(d, DefKind::Algebra);
  Algebra a(d.basis, d.cls.empty() ? AlgebraKind::Unchecked : parse_algebra_kind(d.cls), d.name);
  for (const auto& en : d.entries) {
    const auto i = label_at(en["left"], d.basis, d.name), j = label_at(en["right"], d.basis, d.name);
    for (const auto& t : en["result"]) a.c(i, j, label_at(t[0], d.basis, d.name)) += scalar_at(t[1], d.name);
  }
  return a;
}

Coproduct to_coproduct(const Definition& d) {
  require(d, DefKind::Coproduct);
  Coproduct c(d.basis, d.cls.empty() ? CoalgebraFlavor::Unchecked : parse_coalgebra_flavor(d.cls), d.name);
  for (const auto& en : d.entries) {
    const auto i = label_at(en["of"], d.basis, d.name);
    for (const auto& t : en["result"])
      c.d(i, label_at(t[0], d.basis, d.name), label_at(t[1], d.basis, d.name)) += scalar_at(t[2], d.name);
  }
  return c;
}

Tensor2 to_tensor(const Definition& d) {
  if (d.kind != DefKind::RMatrix && d.kind != DefKind::Form) require(d, DefKind::RMatrix);
  Tensor2 t(d.dim(), d.dim());
  for (const auto& en : d.entries)
    t(label_at(en["left"], d.basis, d.name), label_at(en["right"], d.basis, d.name)) +=
        scalar_at(en["value"], d.name + ": value (use the parametric command for symbolic entries)");
  return t;
}

PolyMatrix to_poly_tensor(const Definition& d) {
  require(d, DefKind::RMatrix);
  std::vector<std::string> vars;
  std::vector<Poly> values;
  for (const auto& en : d.entries) {
    values.push_back(parse_poly(en["value"].get<std::string>(), vars));
    vars = values.back().variables();
  }
  PolyMatrix t(d.dim(), d.dim());
  for (std::size_t e = 0; e < d.entries.size(); ++e) {
    const auto& en = d.entries[e];
    t(label_at(en["left"], d.basis, d.name), label_at(en["right"], d.basis, d.name)) += values[e].over(vars);
  }
  return t;
}

StructureMap to_map(const Definition& d) {
  require(d, DefKind::Map);
  StructureMap m;
  m.name = d.name;
  m.role = d.cls.empty() ? MapRole::Generic : parse_map_role(d.cls);
  m.weight = d.weight.value_or(0);
  m.matrix = Matrix(d.dim(), d.dim());
  for (const auto& en : d.entries) {
    const auto j = label_at(en["of"], d.basis, d.name);
    for (const auto& t : en["result"]) m.matrix(label_at(t[0], d.basis, d.name), j) += scalar_at(t[1], d.name);
  }
  return m;
}

BilinearForm to_form(const Definition& d) {
  require(d, DefKind::Form);
  return BilinearForm{d.name, to_tensor(d), d.cls.empty() ? FormFlavor::Plain : parse_form_flavor(d.cls)};
}

Definition from_algebra(const Algebra& a) {
  Definition d;
  d.kind = DefKind::Algebra;
  d.name = a.name;
  d.basis = a.basis;
  d.cls = std::string(to_string(a.kind));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector v = a.basis_product(i, j);
      if (is_zero(v)) continue;
      Json en;
      en["left"] = a.basis[i];
      en["right"] = a.basis[j];
      en["result"] = terms1(v, a.basis);
      d.entries.push_back(en);
    }
  return d;
}

Definition from_coproduct(const Coproduct& c) {
  Definition d;
  d.kind = DefKind::Coproduct;
  d.name = c.name;
  d.basis = c.basis;
  d.cls = std::string(to_string(c.flavor));
  for (std::size_t i = 0; i < c.dim(); ++i) {
    Json t = Json::array();
    for (std::size_t j = 0; j < c.dim(); ++j)
      for (std::size_t k = 0; k < c.dim(); ++k)
        if (c.d(i, j, k) != 0) t.push_back(Json::array({c.basis[j], c.basis[k], to_string(c.d(i, j, k))}));
    if (t.empty()) continue;
    Json en;
    en["of"] = c.basis[i];
    en["result"] = t;
    d.entries.push_back(en);
  }
  return d;
}

namespace {

Definition from_pairs(DefKind kind, const Tensor2& t, const std::vector<std::string>& basis, std::string name) {
  if (t.rows() != basis.size() || t.cols() != basis.size()) throw DimensionError("tensor size differs from basis");
  Definition d;
  d.kind = kind;
  d.name = std::move(name);
  d.basis = basis;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (t(i, j) != 0) {
        Json en;
        en["left"] = basis[i];
        en["right"] = basis[j];
        en["value"] = to_string(t(i, j));
        d.entries.push_back(en);
      }
  return d;
}

}  // namespace

Definition from_rmatrix(const Tensor2& r, const std::vector<std::string>& basis, std::string name) {
  return from_pairs(DefKind::RMatrix, r, basis, std::move(name));
}

Definition from_map(const StructureMap& m, const std::vector<std::string>& basis) {
  if (m.matrix.rows() != basis.size() || m.matrix.cols() != basis.size())
    throw DimensionError("map size differs from basis");
  Definition d;
  d.kind = DefKind::Map;
  d.name = m.name;
  d.basis = basis;
  d.cls = std::string(to_string(m.role));
  if (m.role == MapRole::RotaBaxter) d.weight = m.weight;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Vector v = m(unit_vector(basis.size(), j));
    if (is_zero(v)) continue;
    Json en;
    en["of"] = basis[j];
    en["result"] = terms1(v, basis);
    d.entries.push_back(en);
  }
  return d;
}

Definition from_form(const BilinearForm& f, const std::vector<std::string>& basis) {
  Definition d = from_pairs(DefKind::Form, f.matrix, basis, f.name);
  d.cls = std::string(to_string(f.flavor));
  return d;
}

Definition make_bundle(std::string name, std::string cls, std::vector<Definition> parts) {
  Definition d;
  d.kind = DefKind::Bundle;
  d.name = std::move(name);
  d.cls = std::move(cls);
  if (!parts.empty()) d.basis = parts.front().basis;
  d.parts = std::move(parts);
  return d;
}

std::vector<Definition> flatten(const Definition& d) {
  if (d.kind != DefKind::Bundle) return {d};
  std::vector<Definition> out;
  for (const auto& p : d.parts)
    for (auto& q : flatten(p)) out.push_back(std::move(q));
  return out;
}

BialgebraBundle to_bialgebra_bundle(const std::vector<Definition>& defs) {
  BialgebraBundle b;
  bool have_algebra = false, have_coproduct = false;
  for (const auto& d : defs) {
    if (d.kind == DefKind::Algebra) {
      b.algebra = to_algebra(d);
      have_algebra = true;
    } else if (d.kind == DefKind::Coproduct) {
      b.coproduct = to_coproduct(d);
      have_coproduct = true;
    } else if (d.kind == DefKind::Map && d.cls == "derivation") {
      b.d = to_map(d).matrix;
    } else if (d.kind == DefKind::Map && d.cls == "admissible-theta") {
      b.theta = to_map(d).matrix;
    }
  }
  if (!have_algebra) throw ParseError("no algebra definition given");
  if (!have_coproduct) throw ParseError("no coproduct definition given");
  if (b.algebra.basis != b.coproduct.basis) throw DimensionError("algebra and coproduct bases differ");
  return b;
}

Json report_json(const std::string& command, const Report& report, const std::vector<Definition>& objects,
                 const std::string& verdict) {
  Json j;
  j["command"] = command;
  Json checks = Json::array();
  for (const auto& c : report.checks()) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["witness"] = c.witness.empty() ? Json(nullptr) : Json(c.witness);
    checks.push_back(cj);
  }
  j["checks"] = checks;
  Json objs = Json::array();
  for (const auto& o : objects) objs.push_back(to_json(o));
  j["objects"] = objs;
  j["verdict"] = verdict;
  return j;
}

}  // namespace nova
