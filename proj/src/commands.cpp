#include "nova/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "nova/bialgebra.hpp"
#include "nova/constructions.hpp"
#include "nova/fixtures.hpp"
#include "nova/yangbaxter.hpp"

namespace nova {

namespace fs = std::filesystem;

std::vector<Definition> load_inputs(const std::vector<std::string>& inputs) {
  std::vector<Definition> out;
  for (const auto& in : inputs) {
    const Definition d = is_fixture(in) ? fixture(in) : load_definition_file(in);
    for (auto& p : flatten(d)) out.push_back(std::move(p));
  }
  return out;
}

namespace {

std::string join_terms(const Json& result, bool pairs) {
  std::string s;
  for (const auto& t : result) {
    const std::string coeff = pairs ? t[2].get<std::string>() : t[1].get<std::string>();
    const std::string label = pairs ? t[0].get<std::string>() + "(x)" + t[1].get<std::string>() : t[0].get<std::string>();
    const bool neg = coeff.front() == '-';
    const std::string mag = neg ? coeff.substr(1) : coeff;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    s += (mag == "1" ? "" : mag + "*") + label;
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string describe(const Definition& d) {
  std::ostringstream os;
  os << to_string(d.kind) << " " << (d.name.empty() ? "(unnamed)" : d.name);
  if (!d.cls.empty()) os << " [" << d.cls << "]";
  if (d.weight) os << " weight " << to_string(*d.weight);
  os << " on {";
  for (std::size_t i = 0; i < d.basis.size(); ++i) os << (i ? ", " : "") << d.basis[i];
  os << "}\n";
  for (const auto& en : d.entries) {
    switch (d.kind) {
      case DefKind::Algebra:
        os << "  " << en["left"].get<std::string>() << "*" << en["right"].get<std::string>() << " = "
           << join_terms(en["result"], false) << "\n";
        break;
      case DefKind::Coproduct:
        os << "  D(" << en["of"].get<std::string>() << ") = " << join_terms(en["result"], true) << "\n";
        break;
      case DefKind::Map:
        os << "  " << (d.name.empty() ? "P" : d.name) << "(" << en["of"].get<std::string>()
           << ") = " << join_terms(en["result"], false) << "\n";
        break;
      case DefKind::RMatrix:
      case DefKind::Form:
        os << "  (" << en["left"].get<std::string>() << ", " << en["right"].get<std::string>()
           << ") = " << en["value"].get<std::string>() << "\n";
        break;
      case DefKind::Bundle:
        break;
    }
  }
  for (const auto& p : d.parts) os << describe(p);
  return os.str();
}

namespace {

struct Options {
  std::string report_path;
  std::string out_dir;
  std::string flavor;
  std::string q;
  std::string weight;
  std::string grid;
  std::string support;
  std::string element;
};

struct Outcome {
  Report report;
  std::vector<Definition> objects;
  std::string verdict;
  std::vector<std::string> notes;
};

// Later inputs override earlier ones, so a file given after a fixture replaces its part.
const Definition* find_part(const std::vector<Definition>& defs, DefKind kind, std::string_view cls = {}) {
  for (auto it = defs.rbegin(); it != defs.rend(); ++it)
    if (it->kind == kind && (cls.empty() || it->cls == cls)) return &*it;
  return nullptr;
}

const Definition& need_part(const std::vector<Definition>& defs, DefKind kind, std::string_view cls = {}) {
  if (const Definition* d = find_part(defs, kind, cls)) return *d;
  throw ParseError("inputs lack a " + std::string(to_string(kind)) + " definition" +
                   (cls.empty() ? "" : " of class " + std::string(cls)));
}

Tensor2 need_rmatrix(const std::vector<Definition>& defs, const Algebra& a) {
  const Tensor2 r = to_tensor(need_part(defs, DefKind::RMatrix));
  if (r.rows() != a.dim()) throw DimensionError("rmatrix and algebra dimensions differ");
  return r;
}

Scalar option_scalar(const std::string& text, const char* flag, const Scalar& fallback) {
  if (text.empty()) return fallback;
  try {
    return parse_scalar(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(flag) + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t index_token(const std::string& tok, const std::vector<std::string>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == tok) return i;
  if (!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos) {
    const auto v = std::stoul(tok);
    if (v >= 1 && v <= basis.size()) return v - 1;
  }
  throw ParseError("--support: '" + tok + "' is neither a label nor an index in 1.." + std::to_string(basis.size()));
}

std::vector<std::pair<std::size_t, std::size_t>> parse_support(const std::string& text,
                                                               const std::vector<std::string>& basis) {
  if (text.empty()) throw ParseError("--support is required (for example \"1,2;2,1\")");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& pair : split(text, ';')) {
    const auto ij = split(pair, ',');
    if (ij.size() != 2) throw ParseError("--support: expected 'i,j' pairs separated by ';'");
    out.emplace_back(index_token(ij[0], basis), index_token(ij[1], basis));
  }
  return out;
}

std::vector<Scalar> parse_grid(const std::string& text) {
  if (text.empty()) return {-1, 0, 1};
  std::vector<Scalar> out;
  for (const auto& tok : split(text, ',')) out.push_back(option_scalar(tok, "--grid", 0));
  return out;
}

Vector parse_element(const std::string& text, const std::vector<std::string>& basis) {
  if (text.empty()) throw ParseError("--element is required (a basis label or comma-separated coordinates)");
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == text) return unit_vector(basis.size(), i);
  const auto toks = split(text, ',');
  if (toks.size() != basis.size()) throw ParseError("--element: expected a label or " + std::to_string(basis.size()) + " coordinates");
  Vector v;
  for (const auto& t : toks) v.push_back(option_scalar(t, "--element", 0));
  return v;
}

// ---------------------------------------------------------------- check

Outcome run_check(const std::vector<Definition>& defs, const std::string& flavor) {
  Outcome o;
  const Definition* alg_def = find_part(defs, DefKind::Algebra);
  auto algebra = [&] {
    if (!alg_def) throw ParseError("inputs lack an algebra definition");
    return to_algebra(*alg_def);
  };

  if (flavor.empty() || flavor == "all") {
    std::optional<Algebra> a;
    if (alg_def) a = algebra();
    const Definition* d_def = find_part(defs, DefKind::Map, "derivation");
    for (const auto& d : defs) {
      const std::string tag = d.name.empty() ? std::string(to_string(d.kind)) : d.name;
      switch (d.kind) {
        case DefKind::Algebra: {
          const Algebra x = to_algebra(d);
          if (auto id = identity_for(x.kind)) o.report.absorb(check_identity(x, *id), tag);
          break;
        }
        case DefKind::Coproduct: {
          const Coproduct c = to_coproduct(d);
          if (c.flavor != CoalgebraFlavor::Unchecked) o.report.absorb(check_coalgebra(c, c.flavor), tag);
          break;
        }
        case DefKind::Map: {
          if (!a) throw ParseError("maps need an algebra to act on");
          const StructureMap m = to_map(d);
          std::optional<StructureMap> companion;
          if (m.role == MapRole::AdmissibleTheta) {
            if (!d_def) throw ParseError("admissible-theta map '" + d.name + "' needs a derivation in the inputs");
            companion = to_map(*d_def);
          }
          o.report.absorb(check_structure_map(*a, m, companion ? &*companion : nullptr), tag);
          break;
        }
        case DefKind::Form:
          if (!a) throw ParseError("forms need an algebra");
          o.report.absorb(check_bilinear_form(*a, to_form(d)).as_report(), tag);
          break;
        case DefKind::RMatrix:
        case DefKind::Bundle:
          break;
      }
    }
    if (o.report.checks().empty()) throw ParseError("nothing to check in the inputs");
  } else if (flavor.ends_with("-bialgebra")) {
    const auto bf = parse_bialgebra_flavor(flavor.substr(0, flavor.size() - 10));
    o.report = check_bialgebra(to_bialgebra_bundle(defs), bf);
  } else if (flavor.ends_with("-coalgebra")) {
    const auto cf = parse_coalgebra_flavor(flavor.substr(0, flavor.size() - 10));
    o.report = check_coalgebra(to_coproduct(need_part(defs, DefKind::Coproduct)), cf);
  } else if (flavor == "form") {
    o.report = check_bilinear_form(algebra(), to_form(need_part(defs, DefKind::Form))).as_report();
  } else if (flavor == "representation") {
    const Algebra a = algebra();
    o.report.absorb(check_representation(a, adjoint_rep(a)), "adjoint");
    o.report.absorb(check_representation(a, coadjoint_rep(a)), "coadjoint");
  } else if (flavor == "nybe" || flavor == "aybe" || flavor == "cybe") {
    const Algebra a = algebra();
    const Tensor3 res = ybe_residual(a, need_rmatrix(defs, a), parse_ybe_flavor(flavor));
    o.report.add(flavor, res.is_zero(), res.is_zero() ? "" : "residual " + format_tensor3(res, a.basis));
  } else if (flavor == "admissible-aybe") {
    const Algebra a = algebra();
    o.report = admissible_aybe_check(a, to_map(need_part(defs, DefKind::Map, "derivation")).matrix,
                                     to_map(need_part(defs, DefKind::Map, "admissible-theta")).matrix,
                                     need_rmatrix(defs, a));
  } else if (flavor == "invariance") {
    const Algebra a = algebra();
    const Tensor2 r = need_rmatrix(defs, a);
    o.report = invariance_check(a, r + r.transpose(), InvarianceFlavor::Phi);
  } else {
    o.report = check_identity(algebra(), parse_identity_kind(flavor));
  }
  o.verdict = o.report.pass() ? "pass" : "fail";
  return o;
}

// ---------------------------------------------------------------- construct

Definition bundle_of(const std::string& name, const std::string& cls, const BialgebraBundle& b) {
  std::vector<Definition> parts{from_algebra(b.algebra), from_coproduct(b.coproduct)};
  if (b.d) parts.push_back(from_map(StructureMap{"d", *b.d, MapRole::Derivation, 0}, b.algebra.basis));
  if (b.theta) parts.push_back(from_map(StructureMap{"theta", *b.theta, MapRole::AdmissibleTheta, 0}, b.algebra.basis));
  return make_bundle(name, cls, std::move(parts));
}

using Construct = std::function<Outcome(const std::vector<std::vector<Definition>>&, const Options&)>;

const std::vector<Definition>& single(const std::vector<std::vector<Definition>>& groups) {
  if (groups.empty()) throw ParseError("construct needs at least one input");
  return groups.front();
}

std::vector<Definition> merged(const std::vector<std::vector<Definition>>& groups) {
  std::vector<Definition> all;
  for (const auto& g : groups) all.insert(all.end(), g.begin(), g.end());
  return all;
}

Outcome cmd_cobound(const std::vector<std::vector<Definition>>& groups, const Options& opt) {
  const auto defs = merged(groups);
  const Algebra a = to_algebra(need_part(defs, DefKind::Algebra));
  const Tensor2 r = need_rmatrix(defs, a);
  const std::string fl = opt.flavor.empty() ? "novikov" : opt.flavor;
  CoboundaryFlavor cf;
  BialgebraFlavor bf;
  if (fl == "novikov") {
    cf = CoboundaryFlavor::Novikov;
    bf = BialgebraFlavor::Novikov;
  } else if (fl == "infinitesimal") {
    cf = CoboundaryFlavor::Infinitesimal;
    bf = BialgebraFlavor::Infinitesimal;
  } else if (fl == "lie") {
    cf = CoboundaryFlavor::Lie;
    bf = BialgebraFlavor::Lie;
  } else {
    throw ParseError("--flavor for cobound must be novikov, infinitesimal or lie");
  }
  Coproduct c = coboundary_coproduct(a, r, cf);
  c.name = "delta_r";
  Outcome o;
  BialgebraBundle b{a, c, std::nullopt, std::nullopt};
  if (const Definition* d = find_part(defs, DefKind::Map, "derivation")) b.d = to_map(*d).matrix;
  if (const Definition* t = find_part(defs, DefKind::Map, "admissible-theta")) b.theta = to_map(*t).matrix;
  if (bf == BialgebraFlavor::Infinitesimal && b.d && b.theta) bf = BialgebraFlavor::DiffInfinitesimal;
  o.report = check_bialgebra(b, bf);
  o.objects.push_back(from_coproduct(c));
  o.verdict = o.report.pass() ? std::string(to_string(bf)) + "-bialgebra" : "fail";
  return o;
}

Outcome cmd_double(const std::vector<std::vector<Definition>>& groups, const Options&) {
  const auto& defs = single(groups);
  const Algebra a = to_algebra(need_part(defs, DefKind::Algebra));
  const Coproduct c = to_coproduct(need_part(defs, DefKind::Coproduct));
  const DoubleBundle d = novikov_double(a, c);
  Coproduct dr = coboundary_coproduct(d.algebra, d.r_tilde, CoboundaryFlavor::Novikov);
  dr.name = "delta_r_tilde";
  Outcome o;
  o.report.absorb(check_manin_triple(d), "manin-triple");
  o.report.absorb(check_bialgebra({d.algebra, dr, std::nullopt, std::nullopt}, BialgebraFlavor::Novikov), "double");
  const Classification cl = classify_r(d.algebra, d.r_tilde);
  o.report.absorb(cl.as_report(), "r_tilde");
  o.report.add("r_tilde factorizable", cl.verdict == Verdict::Factorizable,
               cl.verdict == Verdict::Factorizable ? "" : "verdict " + std::string(to_string(cl.verdict)));
  o.objects.push_back(make_bundle("double", "novikov-bialgebra",
                                  {from_algebra(d.algebra), from_rmatrix(d.r_tilde, d.algebra.basis, "r_tilde"),
                                   from_coproduct(dr), from_form(d.form, d.algebra.basis)}));
  o.verdict = std::string(to_string(cl.verdict));
  return o;
}

Outcome cmd_diff_double(const std::vector<std::vector<Definition>>& groups, const Options&) {
  const BialgebraBundle b = to_bialgebra_bundle(single(groups));
  if (!b.d || !b.theta) throw ParseError("diff-double needs maps of class derivation and admissible-theta");
  const DiffDoubleBundle dd = differential_double(b);
  Outcome o;
  o.report.absorb(check_bialgebra(dd.bundle, BialgebraFlavor::DiffInfinitesimal), "double");
  o.report.absorb(check_differential_factorizable(dd.bundle.algebra, *dd.bundle.d, *dd.bundle.theta, dd.r_tilde),
                  "factorizable");
  Definition out = bundle_of("diff-double", "diff-infinitesimal-bialgebra", dd.bundle);
  out.parts.push_back(from_rmatrix(dd.r_tilde, dd.bundle.algebra.basis, "r_tilde"));
  o.objects.push_back(std::move(out));
  o.verdict = o.report.pass() ? "factorizable" : "fail";
  return o;
}

Outcome cmd_factorize(const std::vector<std::vector<Definition>>& groups, const Options& opt) {
  const auto defs = merged(groups);
  const Algebra a = to_algebra(need_part(defs, DefKind::Algebra));
  const Tensor2 r = need_rmatrix(defs, a);
  const Vector x = parse_element(opt.element, a.basis);
  const auto [plus, minus] = factorize_element(a, r, x);
  Vector sum = plus;
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += minus[i];
  Outcome o;
  o.report.add("x = x_plus + x_minus", sum == x);
  o.notes.push_back("x_plus = " + format_vector(plus, a.basis));
  o.notes.push_back("x_minus = " + format_vector(minus, a.basis));
  o.verdict = "x_plus = " + format_vector(plus, a.basis) + "; x_minus = " + format_vector(minus, a.basis);
  return o;
}

Outcome cmd_rb_from_r(const std::vector<std::vector<Definition>>& groups, const Options& opt) {
  const auto defs = merged(groups);
  const Algebra a = to_algebra(need_part(defs, DefKind::Algebra));
  const Tensor2 r = need_rmatrix(defs, a);
  const Scalar w = option_scalar(opt.weight, "--weight", 1);
  const QuadraticRB q = rb_from_factorizable(a, r, w);
  Outcome o;
  o.report = check_quadratic_rb(q);
  o.report.absorb(check_quadratic_rb(twin_rb(q)), "twin");
  o.objects.push_back(make_bundle("quadratic-rb", "quadratic-rota-baxter",
                                  {from_algebra(a), from_map(q.p, a.basis), from_form(q.form, a.basis)}));
  o.verdict = o.report.pass() ? "quadratic-rota-baxter" : "fail";
  return o;
}

Outcome cmd_r_from_rb(const std::vector<std::vector<Definition>>& groups, const Options&) {
  const auto defs = merged(groups);
  QuadraticRB q;
  q.algebra = to_algebra(need_part(defs, DefKind::Algebra));
  q.p = to_map(need_part(defs, DefKind::Map, "rota-baxter"));
  q.form = to_form(need_part(defs, DefKind::Form));
  Outcome o;
  o.report.absorb(check_quadratic_rb(q), "input");
  if (!o.report.pass()) throw PreconditionError("input is not a quadratic Rota-Baxter Novikov algebra: " +
                                                o.report.first_failure()->name);
  const Tensor2 r = r_from_quadratic_rb(q);
  const Classification cl = classify_r(q.algebra, r);
  o.report.absorb(cl.as_report(), "r");
  o.report.add("r factorizable", cl.verdict == Verdict::Factorizable);
  o.objects.push_back(from_rmatrix(r, q.algebra.basis, "r"));
  o.verdict = std::string(to_string(cl.verdict));
  return o;
}

Outcome cmd_induce_novikov(const std::vector<std::vector<Definition>>& groups, const Options& opt) {
  const BialgebraBundle b = to_bialgebra_bundle(merged(groups));
  if (!b.d || !b.theta) throw ParseError("induce-novikov needs maps of class derivation and admissible-theta");
  const Scalar q = option_scalar(opt.q, "--q", Scalar(-1, 2));
  const InducedNovikov in = induce_novikov_bialgebra(b, q);
  Outcome o;
  o.report = in.verification;
  o.objects.push_back(bundle_of("induced", "novikov-bialgebra", BialgebraBundle{in.bundle.algebra, in.bundle.coproduct,
                                                                                 std::nullopt, std::nullopt}));
  o.notes.push_back("gate: " + std::string(to_string(in.gate)));
  o.verdict = o.report.pass() ? "novikov-bialgebra" : "fail";
  return o;
}

// The first input group holds the Novikov side, the second the quadratic right Novikov algebra.
std::pair<std::vector<Definition>, std::vector<Definition>> two_sides(const std::vector<std::vector<Definition>>& groups) {
  if (groups.size() != 2) throw ParseError("expected two inputs: the Novikov side, then the quadratic right Novikov algebra");
  return {groups[0], groups[1]};
}

Outcome cmd_induce_lie(const std::vector<std::vector<Definition>>& groups, const Options&) {
  const auto [left, right] = two_sides(groups);
  const BialgebraBundle nb = to_bialgebra_bundle(left);
  const Algebra b = to_algebra(need_part(right, DefKind::Algebra));
  const BilinearForm w = to_form(need_part(right, DefKind::Form));
  const LieBundle lb = induce_lie_bialgebra(nb, b, w);
  Outcome o;
  o.report = check_bialgebra(lb.bundle, BialgebraFlavor::Lie);
  o.objects.push_back(bundle_of("induced-lie", "lie-bialgebra", lb.bundle));
  if (const Definition* r = find_part(left, DefKind::RMatrix)) {
    const Tensor2 rh = lift_r_hat(to_tensor(*r), w);
    Coproduct cr = coboundary_coproduct(lb.bundle.algebra, rh, CoboundaryFlavor::Lie);
    o.report.add("coboundary of r_hat equals induced cobracket", cr.d == lb.bundle.coproduct.d);
    o.objects.push_back(from_rmatrix(rh, lb.bundle.algebra.basis, "r_hat"));
  }
  o.verdict = o.report.pass() ? "lie-bialgebra" : "fail";
  return o;
}

Outcome cmd_lift_rhat(const std::vector<std::vector<Definition>>& groups, const Options&) {
  const auto [left, right] = two_sides(groups);
  const Algebra a = to_algebra(need_part(left, DefKind::Algebra));
  const Tensor2 r = need_rmatrix(left, a);
  const Algebra b = to_algebra(need_part(right, DefKind::Algebra));
  const BilinearForm w = to_form(need_part(right, DefKind::Form));
  const Tensor2 rh = lift_r_hat(r, w);
  const Algebra lie = induced_lie_algebra(a, b);
  const Tensor3 res = ybe_residual(lie, rh, YbeFlavor::Cybe);
  Outcome o;
  o.report.add("cybe", res.is_zero(), res.is_zero() ? "" : "residual " + format_tensor3(res, lie.basis));
  const Tensor2 sym = rh + rh.transpose();
  o.report.absorb(invariance_check(lie, sym, InvarianceFlavor::Ad), "r_hat + tau(r_hat)");
  o.objects.push_back(from_rmatrix(rh, lie.basis, "r_hat"));
  o.verdict = o.report.pass() ? "cybe-solution" : "fail";
  return o;
}

Outcome cmd_delta_omega(const std::vector<std::vector<Definition>>& groups, const Options&) {
  const auto defs = merged(groups);
  const Algebra b = to_algebra(need_part(defs, DefKind::Algebra));
  const BilinearForm w = to_form(need_part(defs, DefKind::Form));
  const Coproduct c = delta_omega(b, w);
  Outcome o;
  o.report = check_coalgebra(c, CoalgebraFlavor::RightNovikov);
  o.objects.push_back(from_coproduct(c));
  o.verdict = o.report.pass() ? "right-novikov-coalgebra" : "fail";
  return o;
}

Outcome cmd_classify(const std::vector<std::vector<Definition>>& groups, const Options&) {
  const auto defs = merged(groups);
  const Algebra a = to_algebra(need_part(defs, DefKind::Algebra));
  const Classification cl = classify_r(a, need_rmatrix(defs, a));
  Outcome o;
  o.report = cl.as_report();
  if (!cl.is_solution) o.notes.push_back("N_r = " + format_tensor3(cl.residual, a.basis));
  o.verdict = std::string(to_string(cl.verdict));
  return o;
}

Outcome cmd_search(const std::vector<std::vector<Definition>>& groups, const Options& opt) {
  const auto defs = merged(groups);
  const Algebra a = to_algebra(need_part(defs, DefKind::Algebra));
  const auto support = parse_support(opt.support, a.basis);
  const auto hits = grid_search_r(a, support, parse_grid(opt.grid));
  Outcome o;
  for (std::size_t h = 0; h < hits.size(); ++h) {
    const bool ok = ybe_residual(a, hits[h], YbeFlavor::Nybe).is_zero();
    o.report.add("hit " + std::to_string(h + 1) + ": " + format_tensor2(hits[h], a.basis), ok);
    o.objects.push_back(from_rmatrix(hits[h], a.basis, "r" + std::to_string(h + 1)));
  }
  o.verdict = std::to_string(hits.size()) + " solutions";
  return o;
}

Outcome cmd_parametric(const std::vector<std::vector<Definition>>& groups, const Options& opt) {
  const auto defs = merged(groups);
  const Algebra a = to_algebra(need_part(defs, DefKind::Algebra));
  const PolyMatrix r = to_poly_tensor(need_part(defs, DefKind::RMatrix));
  if (r.rows() != a.dim()) throw DimensionError("rmatrix and algebra dimensions differ");
  const YbeFlavor f = parse_ybe_flavor(opt.flavor.empty() ? "nybe" : opt.flavor);
  const PolyTensor3 res = parametric_residual(a, r, f);
  Outcome o;
  std::string witness;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!res(i, j, k).is_zero()) {
          const std::string line = "(" + a.basis[i] + "," + a.basis[j] + "," + a.basis[k] + "): " + res(i, j, k).to_string();
          o.notes.push_back(line);
          if (witness.empty()) witness = line;
        }
  o.report.add(std::string(to_string(f)) + " residual identically zero", witness.empty(), witness);
  o.verdict = witness.empty() ? "identically-zero" : "nonzero";
  return o;
}

const std::map<std::string, Construct>& constructs() {
  static const std::map<std::string, Construct> table{
      {"cobound", cmd_cobound},         {"double", cmd_double},
      {"diff-double", cmd_diff_double}, {"factorize", cmd_factorize},
      {"rb-from-r", cmd_rb_from_r},     {"r-from-rb", cmd_r_from_rb},
      {"induce-novikov", cmd_induce_novikov},
      {"induce-lie", cmd_induce_lie},   {"lift-rhat", cmd_lift_rhat},
      {"delta-omega", cmd_delta_omega}, {"classify", cmd_classify},
      {"search", cmd_search},           {"parametric", cmd_parametric},
  };
  return table;
}

// ---------------------------------------------------------------- output

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw ParseError(path.string() + ": cannot write");
  f << text;
}

int finish(const std::string& command, const Outcome& o, const Options& opt, std::ostream& out) {
  for (const auto& c : o.report.checks()) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.witness.empty()) out << ": " << c.witness;
    out << "\n";
  }
  for (const auto& n : o.notes) out << n << "\n";
  for (const auto& d : o.objects) out << describe(d);
  out << "verdict: " << o.verdict << "\n";
  if (!opt.report_path.empty()) write_file(opt.report_path, dump(report_json(command, o.report, o.objects, o.verdict)));
  if (!opt.out_dir.empty())
    for (const auto& d : o.objects)
      write_file(fs::path(opt.out_dir) / ((d.name.empty() ? std::string("object") : d.name) + ".json"), dump(to_json(d)));
  return o.report.pass() ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks and constructions for Novikov-type algebras and bialgebras", "nova"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--report", opt.report_path, "Write a JSON report to this path");
  app.add_option("--out", opt.out_dir, "Write constructed objects as definition files into this directory");
  app.add_option("--flavor", opt.flavor, "Checker or construction flavor");
  app.add_option("--q", opt.q, "Parameter q of the induced Novikov bialgebra (default -1/2)");
  app.add_option("--weight", opt.weight, "Rota-Baxter weight (default 1)");
  app.add_option("--grid", opt.grid, "Comma-separated coefficient grid, e.g. --grid=-1,0,1");
  app.add_option("--support", opt.support, "Support pairs 'i,j;k,l' (1-based indices or labels)");
  app.add_option("--element", opt.element, "Element to factorize: a basis label or coordinates");

  std::vector<std::string> check_inputs;
  auto* check = app.add_subcommand("check", "Verify axioms of the given definitions");
  check->add_option("inputs", check_inputs, "Definition files or fixture names")->required();
  check->fallthrough();

  std::string what;
  std::vector<std::string> construct_inputs;
  auto* construct = app.add_subcommand("construct", "Run a construction and verify its output");
  std::vector<std::string> names;
  for (const auto& [name, fn] : constructs()) names.push_back(name);
  construct->add_option("what", what, "Construction")->required()->check(CLI::IsMember(names));
  construct->add_option("inputs", construct_inputs, "Definition files or fixture names; one per side")->required();
  construct->fallthrough();

  std::string action, fixture_name, fixture_dir;
  auto* fixtures = app.add_subcommand("fixtures", "List or emit the embedded fixtures");
  fixtures->add_option("action", action, "list or emit")->required()->check(CLI::IsMember({"list", "emit"}));
  fixtures->add_option("name", fixture_name, "Fixture name");
  fixtures->add_option("dir", fixture_dir, "Output directory (stdout when omitted)");
  fixtures->fallthrough();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "nova: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*fixtures) {
      if (action == "list") {
        for (const auto& f : fixture_catalog()) out << f.name << "  " << f.summary << "\n";
        return kExitPass;
      }
      if (fixture_name.empty()) throw ParseError("fixtures emit needs a fixture name");
      const std::string text = dump(to_json(fixture(fixture_name)));
      if (fixture_dir.empty()) {
        out << text;
      } else {
        const fs::path path = fs::path(fixture_dir) / (fixture_name + ".json");
        write_file(path, text);
        out << path.string() << "\n";
      }
      return kExitPass;
    }
    if (*check) return finish("check", run_check(load_inputs(check_inputs), opt.flavor), opt, out);
    std::vector<std::vector<Definition>> groups;
    for (const auto& in : construct_inputs) groups.push_back(load_inputs({in}));
    return finish("construct " + what, constructs().at(what)(groups, opt), opt, out);
  } catch (const Error& e) {
    err << "nova: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    err << "nova: " << e.what() << "\n";
  } catch (const fs::filesystem_error& e) {
    err << "nova: " << e.what() << "\n";
  }
  return kExitInput;
}

}  // namespace nova
