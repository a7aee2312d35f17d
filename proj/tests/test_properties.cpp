// Seeded randomized properties, 100 cases each.

#include <doctest.h>

#include <algorithm>
#include <random>

#include "nova/constructions.hpp"
#include "nova/poly.hpp"
#include "nova/yangbaxter.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace nova;
using namespace support;

namespace {

constexpr int kCases = 100;

template <class T>
const T& pick(std::mt19937& rng, const std::vector<T>& xs) {
  std::uniform_int_distribution<std::size_t> d(0, xs.size() - 1);
  return xs[d(rng)];
}

bool coin(std::mt19937& rng) { return std::bernoulli_distribution(0.5)(rng); }

/// Novikov algebras of dimension <= 4 from the fixtures and their sums.
std::vector<Algebra> novikov_pool() {
  std::vector<Algebra> pool{alg("FIX-N2"), alg("FIX-NB2"), alg("FIX-NF4"), alg("FIX-CA2"), alg("FIX-DA3")};
  for (auto& a : pool) a.kind = AlgebraKind::LeftNovikov;
  pool.push_back(direct_sum(pool[0], pool[3]));
  return pool;
}

Tensor2 skew(std::mt19937& rng, std::size_t n) {
  Tensor2 t = random_tensor2(rng, n, 3);
  return t - t.transpose();
}

Tensor3 random_table(std::mt19937& rng, std::size_t n) {
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = small_rational(rng, 6);
  return t;
}

/// Coordinates of r after the basis change e'_i = P e_i.
Tensor2 transport(const Tensor2& r, const Matrix& p) {
  const Matrix pinv = *mat_inverse(p);
  return pinv * r * pinv.transpose();
}

Matrix random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(order[i], i) = 1;
  return p;
}

Poly random_poly(std::mt19937& rng, const std::vector<std::string>& vars) {
  Poly out;
  for (int t = 0; t < 3; ++t) {
    Poly term = small_rational(rng, 0);
    for (std::size_t v = 0; v < vars.size(); ++v)
      for (int e = std::uniform_int_distribution<int>(0, 2)(rng); e > 0; --e) term *= Poly::variable(vars, v);
    out += term;
  }
  return out;
}

std::string round_trip(const Definition& d) { return dump(to_json(parse_definition_text(dump(to_json(d))))); }

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("invariance of the symmetric part matches the matrix criterion") {
    std::mt19937 rng(20240611);
    std::vector<Algebra> pool{alg("FIX-N2"), alg("FIX-NT2"), alg("FIX-NF4"), alg("FIX-NB2")};
    const Tensor2 nf4_r = rmat("FIX-NF4");
    int invariant = 0, not_invariant = 0;
    for (int t = 0; t < kCases; ++t) {
      const Algebra& a = pick(rng, pool);
      const std::size_t n = a.dim();
      Tensor2 r(n, n);
      switch (t % 3) {
        case 0: r = random_tensor2(rng, n); break;
        case 1: r = skew(rng, n); break;
        default:
          r = skew(rng, n);
          if (n == 4 && a.c == alg("FIX-NF4").c) r += small_rational(rng, 0) * nf4_r;
          else r += random_tensor2(rng, n);
      }
      const std::string shown = format_tensor2(r, a.basis);
      CAPTURE(shown);
      const bool via_action = invariance_check(a, r + r.transpose(), InvarianceFlavor::Phi).pass();
      const bool via_iso = invariance_via_iso(a, r).pass();
      CHECK(via_action == via_iso);
      CHECK(via_action == oracle::phi_invariant(oracle::from(a), r + r.transpose()));
      (via_action ? invariant : not_invariant)++;
    }
    CHECK(invariant > 10);
    CHECK(not_invariant > 10);
  }

  TEST_CASE("coalgebra axioms match the identity of the dual product") {
    std::mt19937 rng(7741);
    const std::vector<std::pair<Algebra, CoalgebraFlavor>> pool{
        {alg("FIX-N2"), CoalgebraFlavor::Novikov},        {alg("FIX-NB2"), CoalgebraFlavor::Novikov},
        {alg("FIX-NF4"), CoalgebraFlavor::Novikov},       {alg("FIX-CA2"), CoalgebraFlavor::Novikov},
        {alg("FIX-RN2"), CoalgebraFlavor::RightNovikov},  {alg("FIX-DA3"), CoalgebraFlavor::Novikov},
    };
    int passing = 0, failing = 0;
    for (int t = 0; t < kCases; ++t) {
      const auto& [base, flavor] = pick(rng, pool);
      const std::size_t n = base.dim();
      Algebra a = change_basis(base, random_invertible(rng, n));
      if (coin(rng)) {
        std::uniform_int_distribution<std::size_t> idx(0, n - 1);
        a.c(idx(rng), idx(rng), idx(rng)) += small_rational(rng, 0) + 1;
      }
      const Coproduct c = coproduct_dual_to(a, flavor);
      const Algebra d = dual_product(c);
      CHECK(d.c == a.c);
      const IdentityKind id =
          flavor == CoalgebraFlavor::Novikov ? IdentityKind::LeftNovikov : IdentityKind::RightNovikov;
      const bool co = check_coalgebra(c, flavor).pass();
      CHECK(co == check_identity(d, id).pass());
      const auto o = oracle::dual(c);
      CHECK(co == (flavor == CoalgebraFlavor::Novikov ? oracle::left_novikov(o) : oracle::right_novikov(o)));
      (co ? passing : failing)++;
    }
    CHECK(passing > 10);
    CHECK(failing > 10);
  }

  TEST_CASE("serialize then parse is the identity") {
    std::mt19937 rng(99);
    const std::vector<MapRole> roles{MapRole::Derivation, MapRole::AdmissibleTheta, MapRole::RotaBaxter,
                                     MapRole::Homomorphism, MapRole::Generic};
    const std::vector<FormFlavor> flavors{FormFlavor::NovikovInvariant, FormFlavor::RightNovikovInvariant,
                                          FormFlavor::Plain};
    for (int t = 0; t < kCases; ++t) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
      const auto basis = default_basis(n, coin(rng) ? "e" : "x");

      Algebra a(basis, AlgebraKind::Unchecked, "a" + std::to_string(t));
      a.c = random_table(rng, n);
      Definition da = from_algebra(a);
      CHECK(round_trip(da) == dump(to_json(da)));
      CHECK(to_algebra(parse_definition_text(dump(to_json(da)))).c == a.c);

      Coproduct c(basis, CoalgebraFlavor::Unchecked, "c");
      c.d = random_table(rng, n);
      Definition dc = from_coproduct(c);
      CHECK(round_trip(dc) == dump(to_json(dc)));
      CHECK(to_coproduct(parse_definition_text(dump(to_json(dc)))).d == c.d);

      const Tensor2 r = random_tensor2(rng, n, 2);
      Definition dr = from_rmatrix(r, basis, "r");
      CHECK(round_trip(dr) == dump(to_json(dr)));
      CHECK(to_tensor(parse_definition_text(dump(to_json(dr)))) == r);

      StructureMap m{"m", random_tensor2(rng, n, 2), pick(rng, roles), 0};
      if (m.role == MapRole::RotaBaxter) m.weight = small_rational(rng, 1);
      Definition dm = from_map(m, basis);
      CHECK(round_trip(dm) == dump(to_json(dm)));
      const StructureMap m2 = to_map(parse_definition_text(dump(to_json(dm))));
      CHECK(m2.matrix == m.matrix);
      CHECK(m2.role == m.role);
      CHECK(m2.weight == m.weight);

      BilinearForm f{"w", random_tensor2(rng, n, 2), pick(rng, flavors)};
      Definition df = from_form(f, basis);
      CHECK(round_trip(df) == dump(to_json(df)));
      const BilinearForm f2 = to_form(parse_definition_text(dump(to_json(df))));
      CHECK(f2.matrix == f.matrix);
      CHECK(f2.flavor == f.flavor);

      Definition bundle = make_bundle("b", "", {da, dc, dr, dm, df});
      CHECK(round_trip(bundle) == dump(to_json(bundle)));
      CHECK(flatten(parse_definition_text(dump(to_json(bundle)))).size() == 5);
    }
  }

  TEST_CASE("the coadjoint representation is a representation") {
    std::mt19937 rng(31337);
    const auto pool = novikov_pool();
    for (int t = 0; t < kCases; ++t) {
      const Algebra& base = pick(rng, pool);
      const Algebra a = change_basis(base, random_invertible(rng, base.dim()));
      CHECK(check_representation(a, coadjoint_rep(a)).pass());
    }
  }

  TEST_CASE("rationals form a field") {
    std::mt19937 rng(5);
    for (int t = 0; t < kCases; ++t) {
      const Scalar a = small_rational(rng), b = small_rational(rng), c = small_rational(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      if (a != 0) CHECK(a * (1 / a) == 1);
      CHECK(parse_scalar(to_string(a)) == a);
    }
  }

  TEST_CASE("inverse exists exactly at full rank") {
    std::mt19937 rng(6);
    for (int t = 0; t < kCases; ++t) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
      const Matrix m = random_tensor2(rng, n, 5);
      const auto inv = mat_inverse(m);
      CHECK(inv.has_value() == (mat_rank(m) == n));
      if (inv) CHECK(m * *inv == Matrix::identity(n));
    }
  }

  TEST_CASE("dual basis of a nondegenerate form") {
    std::mt19937 rng(8);
    for (int t = 0; t < kCases; ++t) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
      Matrix omega(n, n);
      do {
        const Matrix m = random_tensor2(rng, n, 1);
        omega = m + m.transpose();
      } while (!mat_inverse(omega));
      CHECK(omega * dual_basis_wrt_form(omega) == Matrix::identity(n));
    }
  }

  TEST_CASE("polynomial evaluation is a ring homomorphism") {
    std::mt19937 rng(12);
    const std::vector<std::string> vars{"k", "l"};
    for (int t = 0; t < kCases; ++t) {
      const Poly p = random_poly(rng, vars), q = random_poly(rng, vars);
      const std::vector<Scalar> at{small_rational(rng), small_rational(rng)};
      auto ev = [&](const Poly& x) { return x.over(vars).evaluate(at); };
      CHECK(ev(p + q) == ev(p) + ev(q));
      CHECK(ev(p * q) == ev(p) * ev(q));
      CHECK(ev(-p) == -ev(p));
      CHECK(parse_poly(p.to_string(), vars) == p);
    }
  }

  TEST_CASE("Novikov identities survive basis changes and direct sums") {
    std::mt19937 rng(14);
    const auto pool = novikov_pool();
    for (int t = 0; t < kCases; ++t) {
      const Algebra& x = pick(rng, pool);
      const Algebra& y = pick(rng, pool);
      const Algebra a = change_basis(x, random_invertible(rng, x.dim()));
      CHECK(check_identity(a, IdentityKind::LeftNovikov).pass());
      CHECK(check_identity(a, IdentityKind::PreLie).pass());
      CHECK(check_representation(a, adjoint_rep(a)).pass());
      if (x.dim() + y.dim() <= 6) CHECK(check_identity(direct_sum(a, y), IdentityKind::LeftNovikov).pass());
    }
  }

  TEST_CASE("classification is basis independent and coboundaries are bialgebras") {
    std::mt19937 rng(21);
    const Algebra nf = alg("FIX-NF4");
    const Tensor2 r0 = rmat("FIX-NF4");
    const Algebra n2 = alg("FIX-N2");
    int solutions = 0;
    for (int t = 0; t < kCases; ++t) {
      const bool big = t % 2 == 0;
      const Algebra& a = big ? nf : n2;
      const std::size_t n = a.dim();
      Tensor2 r = big ? Scalar(std::uniform_int_distribution<int>(-2, 2)(rng)) * r0 : random_tensor2(rng, n, 3);
      if (coin(rng)) r += skew(rng, n);
      const Classification c = classify_r(a, r);
      CHECK(build_r_maps(r).iso == r + r.transpose());

      const Matrix p = coin(rng) ? random_permutation(rng, n) : random_invertible(rng, n);
      const Classification moved = classify_r(change_basis(a, p), transport(r, p));
      CHECK(moved.verdict == c.verdict);
      CHECK(moved.is_solution == c.is_solution);

      if (c.verdict != Verdict::None) {
        ++solutions;
        BialgebraBundle b{a, coboundary_coproduct(a, r, CoboundaryFlavor::Novikov), {}, {}};
        CHECK(check_bialgebra(b, BialgebraFlavor::Novikov).pass());
      }
      if (c.sym_part_invariant)
        CHECK(c.is_solution ==
              (c.sharp_hom && c.natural_hom &&
               check_identity(a_star_product_from_r(a, r), IdentityKind::LeftNovikov).pass()));
    }
    CHECK(solutions > 10);
  }

  TEST_CASE("scaled iso maps the r-product onto the descendent product") {
    std::mt19937 rng(33);
    const Algebra a = alg("FIX-NF4");
    const Tensor2 r = rmat("FIX-NF4");
    const Matrix iso = build_r_maps(r).iso;
    const Algebra star = a_star_product_from_r(a, r);
    for (int t = 0; t < kCases; ++t) {
      Scalar lambda = small_rational(rng, 0);
      if (lambda == 0) lambda = 1;
      const QuadraticRB q = rb_from_factorizable(a, r, lambda);
      const Algebra desc = descendent_algebra(a, q.p);
      CHECK(check_identity(desc, IdentityKind::LeftNovikov).pass());
      CHECK(check_homomorphism(star, desc, (1 / lambda) * iso, "iso").pass());
      const QuadraticRB tw = twin_rb(q);
      CHECK(check_structure_map(a, tw.p).pass());
      CHECK(check_quadratic_rb(tw).pass());
    }
  }

  TEST_CASE("a bialgebra report fails exactly when a sub-check fails") {
    std::mt19937 rng(44);
    const BialgebraBundle base = bundle("FIX-NF4");
    for (int t = 0; t < kCases; ++t) {
      BialgebraBundle b = base;
      std::uniform_int_distribution<std::size_t> idx(0, 3);
      if (coin(rng)) b.coproduct.d(idx(rng), idx(rng), idx(rng)) += small_rational(rng, 0);
      if (coin(rng)) b.algebra.c(idx(rng), idx(rng), idx(rng)) += small_rational(rng, 0);
      const Report r = check_bialgebra(b, BialgebraFlavor::Novikov);
      bool any = false;
      for (const auto& c : r.checks()) any = any || !c.pass;
      CHECK(r.pass() == !any);
      if (!r.pass()) {
        const std::string& name = r.first_failure()->name;
        CHECK((name.rfind("algebra/", 0) == 0 || name.rfind("coalgebra/", 0) == 0 ||
               name.rfind("compatibility/", 0) == 0));
      }
    }
  }
}
