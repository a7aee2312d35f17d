#include <doctest.h>

#include <random>

#include "nova/constructions.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace nova;
using namespace support;

namespace {

// Lie table from listed brackets [x, y] = v, extended by antisymmetry.
Algebra lie_table(std::vector<std::string> basis, std::initializer_list<std::tuple<int, int, Vector>> brackets) {
  const std::size_t n = basis.size();
  Algebra g(std::move(basis), AlgebraKind::Lie);
  for (const auto& [i, j, v] : brackets) {
    g.set_product(i - 1, j - 1, v);
    Vector neg = v;
    for (auto& x : neg) x = -x;
    g.set_product(j - 1, i - 1, neg);
  }
  (void)n;
  return g;
}

std::vector<std::string> labels(const char* a, int n, int m) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) out.push_back(std::string(a) + std::to_string(i) + ".x" + std::to_string(j));
  return out;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("double of the two-dimensional Novikov bialgebra") {
    DoubleBundle d = novikov_double(alg("FIX-NB2"), cop("FIX-NB2"));
    CHECK(d.algebra.basis == std::vector<std::string>{"e1", "e2", "f1", "f2"});
    // e1 e1 = e2, f2 f2 = f1, e1 f2 = -2 f1 + e2, f2 e1 = -2 e2 + f1
    Tensor3 expected = t3(4, {{1, 1, 2, "1"}, {4, 4, 3, "1"}, {1, 4, 3, "-2"}, {1, 4, 2, "1"},
                              {4, 1, 2, "-2"}, {4, 1, 3, "1"}});
    CHECK(d.algebra.c == expected);
    CHECK(d.r_tilde == t2(4, {{1, 3, "1"}, {2, 4, "1"}}));
    CHECK(check_manin_triple(d).pass());

    Coproduct delta = coboundary_coproduct(d.algebra, d.r_tilde, CoboundaryFlavor::Novikov);
    CHECK(delta.d == t3(4, {{1, 2, 2, "1"}, {4, 3, 3, "-1"}}));
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(oracle::equal(oracle::cobound_novikov(oracle::from(d.algebra), d.r_tilde, oracle::unit(4, i)),
                          delta.of(i)));

    Classification c = classify_r(d.algebra, d.r_tilde);
    CHECK(c.verdict == Verdict::Factorizable);
    CHECK(build_r_maps(d.r_tilde).iso == lin(4, {{1, 3, "1"}, {2, 4, "1"}, {3, 1, "1"}, {4, 2, "1"}}));
  }

  TEST_CASE("double of the four-dimensional Novikov bialgebra is a Manin triple") {
    DoubleBundle d = novikov_double(alg("FIX-NF4"), cop("FIX-NF4"));
    CHECK(check_manin_triple(d).pass());
    CHECK(oracle::left_novikov(oracle::from(d.algebra)));
    CHECK(oracle::phi_invariant(oracle::from(d.algebra), d.form.matrix));
  }

  TEST_CASE("double edge cases") {
    Algebra z = zero_algebra(1, AlgebraKind::LeftNovikov);
    Coproduct zc(z.basis, CoalgebraFlavor::Novikov);
    DoubleBundle d = novikov_double(z, zc);
    CHECK(d.algebra.c.is_zero());
    CHECK(d.r_tilde == t2(2, {{1, 2, "1"}}));
    CHECK(check_manin_triple(d).pass());

    DoubleBundle bad = novikov_double(alg("FIX-NB2"), cop("FIX-NB2"));
    bad.algebra.c(0, 0, 2) += 1;
    Report r = check_manin_triple(bad);
    CHECK_FALSE(r.pass());
    CHECK(r.first_failure()->name == "A is a subalgebra");

    // The non-Novikov table cannot be doubled.
    CHECK_THROWS_AS(novikov_double(alg("FIX-NT2"), cop("FIX-NT2")), PreconditionError);
  }

  TEST_CASE("differential doubles") {
    for (const char* fx : {"FIX-CA2", "FIX-DA3"}) {
      CAPTURE(fx);
      BialgebraBundle b = bundle(fx);
      DiffDoubleBundle dd = differential_double(b);
      CHECK(dd.bundle.algebra.dim() == 2 * b.algebra.dim());
      CHECK(check_bialgebra(dd.bundle, BialgebraFlavor::DiffInfinitesimal).pass());
      CHECK(check_differential_factorizable(dd.bundle.algebra, *dd.bundle.d, *dd.bundle.theta, dd.r_tilde).pass());
      StructureMap dm{"d", *dd.bundle.d, MapRole::Derivation, 0};
      CHECK(check_structure_map(dd.bundle.algebra, dm).pass());
      for (std::size_t i = 0; i < dd.bundle.algebra.dim(); ++i)
        CHECK(oracle::equal(oracle::cobound_infinitesimal(oracle::from(dd.bundle.algebra), dd.r_tilde,
                                                           oracle::unit(dd.bundle.algebra.dim(), i)),
                            dd.bundle.coproduct.of(i)));
    }
    BialgebraBundle z{zero_algebra(1, AlgebraKind::CommAssoc), Coproduct({"e1"}, CoalgebraFlavor::CoassocCocomm),
                      Matrix(1, 1), Matrix(1, 1)};
    DiffDoubleBundle zd = differential_double(z);
    CHECK(zd.bundle.algebra.c.is_zero());
    CHECK(zd.bundle.coproduct.d.is_zero());
  }

  TEST_CASE("factorization of elements") {
    Algebra a = alg("FIX-NF4");
    Tensor2 r = rmat("FIX-NF4");
    auto [p1, m1] = factorize_element(a, r, vec(4, {{1, "1"}}));
    CHECK(is_zero(p1));
    CHECK(m1 == vec(4, {{1, "1"}}));
    auto [p3, m3] = factorize_element(a, r, vec(4, {{3, "1"}}));
    CHECK(p3 == vec(4, {{3, "1"}}));
    CHECK(is_zero(m3));
    auto [p0, m0] = factorize_element(a, r, zero_vector(4));
    CHECK(is_zero(p0));
    CHECK(is_zero(m0));
    Vector x = vec(4, {{1, "2"}, {2, "-1/3"}, {4, "5"}});
    auto [px, mx] = factorize_element(a, r, x);
    for (std::size_t i = 0; i < 4; ++i) CHECK(px[i] + mx[i] == x[i]);
    CHECK_THROWS_AS(factorize_element(alg("FIX-NT2"), rmat("FIX-NT2"), zero_vector(2)), DegeneracyError);
  }

  TEST_CASE("descendent algebras") {
    Algebra a = alg("FIX-NF4");
    StructureMap zero{"P", Matrix(4, 4), MapRole::RotaBaxter, 1};
    CHECK(descendent_algebra(a, zero).c == a.c);

    StructureMap neg{"P", Scalar(-2) * Matrix::identity(4), MapRole::RotaBaxter, 2};
    Algebra dn = descendent_algebra(a, neg);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        Vector v = a.basis_product(i, j);
        for (auto& x : v) x *= -2;
        CHECK(dn.basis_product(i, j) == v);
      }

    StructureMap p{"P", lin(4, {{1, 1, "-1"}, {2, 2, "-1"}}), MapRole::RotaBaxter, 1};
    Algebra d = descendent_algebra(a, p);
    const auto o = oracle::from(a);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const Vector ei = oracle::unit(4, i), ej = oracle::unit(4, j);
        Vector expect = oracle::add(oracle::add(oracle::mul(o, p(ei), ej), oracle::mul(o, ei, p(ej))),
                                    oracle::mul(o, ei, ej));
        CHECK(d.basis_product(i, j) == expect);
      }
    CHECK(check_identity(d, IdentityKind::LeftNovikov).pass());
    CHECK_THROWS_AS(descendent_algebra(a, StructureMap{"G", Matrix(4, 4), MapRole::Generic, 0}), PreconditionError);
  }

  TEST_CASE("quadratic Rota-Baxter operators from a factorizable r") {
    Algebra a = alg("FIX-NF4");
    Tensor2 r = rmat("FIX-NF4");
    QuadraticRB q = rb_from_factorizable(a, r, 1);
    CHECK(q.p.matrix == lin(4, {{1, 1, "-1"}, {2, 2, "-1"}}));
    CHECK(q.form.matrix == t2(4, {{1, 3, "1"}, {3, 1, "1"}, {2, 4, "1"}, {4, 2, "1"}}));
    CHECK(check_quadratic_rb(q).pass());
    CHECK(r_from_quadratic_rb(q) == r);

    for (const char* w : {"2", "-3", "1/2"}) {
      CAPTURE(w);
      const Scalar lambda = parse_scalar(w);
      QuadraticRB qw = rb_from_factorizable(a, r, lambda);
      CHECK(qw.p.matrix == lambda * q.p.matrix);
      CHECK(check_quadratic_rb(qw).pass());
      CHECK(r_from_quadratic_rb(qw) == r);
      QuadraticRB tw = twin_rb(qw);
      CHECK(check_quadratic_rb(tw).pass());
      Tensor2 r2 = r_from_quadratic_rb(tw);
      CHECK(classify_r(a, r2).verdict == Verdict::Factorizable);
      // The twin produces tau(r).
      CHECK(r2 == r.transpose());
    }

    QuadraticRB collapsed = q;
    collapsed.p.matrix = -Matrix::identity(4);
    CHECK(r_from_quadratic_rb(collapsed).is_zero());

    CHECK_THROWS_AS(rb_from_factorizable(a, r, 0), PreconditionError);
    CHECK_THROWS_AS(rb_from_factorizable(alg("FIX-NT2"), rmat("FIX-NT2"), 1), DegeneracyError);
  }

  TEST_CASE("Rota-Baxter operator on the double") {
    DoubleBundle d = novikov_double(alg("FIX-NB2"), cop("FIX-NB2"));
    QuadraticRB q = rb_from_factorizable(d.algebra, d.r_tilde, 1);
    CHECK(check_quadratic_rb(q).pass());
    CHECK(r_from_quadratic_rb(q) == d.r_tilde);
  }

  TEST_CASE("induced Novikov bialgebra with q = -1/2") {
    InducedNovikov in = induce_novikov_bialgebra(bundle("FIX-CA2"), Scalar(-1, 2));
    CHECK(in.gate == InductionGate::HalfQ);
    const Algebra& a = in.bundle.algebra;
    CHECK(a.basis_product(0, 0) == vec(2, {{1, "-1/2"}}));
    CHECK(a.basis_product(0, 1) == vec(2, {{2, "1"}}));
    CHECK(a.basis_product(1, 0) == vec(2, {{2, "-1/2"}}));
    CHECK(is_zero(a.basis_product(1, 1)));
    CHECK(in.bundle.coproduct.of(0).is_zero());
    CHECK(in.bundle.coproduct.of(1) == t2(2, {{2, 2, "-1/2"}}));
    CHECK(in.verification.pass());
    CHECK(oracle::left_novikov(oracle::from(a)));
    CHECK(oracle::novikov_compatible(oracle::from(a), in.bundle.coproduct));
  }

  TEST_CASE("induced Novikov bialgebra on the three-dimensional algebra") {
    BialgebraBundle b = bundle("FIX-DA3");
    for (const char* qs : {"0", "-1/2", "1", "3"}) {
      CAPTURE(qs);
      const Scalar q = parse_scalar(qs);
      InducedNovikov in = induce_novikov_bialgebra(b, q);
      CHECK(in.bundle.algebra.basis_product(0, 0) == vec(3, {{3, to_string(Scalar(1 - q)).c_str()}}));
      CHECK(in.bundle.coproduct.d.is_zero());
      CHECK(in.verification.pass());
      Coproduct cob = coboundary_coproduct(in.bundle.algebra, rmat("FIX-DA3"), CoboundaryFlavor::Novikov);
      CHECK(cob.d.is_zero());
    }
  }

  TEST_CASE("induction gate") {
    BialgebraBundle z{zero_algebra(2, AlgebraKind::CommAssoc), Coproduct(default_basis(2), CoalgebraFlavor::CoassocCocomm),
                      Matrix(2, 2), Matrix(2, 2)};
    InducedNovikov in = induce_novikov_bialgebra(z, 5);
    CHECK(in.gate == InductionGate::ThetaDerivation);
    CHECK(in.bundle.algebra.c.is_zero());
    CHECK(in.bundle.coproduct.d.is_zero());
    CHECK(to_string(InductionGate::HalfQ) == "q = -1/2");
  }

  TEST_CASE("coproduct from an invariant form") {
    Coproduct c = delta_omega(alg("FIX-RN2"), form("FIX-RN2"));
    CHECK(c.of(0) == t2(2, {{1, 1, "1"}}));
    CHECK(c.of(1) == t2(2, {{1, 2, "1"}, {2, 1, "-2"}}));
    CHECK(check_coalgebra(c, CoalgebraFlavor::RightNovikov).pass());

    Algebra z = zero_algebra(2, AlgebraKind::RightNovikov);
    CHECK(delta_omega(z, BilinearForm{"I", Matrix::identity(2), FormFlavor::RightNovikovInvariant}).d.is_zero());
    CHECK_THROWS_AS(delta_omega(z, BilinearForm{"Z", Matrix(2, 2), FormFlavor::RightNovikovInvariant}),
                    DegeneracyError);
  }

  TEST_CASE("defining relation of the form coproduct on transported data") {
    std::mt19937 rng(99);
    const Algebra rn = alg("FIX-RN2");
    const Matrix w = form("FIX-RN2").matrix;
    for (int trial = 0; trial < 20; ++trial) {
      Matrix p = random_invertible(rng, 2);
      Algebra b = change_basis(rn, p);
      Matrix wp = p.transpose() * w * p;
      BilinearForm omega{"w", wp, FormFlavor::RightNovikovInvariant};
      Coproduct c = delta_omega(b, omega);
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) {
            Scalar lhs = 0;
            for (std::size_t u = 0; u < 2; ++u)
              for (std::size_t v = 0; v < 2; ++v) lhs += c.d(s, u, v) * wp(u, i) * wp(v, j);
            Scalar rhs = 0;
            const Vector prod = b.basis_product(i, j);
            for (std::size_t k = 0; k < 2; ++k) rhs += wp(s, k) * prod[k];
            CHECK(lhs == rhs);
          }
    }
  }

  TEST_CASE("Lie bialgebra on the tensor product with the four-dimensional factor") {
    BialgebraBundle nf = bundle("FIX-NF4");
    LieBundle lb = induce_lie_bialgebra(nf, alg("FIX-RN2"), form("FIX-RN2"));
    const auto b = labels("e", 4, 2);
    CHECK(lb.bundle.algebra.basis == b);
    // index of ei.xj is 2(i-1) + j
    Algebra expected = lie_table(b, {{1, 2, vec(8, {{3, "-3"}})},
                                     {2, 7, vec(8, {{3, "-3"}})},
                                     {1, 8, vec(8, {{5, "3"}})},
                                     {8, 7, vec(8, {{5, "3"}})},
                                     {2, 8, vec(8, {{4, "3"}, {6, "-3"}})}});
    CHECK(lb.bundle.algebra.c == expected.c);
    Tensor3 delta = t3(8, {{2, 3, 4, "3"}, {2, 4, 3, "-3"}, {8, 6, 5, "3"}, {8, 5, 6, "-3"}});
    CHECK(lb.bundle.coproduct.d == delta);
    CHECK(check_bialgebra(lb.bundle, BialgebraFlavor::Lie).pass());
    CHECK(oracle::lie(oracle::from(lb.bundle.algebra)));
    CHECK(oracle::lie(oracle::dual(lb.bundle.coproduct)));

    Tensor2 rhat = lift_r_hat(rmat("FIX-NF4"), form("FIX-RN2"));
    CHECK(rhat == t2(8, {{1, 6, "1"}, {2, 5, "1"}, {3, 8, "1"}, {4, 7, "1"}}));
    CHECK(ybe_residual(lb.bundle.algebra, rhat, YbeFlavor::Cybe).is_zero());
    CHECK(oracle::is_zero(oracle::cybe(oracle::from(lb.bundle.algebra), rhat)));
    CHECK(invariance_check(lb.bundle.algebra, rhat + rhat.transpose(), InvarianceFlavor::Ad).pass());
    CHECK(coboundary_coproduct(lb.bundle.algebra, rhat, CoboundaryFlavor::Lie).d == delta);

    // Images of f_a (x) y_j: f1.y1 -> e3.x2, f1.y2 -> e3.x1, ..., f4.y2 -> e2.x1.
    Matrix iso = build_r_maps(rhat).iso;
    CHECK(iso == lin(8, {{1, 6, "1"}, {2, 5, "1"}, {3, 8, "1"}, {4, 7, "1"},
                         {5, 2, "1"}, {6, 1, "1"}, {7, 4, "1"}, {8, 3, "1"}}));
    CHECK(*mat_inverse(iso) == iso.transpose());
  }

  TEST_CASE("tensor-product formulas on the non-Novikov two-dimensional table") {
    Algebra nt = alg("FIX-NT2");
    Algebra rn = alg("FIX-RN2");
    const auto b = labels("e", 2, 2);
    Algebra g = induced_lie_algebra(nt, rn);
    Algebra expected = lie_table(b, {{1, 4, vec(4, {{3, "1"}})},
                                     {2, 3, vec(4, {{3, "1"}})},
                                     {2, 4, vec(4, {{4, "-2"}})}});
    CHECK(g.c == expected.c);
    CHECK(check_identity(g, IdentityKind::Lie).pass() == oracle::lie(oracle::from(g)));

    Coproduct c = induced_cobracket(cop("FIX-NT2"), delta_omega(rn, form("FIX-RN2")));
    Tensor3 delta = t3(4, {{1, 1, 3, "1"}, {1, 3, 1, "-1"},
                           {2, 2, 3, "1"}, {2, 3, 2, "-1"}, {2, 4, 1, "2"}, {2, 1, 4, "-2"},
                           {4, 4, 3, "3"}, {4, 3, 4, "-3"}});
    CHECK(c.d == delta);

    Tensor2 rhat = lift_r_hat(rmat("FIX-NT2"), form("FIX-RN2"));
    CHECK(rhat == t2(4, {{1, 4, "1"}, {3, 2, "-1"}, {2, 3, "1"}, {4, 1, "-1"}}));
    CHECK(lift_r_hat(Tensor2(2, 2), form("FIX-RN2")).is_zero());

    // The preconditions reject this input.
    CHECK_THROWS_AS(induce_lie_bialgebra(bundle("FIX-NT2"), rn, form("FIX-RN2")), PreconditionError);
  }

  TEST_CASE("zero cobracket still gives a Lie algebra") {
    BialgebraBundle nb{alg("FIX-NF4"), Coproduct(alg("FIX-NF4").basis, CoalgebraFlavor::Novikov), {}, {}};
    LieBundle lb = induce_lie_bialgebra(nb, alg("FIX-RN2"), form("FIX-RN2"));
    CHECK(lb.bundle.coproduct.d.is_zero());
    CHECK(check_identity(lb.bundle.algebra, IdentityKind::Lie).pass());
    CHECK(oracle::lie(oracle::from(lb.bundle.algebra)));
  }
}
