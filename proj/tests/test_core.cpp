// Exact multilinear layer: scalars, matrices, forms, Mukai pairing,
// Clifford/spin calculus.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gengeo/clifford.hpp"
#include "gengeo/form.hpp"
#include "gengeo/matrix.hpp"
#include "gengeo/scalar.hpp"

using namespace gengeo;

namespace {

std::mt19937 rng(20260825);

Rational rnd_rational() {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  return Rational(num(rng)) / Rational(den(rng));
}

GaussianRational rnd_scalar() { return {rnd_rational(), rnd_rational()}; }

GeneralizedVector rnd_vector(int m) {
  GeneralizedVector u(m);
  for (int i = 0; i < m; ++i) {
    u.vec[i] = rnd_scalar();
    u.cov[i] = rnd_scalar();
  }
  return u;
}

FormSpinor rnd_form(int m) {
  FormSpinor f(m);
  std::uniform_int_distribution<Mask> mask(0, (Mask{1} << m) - 1);
  for (int t = 0; t < 4; ++t) f.add_term(mask(rng), rnd_scalar());
  return f;
}

FormSpinor rnd_homogeneous(int m, int k) {
  FormSpinor f(m);
  auto masks = masks_of_degree(m, k);
  std::uniform_int_distribution<std::size_t> pick(0, masks.size() - 1);
  for (int t = 0; t < 3; ++t) f.add_term(masks[pick(rng)], rnd_scalar());
  return f;
}

GMatrix rnd_antisym(int m) {
  GMatrix b = GMatrix::zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      b(i, j) = rnd_scalar();
      b(j, i) = -b(i, j);
    }
  return b;
}

GMatrix rnd_square(int m) {
  GMatrix a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = rnd_scalar();
  return a;
}

SoElement rnd_so(int m) {
  SoElement q = SoElement::zero(m);
  q.endo = rnd_square(m);
  q.bivector = rnd_antisym(m);
  q.two_form = rnd_antisym(m);
  return q;
}

FormSpinor e(int dim, std::initializer_list<int> idx) {  // e({1,2}) = e^1 ^ e^2, 1-based
  FormSpinor f = FormSpinor::one(dim);
  for (int i : idx) f = wedge(f, FormSpinor::basis_one_form(dim, i - 1));
  return f;
}

}  // namespace

TEST_CASE("rational parsing accepts integers and p/q strings") {
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("-5") == Rational(-5));
  CHECK(parse_rational("3/4") == Rational(3) / Rational(4));
  CHECK(parse_rational("-21/14") == Rational(-3) / Rational(2));
  CHECK(to_string(parse_rational("-21/14")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
}

TEST_CASE("gaussian rational field arithmetic") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  GaussianRational z{Rational(3), Rational(-2)};
  CHECK(z * z.conj() == GaussianRational(Rational(13)));
  CHECK(z / z == GaussianRational(1));
  CHECK((z + z.conj()).is_real());
  CHECK_THROWS_AS(z / GaussianRational(0), MathError);
  CHECK(to_string(GaussianRational(Rational(1), Rational(-1) / Rational(2))) == "1-1/2i");
  CHECK(to_string(GaussianRational(Rational(0), Rational(1))) == "i");
  CHECK(to_string(GaussianRational(0)) == "0");
}

TEST_CASE("exact rational linear algebra: rank, kernel, det, solve, inverse") {
  QMatrix a{{Rational(1), Rational(2), Rational(3)},
            {Rational(2), Rational(4), Rational(6)},
            {Rational(1), Rational(0), Rational(1)}};
  CHECK(a.rank() == 2);
  QMatrix k = a.kernel_basis();
  CHECK(k.cols() == 1);
  CHECK((a * k).is_zero());
  CHECK(a.det() == Rational(0));

  QMatrix b{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  CHECK(b.det() == Rational(1));
  auto inv = b.inverse();
  REQUIRE(inv.has_value());
  CHECK(*inv * b == QMatrix::identity(2));
  QMatrix rhs{{Rational(1)}, {Rational(0)}};
  auto x = b.solve(rhs);
  REQUIRE(x.has_value());
  CHECK(b * *x == rhs);

  // complex column relations are found over the Gaussian rationals
  GMatrix h(2, 2);
  h(0, 0) = GaussianRational(1);
  h(0, 1) = GaussianRational::i();
  h(1, 0) = -GaussianRational::i();
  h(1, 1) = GaussianRational(1);
  CHECK(h.rank() == 1);
  GMatrix hk = h.kernel_basis();
  CHECK(hk.cols() == 1);
  CHECK((h * hk).is_zero());
}

TEST_CASE("determinant is multiplicative on random complex matrices") {
  for (int trial = 0; trial < 20; ++trial) {
    GMatrix a = rnd_square(3), b = rnd_square(3);
    CHECK((a * b).det() == a.det() * b.det());
  }
}

TEST_CASE("span comparisons") {
  QMatrix a{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(0), Rational(0)}};
  QMatrix v{{Rational(2)}, {Rational(-3)}, {Rational(0)}};
  QMatrix w{{Rational(0)}, {Rational(0)}, {Rational(1)}};
  CHECK(span_contains(a, v));
  CHECK(!span_contains(a, w));
  CHECK(same_span(a, a * QMatrix{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}}));
}

TEST_CASE("wedge signs and associativity") {
  CHECK(wedge(e(4, {1}), e(4, {2})) == e(4, {1, 2}));
  CHECK(wedge(e(4, {2}), e(4, {1})) == -e(4, {1, 2}));
  CHECK(wedge(e(4, {1, 3}), e(4, {2})) == -e(4, {1, 2, 3}));
  CHECK(wedge(e(4, {1}), e(4, {1})).is_zero());
  for (int trial = 0; trial < 20; ++trial) {
    FormSpinor a = rnd_form(4), b = rnd_form(4), c = rnd_form(4);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
  // graded commutativity on homogeneous pieces
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      FormSpinor a = rnd_homogeneous(6, p), b = rnd_homogeneous(6, q);
      GaussianRational sign{Rational((p * q) % 2 == 0 ? 1 : -1)};
      CHECK(wedge(a, b) == sign * wedge(b, a));
    }
}

TEST_CASE("contraction is a square-zero anti-derivation") {
  CHECK(contract(0, e(4, {1, 2})) == e(4, {2}));
  CHECK(contract(1, e(4, {1, 2})) == -e(4, {1}));
  CHECK(contract(2, e(4, {1, 2})).is_zero());
  for (int trial = 0; trial < 20; ++trial) {
    FormSpinor f = rnd_form(6);
    for (int i = 0; i < 6; ++i) CHECK(contract(i, contract(i, f)).is_zero());
    for (int p = 0; p <= 3; ++p) {
      FormSpinor a = rnd_homogeneous(6, p), b = rnd_form(6);
      GaussianRational sign{Rational(p % 2 == 0 ? 1 : -1)};
      for (int i = 0; i < 6; ++i)
        CHECK(contract(i, wedge(a, b)) ==
              wedge(contract(i, a), b) + sign * wedge(a, contract(i, b)));
    }
  }
}

TEST_CASE("reversal acts by (-1)^(k(k-1)/2) per degree") {
  CHECK(sigma_reverse(e(4, {})) == e(4, {}));
  CHECK(sigma_reverse(e(4, {1})) == e(4, {1}));
  CHECK(sigma_reverse(e(4, {1, 2})) == -e(4, {1, 2}));
  CHECK(sigma_reverse(e(4, {1, 2, 3})) == -e(4, {1, 2, 3}));
  CHECK(sigma_reverse(e(4, {1, 2, 3, 4})) == e(4, {1, 2, 3, 4}));
  for (int trial = 0; trial < 10; ++trial) {
    FormSpinor f = rnd_form(6);
    CHECK(sigma_reverse(sigma_reverse(f)) == f);
  }
}

TEST_CASE("mukai pairing: frozen values and symmetry sign") {
  CHECK(mukai_pairing(e(4, {}), e(4, {1, 2, 3, 4})) == GaussianRational(1));
  CHECK(mukai_pairing(e(4, {1}), e(4, {2, 3, 4})) == GaussianRational(-1));
  CHECK(mukai_pairing(e(4, {1, 2}), e(4, {3, 4})) == GaussianRational(-1));
  // (-1)^(m(m-1)/2): symmetric for m = 4, antisymmetric for m = 6
  for (int trial = 0; trial < 50; ++trial) {
    FormSpinor a4 = rnd_form(4), b4 = rnd_form(4);
    CHECK(mukai_pairing(a4, b4) == mukai_pairing(b4, a4));
    FormSpinor a6 = rnd_form(6), b6 = rnd_form(6);
    CHECK(mukai_pairing(a6, b6) == -mukai_pairing(b6, a6));
  }
}

TEST_CASE("mukai gram matrix is nondegenerate with the pairing's symmetry") {
  GMatrix g4 = mukai_gram(4);
  CHECK(g4.rank() == 16);
  CHECK(g4 == g4.transpose());
  GMatrix g6 = mukai_gram(6);
  CHECK(g6.rank() == 64);
  CHECK(g6 == -g6.transpose());
}

TEST_CASE("clifford relation v.v.rho = <v,v> rho, 200 random cases") {
  for (int m : {4, 6})
    for (int trial = 0; trial < 100; ++trial) {
      GeneralizedVector v = rnd_vector(m);
      FormSpinor rho = rnd_form(m);
      CHECK(clifford_act(v, clifford_act(v, rho)) == split_pairing(v, v) * rho);
    }
}

TEST_CASE("clifford matrices multiply like the action") {
  for (int trial = 0; trial < 10; ++trial) {
    GeneralizedVector v = rnd_vector(4);
    FormSpinor rho = rnd_form(4);
    CHECK(FormSpinor::from_column(4, clifford_matrix(v) * rho.to_column()) ==
          clifford_act(v, rho));
  }
}

TEST_CASE("spin commutator law [spin(Q), u.] = (Qu)., 200 random cases") {
  for (int m : {4, 6})
    for (int trial = 0; trial < 100; ++trial) {
      SoElement q = rnd_so(m);
      GeneralizedVector u = rnd_vector(m);
      GMatrix s = spin_rep(q), cu = clifford_matrix(u);
      CHECK(s * cu - cu * s == clifford_matrix(q.apply(u)));
    }
}

TEST_CASE("so block dictionary round trip and action") {
  for (int trial = 0; trial < 10; ++trial) {
    SoElement q = rnd_so(4);
    SoElement q2 = SoElement::from_block(q.block());
    CHECK(q2.endo == q.endo);
    CHECK(q2.bivector == q.bivector);
    CHECK(q2.two_form == q.two_form);
    GeneralizedVector u = rnd_vector(4);
    CHECK(GeneralizedVector::from_column(q.block() * u.to_column()) == q.apply(u));
  }
  GMatrix bad = GMatrix::zero(4, 4);
  bad(0, 1) = GaussianRational(1);  // upper-right block not antisymmetric
  CHECK_THROWS_AS(SoElement::from_block(bad), InputError);
}

TEST_CASE("spin_apply matches spin_rep") {
  for (int trial = 0; trial < 10; ++trial) {
    SoElement q = rnd_so(4);
    FormSpinor rho = rnd_form(4);
    CHECK(FormSpinor::from_column(4, spin_rep(q) * rho.to_column()) == spin_apply(q, rho));
  }
}

TEST_CASE("group_exp of a B-field acts as the wedge exponential") {
  for (int trial = 0; trial < 10; ++trial) {
    GMatrix b = rnd_antisym(4);
    FormSpinor bf = two_form_to_form(b);
    GMatrix eb = group_exp(SoElement::pure_two_form(b));
    FormSpinor rho = rnd_form(4);
    FormSpinor expected =
        rho + wedge(bf, rho) +
        GaussianRational(Rational(1) / Rational(2)) * wedge(bf, wedge(bf, rho));
    CHECK(FormSpinor::from_column(4, eb * rho.to_column()) == expected);
    GMatrix ebm = group_exp(SoElement::pure_two_form(-b));
    CHECK(eb * ebm == GMatrix::identity(16));
  }
}

TEST_CASE("group_exp needs a term bound off the nilpotent cone") {
  GMatrix a = GMatrix::identity(4);
  CHECK_THROWS_AS(group_exp(SoElement::pure_endo(a)), MathError);
  GMatrix truncated = group_exp(SoElement::pure_endo(a), 2);
  CHECK(truncated.rows() == 16);
}

TEST_CASE("mukai pairing is spin invariant under B-field and bivector exponentials") {
  for (int m : {4, 6})
    for (int trial = 0; trial < 100; ++trial) {
      FormSpinor a = rnd_form(m), b = rnd_form(m);
      GaussianRational before = mukai_pairing(a, b);
      GMatrix eb = group_exp(SoElement::pure_two_form(rnd_antisym(m)));
      CHECK(mukai_pairing(FormSpinor::from_column(m, eb * a.to_column()),
                          FormSpinor::from_column(m, eb * b.to_column())) == before);
      GMatrix ebeta = group_exp(SoElement::pure_bivector(rnd_antisym(m)));
      CHECK(mukai_pairing(FormSpinor::from_column(m, ebeta * a.to_column()),
                          FormSpinor::from_column(m, ebeta * b.to_column())) == before);
    }
}

TEST_CASE("two-form dictionary round trips") {
  for (int trial = 0; trial < 10; ++trial) {
    GMatrix b = rnd_antisym(6);
    CHECK(form_to_two_form(6, two_form_to_form(b)) == b);
  }
  CHECK(two_form_to_form(form_to_two_form(4, e(4, {1, 2}))) == e(4, {1, 2}));
}

TEST_CASE("form spinor structure helpers") {
  FormSpinor f = e(4, {1, 2}) + e(4, {3, 4});
  int deg = -1;
  CHECK(f.is_homogeneous(&deg));
  CHECK(deg == 2);
  CHECK(!(f + e(4, {1})).is_homogeneous());
  CHECK((f + e(4, {1})).component(2) == f);
  CHECK(f.top_coeff() == GaussianRational(0));
  CHECK(e(4, {1, 2, 3, 4}).top_coeff() == GaussianRational(1));
  CHECK(masks_of_degree(6, 3).size() == 20);
  CHECK(masks_of_degree(4, 0).size() == 1);
  FormSpinor g = rnd_form(6);
  CHECK(FormSpinor::from_column(6, g.to_column()) == g);
  CHECK(g.conj().conj() == g);

  GMatrix w1 = operator_matrix(4, [](const FormSpinor& x) {
    return wedge(FormSpinor::basis_one_form(4, 0), x);
  });
  CHECK(FormSpinor::from_column(4, w1 * e(4, {2}).to_column()) == e(4, {1, 2}));
}
