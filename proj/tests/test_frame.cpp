// Frames: structure validation, Chevalley-Eilenberg differential, twisted
// differential, Dorfman bracket and its symmetries, Betti numbers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gengeo/frame.hpp"

using namespace gengeo;

namespace {

std::mt19937 rng(424242);

FormSpinor e(int dim, std::initializer_list<int> idx) {  // 1-based wedge monomial
  FormSpinor f = FormSpinor::one(dim);
  for (int i : idx) f = wedge(f, FormSpinor::basis_one_form(dim, i - 1));
  return f;
}

FormSpinor rnd_form(int m) {
  FormSpinor f(m);
  std::uniform_int_distribution<Mask> mask(0, (Mask{1} << m) - 1);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  for (int t = 0; t < 4; ++t)
    f.add_term(mask(rng), GaussianRational(Rational(num(rng)) / Rational(den(rng)),
                                           Rational(num(rng)) / Rational(den(rng))));
  return f;
}

FormSpinor rnd_homogeneous(int m, int k) {
  FormSpinor f(m);
  auto masks = masks_of_degree(m, k);
  std::uniform_int_distribution<std::size_t> pick(0, masks.size() - 1);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int t = 0; t < 3; ++t) f.add_term(masks[pick(rng)], GaussianRational(Rational(num(rng))));
  return f;
}

GeneralizedVector rnd_vector(int m) {
  GeneralizedVector u(m);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  for (int i = 0; i < m; ++i) {
    u.vec[i] = GaussianRational(Rational(num(rng)) / Rational(den(rng)));
    u.cov[i] = GaussianRational(Rational(num(rng)) / Rational(den(rng)));
  }
  return u;
}

// Heisenberg_3 + R: [e1, e2] = e3.
FrameSpec kodaira_thurston() {
  FrameSpec f(4);
  f.add_bracket(0, 1, 2, 1);
  return f;
}

// su(2) + u(1): [e1,e2] = e3 cyclically, e4 central; optional twist t e^123.
FrameSpec hopf(const Rational& t = Rational(0)) {
  FrameSpec f(4);
  f.add_bracket(0, 1, 2, 1);
  f.add_bracket(1, 2, 0, 1);
  f.add_bracket(2, 0, 1, 1);
  f.H = GaussianRational(t) * e(4, {1, 2, 3});
  return f;
}

// Non-unimodular: [e1, e2] = e2 plus two abelian directions.
FrameSpec affine_plus_r2() {
  FrameSpec f(4);
  f.add_bracket(0, 1, 1, 1);
  return f;
}

GeneralizedVector basis_element(int m, int a) {
  return a < m ? GeneralizedVector::basis_vector(m, a)
               : GeneralizedVector::basis_covector(m, a - m);
}

}  // namespace

TEST_CASE("structure validation on honest frames") {
  CHECK(validate_frame(kodaira_thurston()).all_pass());
  CHECK(validate_frame(hopf()).all_pass());
  CHECK(validate_frame(hopf(Rational(2))).all_pass());
  CHECK(validate_frame(FrameSpec::abelian(6)).all_pass());
}

TEST_CASE("jacobi violations are caught with a witness") {
  FrameSpec bad(4);
  bad.add_bracket(0, 1, 2, 1);
  bad.add_bracket(2, 0, 0, 1);  // [e3, e1] = e1 breaks Jacobi
  FrameReport rep = validate_frame(bad);
  CHECK(!rep.all_pass());
  bool jacobi_failed = false;
  for (const auto& c : rep.checks)
    if (!c.pass && c.name.find("acobi") != std::string::npos) jacobi_failed = true;
  CHECK(jacobi_failed);
}

TEST_CASE("non-closed twist is rejected") {
  FrameSpec f = affine_plus_r2();
  f.H = e(4, {2, 3, 4});  // d(e^234) = -e^1234 on this frame
  CHECK(!validate_frame(f).all_pass());
}

TEST_CASE("unimodularity and the integration-by-parts surrogate") {
  CHECK(is_unimodular(kodaira_thurston()));
  CHECK(is_unimodular(hopf()));
  CHECK(is_unimodular(FrameSpec::abelian(4)));
  CHECK(!is_unimodular(affine_plus_r2()));
  CHECK(stokes_surrogate_holds(kodaira_thurston()));
  CHECK(stokes_surrogate_holds(hopf(Rational(1))));
  CHECK(!stokes_surrogate_holds(affine_plus_r2()));
}

TEST_CASE("differential of dual generators equals -sum c^k_ij e^i^e^j") {
  FrameSpec scaled(4);
  scaled.add_bracket(0, 1, 2, Rational(5) / Rational(7));
  for (const FrameSpec& f : {kodaira_thurston(), hopf(), scaled}) {
    for (int k = 0; k < f.dim; ++k) {
      FormSpinor expected(f.dim);
      for (int i = 0; i < f.dim; ++i)
        for (int j = i + 1; j < f.dim; ++j)
          expected -= GaussianRational(f.c[k](i, j)) * e(4, {i + 1, j + 1});
      CHECK(d_apply(f, FormSpinor::basis_one_form(f.dim, k)) == expected);
    }
  }
  CHECK(d_apply(kodaira_thurston(), e(4, {3})) == -e(4, {1, 2}));
  CHECK(d_apply(hopf(), e(4, {1})) == -e(4, {2, 3}));
  CHECK(d_apply(hopf(), e(4, {2})) == e(4, {1, 3}));
  CHECK(d_apply(hopf(), e(4, {3})) == -e(4, {1, 2}));
  CHECK(d_apply(hopf(), e(4, {4})).is_zero());
}

TEST_CASE("d squares to zero and is a graded derivation") {
  for (const FrameSpec& f : {kodaira_thurston(), hopf()}) {
    GMatrix d = ce_differential(f);
    CHECK((d * d).is_zero());
    for (int p = 0; p <= 3; ++p) {
      FormSpinor a = rnd_homogeneous(4, p), b = rnd_form(4);
      GaussianRational sign{Rational(p % 2 == 0 ? 1 : -1)};
      CHECK(d_apply(f, wedge(a, b)) ==
            wedge(d_apply(f, a), b) + sign * wedge(a, d_apply(f, b)));
    }
  }
}

TEST_CASE("twisted differential adds H-wedge and still squares to zero") {
  FrameSpec ab6 = FrameSpec::abelian(6);
  ab6.H = e(6, {1, 2, 3});
  CHECK(twisted_d_apply(ab6, FormSpinor::basis_one_form(6, 3)) == e(6, {1, 2, 3, 4}));
  CHECK((twisted_d(ab6) * twisted_d(ab6)).is_zero());
  FrameSpec h1 = hopf(Rational(1));
  CHECK((twisted_d(h1) * twisted_d(h1)).is_zero());
  CHECK(twisted_d_apply(h1, FormSpinor::one(4)) == e(4, {1, 2, 3}));
}

TEST_CASE("betti numbers of the model frames") {
  CHECK(betti_numbers(FrameSpec::abelian(4)) == std::vector<int>{1, 4, 6, 4, 1});
  CHECK(betti_numbers(kodaira_thurston()) == std::vector<int>{1, 3, 4, 3, 1});
  CHECK(betti_numbers(hopf()) == std::vector<int>{1, 1, 0, 1, 1});
}

TEST_CASE("twisted betti numbers collapse by the H-wedge Koszul factor") {
  FrameSpec ab4 = FrameSpec::abelian(4);
  ab4.H = e(4, {1, 2, 3});
  auto [ev4, od4] = twisted_betti(ab4);
  CHECK(ev4 == 6);
  CHECK(od4 == 6);
  FrameSpec ab6 = FrameSpec::abelian(6);
  ab6.H = e(6, {1, 2, 3});
  auto [ev6, od6] = twisted_betti(ab6);
  CHECK(ev6 == 24);
  CHECK(od6 == 24);
  // untwisted parity sums match the graded count
  auto [pe, po] = twisted_betti(kodaira_thurston());
  CHECK(pe == 1 + 4 + 1);
  CHECK(po == 3 + 3);
}

TEST_CASE("graded and parity betti agree on any square-zero operator") {
  FrameSpec f = hopf();
  GMatrix d = ce_differential(f);
  auto graded = graded_betti(4, d);
  auto [ev, od] = parity_betti(4, d);
  CHECK(graded == std::vector<int>{1, 1, 0, 1, 1});
  CHECK(ev == graded[0] + graded[2] + graded[4]);
  CHECK(od == graded[1] + graded[3]);
}

TEST_CASE("dorfman bracket equals the derived bracket on all basis pairs") {
  FrameSpec ab4 = FrameSpec::abelian(4);
  FrameSpec ab6 = FrameSpec::abelian(6);
  ab6.H = e(6, {1, 2, 3});
  FrameSpec kt = kodaira_thurston();
  for (const FrameSpec* f : {&ab4, &ab6, &kt}) {
    int m = f->dim;
    GMatrix d = twisted_d(*f);
    for (int a = 0; a < 2 * m; ++a)
      for (int b = 0; b < 2 * m; ++b) {
        GeneralizedVector u = basis_element(m, a), v = basis_element(m, b);
        GMatrix cu = clifford_matrix(u), cv = clifford_matrix(v);
        GMatrix anti = d * cu + cu * d;  // both odd: graded commutator
        CHECK(anti * cv - cv * anti == clifford_matrix(dorfman(*f, u, v)));
      }
  }
}

TEST_CASE("dorfman H-term has the derived-bracket sign") {
  FrameSpec ab4 = FrameSpec::abelian(4);
  ab4.H = e(4, {1, 2, 3});
  GeneralizedVector got = dorfman(ab4, GeneralizedVector::basis_vector(4, 0),
                                  GeneralizedVector::basis_vector(4, 1));
  GeneralizedVector want(4);
  want.cov[2] = GaussianRational(-1);  // -i_Y i_X H = -e^3
  CHECK(got == want);
}

TEST_CASE("dorfman on invariant sections is antisymmetric and matches courant") {
  for (const FrameSpec& f : {kodaira_thurston(), hopf(Rational(1))})
    for (int trial = 0; trial < 20; ++trial) {
      GeneralizedVector u = rnd_vector(4), v = rnd_vector(4);
      CHECK(dorfman(f, u, u).is_zero());
      CHECK((dorfman(f, u, v) + dorfman(f, v, u)).is_zero());
      CHECK(courant(f, u, v) == dorfman(f, u, v));
    }
}

TEST_CASE("dorfman satisfies the Leibniz (Jacobi) identity") {
  for (const FrameSpec& f : {kodaira_thurston(), hopf(Rational(1))})
    for (int trial = 0; trial < 10; ++trial) {
      GeneralizedVector u = rnd_vector(4), v = rnd_vector(4), w = rnd_vector(4);
      GeneralizedVector lhs = dorfman(f, u, dorfman(f, v, w));
      GeneralizedVector rhs = dorfman(f, dorfman(f, u, v), w) + dorfman(f, v, dorfman(f, u, w));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("closed B-fields are bracket automorphisms") {
  FrameSpec kt = kodaira_thurston();
  GMatrix b = GMatrix::zero(4, 4);
  b(0, 1) = GaussianRational(1);
  b(1, 0) = GaussianRational(-1);  // B = e^12, closed on this frame
  BracketSymmetryReport rep = bracket_symmetry_check(kt, b);
  CHECK(rep.b_closed);
  CHECK(rep.twist_shift.is_zero());
  CHECK(rep.intertwines);
}

TEST_CASE("non-closed B shifts the twist by -dB") {
  FrameSpec kt = kodaira_thurston();
  GMatrix b = GMatrix::zero(4, 4);
  b(2, 3) = GaussianRational(1);
  b(3, 2) = GaussianRational(-1);  // B = e^34, dB = -e^124
  BracketSymmetryReport rep = bracket_symmetry_check(kt, b);
  CHECK(!rep.b_closed);
  CHECK(rep.twist_shift == e(4, {1, 2, 4}));
  CHECK(rep.intertwines);
}

TEST_CASE("frame automorphisms intertwine the bracket") {
  FrameSpec kt = kodaira_thurston();
  QMatrix p = QMatrix::zero(4, 4);
  p(0, 0) = 2;
  p(1, 1) = 1;
  p(2, 2) = 2;  // [2 e1, e2] = 2 e3
  p(3, 3) = 1;
  AutomorphismReport rep = frame_automorphism_check(kt, p);
  CHECK(rep.is_automorphism);
  CHECK(rep.preserves_H);
  CHECK(rep.preserves_bracket);

  QMatrix swap = QMatrix::zero(4, 4);
  swap(2, 0) = 1;
  swap(1, 1) = 1;
  swap(0, 2) = 1;
  swap(3, 3) = 1;  // e1 <-> e3 is not an automorphism
  CHECK(!frame_automorphism_check(kt, swap).is_automorphism);

  FrameSpec h1 = hopf(Rational(1));
  QMatrix rot = QMatrix::zero(4, 4);
  rot(1, 0) = 1;
  rot(0, 1) = -1;  // quarter turn in the (e1, e2) plane
  rot(2, 2) = 1;
  rot(3, 3) = 1;
  AutomorphismReport hrep = frame_automorphism_check(h1, rot);
  CHECK(hrep.is_automorphism);
  CHECK(hrep.preserves_H);
  CHECK(hrep.preserves_bracket);
}
