#include "gengeo/algebroid.hpp"

namespace gengeo {

namespace {

GeneralizedVector column_as_gv(const GMatrix& cols, int j) {
  GeneralizedVector u(cols.rows() / 2);
  for (int i = 0; i < u.dim(); ++i) {
    u.vec[i] = cols(i, j);
    u.cov[i] = cols(u.dim() + i, j);
  }
  return u;
}

/// Structure constants of a Dorfman-closed span: [B_a, B_b] = sum f^c_ab B_c.
std::vector<GMatrix> bracket_constants(const GMatrix& basis, const FrameSpec& frame,
                                       const char* who) {
  const int r = basis.cols();
  std::vector<GMatrix> f(r, GMatrix::zero(r, r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      if (a == b) continue;
      GeneralizedVector w = dorfman(frame, column_as_gv(basis, a), column_as_gv(basis, b));
      auto x = basis.solve(w.to_column());
      if (!x) throw MathError(std::string(who) + ": span is not closed under the bracket");
      for (int c = 0; c < r; ++c) f[c](a, b) = (*x)(c, 0);
    }
  return f;
}

}  // namespace

AlgebroidComplex build_algebroid_from_basis(const GMatrix& basis, const FrameSpec& frame) {
  const int m = frame.dim;
  if (basis.rows() != 2 * m) throw InputError("algebroid basis must have 2m rows");
  const int r = basis.cols();
  if (basis.rank() != r) throw MathError("algebroid basis columns are dependent");

  for (int a = 0; a < r; ++a)
    for (int b = a; b < r; ++b)
      if (!split_pairing(column_as_gv(basis, a), column_as_gv(basis, b)).is_zero())
        throw MathError("algebroid: span is not isotropic");

  AlgebroidComplex cx;
  cx.rank = r;
  cx.basis = basis;
  cx.f = bracket_constants(basis, frame, "algebroid");
  cx.d = ce_operator(r, cx.f);

  // Dual realization inside conj(E), when transverse: twice the split
  // pairing of conj(E) against E must be invertible.
  GMatrix conj_basis = basis.conjugate();
  GMatrix n(r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      GaussianRational two(2);
      n(a, b) = two * split_pairing(column_as_gv(conj_basis, a), column_as_gv(basis, b));
    }
  auto ninv = n.inverse();
  if (ninv) {
    cx.dual_basis = conj_basis * ninv->transpose();
    cx.dual_f = bracket_constants(cx.dual_basis, frame, "algebroid dual");
  } else {
    cx.dual_basis = GMatrix::zero(2 * m, 0);
  }
  return cx;
}

AlgebroidComplex build_algebroid(const GCStructure& j, const FrameSpec& frame) {
  auto integ = check_integrability(j, frame);
  if (!integ.integrable)
    throw MathError("build_algebroid: structure is not integrable (" + integ.witness + ")");
  return build_algebroid_from_basis(eigenbundle_basis(j), frame);
}

std::vector<int> algebroid_betti(const AlgebroidComplex& cx) {
  return graded_betti(cx.rank, cx.d);
}

FormSpinor gerstenhaber(const AlgebroidComplex& cx, const FormSpinor& a, const FormSpinor& b) {
  if (!cx.has_dual())
    throw MathError("gerstenhaber: complex has no dual realization");
  if (a.dim() != cx.rank || b.dim() != cx.rank)
    throw InputError("gerstenhaber: cochain dimension mismatch");

  FormSpinor out(cx.rank);
  for (const auto& [ma, va] : a.terms())
    for (const auto& [mb, vb] : b.terms()) {
      int pos_i = 0;
      for (int i = 0; i < cx.rank; ++i) {
        if (!(ma & (Mask{1} << i))) continue;
        ++pos_i;  // 1-based position of i inside ma
        int pos_j = 0;
        for (int jj = 0; jj < cx.rank; ++jj) {
          if (!(mb & (Mask{1} << jj))) continue;
          ++pos_j;
          // (-1)^{i+j} [E*_i, E*_j] ^ rest_a ^ rest_b
          FormSpinor lie(cx.rank);
          for (int c = 0; c < cx.rank; ++c) {
            const GaussianRational& fc = cx.dual_f[c](i, jj);
            if (!fc.is_zero()) lie.add_term(Mask{1} << c, fc);
          }
          if (lie.is_zero()) continue;
          FormSpinor rest = wedge(FormSpinor::basis(cx.rank, ma ^ (Mask{1} << i)),
                                  FormSpinor::basis(cx.rank, mb ^ (Mask{1} << jj)));
          FormSpinor term = wedge(lie, rest);
          GaussianRational coeff = va * vb;
          if ((pos_i + pos_j) % 2 != 0) coeff = -coeff;
          out += coeff * term;
        }
      }
    }
  return out;
}

FormSpinor mc_residual(const AlgebroidComplex& cx, const FormSpinor& eps) {
  FormSpinor deps = FormSpinor::from_column(cx.rank, cx.d * eps.to_column());
  FormSpinor quad = gerstenhaber(cx, eps, eps);
  return deps + GaussianRational(Rational(1, 2)) * quad;
}

std::array<int, 3> h2_complex_decomposition(const QMatrix& j, const FrameSpec& frame) {
  const int m = frame.dim;
  const int n = m / 2;
  GMatrix jc = complexify(j);

  // T_{0,1}: J X = -i X, lifted as (X, 0).
  GMatrix shifted = jc;
  for (int i = 0; i < m; ++i) shifted(i, i) += GaussianRational::i();
  GMatrix t01 = shifted.kernel_basis();
  // T*_{1,0}: xi J = i xi, lifted as (0, xi).
  GMatrix shifted_t = jc.transpose();
  for (int i = 0; i < m; ++i) shifted_t(i, i) -= GaussianRational::i();
  GMatrix t10s = shifted_t.kernel_basis();
  if (t01.cols() != n || t10s.cols() != n)
    throw MathError("h2_complex_decomposition: J is not a complex structure");

  GMatrix basis(2 * m, m);
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < m; ++i) {
      basis(i, c) = t01(i, c);
      basis(m + i, n + c) = t10s(i, c);
    }
  AlgebroidComplex cx = build_algebroid_from_basis(basis, frame);

  // Grade cochain monomials by the number of T*_{1,0}-type dual factors
  // (mask bits >= n); d preserves this count for an integrable J.
  auto count_high = [&](int mask) {
    int c = 0;
    for (int i = n; i < m; ++i)
      if (mask & (1 << i)) ++c;
    return c;
  };
  for (int col = 0; col < (1 << m); ++col)
    for (int row = 0; row < (1 << m); ++row)
      if (!cx.d(row, col).is_zero() && count_high(row) != count_high(col))
        throw MathError("h2_complex_decomposition: differential does not preserve the grading");

  std::array<int, 3> out{0, 0, 0};
  for (int p = 0; p <= 2; ++p) {
    auto masks_with = [&](int deg) {
      std::vector<int> v;
      for (int mask : masks_of_degree(m, deg))
        if (count_high(mask) == p) v.push_back(mask);
      return v;
    };
    auto deg1 = masks_with(1), deg2 = masks_with(2), deg3 = masks_with(3);
    int r12 = cx.d.select(deg2, deg1).rank();
    int r23 = cx.d.select(deg3, deg2).rank();
    out[p] = static_cast<int>(deg2.size()) - r12 - r23;
  }
  return out;
}

DeformationReport deformation_report(const GCStructure& j, const FrameSpec& frame,
                                     const std::optional<QMatrix>& complex_j) {
  AlgebroidComplex cx = build_algebroid(j, frame);
  DeformationReport rep;
  rep.h = algebroid_betti(cx);
  rep.deformations = rep.h.size() > 2 ? rep.h[2] : 0;
  rep.obstructions = rep.h.size() > 3 ? rep.h[3] : 0;
  rep.unobstructed = rep.obstructions == 0;
  if (complex_j) rep.complex_split = h2_complex_decomposition(*complex_j, frame);
  return rep;
}

}  // namespace gengeo
