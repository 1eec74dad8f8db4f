#include "gengeo/frame.hpp"

namespace gengeo {

namespace {

std::string idx(int i) { return std::to_string(i + 1); }

/// d eta for a constant 1-form eta (complex coefficients).
FormSpinor d_one_form(const std::vector<GMatrix>& c, const std::vector<GaussianRational>& eta) {
  const int m = static_cast<int>(c.size());
  FormSpinor out(m);
  for (int k = 0; k < m; ++k) {
    if (eta[k].is_zero()) continue;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        if (c[k](i, j).is_zero()) continue;
        out.add_term((Mask{1} << i) | (Mask{1} << j), -(eta[k] * c[k](i, j)));
      }
  }
  return out;
}

FormSpinor contract_vector(const std::vector<GaussianRational>& x, const FormSpinor& f) {
  FormSpinor out(f.dim());
  for (int i = 0; i < f.dim(); ++i) {
    if (x[i].is_zero()) continue;
    out += x[i] * contract(i, f);
  }
  return out;
}

std::vector<GMatrix> complexify_all(const std::vector<QMatrix>& c) {
  std::vector<GMatrix> out;
  out.reserve(c.size());
  for (const auto& m : c) out.push_back(complexify(m));
  return out;
}

}  // namespace

std::vector<GaussianRational> FrameSpec::bracket(const std::vector<GaussianRational>& x,
                                                 const std::vector<GaussianRational>& y) const {
  std::vector<GaussianRational> z(dim);
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (y[j].is_zero() || c[k](i, j) == 0) continue;
        z[k] += GaussianRational(c[k](i, j)) * x[i] * y[j];
      }
    }
  return z;
}

FrameReport validate_frame(const FrameSpec& frame) {
  FrameReport rep;
  const int m = frame.dim;

  {
    FrameCheck chk{"bracket antisymmetry", true, ""};
    for (int k = 0; k < m && chk.pass; ++k)
      if (!(frame.c[k] + frame.c[k].transpose()).is_zero()) {
        chk.pass = false;
        chk.detail = "c^" + idx(k) + " is not antisymmetric";
      }
    rep.checks.push_back(chk);
  }

  {
    FrameCheck chk{"jacobi identity", true, ""};
    for (int i = 0; i < m && chk.pass; ++i)
      for (int j = i + 1; j < m && chk.pass; ++j)
        for (int k = j + 1; k < m && chk.pass; ++k) {
          std::vector<GaussianRational> ei(m), ej(m), ek(m);
          ei[i] = 1;
          ej[j] = 1;
          ek[k] = 1;
          auto s = frame.bracket(frame.bracket(ei, ej), ek);
          auto t = frame.bracket(frame.bracket(ej, ek), ei);
          auto u = frame.bracket(frame.bracket(ek, ei), ej);
          for (int l = 0; l < m; ++l) s[l] += t[l] + u[l];
          for (int l = 0; l < m; ++l)
            if (!s[l].is_zero()) {
              chk.pass = false;
              chk.detail = "fails on (e" + idx(i) + ", e" + idx(j) + ", e" + idx(k) + ")";
              break;
            }
        }
    rep.checks.push_back(chk);
  }

  {
    FrameCheck chk{"H is a 3-form", true, ""};
    int deg = 0;
    if (!frame.H.is_homogeneous(&deg) || (!frame.H.is_zero() && deg != 3)) {
      chk.pass = false;
      chk.detail = "H has components of degree other than 3";
    }
    for (const auto& [mask, v] : frame.H.terms())
      if (!v.is_real()) {
        chk.pass = false;
        chk.detail = "H must be real";
        break;
      }
    rep.checks.push_back(chk);
  }

  {
    FrameCheck chk{"H closed", true, ""};
    FormSpinor dh = d_apply(frame, frame.H);
    if (!dh.is_zero()) {
      chk.pass = false;
      chk.detail = "dH = " + to_string(dh);
    }
    rep.checks.push_back(chk);
  }

  {
    FrameCheck chk{"d_H squares to zero", true, ""};
    GMatrix dH = twisted_d(frame);
    if (!(dH * dH).is_zero()) {
      chk.pass = false;
      chk.detail = "d_H^2 != 0";
    }
    rep.checks.push_back(chk);
  }

  {
    FrameCheck chk{"unimodularity", true, ""};
    for (int i = 0; i < m; ++i) {
      Rational tr(0);
      QMatrix a = frame.ad(i);
      for (int k = 0; k < m; ++k) tr += a(k, k);
      if (tr != 0) {
        chk.pass = false;
        chk.detail = "tr(ad e" + idx(i) + ") = " + to_string(tr);
        break;
      }
    }
    rep.checks.push_back(chk);
  }

  if (frame.g) {
    FrameCheck chk{"metric symmetric positive definite", true, ""};
    const QMatrix& g = *frame.g;
    if (g.rows() != m || g.cols() != m) {
      chk.pass = false;
      chk.detail = "g has wrong shape";
    } else if (!(g - g.transpose()).is_zero()) {
      chk.pass = false;
      chk.detail = "g is not symmetric";
    } else {
      // Sylvester: all leading principal minors positive.
      for (int k = 1; k <= m; ++k)
        if (g.block(0, 0, k, k).det() <= 0) {
          chk.pass = false;
          chk.detail = "leading minor of order " + std::to_string(k) + " is not positive";
          break;
        }
    }
    rep.checks.push_back(chk);
  }

  if (frame.b) {
    FrameCheck chk{"b antisymmetric", true, ""};
    if (frame.b->rows() != m || frame.b->cols() != m ||
        !(*frame.b + frame.b->transpose()).is_zero()) {
      chk.pass = false;
      chk.detail = "b must be an antisymmetric m x m matrix";
    }
    rep.checks.push_back(chk);
  }

  return rep;
}

bool is_unimodular(const FrameSpec& frame) {
  for (int i = 0; i < frame.dim; ++i) {
    Rational tr(0);
    QMatrix a = frame.ad(i);
    for (int k = 0; k < frame.dim; ++k) tr += a(k, k);
    if (tr != 0) return false;
  }
  return true;
}

FormSpinor ce_apply(const std::vector<GMatrix>& c, const FormSpinor& f) {
  const int m = f.dim();
  FormSpinor out(m);
  for (const auto& [mask, v] : f.terms()) {
    for (int l = 0; l < m; ++l) {
      const Mask bl = Mask{1} << l;
      if (!(mask & bl)) continue;
      // e_S = sgn * e^l ^ e_{S\l};  d(e^l) lands in front.
      int sgn = contract_sign(l, mask);
      std::vector<GaussianRational> el(m);
      el[l] = sgn < 0 ? GaussianRational(-1) : GaussianRational(1);
      FormSpinor dl = d_one_form(c, el);
      FormSpinor rest = FormSpinor::basis(m, mask ^ bl);
      out += v * wedge(dl, rest);
    }
  }
  return out;
}

GMatrix ce_operator(int dim, const std::vector<GMatrix>& c) {
  return operator_matrix(dim, [&](const FormSpinor& f) { return ce_apply(c, f); });
}

FormSpinor d_apply(const FrameSpec& frame, const FormSpinor& f) {
  return ce_apply(complexify_all(frame.c), f);
}

GMatrix ce_differential(const FrameSpec& frame) {
  return operator_matrix(frame.dim, [&](const FormSpinor& f) { return d_apply(frame, f); });
}

FormSpinor twisted_d_apply(const FrameSpec& frame, const FormSpinor& f) {
  return d_apply(frame, f) + wedge(frame.H, f);
}

GMatrix twisted_d(const FrameSpec& frame) {
  return operator_matrix(frame.dim, [&](const FormSpinor& f) { return twisted_d_apply(frame, f); });
}

GeneralizedVector dorfman(const FrameSpec& frame, const GeneralizedVector& u,
                          const GeneralizedVector& v) {
  if (u.dim() != frame.dim || v.dim() != frame.dim)
    throw InputError("dorfman: dimension mismatch");
  auto c = complexify_all(frame.c);
  GeneralizedVector out(frame.dim);
  out.vec = frame.bracket(u.vec, v.vec);

  FormSpinor cov = contract_vector(u.vec, d_one_form(c, v.cov));
  cov -= contract_vector(v.vec, d_one_form(c, u.cov));
  FormSpinor h_complex(frame.dim);
  h_complex += frame.H;
  cov -= contract_vector(v.vec, contract_vector(u.vec, h_complex));

  for (int i = 0; i < frame.dim; ++i) out.cov[i] = cov.coeff(Mask{1} << i);
  return out;
}

GeneralizedVector courant(const FrameSpec& frame, const GeneralizedVector& u,
                          const GeneralizedVector& v) {
  GeneralizedVector a = dorfman(frame, u, v);
  GeneralizedVector b = dorfman(frame, v, u);
  GeneralizedVector out(frame.dim);
  GaussianRational half(Rational(1, 2));
  for (int i = 0; i < frame.dim; ++i) {
    out.vec[i] = half * (a.vec[i] - b.vec[i]);
    out.cov[i] = half * (a.cov[i] - b.cov[i]);
  }
  return out;
}

BracketSymmetryReport bracket_symmetry_check(const FrameSpec& frame, const GMatrix& B) {
  const int m = frame.dim;
  BracketSymmetryReport rep;
  FormSpinor b_form = two_form_to_form(B);
  FormSpinor db = d_apply(frame, b_form);
  rep.b_closed = db.is_zero();
  rep.twist_shift = -db;

  FrameSpec target = frame;
  {
    FormSpinor hp = frame.H - db;
    for (const auto& [mask, v] : hp.terms())
      if (!v.is_real())
        throw InputError("bracket_symmetry_check: B must have real entries");
    target.H = hp;
  }

  SoElement q = SoElement::pure_two_form(B);
  auto shear = [&](const GeneralizedVector& u) {
    // exp of the pure two-form block is the shear (X, xi) -> (X, xi + BX)
    GeneralizedVector r = u;
    GeneralizedVector bu = q.apply(u);
    return r += bu;
  };

  for (int a = 0; a < 2 * m && rep.intertwines; ++a)
    for (int bidx = 0; bidx < 2 * m; ++bidx) {
      GeneralizedVector u = a < m ? GeneralizedVector::basis_vector(m, a)
                                  : GeneralizedVector::basis_covector(m, a - m);
      GeneralizedVector v = bidx < m ? GeneralizedVector::basis_vector(m, bidx)
                                     : GeneralizedVector::basis_covector(m, bidx - m);
      GeneralizedVector lhs = dorfman(target, shear(u), shear(v));
      GeneralizedVector rhs = shear(dorfman(frame, u, v));
      if (!(lhs == rhs)) {
        rep.intertwines = false;
        rep.witness = "pair (" + u.to_string() + ", " + v.to_string() + ")";
        break;
      }
    }
  return rep;
}

AutomorphismReport frame_automorphism_check(const FrameSpec& frame, const QMatrix& p) {
  const int m = frame.dim;
  AutomorphismReport rep;
  auto pinv = p.inverse();
  if (!pinv) {
    rep.witness = "P is singular";
    return rep;
  }
  GMatrix pc = complexify(p);
  GMatrix pit = complexify(pinv->transpose());

  rep.is_automorphism = true;
  for (int i = 0; i < m && rep.is_automorphism; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<GaussianRational> ei(m), ej(m);
      for (int k = 0; k < m; ++k) {
        ei[k] = pc(k, i);
        ej[k] = pc(k, j);
      }
      auto lhs = frame.bracket(ei, ej);
      std::vector<GaussianRational> bij(m);
      for (int k = 0; k < m; ++k) bij[k] = GaussianRational(frame.c[k](i, j));
      std::vector<GaussianRational> rhs(m);
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) rhs[k] += pc(k, l) * bij[l];
      if (!(lhs == rhs)) {
        rep.is_automorphism = false;
        rep.witness = "bracket image of (e" + idx(i) + ", e" + idx(j) + ")";
        break;
      }
    }

  // pullback of H along P: H(P., P., P.) expressed in the dual basis, i.e.
  // the substitution e^k -> sum_l P(k,l) e^l applied to H.
  {
    FormSpinor pulled(m);
    for (const auto& [mask, v] : frame.H.terms()) {
      FormSpinor term = FormSpinor::one(m);
      GaussianRational coeff = v;
      for (int k = 0; k < m; ++k) {
        if (!(mask & (Mask{1} << k))) continue;
        FormSpinor img(m);
        for (int l = 0; l < m; ++l)
          if (p(k, l) != 0) img.add_term(Mask{1} << l, GaussianRational(p(k, l)));
        term = wedge(term, img);
      }
      pulled += coeff * term;
    }
    rep.preserves_H = pulled == frame.H;
  }

  rep.preserves_bracket = true;
  auto phi = [&](const GeneralizedVector& u) {
    GeneralizedVector r(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        r.vec[i] += pc(i, j) * u.vec[j];
        r.cov[i] += pit(i, j) * u.cov[j];
      }
    return r;
  };
  for (int a = 0; a < 2 * m && rep.preserves_bracket; ++a)
    for (int bidx = 0; bidx < 2 * m; ++bidx) {
      GeneralizedVector u = a < m ? GeneralizedVector::basis_vector(m, a)
                                  : GeneralizedVector::basis_covector(m, a - m);
      GeneralizedVector v = bidx < m ? GeneralizedVector::basis_vector(m, bidx)
                                     : GeneralizedVector::basis_covector(m, bidx - m);
      if (!(dorfman(frame, phi(u), phi(v)) == phi(dorfman(frame, u, v)))) {
        rep.preserves_bracket = false;
        rep.witness = "pair (" + u.to_string() + ", " + v.to_string() + ")";
        break;
      }
    }
  return rep;
}

std::vector<int> graded_betti(int dim, const GMatrix& d) {
  std::vector<int> ranks(dim + 1, 0);  // rank of d : deg k -> deg k+1
  for (int k = 0; k < dim; ++k) {
    auto rows = masks_of_degree(dim, k + 1);
    auto cols = masks_of_degree(dim, k);
    ranks[k] = d.select(rows, cols).rank();
  }
  std::vector<int> betti(dim + 1, 0);
  for (int k = 0; k <= dim; ++k) {
    int dim_k = static_cast<int>(masks_of_degree(dim, k).size());
    betti[k] = dim_k - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
  }
  return betti;
}

std::pair<int, int> parity_betti(int dim, const GMatrix& d) {
  std::vector<int> even, odd;
  for (int m = 0; m < (1 << dim); ++m)
    (mask_degree(static_cast<Mask>(m)) % 2 == 0 ? even : odd).push_back(m);
  int r_eo = d.select(odd, even).rank();   // d : even -> odd
  int r_oe = d.select(even, odd).rank();   // d : odd -> even
  int half = 1 << (dim - 1);
  return {half - r_eo - r_oe, half - r_oe - r_eo};
}

std::vector<int> betti_numbers(const FrameSpec& frame) {
  return graded_betti(frame.dim, ce_differential(frame));
}

std::pair<int, int> twisted_betti(const FrameSpec& frame) {
  return parity_betti(frame.dim, twisted_d(frame));
}

bool stokes_surrogate_holds(const FrameSpec& frame) {
  GMatrix dh = twisted_d(frame);
  GMatrix mu = mukai_gram(frame.dim);
  return (dh.transpose() * mu - mu * dh).is_zero();
}

}  // namespace gengeo
