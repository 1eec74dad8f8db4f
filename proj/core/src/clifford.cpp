#include "gengeo/clifford.hpp"

namespace gengeo {

std::string GeneralizedVector::to_string() const {
  std::string out;
  for (int i = 0; i < dim(); ++i) {
    if (vec[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = gengeo::to_string(vec[i]);
    out += (c == "1" ? "" : c == "-1" ? "-" : "(" + c + ")*");
    out += "d" + std::to_string(i + 1);
  }
  for (int i = 0; i < dim(); ++i) {
    if (cov[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = gengeo::to_string(cov[i]);
    out += (c == "1" ? "" : c == "-1" ? "-" : "(" + c + ")*");
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

GaussianRational split_pairing(const GeneralizedVector& u, const GeneralizedVector& v) {
  if (u.dim() != v.dim()) throw InputError("pairing of vectors over different frames");
  GaussianRational s;
  for (int i = 0; i < u.dim(); ++i) s += u.cov[i] * v.vec[i] + v.cov[i] * u.vec[i];
  return GaussianRational(Rational(1, 2)) * s;
}

FormSpinor clifford_act(const GeneralizedVector& u, const FormSpinor& rho) {
  if (u.dim() != rho.dim()) throw InputError("clifford action dimension mismatch");
  FormSpinor out(rho.dim());
  for (const auto& [m, v] : rho.terms()) {
    for (int i = 0; i < u.dim(); ++i) {
      const Mask bit = Mask{1} << i;
      // iota_X
      if (!u.vec[i].is_zero() && (m & bit)) {
        GaussianRational c = u.vec[i] * v;
        out.add_term(m ^ bit, contract_sign(i, m) < 0 ? -c : c);
      }
      // xi ^
      if (!u.cov[i].is_zero() && !(m & bit)) {
        GaussianRational c = u.cov[i] * v;
        out.add_term(m | bit, wedge_sign(bit, m) < 0 ? -c : c);
      }
    }
  }
  return out;
}

GMatrix clifford_matrix(const GeneralizedVector& u) {
  return operator_matrix(u.dim(), [&](const FormSpinor& rho) { return clifford_act(u, rho); });
}

SoElement SoElement::from_block(const GMatrix& q) {
  if (q.rows() != q.cols() || q.rows() % 2 != 0) throw InputError("so block must be 2m x 2m");
  const int m = q.rows() / 2;
  SoElement s{q.block(0, 0, m, m), q.block(0, m, m, m), q.block(m, 0, m, m)};
  GMatrix lr = q.block(m, m, m, m);
  if (!(lr + s.endo.transpose()).is_zero()) throw InputError("so block: lower-right must be -A^T");
  if (!(s.bivector + s.bivector.transpose()).is_zero())
    throw InputError("so block: bivector part must be antisymmetric");
  if (!(s.two_form + s.two_form.transpose()).is_zero())
    throw InputError("so block: two-form part must be antisymmetric");
  return s;
}

GMatrix SoElement::block() const {
  const int m = dim();
  GMatrix q(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      q(i, j) = endo(i, j);
      q(i, m + j) = bivector(i, j);
      q(m + i, j) = two_form(i, j);
      q(m + i, m + j) = -endo(j, i);
    }
  return q;
}

GeneralizedVector SoElement::apply(const GeneralizedVector& u) const {
  const int m = dim();
  GeneralizedVector r(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      r.vec[i] += endo(i, j) * u.vec[j] + bivector(i, j) * u.cov[j];
      r.cov[i] += two_form(i, j) * u.vec[j] - endo(j, i) * u.cov[j];
    }
  return r;
}

FormSpinor spin_apply(const SoElement& q, const FormSpinor& rho) {
  const int m = q.dim();
  if (m != rho.dim()) throw InputError("spin action dimension mismatch");
  FormSpinor out(m);

  // B ^ rho
  out += wedge(two_form_to_form(q.two_form), rho);

  // iota_beta rho  =  sum_{i<j} beta(i,j) iota_i iota_j rho
  for (const auto& [mask, v] : rho.terms()) {
    for (int j = 1; j < m; ++j) {
      const Mask bj = Mask{1} << j;
      if (!(mask & bj)) continue;
      for (int i = 0; i < j; ++i) {
        const Mask bi = Mask{1} << i;
        if (!(mask & bi) || q.bivector(i, j).is_zero()) continue;
        int sgn = contract_sign(j, mask) * contract_sign(i, mask ^ bj);
        GaussianRational c = q.bivector(i, j) * v;
        out.add_term(mask ^ bi ^ bj, sgn < 0 ? -c : c);
      }
    }
  }

  // -D_A rho + tr(A)/2 rho, where D_A e^j = sum_i A(j,i) e^i
  GaussianRational half_tr;
  for (int i = 0; i < m; ++i) half_tr += q.endo(i, i);
  half_tr *= GaussianRational(Rational(1, 2));
  for (const auto& [mask, v] : rho.terms()) {
    if (!half_tr.is_zero()) out.add_term(mask, half_tr * v);
    for (int j = 0; j < m; ++j) {
      const Mask bj = Mask{1} << j;
      if (!(mask & bj)) continue;
      for (int i = 0; i < m; ++i) {
        if (q.endo(j, i).is_zero()) continue;
        // replace factor e^j by e^i inside the monomial
        if (i == j) {
          out.add_term(mask, -(q.endo(j, i) * v));
          continue;
        }
        const Mask bi = Mask{1} << i;
        if (mask & bi) continue;  // e^i already present: wedge kills it
        int sgn = contract_sign(j, mask) * wedge_sign(bi, mask ^ bj);
        GaussianRational c = q.endo(j, i) * v;
        out.add_term((mask ^ bj) | bi, sgn < 0 ? c : -c);
      }
    }
  }
  return out;
}

GMatrix spin_rep(const SoElement& q) {
  return operator_matrix(q.dim(), [&](const FormSpinor& rho) { return spin_apply(q, rho); });
}

GMatrix group_exp(const SoElement& q, int term_bound) {
  const int n = 1 << q.dim();
  GMatrix s = spin_rep(q);
  GMatrix acc = GMatrix::identity(n);
  GMatrix pow = GMatrix::identity(n);
  const int hard_cap = term_bound >= 0 ? term_bound : n + 1;
  for (int k = 1; k <= hard_cap; ++k) {
    pow = pow * s;
    GaussianRational inv_k(Rational(1, k));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) pow(i, j) *= inv_k;
    if (pow.is_zero()) return acc + pow;
    acc += pow;
  }
  if (term_bound < 0)
    throw MathError("group_exp: spin action is not nilpotent; pass an explicit term bound");
  return acc;
}

FormSpinor two_form_to_form(const GMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("two-form matrix must be square");
  if (!(m + m.transpose()).is_zero()) throw InputError("two-form matrix must be antisymmetric");
  FormSpinor f(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      f.add_term((Mask{1} << i) | (Mask{1} << j), m(i, j));
  return f;
}

GMatrix form_to_two_form(int dim, const FormSpinor& f) {
  GMatrix m(dim, dim);
  for (const auto& [mask, v] : f.terms()) {
    if (mask_degree(mask) != 2) throw InputError("form_to_two_form: not a 2-form");
    int i = std::countr_zero(mask);
    int j = 31 - std::countl_zero(mask);
    m(i, j) = v;
    m(j, i) = -v;
  }
  return m;
}

}  // namespace gengeo
