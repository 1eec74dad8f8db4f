#pragma once

#include <vector>

#include "gengeo/form.hpp"
#include "gengeo/matrix.hpp"
#include "gengeo/scalar.hpp"

namespace gengeo {

/// Element X + xi of T + T* with exact complex coefficients, length-m
/// component vectors over the frame.
struct GeneralizedVector {
  std::vector<GaussianRational> vec;  // X components against e_1..e_m
  std::vector<GaussianRational> cov;  // xi components against e^1..e^m

  explicit GeneralizedVector(int dim) : vec(dim), cov(dim) {}

  static GeneralizedVector basis_vector(int dim, int i) {
    GeneralizedVector u(dim);
    u.vec[i] = GaussianRational(1);
    return u;
  }
  static GeneralizedVector basis_covector(int dim, int i) {
    GeneralizedVector u(dim);
    u.cov[i] = GaussianRational(1);
    return u;
  }

  int dim() const { return static_cast<int>(vec.size()); }

  bool is_zero() const {
    for (const auto& v : vec)
      if (!v.is_zero()) return false;
    for (const auto& v : cov)
      if (!v.is_zero()) return false;
    return true;
  }

  GeneralizedVector conj() const {
    GeneralizedVector r(dim());
    for (int i = 0; i < dim(); ++i) {
      r.vec[i] = vec[i].conj();
      r.cov[i] = cov[i].conj();
    }
    return r;
  }

  GeneralizedVector& operator+=(const GeneralizedVector& o) {
    for (int i = 0; i < dim(); ++i) {
      vec[i] += o.vec[i];
      cov[i] += o.cov[i];
    }
    return *this;
  }
  GeneralizedVector& operator-=(const GeneralizedVector& o) {
    for (int i = 0; i < dim(); ++i) {
      vec[i] -= o.vec[i];
      cov[i] -= o.cov[i];
    }
    return *this;
  }
  friend GeneralizedVector operator+(GeneralizedVector a, const GeneralizedVector& b) { return a += b; }
  friend GeneralizedVector operator-(GeneralizedVector a, const GeneralizedVector& b) { return a -= b; }
  friend GeneralizedVector operator*(const GaussianRational& s, GeneralizedVector u) {
    for (auto& v : u.vec) v *= s;
    for (auto& v : u.cov) v *= s;
    return u;
  }
  friend bool operator==(const GeneralizedVector& a, const GeneralizedVector& b) {
    return a.vec == b.vec && a.cov == b.cov;
  }

  /// Stacked column (X over xi), 2m x 1.
  GMatrix to_column() const {
    GMatrix c(2 * dim(), 1);
    for (int i = 0; i < dim(); ++i) {
      c(i, 0) = vec[i];
      c(dim() + i, 0) = cov[i];
    }
    return c;
  }
  static GeneralizedVector from_column(const GMatrix& c) {
    GeneralizedVector u(c.rows() / 2);
    for (int i = 0; i < u.dim(); ++i) {
      u.vec[i] = c(i, 0);
      u.cov[i] = c(u.dim() + i, 0);
    }
    return u;
  }

  std::string to_string() const;
};

/// <X+xi, Y+eta> = (xi(Y) + eta(X)) / 2, the split-signature pairing.
GaussianRational split_pairing(const GeneralizedVector& u, const GeneralizedVector& v);

/// Spinor action (X+xi) . rho = iota_X rho + xi ^ rho.
FormSpinor clifford_act(const GeneralizedVector& u, const FormSpinor& rho);

/// Matrix of clifford_act(u, .) on the full exterior algebra.
GMatrix clifford_matrix(const GeneralizedVector& u);

/// Element of so(T + T*) in block form
///   [ A     beta ]
///   [ B    -A^T  ]
/// with beta, B antisymmetric. Acts on (X, xi) as (A X + beta xi, B X - A^T xi).
struct SoElement {
  GMatrix endo;      // A
  GMatrix bivector;  // beta
  GMatrix two_form;  // B

  int dim() const { return endo.rows(); }

  static SoElement zero(int dim) {
    return {GMatrix::zero(dim, dim), GMatrix::zero(dim, dim), GMatrix::zero(dim, dim)};
  }
  static SoElement pure_two_form(const GMatrix& B) {
    SoElement q = zero(B.rows());
    q.two_form = B;
    return q;
  }
  static SoElement pure_bivector(const GMatrix& beta) {
    SoElement q = zero(beta.rows());
    q.bivector = beta;
    return q;
  }
  static SoElement pure_endo(const GMatrix& A) {
    SoElement q = zero(A.rows());
    q.endo = A;
    return q;
  }

  /// Splits a 2m x 2m block matrix; throws unless the lower-right block is
  /// -A^T and the off-diagonal blocks are antisymmetric.
  static SoElement from_block(const GMatrix& q);

  GMatrix block() const;

  GeneralizedVector apply(const GeneralizedVector& u) const;
};

/// Infinitesimal spin representation: the unique operator with
/// [spin_rep(Q), u.] = (Q u). and trace-normalized gl-part. Concretely
///   spin(Q) rho = B ^ rho + iota_beta rho - D_A rho + tr(A)/2 rho
/// with D_A the derivation extending e^j -> sum_i A(j,i) e^i.
FormSpinor spin_apply(const SoElement& q, const FormSpinor& rho);
GMatrix spin_rep(const SoElement& q);

/// exp(spin_rep(Q)) summed exactly. Stops when powers vanish (nilpotent
/// case, e.g. pure B or pure beta); otherwise a nonnegative term_bound is
/// required and the series is truncated there.
GMatrix group_exp(const SoElement& q, int term_bound = -1);

/// Antisymmetric matrix <-> 2-form dictionary:
/// M  <->  sum_{i<j} M(i,j) e^i ^ e^j.
FormSpinor two_form_to_form(const GMatrix& m);
GMatrix form_to_two_form(int dim, const FormSpinor& f);

}  // namespace gengeo
