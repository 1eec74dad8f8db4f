#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gengeo/matrix.hpp"
#include "gengeo/scalar.hpp"

namespace gengeo {

/// Basis monomials of the exterior algebra are encoded as bitmasks: bit i
/// set means the factor e^{i+1} is present, factors ordered by increasing
/// index. Indices are 0-based internally, 1-based in documents and reports.
using Mask = std::uint32_t;

inline int mask_degree(Mask m) { return std::popcount(m); }

/// Sign of e_A ^ e_B -> e_{A|B} for disjoint A, B: parity of the number of
/// transpositions needed to interleave the two sorted index lists.
inline int wedge_sign(Mask a, Mask b) {
  int swaps = 0;
  while (b != 0) {
    Mask low = b & (~b + 1);            // lowest set bit of b
    int j = std::countr_zero(low);
    swaps += std::popcount(a >> (j + 1));  // factors of a that must jump over e_j
    b ^= low;
  }
  return (swaps & 1) ? -1 : 1;
}

/// Sign of removing index i from monomial mask (i must be set):
/// iota_i e_S = sign * e_{S \ i}.
inline int contract_sign(int i, Mask mask) {
  int before = std::popcount(mask & ((Mask{1} << i) - 1));
  return (before & 1) ? -1 : 1;
}

/// Reversal sign (-1)^{k(k-1)/2} on degree k.
inline int reversal_sign(int degree) {
  return ((degree * (degree - 1) / 2) & 1) ? -1 : 1;
}

/// Sparse element of the complexified exterior algebra of an m-dimensional
/// dual frame; doubles as a spinor for the Clifford algebra of T + T*.
class FormSpinor {
 public:
  explicit FormSpinor(int dim) : dim_(dim) {}

  static FormSpinor zero(int dim) { return FormSpinor(dim); }
  static FormSpinor one(int dim) { return basis(dim, 0); }
  static FormSpinor basis(int dim, Mask mask) {
    FormSpinor f(dim);
    f.c_[mask] = GaussianRational(1);
    return f;
  }
  /// e^{i+1} for 0-based i.
  static FormSpinor basis_one_form(int dim, int i) { return basis(dim, Mask{1} << i); }

  int dim() const { return dim_; }
  Mask top_mask() const { return (Mask{1} << dim_) - 1; }

  bool is_zero() const { return c_.empty(); }
  int term_count() const { return static_cast<int>(c_.size()); }

  const std::map<Mask, GaussianRational>& terms() const { return c_; }

  GaussianRational coeff(Mask mask) const {
    auto it = c_.find(mask);
    return it == c_.end() ? GaussianRational() : it->second;
  }
  GaussianRational top_coeff() const { return coeff(top_mask()); }

  void add_term(Mask mask, const GaussianRational& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = c_.emplace(mask, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  FormSpinor& operator+=(const FormSpinor& o) {
    for (const auto& [m, v] : o.c_) add_term(m, v);
    return *this;
  }
  FormSpinor& operator-=(const FormSpinor& o) {
    for (const auto& [m, v] : o.c_) add_term(m, -v);
    return *this;
  }
  friend FormSpinor operator+(FormSpinor a, const FormSpinor& b) { return a += b; }
  friend FormSpinor operator-(FormSpinor a, const FormSpinor& b) { return a -= b; }
  FormSpinor operator-() const {
    FormSpinor r(dim_);
    for (const auto& [m, v] : c_) r.c_[m] = -v;
    return r;
  }
  friend FormSpinor operator*(const GaussianRational& s, const FormSpinor& f) {
    FormSpinor r(f.dim_);
    if (s.is_zero()) return r;
    for (const auto& [m, v] : f.c_) r.c_[m] = s * v;
    return r;
  }
  friend bool operator==(const FormSpinor& a, const FormSpinor& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }
  friend bool operator!=(const FormSpinor& a, const FormSpinor& b) { return !(a == b); }

  /// Degree-k component.
  FormSpinor component(int k) const {
    FormSpinor r(dim_);
    for (const auto& [m, v] : c_)
      if (mask_degree(m) == k) r.c_[m] = v;
    return r;
  }

  /// Complex conjugation of coefficients.
  FormSpinor conj() const {
    FormSpinor r(dim_);
    for (const auto& [m, v] : c_) r.c_[m] = v.conj();
    return r;
  }

  bool is_homogeneous(int* degree_out = nullptr) const;

  /// Dense column in the mask basis (2^dim entries).
  GMatrix to_column() const {
    GMatrix col(1 << dim_, 1);
    for (const auto& [m, v] : c_) col(static_cast<int>(m), 0) = v;
    return col;
  }
  static FormSpinor from_column(int dim, const GMatrix& col) {
    FormSpinor f(dim);
    for (int m = 0; m < col.rows(); ++m) f.add_term(static_cast<Mask>(m), col(m, 0));
    return f;
  }

 private:
  int dim_;
  std::map<Mask, GaussianRational> c_;
};

FormSpinor wedge(const FormSpinor& a, const FormSpinor& b);

/// Interior product with the basis vector e_{i+1}.
FormSpinor contract(int i, const FormSpinor& f);

/// Reversal anti-automorphism: acts by (-1)^{k(k-1)/2} on each degree.
FormSpinor sigma_reverse(const FormSpinor& f);

/// Mukai pairing <a, b> = [a ^ sigma(b)]_top (coefficient of the top
/// monomial e^{1...m}).
GaussianRational mukai_pairing(const FormSpinor& a, const FormSpinor& b);

/// Wedge sign law on monomials obeys e_A ^ e_B = (-1)^{|A||B|} e_B ^ e_A;
/// bilinear pieces printed deterministically by (degree, mask).
std::string to_string(const FormSpinor& f);

/// Matrix of a linear operator on the full exterior algebra, columns
/// indexed by basis monomials in mask order.
template <typename F>
GMatrix operator_matrix(int dim, F&& apply) {
  const int n = 1 << dim;
  GMatrix out(n, n);
  for (int m = 0; m < n; ++m) {
    FormSpinor img = apply(FormSpinor::basis(dim, static_cast<Mask>(m)));
    for (const auto& [mask, v] : img.terms()) out(static_cast<int>(mask), m) = v;
  }
  return out;
}

/// Masks of fixed degree, ascending.
std::vector<int> masks_of_degree(int dim, int k);

/// Gram matrix of the Mukai pairing on basis monomials.
GMatrix mukai_gram(int dim);

}  // namespace gengeo
