#include "gengeo/form.hpp"

#include <algorithm>

namespace gengeo {

FormSpinor wedge(const FormSpinor& a, const FormSpinor& b) {
  if (a.dim() != b.dim()) throw InputError("wedge of forms over different frames");
  FormSpinor r(a.dim());
  for (const auto& [ma, va] : a.terms())
    for (const auto& [mb, vb] : b.terms()) {
      if ((ma & mb) != 0) continue;
      GaussianRational v = va * vb;
      if (wedge_sign(ma, mb) < 0) v = -v;
      r.add_term(ma | mb, v);
    }
  return r;
}

FormSpinor contract(int i, const FormSpinor& f) {
  FormSpinor r(f.dim());
  const Mask bit = Mask{1} << i;
  for (const auto& [m, v] : f.terms()) {
    if ((m & bit) == 0) continue;
    r.add_term(m ^ bit, contract_sign(i, m) < 0 ? -v : v);
  }
  return r;
}

FormSpinor sigma_reverse(const FormSpinor& f) {
  FormSpinor r(f.dim());
  for (const auto& [m, v] : f.terms())
    r.add_term(m, reversal_sign(mask_degree(m)) < 0 ? -v : v);
  return r;
}

GaussianRational mukai_pairing(const FormSpinor& a, const FormSpinor& b) {
  return wedge(a, sigma_reverse(b)).top_coeff();
}

bool FormSpinor::is_homogeneous(int* degree_out) const {
  if (c_.empty()) {
    if (degree_out) *degree_out = 0;
    return true;
  }
  int deg = mask_degree(c_.begin()->first);
  for (const auto& [m, v] : c_)
    if (mask_degree(m) != deg) return false;
  if (degree_out) *degree_out = deg;
  return true;
}

std::string to_string(const FormSpinor& f) {
  if (f.is_zero()) return "0";
  // sort terms by (degree, mask) for stable output
  std::vector<std::pair<Mask, GaussianRational>> terms(f.terms().begin(), f.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return mask_degree(a.first) < mask_degree(b.first);
  });
  std::string out;
  for (const auto& [m, v] : terms) {
    std::string coeff = to_string(v);
    bool needs_parens = coeff.find('+') != std::string::npos ||
                        coeff.find('-', 1) != std::string::npos;
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += coeff;
      continue;
    }
    std::string mono;
    for (int i = 0; i < f.dim(); ++i)
      if (m & (Mask{1} << i)) {
        if (!mono.empty()) mono += "^";
        mono += "e" + std::to_string(i + 1);
      }
    if (coeff == "1") {
      out += mono;
    } else if (coeff == "-1") {
      out += "-" + mono;
    } else if (needs_parens) {
      out += "(" + coeff + ")*" + mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

std::vector<int> masks_of_degree(int dim, int k) {
  std::vector<int> out;
  for (int m = 0; m < (1 << dim); ++m)
    if (std::popcount(static_cast<unsigned>(m)) == k) out.push_back(m);
  return out;
}

GMatrix mukai_gram(int dim) {
  const int n = 1 << dim;
  GMatrix g(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g(a, b) = mukai_pairing(FormSpinor::basis(dim, a), FormSpinor::basis(dim, b));
  return g;
}

}  // namespace gengeo
