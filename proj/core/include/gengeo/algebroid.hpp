#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gengeo/gc.hpp"

namespace gengeo {

/// Lie algebroid complex of an involutive isotropic subbundle E of T + T*:
/// cochains are Lambda^* E^* over the mask basis dual to the chosen basis
/// of E, with the Chevalley-Eilenberg differential of the induced bracket.
/// When E is transverse to its conjugate, E^* is realized inside conj(E)
/// via twice the split pairing, which equips the cochain algebra with the
/// Schouten (Gerstenhaber) bracket of the conjugate algebroid.
struct AlgebroidComplex {
  int rank = 0;    // dim E = m
  GMatrix basis;   // 2m x m columns spanning E
  std::vector<GMatrix> f;  // f[c](a,b): [E_a, E_b] = sum_c f[c](a,b) E_c
  GMatrix d;       // CE differential on the 2^m cochain space

  /// Dual realization: column a is the element of conj(E) pairing to
  /// delta_{ab} against E_b (under 2 <.,.>). Empty when E meets conj(E).
  GMatrix dual_basis;
  std::vector<GMatrix> dual_f;  // bracket constants of the dual basis

  bool has_dual() const { return dual_basis.cols() == rank; }
};

/// Builds the complex from any basis of an involutive isotropic subbundle;
/// throws MathError when the span is not isotropic or not closed under the
/// H-twisted Dorfman bracket.
AlgebroidComplex build_algebroid_from_basis(const GMatrix& basis, const FrameSpec& frame);

/// The +i eigenbundle complex of an integrable generalized complex
/// structure.
AlgebroidComplex build_algebroid(const GCStructure& j, const FrameSpec& frame);

/// Exact cohomology dimensions h^0..h^m of (Lambda^* E^*, d).
std::vector<int> algebroid_betti(const AlgebroidComplex& cx);

/// Schouten bracket of cochains (degree p x q -> p + q - 1), extending the
/// dual Lie bracket by graded Leibniz. Requires has_dual().
FormSpinor gerstenhaber(const AlgebroidComplex& cx, const FormSpinor& a, const FormSpinor& b);

/// Maurer-Cartan residual d eps + [eps, eps] / 2 of a degree-2 cochain.
FormSpinor mc_residual(const AlgebroidComplex& cx, const FormSpinor& eps);

/// For an honest complex structure J, H^2 of the deformation complex
/// splits along the count of T*_{1,0}-type dual factors:
///   (H^2(O)-part, H^1(T)-part, H^0(Lambda^2 T)-part).
std::array<int, 3> h2_complex_decomposition(const QMatrix& j, const FrameSpec& frame);

struct DeformationReport {
  std::vector<int> h;     // h^0..h^m
  int deformations = 0;   // h^2
  int obstructions = 0;   // h^3
  bool unobstructed = false;  // h^3 == 0: every first-order deformation integrates
  std::optional<std::array<int, 3>> complex_split;
};

/// Deformation-theoretic summary of an integrable structure; pass the
/// underlying complex structure matrix to request the classical split.
DeformationReport deformation_report(const GCStructure& j, const FrameSpec& frame,
                                     const std::optional<QMatrix>& complex_j = std::nullopt);

}  // namespace gengeo
