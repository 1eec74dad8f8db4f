#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gengeo/clifford.hpp"
#include "gengeo/form.hpp"
#include "gengeo/matrix.hpp"

namespace gengeo {

/// A frame: a finite-dimensional real Lie algebra with bracket
/// [e_i, e_j] = sum_k c^k_{ij} e_k standing in for the invariant geometry
/// of a compact homogeneous space, plus a closed twisting 3-form H and an
/// optional metric/2-field pair used by the Hodge machinery.
struct FrameSpec {
  int dim = 0;
  /// c[k](i,j) = c^k_{ij}, antisymmetric in (i, j).
  std::vector<QMatrix> c;
  /// Real closed 3-form.
  FormSpinor H;
  std::optional<QMatrix> g;
  std::optional<QMatrix> b;

  explicit FrameSpec(int m)
      : dim(m), c(m, QMatrix::zero(m, m)), H(m) {}

  static FrameSpec abelian(int m) { return FrameSpec(m); }

  /// Adds c^k_{ij} += v (0-based indices; antisymmetric slot included).
  void add_bracket(int i, int j, int k, const Rational& v) {
    c[k](i, j) += v;
    c[k](j, i) -= v;
  }

  /// ad_{e_i} as a matrix: (ad_i)(k, j) = c^k_{ij}.
  QMatrix ad(int i) const {
    QMatrix a(dim, dim);
    for (int k = 0; k < dim; ++k)
      for (int j = 0; j < dim; ++j) a(k, j) = c[k](i, j);
    return a;
  }

  bool has_brackets() const {
    for (const auto& m : c)
      if (!m.is_zero()) return true;
    return false;
  }

  /// Lie bracket of complexified coefficient vectors.
  std::vector<GaussianRational> bracket(const std::vector<GaussianRational>& x,
                                        const std::vector<GaussianRational>& y) const;
};

struct FrameCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // witness on failure, empty or informative otherwise
};

struct FrameReport {
  std::vector<FrameCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Structural checks: antisymmetry, Jacobi, dH = 0, d_H^2 = 0,
/// unimodularity, metric symmetry/positivity, b antisymmetry.
/// Witnesses name the offending basis indices.
FrameReport validate_frame(const FrameSpec& frame);

bool is_unimodular(const FrameSpec& frame);

/// Chevalley-Eilenberg differential: d e^k = -sum_{i<j} c^k_{ij} e^i ^ e^j,
/// extended as an odd derivation. Structure constants may be complex
/// (shared with the Lie-algebroid complex).
FormSpinor ce_apply(const std::vector<GMatrix>& c, const FormSpinor& f);
GMatrix ce_operator(int dim, const std::vector<GMatrix>& c);

FormSpinor d_apply(const FrameSpec& frame, const FormSpinor& f);
GMatrix ce_differential(const FrameSpec& frame);

/// d_H = d + H ^ .
FormSpinor twisted_d_apply(const FrameSpec& frame, const FormSpinor& f);
GMatrix twisted_d(const FrameSpec& frame);

/// Dorfman bracket of constant sections of T + T* in closed form:
///   [X+xi, Y+eta] = [X,Y] + iota_X d eta - iota_Y d xi - iota_Y iota_X H.
/// This is characterized by the derived-bracket identity
/// [[d_H, (X+xi).], (Y+eta).] = ([X+xi, Y+eta]). on spinors.
GeneralizedVector dorfman(const FrameSpec& frame, const GeneralizedVector& u,
                          const GeneralizedVector& v);

/// Antisymmetrization of the Dorfman bracket (they agree on constant
/// sections, where <u,v> is constant and d kills it).
GeneralizedVector courant(const FrameSpec& frame, const GeneralizedVector& u,
                          const GeneralizedVector& v);

struct BracketSymmetryReport {
  bool b_closed = false;
  /// Twist of the target bracket: H' = H - dB.
  FormSpinor twist_shift{0};  // H' - H = -dB
  bool intertwines = true;  // Dorfman_{H-dB}(e^B u, e^B v) == e^B Dorfman_H(u, v), all basis pairs
  std::string witness;
};

/// Checks the shear e^B = [[1,0],[B,1]] against the bracket: for closed B
/// it is a Courant automorphism, otherwise it shifts the twist by -dB.
BracketSymmetryReport bracket_symmetry_check(const FrameSpec& frame, const GMatrix& B);

struct AutomorphismReport {
  bool is_automorphism = false;  // [Pe_i, Pe_j] = P[e_i, e_j]
  bool preserves_H = false;      // pullback along P fixes H
  bool preserves_bracket = false;  // diag(P, P^-T) intertwines Dorfman_H
  std::string witness;
};

/// Conjugation by a frame automorphism, the invariant shadow of the
/// diffeomorphism factor of the symmetry group.
AutomorphismReport frame_automorphism_check(const FrameSpec& frame, const QMatrix& p);

/// Betti numbers of (Lambda^*, d), degree 0..m, by exact ranks.
std::vector<int> betti_numbers(const FrameSpec& frame);

/// Even/odd twisted Betti numbers of (Lambda^*, d_H).
std::pair<int, int> twisted_betti(const FrameSpec& frame);

/// Graded Betti numbers of an arbitrary square-zero degree-(+1) operator
/// on the mask basis.
std::vector<int> graded_betti(int dim, const GMatrix& d);

/// Parity Betti numbers (even, odd) of a square-zero odd operator.
std::pair<int, int> parity_betti(int dim, const GMatrix& d);

/// Pairing surrogate for Stokes: on a unimodular frame the top-degree
/// coefficient of <d_H a, b> - <a, d_H b> vanishes identically (even m).
bool stokes_surrogate_holds(const FrameSpec& frame);

}  // namespace gengeo
