#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gengeo/gc.hpp"

namespace gengeo {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Largest singular value.
double operator_norm(const CMat& a);

/// Number of singular values <= tol * sigma_max (all of them when the
/// matrix is numerically zero).
int numerical_kernel_dim(const CMat& a, double tol);

/// Born-Infeld spinor space of a frame with generalized metric (g, b):
/// carries the volume Clifford element * of C+, its reversal, the
/// sesquilinear Gram matrix h(a, b) = <conj(a), sigma(*) b>_Mukai, and the
/// float twisted differential.
struct BISpace {
  FrameSpec frame;
  GenMetric metric;
  double tol = 1e-9;

  CMat star;        // Clifford product a_1 ... a_m of an oriented g-orthonormal basis of C+
  CMat sigma_star;  // reversed word a_m ... a_1 = *^{-1}
  CMat gram;        // Gram of h on basis monomials (Hermitian positive definite)
  CMat dH;          // d + H^ in float
};

/// Builds the space; gs_order optionally permutes the C+ columns fed to
/// Gram-Schmidt (the result must not depend on it — the volume element is
/// basis-independent for fixed orientation).
BISpace make_bispace(const FrameSpec& frame, const GenMetric& metric, double tol = 1e-9,
                     const std::vector<int>& gs_order = {});

/// det(g + b) / sqrt(det g); equals h(1, 1) = <1, sigma(*) 1>.
double bi_volume(const GenMetric& metric);

std::complex<double> bi_inner_product(const BISpace& space, const CVec& a, const CVec& b);

/// h-adjoint: gram^{-1} O^H gram.
CMat adjoint_h(const BISpace& space, const CMat& op);

/// d_H* = * d_H sigma(*). Requires a unimodular frame (otherwise the
/// integration by parts behind the adjoint formula fails); throws MathError.
CMat dh_adjoint(const BISpace& space);

/// Delta = d_H d_H* + d_H* d_H.
CMat laplacian_dh(const BISpace& space);

/// Diagonal reversal-sign matrix (sigma as an operator).
CMat sigma_matrix_f(int dim);

/// Classical Hodge star rho -> sigma(sigma(*) rho); for b = 0 this is the
/// usual metric star on forms.
CMat hodge_star_classical(const BISpace& space);

struct KernelDims {
  int total = 0;
  int even = 0;
  int odd = 0;
  /// Filled when Delta preserves form degree (within tol).
  std::optional<std::vector<int>> per_degree;
};

KernelDims laplacian_kernel_dims(const BISpace& space);

/// The four exact components of d_H on a generalized Kahler pair:
///   deltabar_plus  : U_{p,q} -> U_{p+1,q+1}
///   deltabar_minus : U_{p,q} -> U_{p+1,q-1}
///   delta_plus     : U_{p,q} -> U_{p-1,q-1}
///   delta_minus    : U_{p,q} -> U_{p-1,q+1}
struct DhSplit {
  GMatrix deltabar_plus;
  GMatrix deltabar_minus;
  GMatrix delta_plus;
  GMatrix delta_minus;
  bool exact_split = false;  // d_H == sum of the four pieces, exactly
};

DhSplit split_dh(const GKPair& pair, const FrameSpec& frame);

struct IdentityResiduals {
  double split = 0;          // ||d_H - (sum of four)||
  double kahler_plus = 0;    // ||(deltabar_plus)* + delta_plus||
  double kahler_minus = 0;   // ||(deltabar_minus)* - delta_minus||
  double laplacian_2x = 0;   // ||Delta_dH - 2 Delta_{dbar_1}||
  double laplacian_4x = 0;   // ||Delta_dH - 4 Delta_{deltabar_plus}||
  double tol = 0;
  bool pass(double t) const {
    return split <= t && kahler_plus <= t && kahler_minus <= t && laplacian_2x <= t &&
           laplacian_4x <= t;
  }
};

/// Generalized Kahler identities, evaluated as operator-norm residuals in
/// the Born-Infeld space of the metric extracted from the pair.
IdentityResiduals kahler_identities_check(const GKPair& pair, const FrameSpec& frame,
                                          double tol = 1e-9);

struct DiamondEntry {
  int p = 0;
  int q = 0;
  int dim = 0;
};

struct HodgeReport {
  int n = 0;
  std::pair<int, int> types{0, 0};
  std::vector<DiamondEntry> entries;  // support order: q descending, p ascending
  int total = 0;
  int betti_even = 0;  // exact twisted Betti numbers of (frame, d_H)
  int betti_odd = 0;
  bool totals_match = false;     // total == betti_even + betti_odd
  bool conj_symmetric = false;   // dim(p,q) == dim(-p,-q)
  bool parity_consistent = false;  // type parities vs dim mod 4 constraint
  double max_offblock_residual = 0;  // Delta leaking between U_{p,q} blocks
  bool pass = false;
};

/// Harmonic decomposition of twisted cohomology over the U_{p,q} grading
/// (Hodge diamond). The pair must gk_validate first; throws MathError if
/// not.
HodgeReport hodge_diamond(const GKPair& pair, const FrameSpec& frame, double tol = 1e-9);

struct DdjReport {
  bool holds = false;
  int dim_ddj_image = 0;       // dim im(d_H d^J)
  int dim_closed_jexact = 0;   // dim ker(d_H) cap im(d^J)
  int dim_jclosed_exact = 0;   // dim ker(d^J) cap im(d_H)
  bool contained = false;      // im(d_H d^J) inside both intersections
  std::string note;
};

/// Exact dd^J test: the three spaces
///   im(d_H d^J),  ker(d_H) cap im(d^J),  ker(d^J) cap im(d_H)
/// coincide (the form-level content of the dd^J property), by rank
/// arithmetic over the Gaussian rationals.
DdjReport ddj_check(const GCStructure& j, const FrameSpec& frame);

/// d^J = [d_H, spin_rep(J)] as an exact operator.
GMatrix dj_operator(const GCStructure& j, const FrameSpec& frame);

struct LefschetzEntry {
  int k = 0;
  int b_low = 0;   // b_{n-k}
  int b_high = 0;  // b_{n+k}
  int rank_induced = 0;
  bool iso = false;
};

struct LefschetzReport {
  bool holds = false;
  std::vector<LefschetzEntry> entries;
};

/// Strong Lefschetz for a closed nondegenerate 2-form: wedging with
/// omega^k induces isomorphisms H^{n-k} -> H^{n+k} (untwisted d).
/// Throws MathError when omega is degenerate or not closed.
LefschetzReport lefschetz_check(const QMatrix& omega, const FrameSpec& frame);

}  // namespace gengeo
