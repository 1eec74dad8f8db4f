#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gengeo/clifford.hpp"
#include "gengeo/frame.hpp"
#include "gengeo/matrix.hpp"

namespace gengeo {

/// Generalized almost complex structure: J on T + T* with J^2 = -1
/// preserving the split pairing. Stored as an exact 2m x 2m matrix.
class GCStructure {
 public:
  /// Validates J^2 = -1 and orthogonality; throws MathError otherwise.
  static GCStructure from_matrix(GMatrix j);

  const GMatrix& matrix() const { return j_; }
  int frame_dim() const { return m_; }
  int n() const { return m_ / 2; }

  GMatrix beta_block() const { return j_.block(0, m_, m_, m_); }
  SoElement as_so() const { return SoElement::from_block(j_); }

 private:
  GCStructure(GMatrix j, int m) : j_(std::move(j)), m_(m) {}
  GMatrix j_;
  int m_;
};

/// Diagonal embedding of an ordinary complex structure:
/// [[-J, 0], [0, J^T]]. Its +i eigenbundle is T_{0,1} + T*_{1,0}.
GCStructure gc_from_complex(const QMatrix& j);

/// [[0, -w^{-1}], [w, 0]] for a nondegenerate antisymmetric w.
GCStructure gc_from_symplectic(const QMatrix& omega);

/// Basis of the +i eigenbundle E (2m x m, columns).
GMatrix eigenbundle_basis(const GCStructure& j);

/// type = n - rank(beta block) / 2: n for complex structures, 0 for
/// symplectic ones.
int type_of(const GCStructure& j);

struct IntegrabilityReport {
  bool integrable = true;
  std::string witness;  // first basis pair of E whose bracket leaves E
};

/// Closure of the +i eigenbundle under the H-twisted Dorfman bracket,
/// checked exactly on a basis.
IntegrabilityReport check_integrability(const GCStructure& j, const FrameSpec& frame);

/// Exact spectral projectors of spin_rep(J) onto the ik-eigenspaces U_k,
/// k = -n..n, by Lagrange interpolation in the operator.
std::map<int, GMatrix> uk_projectors(const GCStructure& j);

/// Generalized metric from (g, b): G = e^b [[0, g^{-1}], [g, 0]] e^{-b}.
struct GenMetric {
  QMatrix g;
  QMatrix b;

  int dim() const { return g.rows(); }

  /// 2m x 2m involution.
  QMatrix big() const;

  /// C+ = graph(b + g): columns (X, (b+g)X); the split pairing restricts
  /// to g on it. C- analogous with b - g.
  QMatrix c_plus() const;
  QMatrix c_minus() const;
};

/// Validates g (symmetric positive definite) and b (antisymmetric).
GenMetric make_gen_metric(QMatrix g, QMatrix b);

/// Shear transport: J -> e^{b'} J e^{-b'},  (g, b) -> (g, b + b').
GCStructure b_transform(const GCStructure& j, const QMatrix& b_prime);
GenMetric b_transform(const GenMetric& gm, const QMatrix& b_prime);

struct GKPair {
  GCStructure j1;
  GCStructure j2;
};

struct GKCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct GKReport {
  std::vector<GKCheck> checks;
  std::pair<int, int> types{-1, -1};
  std::optional<GenMetric> metric;  // extracted from G = -J1 J2 when valid
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Generalized Kahler validation: both structures valid and integrable,
/// commuting, and G = -J1 J2 a generalized metric (G^2 = 1, extracted g
/// positive definite).
GKReport gk_validate(const GKPair& pair, const FrameSpec& frame);

/// Exact projectors onto U_{p,q} = (ip eigenspace of J1) cap (iq of J2).
/// Keys are (p, q); only projectors of nonzero rank are kept.
std::map<std::pair<int, int>, GMatrix> pq_projectors(const GKPair& pair);

}  // namespace gengeo
