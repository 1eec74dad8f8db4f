#include "gengeo/hodge.hpp"

#include <cmath>

namespace gengeo {

namespace {

using Cplx = std::complex<double>;

/// Float Clifford action of a = X + xi given as a stacked 2m-vector.
CMat clifford_matrix_f(const Eigen::VectorXcd& a, int m) {
  const int n = 1 << m;
  CMat out = CMat::Zero(n, n);
  for (int mask = 0; mask < n; ++mask) {
    for (int i = 0; i < m; ++i) {
      const Mask bit = Mask{1} << i;
      if (mask & bit) {
        if (a(i) != 0.0)
          out(mask ^ bit, mask) += static_cast<double>(contract_sign(i, mask)) * a(i);
      } else {
        if (a(m + i) != 0.0)
          out(mask | bit, mask) += static_cast<double>(wedge_sign(bit, mask)) * a(m + i);
      }
    }
  }
  return out;
}

Cplx split_pairing_f(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v, int m) {
  Cplx s = 0;
  for (int i = 0; i < m; ++i) s += u(m + i) * v(i) + v(m + i) * u(i);
  return 0.5 * s;
}

std::vector<int> degree_masks(int dim, int k) { return masks_of_degree(dim, k); }

CMat gather(const CMat& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  CMat out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(rows[i], cols[j]);
  return out;
}

}  // namespace

double operator_norm(const CMat& a) {
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<CMat>(a).singularValues()(0);
}

int numerical_kernel_dim(const CMat& a, double tol) {
  if (a.cols() == 0) return 0;
  Eigen::JacobiSVD<CMat> svd(a);
  const auto& s = svd.singularValues();
  double smax = s.size() ? s(0) : 0.0;
  if (smax == 0.0) return static_cast<int>(a.cols());
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > tol * smax) ++rank;
  return static_cast<int>(a.cols()) - rank;
}

BISpace make_bispace(const FrameSpec& frame, const GenMetric& metric, double tol,
                     const std::vector<int>& gs_order) {
  const int m = frame.dim;
  if (metric.dim() != m) throw InputError("make_bispace: metric dimension mismatch");
  if (!is_unimodular(frame))
    throw MathError(
        "make_bispace: frame is not unimodular; integration by parts fails "
        "on invariant forms, so stars and adjoints would not be adjoints");
  BISpace sp{frame, metric, tol, {}, {}, {}, {}};

  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  if (!gs_order.empty()) {
    if (static_cast<int>(gs_order.size()) != m) throw InputError("gs_order must have length m");
    order = gs_order;
  }

  // Gram-Schmidt on C+ = graph(b + g); the split pairing restricts there
  // to g, which is positive definite.
  Eigen::MatrixXd cp = to_eigen(metric.c_plus());
  std::vector<Eigen::VectorXcd> basis;
  for (int jj = 0; jj < m; ++jj) {
    Eigen::VectorXcd v = cp.col(order[jj]).cast<Cplx>();
    for (const auto& a : basis) v -= split_pairing_f(v, a, m) * a;
    Cplx norm2 = split_pairing_f(v, v, m);
    double len = std::sqrt(norm2.real());
    if (!(len > 0)) throw MathError("make_bispace: C+ pairing not positive definite");
    basis.push_back(v / len);
  }

  // Fix the orientation: the tangent parts of C+ columns span T, and the
  // standard order e_1..e_m is the positive one.
  Eigen::MatrixXd tangent(m, m);
  for (int jj = 0; jj < m; ++jj)
    for (int i = 0; i < m; ++i) tangent(i, jj) = basis[jj](i).real();
  if (tangent.determinant() < 0) basis.back() = -basis.back();

  const int n = 1 << m;
  CMat star = CMat::Identity(n, n);
  CMat sigma_star = CMat::Identity(n, n);
  for (int jj = 0; jj < m; ++jj) {
    CMat cj = clifford_matrix_f(basis[jj], m);
    star = star * cj;        // a_1 a_2 ... a_m
    sigma_star = cj * sigma_star;  // a_m ... a_2 a_1
  }
  sp.star = star;
  sp.sigma_star = sigma_star;

  CMat mu = to_eigen(mukai_gram(m));
  sp.gram = mu * sigma_star;
  sp.dH = to_eigen(twisted_d(frame));
  return sp;
}

double bi_volume(const GenMetric& metric) {
  Rational dg = metric.g.det();
  Rational dgb = (metric.g + metric.b).det();
  return dgb.get_d() / std::sqrt(dg.get_d());
}

std::complex<double> bi_inner_product(const BISpace& space, const CVec& a, const CVec& b) {
  return (a.adjoint() * space.gram * b)(0, 0);
}

CMat adjoint_h(const BISpace& space, const CMat& op) {
  return space.gram.partialPivLu().solve(op.adjoint() * space.gram);
}

CMat dh_adjoint(const BISpace& space) {
  if (!is_unimodular(space.frame))
    throw MathError("dh_adjoint: frame is not unimodular, adjoint formula invalid");
  return space.star * space.dH * space.sigma_star;
}

CMat laplacian_dh(const BISpace& space) {
  CMat ds = dh_adjoint(space);
  return space.dH * ds + ds * space.dH;
}

CMat sigma_matrix_f(int dim) {
  const int n = 1 << dim;
  CMat s = CMat::Zero(n, n);
  for (int mask = 0; mask < n; ++mask)
    s(mask, mask) = static_cast<double>(reversal_sign(mask_degree(mask)));
  return s;
}

CMat hodge_star_classical(const BISpace& space) {
  return sigma_matrix_f(space.frame.dim) * space.sigma_star;
}

KernelDims laplacian_kernel_dims(const BISpace& space) {
  const int m = space.frame.dim;
  CMat delta = laplacian_dh(space);
  KernelDims out;
  out.total = numerical_kernel_dim(delta, space.tol);

  std::vector<int> even, odd;
  for (int mask = 0; mask < (1 << m); ++mask)
    (mask_degree(mask) % 2 == 0 ? even : odd).push_back(mask);
  out.even = numerical_kernel_dim(gather(delta, even, even), space.tol);
  out.odd = numerical_kernel_dim(gather(delta, odd, odd), space.tol);

  // Degree-graded kernel dims only make sense when Delta preserves degree.
  double scale = operator_norm(delta);
  double leak = 0;
  for (int k = 0; k <= m; ++k) {
    auto cols = degree_masks(m, k);
    for (int l = 0; l <= m; ++l) {
      if (l == k) continue;
      auto rows = degree_masks(m, l);
      leak = std::max(leak, operator_norm(gather(delta, rows, cols)));
    }
  }
  if (scale == 0.0 || leak <= space.tol * std::max(1.0, scale)) {
    std::vector<int> per(m + 1, 0);
    for (int k = 0; k <= m; ++k) {
      auto idx = degree_masks(m, k);
      per[k] = numerical_kernel_dim(gather(delta, idx, idx), space.tol);
    }
    out.per_degree = per;
  }
  return out;
}

DhSplit split_dh(const GKPair& pair, const FrameSpec& frame) {
  const int n2 = 1 << frame.dim;
  GMatrix dh = twisted_d(frame);
  auto proj = pq_projectors(pair);
  DhSplit out{GMatrix::zero(n2, n2), GMatrix::zero(n2, n2), GMatrix::zero(n2, n2),
              GMatrix::zero(n2, n2), false};
  auto find = [&](int p, int q) -> const GMatrix* {
    auto it = proj.find({p, q});
    return it == proj.end() ? nullptr : &it->second;
  };
  for (const auto& [key, ppq] : proj) {
    auto [p, q] = key;
    GMatrix image = dh * ppq;
    if (const GMatrix* t = find(p + 1, q + 1)) out.deltabar_plus += *t * image;
    if (const GMatrix* t = find(p + 1, q - 1)) out.deltabar_minus += *t * image;
    if (const GMatrix* t = find(p - 1, q - 1)) out.delta_plus += *t * image;
    if (const GMatrix* t = find(p - 1, q + 1)) out.delta_minus += *t * image;
  }
  GMatrix sum = out.deltabar_plus + out.deltabar_minus + out.delta_plus + out.delta_minus;
  out.exact_split = (dh - sum).is_zero();
  return out;
}

IdentityResiduals kahler_identities_check(const GKPair& pair, const FrameSpec& frame,
                                          double tol) {
  GKReport gk = gk_validate(pair, frame);
  if (!gk.all_pass() || !gk.metric)
    throw MathError("kahler_identities_check: pair is not generalized Kahler");
  BISpace space = make_bispace(frame, *gk.metric, tol);
  DhSplit split = split_dh(pair, frame);

  CMat dbp = to_eigen(split.deltabar_plus);
  CMat dbm = to_eigen(split.deltabar_minus);
  CMat dp = to_eigen(split.delta_plus);
  CMat dm = to_eigen(split.delta_minus);

  IdentityResiduals res;
  res.tol = tol;
  res.split = operator_norm(space.dH - (dbp + dbm + dp + dm));
  res.kahler_plus = operator_norm(adjoint_h(space, dbp) + dp);
  res.kahler_minus = operator_norm(adjoint_h(space, dbm) - dm);

  auto laplacian_of = [&](const CMat& op) {
    CMat os = adjoint_h(space, op);
    return CMat(op * os + os * op);
  };
  CMat delta_d = laplacian_of(space.dH);
  CMat dbar1 = dbp + dbm;  // raises the J1 degree by one
  res.laplacian_2x = operator_norm(delta_d - 2.0 * laplacian_of(dbar1));
  res.laplacian_4x = operator_norm(delta_d - 4.0 * laplacian_of(dbp));
  return res;
}

HodgeReport hodge_diamond(const GKPair& pair, const FrameSpec& frame, double tol) {
  GKReport gk = gk_validate(pair, frame);
  if (!gk.all_pass() || !gk.metric)
    throw MathError("hodge_diamond: pair is not generalized Kahler");

  HodgeReport rep;
  rep.n = pair.j1.n();
  rep.types = gk.types;

  BISpace space = make_bispace(frame, *gk.metric, tol);
  CMat delta = laplacian_dh(space);
  double scale = std::max(1.0, operator_norm(delta));

  auto proj = pq_projectors(pair);

  // Harmonic dimensions per U_{p,q}: restrict Delta to the block via an
  // orthonormal basis of the projector image (exact rank, float basis).
  CMat blocks_sum = CMat::Zero(delta.rows(), delta.cols());
  std::map<std::pair<int, int>, int> dims;
  for (const auto& [key, p_exact] : proj) {
    int r = p_exact.rank();
    if (r == 0) continue;
    CMat pf = to_eigen(p_exact);
    Eigen::JacobiSVD<CMat> svd(pf, Eigen::ComputeThinU);
    CMat basis = svd.matrixU().leftCols(r);
    dims[key] = numerical_kernel_dim(delta * basis, tol);
    blocks_sum += pf * delta * pf;
  }
  rep.max_offblock_residual = operator_norm(delta - blocks_sum) / scale;

  for (int q = rep.n; q >= -rep.n; --q)
    for (int p = -rep.n; p <= rep.n; ++p) {
      if (std::abs(p) + std::abs(q) > rep.n) continue;
      if (((p + q) - rep.n) % 2 != 0) continue;
      auto it = dims.find({p, q});
      rep.entries.push_back({p, q, it == dims.end() ? 0 : it->second});
    }

  rep.total = 0;
  for (const auto& e : rep.entries) rep.total += e.dim;
  auto [bev, bod] = twisted_betti(frame);
  rep.betti_even = bev;
  rep.betti_odd = bod;
  rep.totals_match = rep.total == bev + bod;

  rep.conj_symmetric = true;
  for (const auto& e : rep.entries) {
    int mirror = 0;
    for (const auto& f : rep.entries)
      if (f.p == -e.p && f.q == -e.q) mirror = f.dim;
    if (mirror != e.dim) {
      rep.conj_symmetric = false;
      break;
    }
  }

  // Parity constraint on twisted Betti numbers from the types of the pair.
  const int m = frame.dim;
  int t1 = rep.types.first % 2, t2 = rep.types.second % 2;
  if (m % 4 == 2) {
    rep.parity_consistent = (bev % 2 == 0) && (bod % 2 == 0);
  } else {
    if (t1 == 1 && t2 == 1)
      rep.parity_consistent = bev % 2 == 0;
    else if (t1 == 0 && t2 == 0)
      rep.parity_consistent = bod % 2 == 0;
    else
      rep.parity_consistent = false;  // mixed parity impossible in dim 4k
  }

  rep.pass = rep.totals_match && rep.conj_symmetric && rep.parity_consistent &&
             rep.max_offblock_residual <= tol;
  return rep;
}

GMatrix dj_operator(const GCStructure& j, const FrameSpec& frame) {
  if (j.frame_dim() != frame.dim) throw InputError("dj_operator: dimension mismatch");
  GMatrix dh = twisted_d(frame);
  GMatrix k = spin_rep(j.as_so());
  return dh * k - k * dh;
}

DdjReport ddj_check(const GCStructure& j, const FrameSpec& frame) {
  DdjReport rep;
  GMatrix dh = twisted_d(frame);
  GMatrix dj = dj_operator(j, frame);

  GMatrix ddj = dh * dj;
  rep.dim_ddj_image = ddj.rank();

  // dim(ker A cap im B) = dim ker A + rank B - rank [ker-basis(A) | B]
  auto intersect_dim = [](const GMatrix& ker_of, const GMatrix& im_of) {
    GMatrix kb = ker_of.kernel_basis();
    int dk = kb.cols();
    int ri = im_of.rank();
    return dk + ri - hcat(kb, im_of).rank();
  };
  rep.dim_closed_jexact = intersect_dim(dh, dj);
  rep.dim_jclosed_exact = intersect_dim(dj, dh);

  // im(d_H d^J) lands in both intersections: d_H-closed, d^J-exact (and
  // symmetrically, using d_H d^J = -d^J d_H).
  bool anti = (dh * dj + dj * dh).is_zero();
  bool closed = (dh * ddj).is_zero();
  bool jclosed = (dj * ddj).is_zero();
  bool in_dj = span_contains(dj, ddj);
  bool in_dh = span_contains(dh, ddj);
  rep.contained = anti && closed && jclosed && in_dj && in_dh;
  if (!anti) rep.note = "d_H d^J + d^J d_H != 0";

  rep.holds = rep.contained && rep.dim_ddj_image == rep.dim_closed_jexact &&
              rep.dim_ddj_image == rep.dim_jclosed_exact;
  return rep;
}

LefschetzReport lefschetz_check(const QMatrix& omega, const FrameSpec& frame) {
  const int m = frame.dim;
  if (omega.rows() != m || omega.cols() != m || !(omega + omega.transpose()).is_zero())
    throw InputError("lefschetz_check: omega must be an antisymmetric m x m matrix");
  if (!omega.inverse()) throw MathError("lefschetz_check: omega is degenerate");
  FormSpinor w = two_form_to_form(complexify(omega));
  if (!d_apply(frame, w).is_zero()) throw MathError("lefschetz_check: omega is not closed");

  const int n = m / 2;
  GMatrix d = ce_differential(frame);
  std::vector<int> betti = graded_betti(m, d);

  LefschetzReport rep;
  rep.holds = true;
  FormSpinor wk = FormSpinor::one(m);  // omega^k
  for (int k = 0; k <= n; ++k) {
    if (k > 0) wk = wedge(wk, w);
    LefschetzEntry e;
    e.k = k;
    e.b_low = betti[n - k];
    e.b_high = betti[n + k];

    auto lo = masks_of_degree(m, n - k);
    auto hi = masks_of_degree(m, n + k);

    // cocycles in degree n-k
    GMatrix d_lo = d.select(masks_of_degree(m, n - k + 1), lo);
    GMatrix z = d_lo.kernel_basis();  // coords in lo-masks

    // wedge by omega^k restricted lo -> hi
    GMatrix wk_full = operator_matrix(m, [&](const FormSpinor& f) { return wedge(wk, f); });
    GMatrix wk_block = wk_full.select(hi, lo);
    GMatrix images = wk_block * z;

    // boundaries in degree n+k
    GMatrix bd = n + k > 0 ? d.select(hi, masks_of_degree(m, n + k - 1))
                           : GMatrix::zero(static_cast<int>(hi.size()), 0);

    e.rank_induced = hcat(images, bd).rank() - bd.rank();
    e.iso = (e.rank_induced == e.b_low) && (e.b_low == e.b_high);
    if (!e.iso) rep.holds = false;
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace gengeo
