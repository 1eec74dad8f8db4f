#include "gengeo/gc.hpp"

namespace gengeo {

namespace {

/// Split pairing as a matrix on T + T*: P = (1/2) [[0, 1], [1, 0]].
GMatrix pairing_matrix(int m) {
  GMatrix p(2 * m, 2 * m);
  GaussianRational half(Rational(1, 2));
  for (int i = 0; i < m; ++i) {
    p(i, m + i) = half;
    p(m + i, i) = half;
  }
  return p;
}

GeneralizedVector column_as_gv(const GMatrix& cols, int j) {
  GeneralizedVector u(cols.rows() / 2);
  for (int i = 0; i < u.dim(); ++i) {
    u.vec[i] = cols(i, j);
    u.cov[i] = cols(u.dim() + i, j);
  }
  return u;
}

}  // namespace

GCStructure GCStructure::from_matrix(GMatrix j) {
  if (j.rows() != j.cols() || j.rows() % 2 != 0)
    throw InputError("GC structure matrix must be 2m x 2m");
  const int m = j.rows() / 2;
  const int n2 = 2 * m;
  GMatrix j2 = j * j;
  if (!(j2 + GMatrix::identity(n2)).is_zero())
    throw MathError("GC structure: J^2 != -1");
  GMatrix p = pairing_matrix(m);
  if (!(j.transpose() * p * j - p).is_zero())
    throw MathError("GC structure: J does not preserve the split pairing");
  return GCStructure(std::move(j), m);
}

GCStructure gc_from_complex(const QMatrix& j) {
  const int m = j.rows();
  if (j.cols() != m) throw InputError("complex structure matrix must be square");
  GMatrix big(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      big(i, k) = GaussianRational(-j(i, k));
      big(m + i, m + k) = GaussianRational(j(k, i));
    }
  return GCStructure::from_matrix(std::move(big));
}

GCStructure gc_from_symplectic(const QMatrix& omega) {
  const int m = omega.rows();
  if (omega.cols() != m) throw InputError("symplectic matrix must be square");
  if (!(omega + omega.transpose()).is_zero())
    throw MathError("symplectic matrix must be antisymmetric");
  auto winv = omega.inverse();
  if (!winv) throw MathError("symplectic matrix must be nondegenerate");
  GMatrix big(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      big(i, m + k) = GaussianRational(-(*winv)(i, k));
      big(m + i, k) = GaussianRational(omega(i, k));
    }
  return GCStructure::from_matrix(std::move(big));
}

GMatrix eigenbundle_basis(const GCStructure& j) {
  const int n2 = 2 * j.frame_dim();
  GMatrix shifted = j.matrix();
  for (int i = 0; i < n2; ++i) shifted(i, i) -= GaussianRational::i();
  GMatrix e = shifted.kernel_basis();
  if (e.cols() != j.frame_dim())
    throw MathError("eigenbundle of J has wrong dimension");
  return e;
}

int type_of(const GCStructure& j) {
  int r = j.beta_block().rank();
  return j.n() - r / 2;
}

IntegrabilityReport check_integrability(const GCStructure& j, const FrameSpec& frame) {
  if (frame.dim != j.frame_dim()) throw InputError("integrability: frame dimension mismatch");
  IntegrabilityReport rep;
  GMatrix e = eigenbundle_basis(j);
  const int r = e.cols();
  for (int a = 0; a < r && rep.integrable; ++a)
    for (int b = a + 1; b < r; ++b) {
      GeneralizedVector w =
          dorfman(frame, column_as_gv(e, a), column_as_gv(e, b));
      if (w.is_zero()) continue;
      if (!span_contains(e, w.to_column())) {
        rep.integrable = false;
        rep.witness = "[E_" + std::to_string(a + 1) + ", E_" + std::to_string(b + 1) +
                      "] = " + w.to_string() + " leaves the eigenbundle";
        break;
      }
    }
  return rep;
}

std::map<int, GMatrix> uk_projectors(const GCStructure& j) {
  const int n = j.n();
  GMatrix s = spin_rep(j.as_so());
  const int dim = s.rows();
  std::map<int, GMatrix> out;
  GaussianRational i = GaussianRational::i();
  for (int k = -n; k <= n; ++k) {
    GMatrix p = GMatrix::identity(dim);
    for (int l = -n; l <= n; ++l) {
      if (l == k) continue;
      GMatrix factor = s;
      GaussianRational il = i * GaussianRational(l);
      for (int d = 0; d < dim; ++d) factor(d, d) -= il;
      GaussianRational denom = i * GaussianRational(k - l);
      GaussianRational inv = GaussianRational(1) / denom;
      p = p * factor;
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) p(r, c) *= inv;
    }
    if (!p.is_zero()) out.emplace(k, std::move(p));
  }
  return out;
}

QMatrix GenMetric::big() const {
  const int m = dim();
  auto ginv = g.inverse();
  if (!ginv) throw MathError("generalized metric: g not invertible");
  // [[1,0],[b,1]] [[0,g^-1],[g,0]] [[1,0],[-b,1]]
  QMatrix out(2 * m, 2 * m);
  QMatrix ul = -1 * (*ginv * b);
  QMatrix ll = g - b * *ginv * b;
  QMatrix lr = b * *ginv;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      out(i, k) = ul(i, k);
      out(i, m + k) = (*ginv)(i, k);
      out(m + i, k) = ll(i, k);
      out(m + i, m + k) = lr(i, k);
    }
  return out;
}

QMatrix GenMetric::c_plus() const {
  const int m = dim();
  QMatrix e(2 * m, m);
  QMatrix bg = b + g;
  for (int i = 0; i < m; ++i) {
    e(i, i) = 1;
    for (int k = 0; k < m; ++k) e(m + k, i) = bg(k, i);
  }
  return e;
}

QMatrix GenMetric::c_minus() const {
  const int m = dim();
  QMatrix e(2 * m, m);
  QMatrix bg = b - g;
  for (int i = 0; i < m; ++i) {
    e(i, i) = 1;
    for (int k = 0; k < m; ++k) e(m + k, i) = bg(k, i);
  }
  return e;
}

GenMetric make_gen_metric(QMatrix g, QMatrix b) {
  const int m = g.rows();
  if (g.cols() != m || b.rows() != m || b.cols() != m)
    throw InputError("generalized metric: g, b must be square of equal size");
  if (!(g - g.transpose()).is_zero()) throw MathError("generalized metric: g not symmetric");
  for (int k = 1; k <= m; ++k)
    if (g.block(0, 0, k, k).det() <= 0)
      throw MathError("generalized metric: g not positive definite");
  if (!(b + b.transpose()).is_zero()) throw MathError("generalized metric: b not antisymmetric");
  return GenMetric{std::move(g), std::move(b)};
}

GCStructure b_transform(const GCStructure& j, const QMatrix& b_prime) {
  const int m = j.frame_dim();
  if (b_prime.rows() != m || b_prime.cols() != m || !(b_prime + b_prime.transpose()).is_zero())
    throw InputError("b_transform: b' must be antisymmetric m x m");
  GMatrix s = GMatrix::identity(2 * m);
  GMatrix sinv = GMatrix::identity(2 * m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      s(m + i, k) = GaussianRational(b_prime(i, k));
      sinv(m + i, k) = GaussianRational(-b_prime(i, k));
    }
  return GCStructure::from_matrix(s * j.matrix() * sinv);
}

GenMetric b_transform(const GenMetric& gm, const QMatrix& b_prime) {
  return make_gen_metric(gm.g, gm.b + b_prime);
}

GKReport gk_validate(const GKPair& pair, const FrameSpec& frame) {
  GKReport rep;
  const int m = frame.dim;

  {
    GKCheck chk{"structures well-formed", true, ""};
    if (pair.j1.frame_dim() != m || pair.j2.frame_dim() != m) {
      chk.pass = false;
      chk.detail = "dimension mismatch with frame";
    }
    rep.checks.push_back(chk);
  }
  if (!rep.checks.back().pass) return rep;

  {
    GKCheck chk{"J1 J2 = J2 J1", true, ""};
    if (!(pair.j1.matrix() * pair.j2.matrix() - pair.j2.matrix() * pair.j1.matrix()).is_zero()) {
      chk.pass = false;
      chk.detail = "structures do not commute";
    }
    rep.checks.push_back(chk);
  }

  {
    GKCheck chk{"J1 integrable", true, ""};
    auto r = check_integrability(pair.j1, frame);
    if (!r.integrable) {
      chk.pass = false;
      chk.detail = r.witness;
    }
    rep.checks.push_back(chk);
  }
  {
    GKCheck chk{"J2 integrable", true, ""};
    auto r = check_integrability(pair.j2, frame);
    if (!r.integrable) {
      chk.pass = false;
      chk.detail = r.witness;
    }
    rep.checks.push_back(chk);
  }

  {
    GKCheck chk{"G = -J1 J2 is a generalized metric", true, ""};
    GMatrix gmat = -(pair.j1.matrix() * pair.j2.matrix());
    if (!(gmat * gmat - GMatrix::identity(2 * m)).is_zero()) {
      chk.pass = false;
      chk.detail = "G^2 != 1";
    } else {
      // G = [[-g^-1 b, g^-1], [g - b g^-1 b, b g^-1]]: read g off the
      // upper-right block, then b, then verify the round trip.
      GMatrix ur = gmat.block(0, m, m, m);
      QMatrix ur_q(m, m);
      bool real_ok = true;
      for (int i = 0; i < m && real_ok; ++i)
        for (int k = 0; k < m; ++k) {
          if (!gmat(i, m + k).is_real()) {
            real_ok = false;
            break;
          }
          ur_q(i, k) = ur(i, k).re;
        }
      auto ginv_inv = real_ok ? ur_q.inverse() : std::nullopt;
      if (!real_ok || !ginv_inv) {
        chk.pass = false;
        chk.detail = "upper-right block of G is not an invertible real matrix";
      } else {
        QMatrix g = *ginv_inv;
        GMatrix lr = gmat.block(m, m, m, m);
        QMatrix b(m, m);
        bool lr_real = true;
        for (int i = 0; i < m && lr_real; ++i)
          for (int k = 0; k < m; ++k) {
            if (!lr(i, k).is_real()) {
              lr_real = false;
              break;
            }
          }
        if (!lr_real) {
          chk.pass = false;
          chk.detail = "lower-right block of G is not real";
        } else {
          for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k) b(i, k) = lr(i, k).re;
          b = b * g;  // (b g^-1) g
          try {
            GenMetric gm = make_gen_metric(g, b);
            if (!(complexify(gm.big()) - gmat).is_zero()) {
              chk.pass = false;
              chk.detail = "G does not factor through (g, b)";
            } else {
              rep.metric = gm;
            }
          } catch (const MathError& e) {
            chk.pass = false;
            chk.detail = e.what();
          }
        }
      }
    }
    rep.checks.push_back(chk);
  }

  rep.types = {type_of(pair.j1), type_of(pair.j2)};
  return rep;
}

std::map<std::pair<int, int>, GMatrix> pq_projectors(const GKPair& pair) {
  if (!(pair.j1.matrix() * pair.j2.matrix() - pair.j2.matrix() * pair.j1.matrix()).is_zero())
    throw MathError("pq_projectors: structures do not commute");
  auto p1 = uk_projectors(pair.j1);
  auto p2 = uk_projectors(pair.j2);
  std::map<std::pair<int, int>, GMatrix> out;
  for (const auto& [p, mp] : p1)
    for (const auto& [q, mq] : p2) {
      GMatrix prod = mp * mq;
      if (!prod.is_zero()) out.emplace(std::make_pair(p, q), std::move(prod));
    }
  return out;
}

}  // namespace gengeo
