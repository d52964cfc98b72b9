#include "cusps/zlinalg.hpp"

#include "cusps/normform.hpp"

namespace cusps {

Int z_ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
  // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
  Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int tmp;
    tmp = r0 - q * r1; r0 = r1; r1 = tmp;
    tmp = s0 - q * s1; s0 = s1; s1 = tmp;
    tmp = t0 - q * t1; t0 = t1; t1 = tmp;
  }
  if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
  s = s0;
  t = t0;
  return r0;
}

Int z_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

ColHnf z_col_hnf(const ZMat& a) {
  ColHnf res;
  res.h = a;
  res.u = ZMat::Identity(a.cols(), a.cols());
  ZMat& h = res.h;
  ZMat& u = res.u;
  Eigen::Index cur = 0;
  for (Eigen::Index r = 0; r < h.rows() && cur < h.cols(); ++r) {
    // Shrink row r to a single nonzero among columns >= cur.
    while (true) {
      Eigen::Index best = -1;
      int nonzero = 0;
      for (Eigen::Index j = cur; j < h.cols(); ++j) {
        if (h(r, j) == 0) continue;
        ++nonzero;
        if (best < 0 || boost::multiprecision::abs(h(r, j)) <
                            boost::multiprecision::abs(h(r, best)))
          best = j;
      }
      if (nonzero == 0) { best = -1; break; }
      if (nonzero == 1) {
        h.col(cur).swap(h.col(best));
        u.col(cur).swap(u.col(best));
        break;
      }
      for (Eigen::Index j = cur; j < h.cols(); ++j) {
        if (j == best || h(r, j) == 0) continue;
        // best has minimal magnitude, so the truncated quotient is nonzero
        // and strictly shrinks |h(r, j)|.
        Int q = h(r, j) / h(r, best);
        h.col(j) -= q * h.col(best);
        u.col(j) -= q * u.col(best);
      }
    }
    if (h(r, cur) == 0) continue;  // row had no usable entry
    if (h(r, cur) < 0) {
      h.col(cur) = -h.col(cur);
      u.col(cur) = -u.col(cur);
    }
    res.pivots.emplace_back(r, cur);
    ++cur;
  }
  return res;
}

std::optional<ZVec> z_solve(const ZMat& a, const ZVec& b) {
  ColHnf hnf = z_col_hnf(a);
  ZVec z = ZVec::Zero(a.cols());
  for (const auto& [r, c] : hnf.pivots) {
    Int acc = b(r);
    for (Eigen::Index j = 0; j < c; ++j) acc -= hnf.h(r, j) * z(j);
    if (acc % hnf.h(r, c) != 0) return std::nullopt;
    z(c) = acc / hnf.h(r, c);
  }
  if (!exact_eq(ZVec(hnf.h * z), b)) return std::nullopt;
  return ZVec(hnf.u * z);
}

ZMat z_kernel(const ZMat& a) {
  ColHnf hnf = z_col_hnf(a);
  Eigen::Index rank = static_cast<Eigen::Index>(hnf.pivots.size());
  ZMat k(a.cols(), a.cols() - rank);
  for (Eigen::Index j = rank; j < a.cols(); ++j) k.col(j - rank) = hnf.u.col(j);
  return k;
}

Int z_lattice_index(const ZMat& a) {
  ColHnf hnf = z_col_hnf(a);
  if (static_cast<Eigen::Index>(hnf.pivots.size()) != a.rows())
    fail(errc::internal, "lattice index of a rank-deficient span");
  Int idx = 1;
  for (const auto& [r, c] : hnf.pivots) idx *= hnf.h(r, c);
  return idx;
}

namespace {

struct ZOps {
  using Elem = Int;
  static bool is_zero(const Int& a) { return a == 0; }
  static bool pivot_less(const Int& a, const Int& b) {
    return boost::multiprecision::abs(a) < boost::multiprecision::abs(b);
  }
  static bool divides(const Int& a, const Int& b) { return b % a == 0; }
  static Int quot(const Int& a, const Int& b) { return b / a; }
  static void bezout(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
    g = z_ext_gcd(a, b, s, t);
  }
  static Int canonical(const Int& a) { return boost::multiprecision::abs(a); }
};

}  // namespace

SmithForm z_smith(const ZMat& a) {
  auto r = smith_form<ZOps>(a, ZOps{});
  return SmithForm{r.d, r.u, r.v};
}

std::vector<Int> z_elementary_divisors(const ZMat& a) {
  SmithForm s = z_smith(a);
  std::vector<Int> divs;
  Eigen::Index n = std::min(s.d.rows(), s.d.cols());
  for (Eigen::Index i = 0; i < n; ++i)
    if (s.d(i, i) > 1) divs.push_back(s.d(i, i));
  return divs;
}

FormSignature q_signature(const QMat& g0) {
  if (g0.rows() != g0.cols()) fail(errc::internal, "signature of non-square matrix");
  QMat g = g0;
  std::vector<Eigen::Index> active(g.rows());
  for (Eigen::Index i = 0; i < g.rows(); ++i) active[i] = i;
  FormSignature sig;
  while (!active.empty()) {
    Eigen::Index diag = -1;
    for (Eigen::Index i : active)
      if (g(i, i) != 0) { diag = i; break; }
    if (diag >= 0) {
      Rat p = g(diag, diag);
      (p > 0 ? sig.pos : sig.neg) += 1;
      std::erase(active, diag);
      for (Eigen::Index r : active)
        for (Eigen::Index s : active)
          if (r <= s) {
            Rat val = g(r, s) - g(r, diag) * g(s, diag) / p;
            g(r, s) = val;
            g(s, r) = val;
          }
      continue;
    }
    Eigen::Index bi = -1, bj = -1;
    for (size_t ii = 0; ii < active.size() && bi < 0; ++ii)
      for (size_t jj = ii + 1; jj < active.size(); ++jj)
        if (g(active[ii], active[jj]) != 0) {
          bi = active[ii];
          bj = active[jj];
          break;
        }
    if (bi < 0)
      fail(errc::degenerate, "form is singular", {{"index", static_cast<long>(active.front())}});
    // Hyperbolic block [[0, a], [a, 0]] contributes one plus and one minus.
    Rat a = g(bi, bj);
    sig.pos += 1;
    sig.neg += 1;
    std::erase(active, bi);
    std::erase(active, bj);
    for (Eigen::Index r : active)
      for (Eigen::Index s : active)
        if (r <= s) {
          Rat val = g(r, s) - (g(r, bi) * g(s, bj) + g(r, bj) * g(s, bi)) / a;
          g(r, s) = val;
          g(s, r) = val;
        }
  }
  return sig;
}

Rat q_det(const QMat& m0) {
  if (m0.rows() != m0.cols()) fail(errc::internal, "determinant of non-square matrix");
  QMat m = m0;
  Rat det(1);
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index r = c; r < m.rows(); ++r)
      if (m(r, c) != 0) { p = r; break; }
    if (p < 0) return Rat(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Eigen::Index r = c + 1; r < m.rows(); ++r) {
      Rat f = m(r, c) / m(c, c);
      if (f != 0) m.row(r) -= f * m.row(c);
    }
  }
  return det;
}

FieldElem f_det(const FMat& m0) {
  if (m0.rows() != m0.cols()) fail(errc::internal, "determinant of non-square matrix");
  FMat m = m0;
  FieldElem det(1);
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index r = c; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) { p = r; break; }
    if (p < 0) return FieldElem(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det = det * m(c, c);
    for (Eigen::Index r = c + 1; r < m.rows(); ++r) {
      if (m(r, c).is_zero()) continue;
      FieldElem f = m(r, c) / m(c, c);
      for (Eigen::Index j = c; j < m.cols(); ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

FMat f_inverse(const FMat& m0) {
  if (m0.rows() != m0.cols()) fail(errc::internal, "inverse of non-square matrix");
  Eigen::Index n = m0.rows();
  FMat m = m0;
  FMat inv = FMat::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index r = c; r < n; ++r)
      if (!m(r, c).is_zero()) { p = r; break; }
    if (p < 0) fail(errc::degenerate, "matrix is singular", {{"index", static_cast<long>(c)}});
    if (p != c) {
      m.row(p).swap(m.row(c));
      inv.row(p).swap(inv.row(c));
    }
    FieldElem piv = m(c, c);
    for (Eigen::Index j = 0; j < n; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      FieldElem f = m(r, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace cusps
