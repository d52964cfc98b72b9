#pragma once

// Smith normal form over a Euclidean-like ring, templated on an operations
// bundle.  Instantiated for Z and for the rings of integers handled here
// (all norm-Euclidean or close enough: the bezout callback hides the gap).
//
// Ops contract:
//   using Elem;
//   bool is_zero(e); bool pivot_less(a, b);          // strict norm order
//   bool divides(a, b);                              // a | b, a nonzero
//   Elem quot(a, b);                                 // b / a, exact
//   void bezout(a, b, g, s, t);                      // s a + t b = g = gcd
//   Elem canonical(e);                               // associate normal form

#include <vector>

#include "cusps/eigen.hpp"

namespace cusps {

template <class Ops>
struct SmithResultT {
  using Mat = Eigen::Matrix<typename Ops::Elem, Eigen::Dynamic, Eigen::Dynamic>;
  Mat d, u, v;  // u * a * v = d
};

template <class Ops>
SmithResultT<Ops> smith_form(const typename SmithResultT<Ops>::Mat& a, Ops ops) {
  using Elem = typename Ops::Elem;
  using Mat = typename SmithResultT<Ops>::Mat;
  Mat d = a;
  Mat u = Mat::Identity(a.rows(), a.rows());
  Mat v = Mat::Identity(a.cols(), a.cols());

  auto row_bezout = [&](Eigen::Index t, Eigen::Index i) {
    // Rows t, i -> [[s, w], [-b/g, a/g]] acting on the left.
    Elem aa = d(t, t), bb = d(i, t), g, s, w;
    ops.bezout(aa, bb, g, s, w);
    Elem p = ops.quot(g, aa), q = ops.quot(g, bb);
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      Elem rt = s * d(t, j) + w * d(i, j);
      Elem ri = p * d(i, j) - q * d(t, j);
      d(t, j) = rt;
      d(i, j) = ri;
    }
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
      Elem rt = s * u(t, j) + w * u(i, j);
      Elem ri = p * u(i, j) - q * u(t, j);
      u(t, j) = rt;
      u(i, j) = ri;
    }
  };
  auto col_bezout = [&](Eigen::Index t, Eigen::Index j) {
    Elem aa = d(t, t), bb = d(t, j), g, s, w;
    ops.bezout(aa, bb, g, s, w);
    Elem p = ops.quot(g, aa), q = ops.quot(g, bb);
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
      Elem ct = d(i, t) * s + d(i, j) * w;
      Elem cj = d(i, j) * p - d(i, t) * q;
      d(i, t) = ct;
      d(i, j) = cj;
    }
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      Elem ct = v(i, t) * s + v(i, j) * w;
      Elem cj = v(i, j) * p - v(i, t) * q;
      v(i, t) = ct;
      v(i, j) = cj;
    }
  };

  Eigen::Index n = std::min(d.rows(), d.cols());
  for (Eigen::Index t = 0; t < n; ++t) {
    // Move a minimal-norm nonzero entry of the trailing block to (t, t).
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < d.rows(); ++i)
      for (Eigen::Index j = t; j < d.cols(); ++j) {
        if (ops.is_zero(d(i, j))) continue;
        if (pi < 0 || ops.pivot_less(d(i, j), d(pi, pj))) { pi = i; pj = j; }
      }
    if (pi < 0) break;
    if (pi != t) { d.row(pi).swap(d.row(t)); u.row(pi).swap(u.row(t)); }
    if (pj != t) { d.col(pj).swap(d.col(t)); v.col(pj).swap(v.col(t)); }

    while (true) {
      bool touched = false;
      for (Eigen::Index i = t + 1; i < d.rows(); ++i) {
        if (ops.is_zero(d(i, t))) continue;
        touched = true;
        if (ops.divides(d(t, t), d(i, t))) {
          Elem q = ops.quot(d(t, t), d(i, t));
          for (Eigen::Index j = 0; j < d.cols(); ++j) d(i, j) = d(i, j) - q * d(t, j);
          for (Eigen::Index j = 0; j < u.cols(); ++j) u(i, j) = u(i, j) - q * u(t, j);
        } else {
          row_bezout(t, i);
        }
      }
      for (Eigen::Index j = t + 1; j < d.cols(); ++j) {
        if (ops.is_zero(d(t, j))) continue;
        touched = true;
        if (ops.divides(d(t, t), d(t, j))) {
          Elem q = ops.quot(d(t, t), d(t, j));
          for (Eigen::Index i = 0; i < d.rows(); ++i) d(i, j) = d(i, j) - q * d(i, t);
          for (Eigen::Index i = 0; i < v.rows(); ++i) v(i, j) = v(i, j) - q * v(i, t);
        } else {
          col_bezout(t, j);
        }
      }
      if (touched) continue;
      // Row and column are clear; enforce pivot | trailing block.
      bool fixed = true;
      for (Eigen::Index i = t + 1; i < d.rows() && fixed; ++i)
        for (Eigen::Index j = t + 1; j < d.cols() && fixed; ++j)
          if (!ops.is_zero(d(i, j)) && !ops.divides(d(t, t), d(i, j))) {
            for (Eigen::Index jj = 0; jj < d.cols(); ++jj) d(t, jj) = d(t, jj) + d(i, jj);
            for (Eigen::Index jj = 0; jj < u.cols(); ++jj) u(t, jj) = u(t, jj) + u(i, jj);
            fixed = false;
          }
      if (fixed) break;
    }

    // Normalize the pivot to its canonical associate.
    Elem c = ops.canonical(d(t, t));
    if (!(c == d(t, t))) {
      Elem unit = ops.quot(d(t, t), c);  // exact by construction
      for (Eigen::Index j = 0; j < d.cols(); ++j) d(t, j) = unit * d(t, j);
      for (Eigen::Index j = 0; j < u.cols(); ++j) u(t, j) = unit * u(t, j);
    }
  }
  return SmithResultT<Ops>{d, u, v};
}

struct OfSmithForm {
  FMat d, u, v;  // u * a * v = d, diagonal canonical associates, chain divisibility
};

// Smith form over the ring of integers of Q(sqrt(field_d)); entries of a must
// be integral.
OfSmithForm of_smith(const FMat& a, int field_d);

// Columns spanning { x integral : a x = 0 }, saturated.
FMat of_kernel(const FMat& a, int field_d);

}  // namespace cusps
