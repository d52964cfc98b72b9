#pragma once

// Eigen glue: dense matrices over exact scalars only (no floating point).

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include "cusps/field.hpp"

// Boost's byte-container detection dereferences C::const_iterator, which is
// void for two-dimensional Eigen expressions; that turns overload resolution
// of Matrix * Vector into a hard error.  Opt the Eigen types out explicitly.
namespace boost::multiprecision::detail {

template <typename S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : public boost::false_type {};

template <typename X, int R, int C, bool P>
struct is_byte_container<Eigen::Block<X, R, C, P>> : public boost::false_type {};

template <typename L, typename Rhs, int O>
struct is_byte_container<Eigen::Product<L, Rhs, O>> : public boost::false_type {};

template <typename X>
struct is_byte_container<Eigen::Transpose<X>> : public boost::false_type {};

template <typename Op, typename L, typename Rhs>
struct is_byte_container<Eigen::CwiseBinaryOp<Op, L, Rhs>> : public boost::false_type {};

template <typename Op, typename X>
struct is_byte_container<Eigen::CwiseUnaryOp<Op, X>> : public boost::false_type {};

template <typename Op, typename X>
struct is_byte_container<Eigen::CwiseNullaryOp<Op, X>> : public boost::false_type {};

}  // namespace boost::multiprecision::detail

namespace Eigen {

template <>
struct NumTraits<cusps::FieldElem> : GenericNumTraits<cusps::FieldElem> {
  typedef cusps::FieldElem Real;
  typedef cusps::FieldElem NonInteger;
  typedef cusps::FieldElem Nested;
  typedef cusps::FieldElem Literal;
  enum {
    IsComplex = 0,  // conjugation is handled explicitly, never via .adjoint()
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace cusps {

using FMat = Eigen::Matrix<FieldElem, Eigen::Dynamic, Eigen::Dynamic>;
using FVec = Eigen::Matrix<FieldElem, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using ZMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using ZVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

// Entrywise conjugate (transpose-free; .adjoint() is deliberately avoided).
inline FMat conj_entries(const FMat& m) {
  FMat r = m;
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j) r(i, j) = r(i, j).conj();
  return r;
}

inline FVec conj_entries(const FVec& v) {
  FVec r = v;
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) = r(i).conj();
  return r;
}

template <typename Mat>
bool exact_eq(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <typename Mat>
bool is_zero_matrix(const Mat& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == typename Mat::Scalar(0))) return false;
  return true;
}

}  // namespace cusps
