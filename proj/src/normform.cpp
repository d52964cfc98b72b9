#include "cusps/normform.hpp"

#include "cusps/numberring.hpp"

namespace cusps {

namespace {

struct OfOps {
  int d;
  using Elem = FieldElem;
  bool is_zero(const FieldElem& a) const { return a.is_zero(); }
  bool pivot_less(const FieldElem& a, const FieldElem& b) const {
    return a.norm() < b.norm();
  }
  bool divides(const FieldElem& a, const FieldElem& b) const {
    return of_divides(a, b, d);
  }
  FieldElem quot(const FieldElem& a, const FieldElem& b) const { return b / a; }
  void bezout(const FieldElem& a, const FieldElem& b, FieldElem& g, FieldElem& s,
              FieldElem& t) const {
    OfBezout bz = of_bezout({a, b}, d);
    g = bz.g;
    s = bz.coeffs[0];
    t = bz.coeffs[1];
  }
  FieldElem canonical(const FieldElem& a) const { return canonical_associate(a, d); }
};

}  // namespace

OfSmithForm of_smith(const FMat& a, int field_d) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!is_integral(a(i, j), field_d))
        fail(errc::not_integral, "Smith form requires integral entries",
             {{"row", static_cast<long>(i)}, {"col", static_cast<long>(j)},
              {"entry", to_string(a(i, j))}});
  auto r = smith_form<OfOps>(a, OfOps{field_d});
  return OfSmithForm{r.d, r.u, r.v};
}

FMat of_kernel(const FMat& a, int field_d) {
  OfSmithForm s = of_smith(a, field_d);
  std::vector<Eigen::Index> zero_cols;
  Eigen::Index n = a.cols();
  for (Eigen::Index j = 0; j < n; ++j) {
    bool zero = true;
    for (Eigen::Index i = 0; i < a.rows() && zero; ++i)
      if (!s.d(i, j).is_zero()) zero = false;
    if (zero) zero_cols.push_back(j);
  }
  FMat k(n, static_cast<Eigen::Index>(zero_cols.size()));
  for (size_t t = 0; t < zero_cols.size(); ++t) k.col(t) = s.v.col(zero_cols[t]);
  return k;
}

}  // namespace cusps
