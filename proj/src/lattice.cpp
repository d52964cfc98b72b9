#include "cusps/lattice.hpp"

namespace cusps {

namespace {

Rat integral_trace(const FieldElem& z) {
  Rat t = z.trace();
  if (!rat_is_int(t))
    fail(errc::internal, "trace form produced a non-integer", {{"value", to_string(t)}});
  return t;
}

}  // namespace

HermitianLattice lattice_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("gram"))
    fail(errc::bad_input, "lattice JSON needs fields 'd' and 'gram'");
  if (!j["d"].is_number_integer()) fail(errc::bad_input, "'d' must be an integer");
  int d = j["d"].get<int>();
  require_supported_field(d);
  const auto& g = j["gram"];
  if (!g.is_array() || g.empty()) fail(errc::bad_input, "'gram' must be a nonempty array");
  Eigen::Index m = static_cast<Eigen::Index>(g.size());
  FMat gram(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    if (!g[r].is_array() || static_cast<Eigen::Index>(g[r].size()) != m)
      fail(errc::bad_input, "'gram' must be square", {{"row", static_cast<long>(r)}});
    for (Eigen::Index c = 0; c < m; ++c) {
      const auto& cell = g[r][c];
      if (cell.is_array()) {
        if (cell.size() != 2 || !cell[0].is_string() || !cell[1].is_string())
          fail(errc::bad_input, "gram entry pairs must be two rational strings",
               {{"row", static_cast<long>(r)}, {"col", static_cast<long>(c)}});
        Rat x = parse_rat(cell[0].get<std::string>());
        Rat y = parse_rat(cell[1].get<std::string>());
        gram(r, c) = y == 0 ? FieldElem(x) : FieldElem(x, y, d);
      } else if (cell.is_string()) {
        gram(r, c) = parse_field_elem(cell.get<std::string>(), d);
      } else if (cell.is_number_integer()) {
        gram(r, c) = FieldElem(cell.get<long>());
      } else {
        fail(errc::bad_input, "unsupported gram entry",
             {{"row", static_cast<long>(r)}, {"col", static_cast<long>(c)}});
      }
    }
  }
  return HermitianLattice{d, gram};
}

nlohmann::json lattice_to_json(const HermitianLattice& lat) {
  nlohmann::json g = nlohmann::json::array();
  for (Eigen::Index r = 0; r < lat.rank(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < lat.rank(); ++c) {
      const FieldElem& z = lat.gram(r, c);
      row.push_back({to_string(z.x()), to_string(z.y())});
    }
    g.push_back(row);
  }
  return nlohmann::json{{"d", lat.d}, {"gram", g}};
}

Signature validate(const HermitianLattice& lat) {
  require_supported_field(lat.d);
  const FMat& h = lat.gram;
  if (h.rows() != h.cols() || h.rows() == 0)
    fail(errc::bad_input, "gram matrix must be square and nonempty");
  for (Eigen::Index r = 0; r < h.rows(); ++r) {
    if (!h(r, r).is_rational())
      fail(errc::not_hermitian, "diagonal entry is not real",
           {{"row", static_cast<long>(r)}, {"col", static_cast<long>(r)}});
    for (Eigen::Index c = 0; c < h.cols(); ++c) {
      if (h(c, r) != h(r, c).conj())
        fail(errc::not_hermitian, "gram is not conjugate-symmetric",
             {{"row", static_cast<long>(r)}, {"col", static_cast<long>(c)}});
      if (!in_inv_different(h(r, c), lat.d))
        fail(errc::not_integral, "gram entry outside the inverse different",
             {{"row", static_cast<long>(r)}, {"col", static_cast<long>(c)},
              {"entry", to_string(h(r, c))}});
    }
  }
  ZMat t = trace_gram(lat);
  QMat tq(t.rows(), t.cols());
  for (Eigen::Index i = 0; i < t.rows(); ++i)
    for (Eigen::Index j = 0; j < t.cols(); ++j) tq(i, j) = Rat(t(i, j));
  FormSignature fs;
  try {
    fs = q_signature(tq);
  } catch (const error& e) {
    if (e.code() != errc::degenerate) throw;
    nlohmann::json det = e.details();
    long idx = det.value("index", 0L);
    det["index"] = idx / 2;  // map the trace-basis index back to a lattice index
    throw error(errc::degenerate, "gram matrix is singular", det);
  }
  if (fs.pos % 2 != 0 || fs.neg % 2 != 0)
    fail(errc::internal, "trace signature is not even");
  return Signature{fs.pos / 2, fs.neg / 2};
}

FieldElem inner(const HermitianLattice& lat, const FVec& x, const FVec& y) {
  if (x.size() != lat.rank() || y.size() != lat.rank())
    fail(errc::bad_input, "vector length does not match the lattice rank");
  FieldElem acc(0);
  for (Eigen::Index r = 0; r < lat.rank(); ++r)
    for (Eigen::Index c = 0; c < lat.rank(); ++c)
      acc += x(r) * lat.gram(r, c) * y(c).conj();
  return acc;
}

bool vec_integral(const FVec& x, int d) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!is_integral(x(i), d)) return false;
  return true;
}

bool in_dual(const HermitianLattice& lat, const FVec& x) {
  for (Eigen::Index j = 0; j < lat.rank(); ++j) {
    FieldElem acc(0);
    for (Eigen::Index i = 0; i < lat.rank(); ++i) acc += lat.gram(i, j) * x(i);
    if (!in_inv_different(acc, lat.d)) return false;
  }
  return true;
}

FMat dual_coords(const HermitianLattice& lat) {
  FMat ht = lat.gram.transpose();
  FMat inv = f_inverse(ht);
  FieldElem dgen = inv_different_gen(lat.d);
  for (Eigen::Index i = 0; i < inv.rows(); ++i)
    for (Eigen::Index j = 0; j < inv.cols(); ++j) inv(i, j) *= dgen;
  return inv;
}

namespace {

// Subtract the integral part coordinate-wise so dual representatives are small.
FieldElem reduce_mod_ring(const FieldElem& z, int d) {
  auto [p, q] = omega_coords(z, d);
  Rat pf = p - Rat(rat_floor(p));
  Rat qf = q - Rat(rat_floor(q));
  FieldElem w = FieldElem::omega(d);
  return FieldElem(pf) + FieldElem(qf) * w;
}

}  // namespace

DiscGroup discriminant_group(const HermitianLattice& lat) {
  FieldElem dgen = inv_different_gen(lat.d);
  FMat m = lat.gram.transpose();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) /= dgen;
  OfSmithForm snf = of_smith(m, lat.d);

  DiscGroup out;
  for (Eigen::Index t = 0; t < m.rows(); ++t) {
    const FieldElem& c = snf.d(t, t);
    if (c.is_zero())
      fail(errc::internal, "discriminant matrix is singular");
    out.order *= rat_num(c.norm());
    if (c.norm() == 1) continue;  // unit: trivial cyclic factor
    FVec gen(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      gen(i) = reduce_mod_ring(snf.v(i, t) / c, lat.d);
    out.divisors.push_back(c);
    out.generators.push_back(gen);
  }
  return out;
}

ZMat trace_gram(const HermitianLattice& lat) {
  Eigen::Index m = lat.rank();
  FieldElem w = FieldElem::omega(lat.d);
  ZMat t(2 * m, 2 * m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index k = 0; k < m; ++k) {
      const FieldElem& h = lat.gram(j, k);
      // Basis vectors b_j, omega b_j; the pairing is conjugate-linear in the
      // second slot, so (b_j, omega b_k) picks up conj(omega).
      t(2 * j, 2 * k) = rat_num(integral_trace(h));
      t(2 * j, 2 * k + 1) = rat_num(integral_trace(w.conj() * h));
      t(2 * j + 1, 2 * k) = rat_num(integral_trace(w * h));
      t(2 * j + 1, 2 * k + 1) = rat_num(integral_trace(w * w.conj() * h));
    }
  return t;
}

QVec rational_coords(const FVec& x, int d) {
  QVec out(2 * x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    auto [p, q] = omega_coords(x(i), d);
    out(2 * i) = p;
    out(2 * i + 1) = q;
  }
  return out;
}

FVec from_rational_coords(const QVec& c, int d) {
  if (c.size() % 2 != 0) fail(errc::internal, "odd trace-coordinate length");
  FVec out(c.size() / 2);
  FieldElem w = FieldElem::omega(d);
  for (Eigen::Index i = 0; i < out.size(); ++i)
    out(i) = FieldElem(c(2 * i)) + FieldElem(c(2 * i + 1)) * w;
  return out;
}

Complement orth_complement(const HermitianLattice& lat, const std::vector<FVec>& span) {
  if (span.empty()) fail(errc::bad_input, "orthogonal complement needs a nonempty span");
  FieldElem dgen = inv_different_gen(lat.d);
  FMat constraints(static_cast<Eigen::Index>(span.size()), lat.rank());
  for (size_t k = 0; k < span.size(); ++k) {
    const FVec& s = span[k];
    if (s.size() != lat.rank())
      fail(errc::bad_input, "span vector length does not match the lattice rank");
    if (!vec_integral(s, lat.d))
      fail(errc::bad_input, "span vectors must be integral");
    for (Eigen::Index j = 0; j < lat.rank(); ++j) {
      FieldElem acc(0);
      for (Eigen::Index c = 0; c < lat.rank(); ++c) acc += lat.gram(j, c) * s(c).conj();
      constraints(static_cast<Eigen::Index>(k), j) = acc / dgen;
    }
  }
  FMat basis = of_kernel(constraints, lat.d);
  if (basis.cols() == 0)
    fail(errc::bad_input, "the given vectors span the lattice: empty complement");
  FMat g(basis.cols(), basis.cols());
  for (Eigen::Index p = 0; p < basis.cols(); ++p)
    for (Eigen::Index q = 0; q < basis.cols(); ++q)
      g(p, q) = inner(lat, basis.col(p), basis.col(q));
  return Complement{basis, HermitianLattice{lat.d, g}};
}

}  // namespace cusps
