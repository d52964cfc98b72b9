#include "cusps/audit.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cusps/cusp.hpp"
#include "cusps/data.hpp"
#include "cusps/field.hpp"
#include "cusps/lattice.hpp"
#include "cusps/numberring.hpp"
#include "cusps/zlinalg.hpp"

namespace cusps {
namespace {

using nlohmann::json;

// One audit case under construction; claims keep their insertion order.
class CaseLog {
 public:
  CaseLog(std::string id, std::string description) {
    doc_["id"] = std::move(id);
    doc_["description"] = std::move(description);
    doc_["claims"] = json::array();
  }

  void inputs(json j) { doc_["inputs"] = std::move(j); }

  void claim(const std::string& text, bool ok, json computed, json witness = json()) {
    json c;
    c["claim"] = text;
    c["computed"] = std::move(computed);
    c["verdict"] = ok ? "confirmed" : "refuted";
    if (!ok) c["witness"] = witness.is_null() ? c["computed"] : std::move(witness);
    doc_["claims"].push_back(std::move(c));
  }

  void not_applicable(const std::string& text, const std::string& note) {
    json c;
    c["claim"] = text;
    c["verdict"] = "not-applicable";
    c["note"] = note;
    doc_["claims"].push_back(std::move(c));
  }

  json take() { return std::move(doc_); }

 private:
  json doc_;
};

HermitianLattice example_lattice(const std::string& name) {
  return lattice_from_json(json::parse(embedded_data().at("examples/" + name)));
}

FieldElem fpow(const FieldElem& base, int n) {
  FieldElem r(1);
  for (int i = 0; i < n; ++i) r = r * base;
  return r;
}

FMat scalar_mat(Eigen::Index n, const FieldElem& z) {
  FMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = i == j ? z : FieldElem(0);
  return m;
}

FMat scaled(const FieldElem& zeta, FMat m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) *= zeta;
  return m;
}

FVec basis_sum(Eigen::Index rank, const std::vector<Eigen::Index>& idx) {
  FVec v(rank);
  for (Eigen::Index i = 0; i < rank; ++i) v(i) = FieldElem(0);
  for (Eigen::Index i : idx) v(i) = FieldElem(1);
  return v;
}

FVec class_vec(Eigen::Index rank, Eigen::Index at, const FieldElem& val) {
  FVec v(rank);
  for (Eigen::Index i = 0; i < rank; ++i) v(i) = FieldElem(0);
  v(at) = val;
  return v;
}

HermitianLattice direct_sum(const std::vector<HermitianLattice>& parts) {
  Eigen::Index n = 0;
  for (const HermitianLattice& p : parts) n += p.rank();
  FMat h(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) h(i, j) = FieldElem(0);
  Eigen::Index at = 0;
  for (const HermitianLattice& p : parts) {
    for (Eigen::Index i = 0; i < p.rank(); ++i)
      for (Eigen::Index j = 0; j < p.rank(); ++j) h(at + i, at + j) = p.gram(i, j);
    at += p.rank();
  }
  return HermitianLattice{parts.front().d, h};
}

QMat to_q(const ZMat& m) {
  QMat q(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
  return q;
}

json zmat_json(const ZMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

json divisor_strings(const std::vector<FieldElem>& ds) {
  json a = json::array();
  for (const FieldElem& z : ds) a.push_back(to_string(z));
  return a;
}

void signature_claim(CaseLog& log, const HermitianLattice& lat, int pos, int neg) {
  Signature s = validate(lat);
  log.claim("the Gram matrix is integral with signature (" + std::to_string(pos) +
                ", " + std::to_string(neg) + ")",
            s.pos == pos && s.neg == neg, json{{"pos", s.pos}, {"neg", s.neg}});
}

// Expected divisors are given in divisibility order and canonicalized here.
void disc_claim(CaseLog& log, const std::string& text, const HermitianLattice& lat,
                std::vector<FieldElem> expected) {
  for (FieldElem& z : expected) z = canonical_associate(z, lat.d);
  DiscGroup dg = discriminant_group(lat);
  bool ok = dg.divisors.size() == expected.size();
  for (std::size_t i = 0; ok && i < expected.size(); ++i)
    ok = dg.divisors[i] == expected[i];
  log.claim(text, ok,
            json{{"divisors", divisor_strings(dg.divisors)},
                 {"order", int_to_json(dg.order)}},
            json{{"computed", divisor_strings(dg.divisors)},
                 {"expected", divisor_strings(expected)}});
}

void dual_class_claim(CaseLog& log, const std::string& text,
                      const HermitianLattice& lat, const FVec& cls) {
  bool ok = in_dual(lat, cls);
  log.claim(text, ok, json{{"in_dual", ok}},
            json{{"class_vector", fvec_to_json(cls)}});
}

bool isotropy_claim(CaseLog& log, const std::string& text,
                    const HermitianLattice& lat, const FVec& v) {
  FieldElem n = inner(lat, v, v);
  log.claim(text, n.is_zero(),
            json{{"norm", to_string(n)}, {"vector", fvec_to_json(v)}},
            json{{"norm", to_string(n)}});
  return n.is_zero();
}

void membership_claim(CaseLog& log, const std::string& text, const FMat& m,
                      const HermitianLattice& lat, const SubgroupSpec& spec,
                      bool claimed_member) {
  GroupCheck gc = in_group(m, lat, spec);
  json witness;
  if (gc.ok != claimed_member)
    witness = gc.ok ? json{{"member_matrix", fmat_to_json(m)}} : gc.certificate;
  log.claim(text, gc.ok == claimed_member, json{{"member", gc.ok}},
            std::move(witness));
}

void type_claim(CaseLog& log, const std::string& text, const HermitianLattice& lat,
                const FVec& e, const SubgroupSpec& spec,
                const std::string& expect_name, const Int& expect_m) {
  CuspType t = classify(lat, e, spec);
  log.claim(text, t.name == expect_name && t.m == expect_m,
            json{{"type", t.name}, {"index", int_to_json(t.m)}});
}

void trace_even_unimodular_claim(CaseLog& log, const HermitianLattice& lat,
                                 int pos, int neg, const std::string& model) {
  ZMat t = trace_gram(lat);
  bool even = true;
  for (Eigen::Index i = 0; i < t.rows(); ++i)
    if (t(i, i) % 2 != 0) even = false;
  std::vector<Int> divs = z_elementary_divisors(t);
  json jdivs = json::array();
  for (const Int& v : divs) jdivs.push_back(int_to_json(v));
  FormSignature sig = q_signature(to_q(t));
  log.claim("the trace form is even unimodular of signature (" +
                std::to_string(pos) + ", " + std::to_string(neg) +
                "), hence the quadratic lattice " + model,
            even && divs.empty() && sig.pos == pos && sig.neg == neg,
            json{{"even", even},
                 {"nontrivial_elementary_divisors", jdivs},
                 {"pos", sig.pos},
                 {"neg", sig.neg}});
}

const char* kNeedsIsotropy =
    "depends on the isotropy of the printed vector, which the computation refuted";
const char* kNeedsFullGroup =
    "deciding this index needs generators of the full integral unitary group, "
    "which the tool does not enumerate";
const char* kAnalytic =
    "rests on analytic input (modular forms, Kodaira dimension) outside exact "
    "lattice arithmetic";

// ---- Q(sqrt(-1)): diag(-1)^b plus a plane paired by eta^a, a = 2b+1 ---------

json gaussian_family_case(int b) {
  const int d = -1;
  const int a = 2 * b + 1;
  HermitianLattice lat =
      example_lattice("gaussian_family_b" + std::to_string(b) + ".json");
  const Eigen::Index rank = lat.rank();
  const FieldElem eta(Rat(1), Rat(1), d);

  FVec cls = class_vec(rank, b, FieldElem(1) / fpow(eta, a + 2));
  SubgroupSpec spec = SubgroupSpec::fix_classes({cls});
  std::vector<Eigen::Index> all;
  for (Eigen::Index i = 0; i < rank; ++i) all.push_back(i);
  FVec ell = basis_sum(rank, all);

  CaseLog log("gaussian-family-b" + std::to_string(b),
              "diag(-1)^" + std::to_string(b) +
                  " plus a hyperbolic plane paired by eta^" + std::to_string(a) +
                  " over Q(sqrt(-1)), eta = 1+sqrt(-1); the subgroup fixes the "
                  "dual class v/eta^" + std::to_string(a + 2));
  log.inputs(json{{"lattice", lattice_to_json(lat)},
                  {"a", a},
                  {"b", b},
                  {"fixed_class", fvec_to_json(cls)},
                  {"vector_as_printed", fvec_to_json(ell)}});

  signature_claim(log, lat, 1, b + 1);

  std::vector<FieldElem> expect;
  for (int i = 0; i < b; ++i) expect.push_back(fpow(eta, 2));
  expect.push_back(fpow(eta, a + 2));
  expect.push_back(fpow(eta, a + 2));
  disc_claim(log,
             "the discriminant group is (O/eta^2)^" + std::to_string(b) +
                 " x (O/eta^" + std::to_string(a + 2) + ")^2",
             lat, expect);

  dual_class_claim(log,
                   "v/eta^" + std::to_string(a + 2) +
                       " is a class of the discriminant group",
                   lat, cls);
  log.not_applicable(
      "the class-fixing subgroup contains the discriminant kernel with index "
      "eta^" + std::to_string(2 * a + 2 * b + 4),
      kNeedsFullGroup);

  bool iso = isotropy_claim(
      log, "the vector e_1 + ... + e_b + v + w is isotropic", lat, ell);

  membership_claim(log, "-id lies outside the class-fixing subgroup",
                   scalar_mat(rank, FieldElem(-1)), lat, spec, false);
  membership_claim(log, "sqrt(-1) id lies outside the class-fixing subgroup",
                   scalar_mat(rank, FieldElem::sqrt_d(d)), lat, spec, false);

  const std::string tname =
      "-sqrt(-1) T_lambda along the vector, lambda = 1/2^" +
      std::to_string(b + 1) + ", lies in the class-fixing subgroup";
  const std::string iname =
      "the vector spans an irregular cusp of branch index 4";
  if (iso) {
    Rat lambda(Int(1), Int(1) << (b + 1));
    membership_claim(log, tname,
                     scaled(-FieldElem::sqrt_d(d), transvection(lat, ell, lambda)),
                     lat, spec, true);
    type_claim(log, iname, lat, ell, spec, "I4", 4);
  } else {
    log.not_applicable(tname, kNeedsIsotropy);
    log.not_applicable(iname, kNeedsIsotropy);
  }
  return log.take();
}

// ---- Q(sqrt(-1)): diag(-1/2, -1/2) plus a plane paired by conj(eta)/2 -------

json gaussian_half_case() {
  const int d = -1;
  HermitianLattice lat = example_lattice("gaussian_half_scaled.json");
  const FieldElem eta(Rat(1), Rat(1), d);
  const FieldElem i = FieldElem::sqrt_d(d);

  FVec cls = class_vec(4, 2, FieldElem(1) / eta);
  SubgroupSpec spec = SubgroupSpec::fix_classes({cls});
  FVec ell = basis_sum(4, {0, 1, 2, 3});

  CaseLog log("gaussian-half-scaled",
              "diag(-1/2, -1/2) plus a hyperbolic plane paired by "
              "(1-sqrt(-1))/2 over Q(sqrt(-1)); the Gram entries lie in the "
              "inverse different but not all in the ring of integers; the "
              "subgroup fixes the dual class v/eta");
  log.inputs(json{{"lattice", lattice_to_json(lat)},
                  {"fixed_class", fvec_to_json(cls)},
                  {"vector_as_printed", fvec_to_json(ell)}});

  signature_claim(log, lat, 1, 3);
  disc_claim(log, "the discriminant group is (O/eta)^2", lat, {eta, eta});
  dual_class_claim(log, "v/eta is a class of the discriminant group", lat, cls);
  log.not_applicable(
      "the class-fixing subgroup contains the discriminant kernel with index eta",
      kNeedsFullGroup);

  bool iso = isotropy_claim(log, "the vector e + f + v + w is isotropic", lat, ell);

  membership_claim(log, "-id lies in the class-fixing subgroup",
                   scalar_mat(4, FieldElem(-1)), lat, spec, true);
  membership_claim(log, "sqrt(-1) id lies outside the class-fixing subgroup",
                   scalar_mat(4, i), lat, spec, false);

  const std::string tname =
      "sqrt(-1) T_lambda along the vector, lambda = -1, lies in the "
      "class-fixing subgroup";
  const std::string iname =
      "the vector spans a special-irregular cusp of branch index 2";
  if (iso) {
    membership_claim(log, tname, scaled(i, transvection(lat, ell, Rat(-1))),
                     lat, spec, true);
    type_claim(log, iname, lat, ell, spec, "SI2", 2);
  } else {
    log.not_applicable(tname, kNeedsIsotropy);
    log.not_applicable(iname, kNeedsIsotropy);
  }
  return log.take();
}

// ---- Q(sqrt(-3)): diag(-1) plus a plane paired by a primitive cube root ----

json eisenstein_cube_case() {
  const int d = -3;
  HermitianLattice lat = example_lattice("eisenstein_cube_pairing.json");
  const FieldElem omega(Rat(-1, 2), Rat(1, 2), d);  // primitive cube root of 1
  const FieldElem s3 = FieldElem::sqrt_d(d);

  FVec cls = class_vec(3, 2, FieldElem(1) / s3);
  SubgroupSpec spec = SubgroupSpec::fix_classes({cls});
  FVec ell = basis_sum(3, {0, 1, 2});

  CaseLog log("eisenstein-cube-pairing",
              "diag(-1) plus a hyperbolic plane paired by the primitive cube "
              "root (-1+sqrt(-3))/2 over Q(sqrt(-3)); the subgroup fixes the "
              "dual class w/sqrt(-3)");
  log.inputs(json{{"lattice", lattice_to_json(lat)},
                  {"fixed_class", fvec_to_json(cls)},
                  {"vector_as_printed", fvec_to_json(ell)}});

  signature_claim(log, lat, 1, 2);
  disc_claim(log, "the discriminant group is (O/sqrt(-3))^3", lat, {s3, s3, s3});
  dual_class_claim(log, "w/sqrt(-3) is a class of the discriminant group", lat, cls);
  log.not_applicable(
      "the class-fixing subgroup contains the discriminant kernel with index 3",
      kNeedsFullGroup);

  bool iso = isotropy_claim(log, "the vector e + v + w is isotropic", lat, ell);

  membership_claim(log,
                   "omega id lies outside the class-fixing subgroup, omega = "
                   "(-1+sqrt(-3))/2",
                   scalar_mat(3, omega), lat, spec, false);

  const std::string t_in =
      "omega T_lambda along the vector, lambda = -1/2, lies in the "
      "class-fixing subgroup";
  const std::string t_out =
      "-omega T_lambda along the vector, lambda = -1/2, lies outside the "
      "class-fixing subgroup";
  const std::string iname =
      "the vector spans an irregular cusp of branch index 3";
  if (iso) {
    FMat t = transvection(lat, ell, Rat(-1, 2));
    membership_claim(log, t_in, scaled(omega, t), lat, spec, true);
    membership_claim(log, t_out, scaled(-omega, t), lat, spec, false);
    type_claim(log, iname, lat, ell, spec, "I3", 3);
  } else {
    log.not_applicable(t_in, kNeedsIsotropy);
    log.not_applicable(t_out, kNeedsIsotropy);
    log.not_applicable(iname, kNeedsIsotropy);
  }
  return log.take();
}

// ---- Q(sqrt(-3)): diag(-1)^3 plus a plane paired by (3+sqrt(-3))/2 ----------

json eisenstein_six_case() {
  const int d = -3;
  HermitianLattice lat = example_lattice("eisenstein_index_six.json");
  const FieldElem omega(Rat(-1, 2), Rat(1, 2), d);
  const FieldElem s3 = FieldElem::sqrt_d(d);

  FVec cls = class_vec(5, 3, FieldElem(Rat(1, 3)));
  SubgroupSpec spec = SubgroupSpec::fix_classes({cls});
  FVec ell = basis_sum(5, {0, 1, 2, 3, 4});

  CaseLog log("eisenstein-index-six",
              "diag(-1)^3 plus a hyperbolic plane paired by (3+sqrt(-3))/2 "
              "over Q(sqrt(-3)); the subgroup fixes the dual class v/3.  The "
              "printed vector names a sixth generator the rank-5 basis does "
              "not have; the audit evaluates the well-formed reading that "
              "drops the undefined term");
  log.inputs(json{{"lattice", lattice_to_json(lat)},
                  {"fixed_class", fvec_to_json(cls)},
                  {"vector_as_read", fvec_to_json(ell)}});

  signature_claim(log, lat, 1, 4);
  disc_claim(log,
             "the discriminant group is (O/sqrt(-3))^3 x (O/3)^2", lat,
             {s3, s3, s3, FieldElem(3), FieldElem(3)});
  dual_class_claim(log, "v/3 is a class of the discriminant group", lat, cls);
  log.not_applicable(
      "the class-fixing subgroup contains the discriminant kernel with index "
      "9 sqrt(-3)",
      kNeedsFullGroup);

  bool iso = isotropy_claim(
      log, "the vector e_1 + e_2 + e_3 + v + w is isotropic", lat, ell);

  membership_claim(log, "-id lies outside the class-fixing subgroup",
                   scalar_mat(5, FieldElem(-1)), lat, spec, false);
  membership_claim(log,
                   "omega id lies outside the class-fixing subgroup, omega = "
                   "(-1+sqrt(-3))/2",
                   scalar_mat(5, omega), lat, spec, false);

  const std::string tname =
      "-omega T_lambda along the vector, lambda = -1/6, lies in the "
      "class-fixing subgroup";
  const std::string iname =
      "the vector spans an irregular cusp of branch index 6";
  if (iso) {
    membership_claim(log, tname,
                     scaled(-omega, transvection(lat, ell, Rat(-1, 6))), lat,
                     spec, true);
    type_claim(log, iname, lat, ell, spec, "I6", 6);
  } else {
    log.not_applicable(tname, kNeedsIsotropy);
    log.not_applicable(iname, kNeedsIsotropy);
  }
  return log.take();
}

// ---- generic field: the plane paired by sqrt(d) itself ----------------------

json generic_case(int d, const std::string& file) {
  HermitianLattice lat = example_lattice(file);
  const bool one4 = field_one_mod4(d);

  FVec cls = class_vec(2, 0, FieldElem(one4 ? Rat(-1, -d) : Rat(-1, -2 * d)));
  SubgroupSpec spec = SubgroupSpec::fix_classes({cls});
  FVec ell = basis_sum(2, {0, 1});
  const std::string clsname = one4 ? "v/eta^2" : "v/(2 eta^2)";

  CaseLog log("generic-scaled-d" + std::to_string(d),
              "the rank-2 plane paired by eta = sqrt(" + std::to_string(d) +
                  ") over Q(sqrt(" + std::to_string(d) + ")); the subgroup "
                  "fixes the dual class " + clsname + ".  The printed vector "
                  "names two generators the rank-2 basis does not have; the "
                  "audit evaluates the well-formed reading that drops the "
                  "undefined terms");
  log.inputs(json{{"lattice", lattice_to_json(lat)},
                  {"fixed_class", fvec_to_json(cls)},
                  {"vector_as_read", fvec_to_json(ell)}});

  signature_claim(log, lat, 1, 1);
  dual_class_claim(log, clsname + " is a class of the discriminant group", lat,
                   cls);

  bool iso = isotropy_claim(log, "the vector v + w is isotropic", lat, ell);

  membership_claim(log, "-id lies outside the class-fixing subgroup",
                   scalar_mat(2, FieldElem(-1)), lat, spec, false);

  const std::string tname =
      "-T_lambda along the vector, lambda = -1/" + std::to_string(d) +
      " = 1/" + std::to_string(-d) + ", lies in the class-fixing subgroup";
  const std::string iname =
      "the vector spans an irregular cusp of branch index 2";
  if (iso) {
    membership_claim(log, tname,
                     scaled(FieldElem(-1), transvection(lat, ell, Rat(1, -d))),
                     lat, spec, true);
    type_claim(log, iname, lat, ell, spec, "I2", 2);
  } else {
    log.not_applicable(tname, kNeedsIsotropy);
    log.not_applicable(iname, kNeedsIsotropy);
  }
  return log.take();
}

// ---- trace-form identities over Q(sqrt(-2)) ---------------------------------

json trace_hyperbolic_case() {
  HermitianLattice lat = example_lattice("hyperbolic_unimodular_m2.json");
  CaseLog log("trace-form-hyperbolic",
              "the rank-2 lattice over Q(sqrt(-2)) paired through the inverse "
              "different 1/(2 sqrt(-2))");
  log.inputs(json{{"lattice", lattice_to_json(lat)}});

  signature_claim(log, lat, 1, 1);
  DiscGroup dg = discriminant_group(lat);
  log.claim("the Hermitian lattice is unimodular", dg.order == 1,
            json{{"disc_order", int_to_json(dg.order)}});
  trace_even_unimodular_claim(log, lat, 2, 2, "U + U");
  return log.take();
}

json trace_e8_case() {
  HermitianLattice lat = example_lattice("e8_negative_m2.json");
  CaseLog log("trace-form-e8",
              "the rank-4 negative definite lattice over Q(sqrt(-2)) whose "
              "trace form should be the even unimodular rank-8 lattice E8(-1)");
  log.inputs(json{{"lattice", lattice_to_json(lat)}});

  signature_claim(log, lat, 0, 4);
  DiscGroup dg = discriminant_group(lat);
  log.claim("the Hermitian lattice is unimodular", dg.order == 1,
            json{{"disc_order", int_to_json(dg.order)}});
  trace_even_unimodular_claim(log, lat, 0, 8, "E8(-1)");
  return log.take();
}

json trace_rank_one_case() {
  HermitianLattice lat = example_lattice("rank_one_negative_m2.json");
  CaseLog log("trace-form-rank-one",
              "the rank-1 lattice (-1) over Q(sqrt(-2)); its trace form is the "
              "diagonal quadratic lattice diag(-2, -4)");
  log.inputs(json{{"lattice", lattice_to_json(lat)}});

  signature_claim(log, lat, 0, 1);
  DiscGroup dg = discriminant_group(lat);
  log.claim("the Hermitian lattice is unimodular", dg.order == 1,
            json{{"disc_order", int_to_json(dg.order)}});

  ZMat t = trace_gram(lat);
  bool ok = t.rows() == 2 && t(0, 0) == -2 && t(0, 1) == 0 && t(1, 0) == 0 &&
            t(1, 1) == -4;
  log.claim("the trace form is diag(-2, -4)", ok,
            json{{"trace_gram", zmat_json(t)}});
  return log.take();
}

json trace_direct_sum_case() {
  HermitianLattice uu = example_lattice("hyperbolic_unimodular_m2.json");
  HermitianLattice e8 = example_lattice("e8_negative_m2.json");

  CaseLog log("trace-form-direct-sum",
              "orthogonal complement of a norm -1 vector inside the rank-4 "
              "lattice, then the rank-13 direct sum of the rank-2 lattice, two "
              "copies of the rank-4 lattice, and that complement.  The rank-1 "
              "lattice embeds on the first basis vector, which has norm -1");

  FVec x = class_vec(4, 0, FieldElem(1));
  FieldElem n = inner(e8, x, x);
  log.inputs(json{{"embedding_vector", fvec_to_json(x)}});
  log.claim("the chosen embedding vector has norm -1", n == FieldElem(-1),
            json{{"norm", to_string(n)}});

  Complement comp = orth_complement(e8, {x});
  Signature cs = validate(comp.gram);
  log.claim("the orthogonal complement of the rank-1 lattice has rank 3 and "
            "signature (0, 3)",
            comp.gram.rank() == 3 && cs.pos == 0 && cs.neg == 3,
            json{{"rank", static_cast<int>(comp.gram.rank())},
                 {"pos", cs.pos},
                 {"neg", cs.neg}});

  std::vector<Int> cdivs = z_elementary_divisors(trace_gram(comp.gram));
  json jcdivs = json::array();
  for (const Int& v : cdivs) jcdivs.push_back(int_to_json(v));
  log.claim("the complement's trace form has elementary divisors 2 and 4, "
            "matching the removed summand diag(-2, -4)",
            cdivs.size() == 2 && cdivs[0] == 2 && cdivs[1] == 4,
            json{{"nontrivial_elementary_divisors", jcdivs}});

  HermitianLattice big = direct_sum({uu, e8, e8, comp.gram});
  Signature bs = validate(big);
  log.claim("the direct sum has signature (1, 12)",
            bs.pos == 1 && bs.neg == 12, json{{"pos", bs.pos}, {"neg", bs.neg}});

  ZMat bt = trace_gram(big);
  bool even = true;
  for (Eigen::Index i = 0; i < bt.rows(); ++i)
    if (bt(i, i) % 2 != 0) even = false;
  std::vector<Int> bdivs = z_elementary_divisors(bt);
  json jbdivs = json::array();
  for (const Int& v : bdivs) jbdivs.push_back(int_to_json(v));
  FormSignature bsig = q_signature(to_q(bt));
  log.claim("the direct sum's trace form is even of signature (2, 24) with "
            "elementary divisors 2 and 4",
            even && bsig.pos == 2 && bsig.neg == 24 && bdivs.size() == 2 &&
                bdivs[0] == 2 && bdivs[1] == 4,
            json{{"even", even},
                 {"pos", bsig.pos},
                 {"neg", bsig.neg},
                 {"nontrivial_elementary_divisors", jbdivs}});

  int count = 0;
  for (int x1 = -2; x1 <= 2; ++x1)
    for (int x2 = -2; x2 <= 2; ++x2)
      if (-2 * x1 * x1 - 4 * x2 * x2 == -2) ++count;
  log.claim("the quadratic form diag(-2, -4) represents -2 exactly twice",
            count == 2, json{{"count", count}});

  log.not_applicable(
      "a nonzero cusp form of weight 13 with determinant character exists for "
      "the discriminant kernel of the direct sum",
      kAnalytic);
  log.not_applicable(
      "the quotient variety attached to the direct sum has non-negative "
      "Kodaira dimension",
      kAnalytic);
  return log.take();
}

}  // namespace

json audit_examples() {
  json cases = json::array();
  cases.push_back(gaussian_family_case(0));
  cases.push_back(gaussian_family_case(1));
  cases.push_back(gaussian_family_case(2));
  cases.push_back(gaussian_half_case());
  cases.push_back(eisenstein_cube_case());
  cases.push_back(eisenstein_six_case());
  cases.push_back(generic_case(-2, "generic_scaled_m2.json"));
  cases.push_back(generic_case(-7, "generic_scaled_m7.json"));
  cases.push_back(trace_hyperbolic_case());
  cases.push_back(trace_e8_case());
  cases.push_back(trace_rank_one_case());
  cases.push_back(trace_direct_sum_case());

  int confirmed = 0, refuted = 0, na = 0;
  for (const json& c : cases)
    for (const json& cl : c.at("claims")) {
      const std::string v = cl.at("verdict").get<std::string>();
      if (v == "confirmed") ++confirmed;
      else if (v == "refuted") ++refuted;
      else ++na;
    }

  return json{{"cases", std::move(cases)},
              {"totals", {{"cases", 12},
                          {"claims", confirmed + refuted + na},
                          {"confirmed", confirmed},
                          {"refuted", refuted},
                          {"not_applicable", na}}}};
}

}  // namespace cusps
