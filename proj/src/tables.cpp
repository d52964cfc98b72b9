#include "cusps/tables.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "cusps/data.hpp"
#include "cusps/numberring.hpp"
#include "cusps/zlinalg.hpp"
#include "json.hpp"

namespace cusps {

const char* case_name(CaseKind kind) {
  switch (kind) {
    case CaseKind::idx2: return "idx2";
    case CaseKind::idx3: return "idx3";
    case CaseKind::idx4: return "idx4";
    case CaseKind::idx6: return "idx6";
    case CaseKind::sidx2: return "sidx2";
    case CaseKind::sidx3: return "sidx3";
  }
  fail(errc::internal, "unhandled case kind");
}

CaseKind parse_case(const std::string& name) {
  for (CaseKind k : {CaseKind::idx2, CaseKind::idx3, CaseKind::idx4, CaseKind::idx6,
                     CaseKind::sidx2, CaseKind::sidx3})
    if (name == case_name(k)) return k;
  fail(errc::bad_input, "unknown case name '" + name + "'");
}

CaseTag make_case(int d, CaseKind kind) {
  require_supported_field(d);
  // The test element is 2 for the plain index-2 cases; for the cases that
  // only exist thanks to the extra units of Q(sqrt -1) and Q(sqrt -3) it is
  // 1 -+ u for the extra unit u (norm 2 over d = -1; norm 3 resp. 1 over
  // d = -3, where 1 + u is itself a unit).
  switch (kind) {
    case CaseKind::idx2:
      return {d, kind, FieldElem(2)};
    case CaseKind::sidx2:
      if (d == -1) return {d, kind, FieldElem(1, -1, -1)};
      if (d == -3) return {d, kind, FieldElem(2)};
      break;
    case CaseKind::idx4:
      if (d == -1) return {d, kind, FieldElem(1, 1, -1)};
      break;
    case CaseKind::idx3:
    case CaseKind::sidx3:
      if (d == -3) return {d, kind, from_integer_coords(2, -1, -3)};
      break;
    case CaseKind::idx6:
      if (d == -3) return {d, kind, FieldElem::omega(-3)};
      break;
  }
  fail(errc::bad_input, "this case does not exist over the given field",
       {{"d", d}, {"case", case_name(kind)}});
}

namespace {

// Coordinates of s = 2 sqrt(d) * div in the basis {1, omega}.
std::pair<Int, Int> s_coords(int d, int a, int b) {
  if (field_one_mod4(d)) return {Int(2) * a, Int(2) * b};
  return {Int(a), Int(b)};
}

}  // namespace

FieldElem pair_divisor(int d, int a, int b) {
  require_supported_field(d);
  if (a == 0 && b == 0) fail(errc::bad_input, "the zero pair encodes no divisor");
  auto [u, v] = s_coords(d, a, b);
  FieldElem s = from_integer_coords(u, v, d);
  return s / (FieldElem(2) * FieldElem::sqrt_d(d));
}

Int pair_gcd(int d, int a, int b) {
  require_supported_field(d);
  auto [u, v] = s_coords(d, a, b);
  return z_gcd(u, v);
}

std::set<std::pair<int, int>> div_candidates(const CaseTag& tag) {
  const int d = tag.d;
  const FieldElem two_sqrt = FieldElem(2) * FieldElem::sqrt_d(d);
  // test_elem / div integral forces norm(s) <= norm(2 sqrt d) * norm(test_elem).
  const Int cap = rat_num((two_sqrt * two_sqrt.conj() * tag.test_elem.norm()).x());
  const Int ad = -Int(d);
  // norm(s) = a^2 + |d| b^2, resp. (2a+b)^2 + |d| b^2 for d = 1 mod 4.
  const int bmax = int_sqrt_floor(cap / ad).convert_to<int>();
  const int amax = field_one_mod4(d)
                       ? ((int_sqrt_floor(cap) + bmax) / 2 + 1).convert_to<int>()
                       : int_sqrt_floor(cap).convert_to<int>();
  std::set<std::pair<int, int>> out;
  for (int a = -amax; a <= amax; ++a)
    for (int b = -bmax; b <= bmax; ++b) {
      if (a == 0 && b == 0) continue;
      if (pair_gcd(d, a, b) <= 1) continue;
      if (!is_integral(tag.test_elem / pair_divisor(d, a, b), d)) continue;
      out.insert({a, b});
    }
  return out;
}

std::set<std::pair<int, int>> reference_div_pairs(int d, CaseKind kind) {
  static const nlohmann::json doc =
      nlohmann::json::parse(embedded_data().at("tables/div_pairs.json"));
  std::string key = std::to_string(d) + ":" + case_name(kind);
  if (!doc.contains(key))
    fail(errc::unknown_case, "no bundled reference list for this case",
         {{"d", d}, {"case", case_name(kind)}});
  std::set<std::pair<int, int>> out;
  for (const auto& pr : doc.at(key)) out.insert({pr.at(0).get<int>(), pr.at(1).get<int>()});
  return out;
}

// ------------------------------------------------------------------ families

namespace {

const nlohmann::json& family_doc(int d) {
  static const std::map<int, std::string> file_of = {{-1, "families/d_m1.json"},
                                                     {-2, "families/d_m2.json"},
                                                     {-3, "families/d_m3.json"},
                                                     {-7, "families/d_m7.json"}};
  static std::mutex mu;
  static std::map<std::string, nlohmann::json> cache;
  auto named = file_of.find(d);
  const std::string key =
      named != file_of.end() ? named->second : "families/d_other.json";
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace(key);
  if (inserted) it->second = nlohmann::json::parse(embedded_data().at(key));
  return it->second;
}

// The shared family file spells the ramified prime with a symbolic "(d)".
std::string subst_field(std::string text, int d) {
  auto pos = text.find("(d)");
  if (pos != std::string::npos) text.replace(pos, 3, "(" + std::to_string(d) + ")");
  return text;
}

std::string family_case_key(const CaseTag& tag) {
  if (tag.d == -1 && (tag.kind == CaseKind::sidx2 || tag.kind == CaseKind::idx4))
    return "sidx2_idx4";
  if (tag.d == -3 && (tag.kind == CaseKind::idx3 || tag.kind == CaseKind::sidx3))
    return "idx3";
  if (tag.d == -3 && tag.kind == CaseKind::idx6) return "idx6";
  return "idx2";
}

const nlohmann::json* find_class(const nlohmann::json& doc, const std::string& case_key,
                                 const FieldElem& divisor, int d) {
  for (const auto& cls : doc.at("cases").at(case_key).at("classes")) {
    FieldElem v = parse_field_elem(subst_field(cls.at("num").get<std::string>(), d), d);
    if (cls.at("over_sqrt").get<bool>()) v = v / FieldElem::sqrt_d(d);
    if (same_ideal(v, divisor, d)) return &cls;
  }
  return nullptr;
}

std::map<std::string, FieldElem> family_primes(const nlohmann::json& doc, int d) {
  std::map<std::string, FieldElem> out;
  for (const auto& [name, text] : doc.at("primes").items())
    out[name] = parse_field_elem(subst_field(text.get<std::string>(), d), d);
  return out;
}

// (prime name, exponent) -> how many cyclic factors O/p^e the group has.
using Slots = std::map<std::pair<std::string, int>, long>;

// False when some prime of the structure is not in the family dictionary (in
// which case no family block can match).
bool input_slots(const std::vector<std::pair<FieldElem, int>>& structure,
                 const std::map<std::string, FieldElem>& primes, int d, Slots* out) {
  for (const auto& [elem, mult] : structure) {
    if (mult <= 0)
      fail(errc::bad_input, "structure multiplicities must be positive",
           {{"divisor", to_string(elem)}, {"multiplicity", mult}});
    if (elem.is_zero() || !is_integral(elem, d) || norm(elem) == 1)
      fail(errc::bad_input, "structure divisors must be integral non-units",
           {{"divisor", to_string(elem)}});
    for (const PrimePower& pp : of_factor(elem, d)) {
      std::string name;
      for (const auto& [n, val] : primes)
        if (same_ideal(val, pp.prime, d)) {
          name = n;
          break;
        }
      if (name.empty()) return false;
      (*out)[{name, pp.exponent}] += mult;
    }
  }
  return true;
}

// A multiplicity is a constant or one of a, b with an optional shift.
struct MultSpec {
  int ca = 0, cb = 0, shift = 0;
};

MultSpec parse_mult(const nlohmann::json& m) {
  if (m.is_number_integer()) return {0, 0, m.get<int>()};
  const std::string s = m.get<std::string>();
  MultSpec out;
  if (!s.empty() && s[0] == 'a')
    out.ca = 1;
  else if (!s.empty() && s[0] == 'b')
    out.cb = 1;
  else
    fail(errc::internal, "unreadable multiplicity in family data", {{"value", s}});
  if (s.size() > 1) out.shift = std::stoi(s.substr(1));
  return out;
}

// All ways of fixing the block's listed parameter options.
std::vector<std::map<std::string, int>> assignments(const nlohmann::json& block) {
  std::vector<std::map<std::string, int>> out = {{}};
  for (const char* key : {"c", "d"}) {
    if (!block.contains(key)) continue;
    std::vector<std::map<std::string, int>> next;
    for (const auto& base : out)
      for (const auto& v : block.at(key)) {
        auto asg = base;
        asg[key] = v.get<int>();
        next.push_back(asg);
      }
    out = std::move(next);
  }
  if (block.contains("d1d2")) {
    std::vector<std::map<std::string, int>> next;
    for (const auto& base : out)
      for (const auto& pr : block.at("d1d2")) {
        auto asg = base;
        asg["d1"] = pr.at(0).get<int>();
        asg["d2"] = pr.at(1).get<int>();
        next.push_back(asg);
      }
    out = std::move(next);
  }
  return out;
}

bool match_assignment(const nlohmann::json& factors,
                      const std::map<std::string, int>& asg, const Slots& input) {
  std::map<std::pair<std::string, int>, std::vector<MultSpec>> specs;
  bool uses_a = false, uses_b = false;
  for (const auto& f : factors) {
    int e = f.at("e").is_number_integer() ? f.at("e").get<int>()
                                          : asg.at(f.at("e").get<std::string>());
    if (e == 0) continue;  // a trivial factor contributes nothing
    MultSpec sp = parse_mult(f.at("m"));
    uses_a |= sp.ca != 0;
    uses_b |= sp.cb != 0;
    specs[{f.at("p").get<std::string>(), e}].push_back(sp);
  }
  long cap = 2;
  for (const auto& [slot, cnt] : input) cap = std::max(cap, cnt + 2);
  for (long a = 0; a <= (uses_a ? cap : 0); ++a)
    for (long b = 0; b <= (uses_b ? cap : 0); ++b) {
      bool ok = true;
      for (const auto& [slot, cnt] : input)
        if (cnt != 0 && !specs.count(slot)) ok = false;
      for (auto it = specs.begin(); ok && it != specs.end(); ++it) {
        long total = 0;
        for (const MultSpec& s : it->second) {
          long v = s.ca * a + s.cb * b + s.shift;
          if ((s.ca || s.cb) && v < 0) ok = false;
          total += v;
        }
        auto in = input.find(it->first);
        if (total != (in == input.end() ? 0 : in->second)) ok = false;
      }
      if (ok) return true;
    }
  return false;
}

}  // namespace

bool appendix_membership(const CaseTag& tag, std::pair<int, int> div_ab,
                         const std::vector<std::pair<FieldElem, int>>& structure) {
  const int d = tag.d;
  const nlohmann::json& doc = family_doc(d);
  const FieldElem divisor = pair_divisor(d, div_ab.first, div_ab.second);
  const nlohmann::json* cls = find_class(doc, family_case_key(tag), divisor, d);
  if (!cls)
    fail(errc::unknown_case, "no bundled family covers this divisor class",
         {{"d", d},
          {"case", case_name(tag.kind)},
          {"divisor", to_string(divisor)}});
  auto primes = family_primes(doc, d);
  Slots input;
  if (!input_slots(structure, primes, d, &input)) return false;
  for (const auto& block : cls->at("blocks"))
    for (const auto& asg : assignments(block))
      if (match_assignment(block.at("factors"), asg, input)) return true;
  return false;
}

}  // namespace cusps
