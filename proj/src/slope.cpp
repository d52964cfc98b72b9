#include "cusps/slope.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace cusps {

namespace {

bool valid_cusp_index(int m) { return m == 1 || m == 2 || m == 3 || m == 4 || m == 6; }

std::string compare_text(const Rat& lhs, const char* op, const Rat& rhs) {
  return to_string(lhs) + " " + op + " " + to_string(rhs);
}

void push(Verdict* out, std::string clause, std::string subject, bool ok,
          std::string detail) {
  out->clauses.push_back(
      {std::move(clause), std::move(subject), ok, std::move(detail)});
  if (!ok) out->passed = false;
}

Rat parse_order(const nlohmann::json& j, const char* what) {
  Rat v;
  if (j.is_string())
    v = parse_rat(j.get<std::string>());
  else if (j.is_number_integer())
    v = Rat(j.get<long>());
  else
    fail(errc::bad_input, std::string(what) + " must be a string or an integer");
  return v;
}

}  // namespace

void validate(const SlopeInput& in) {
  if (in.n < 1) fail(errc::bad_input, "n must be at least 1");
  if (in.k <= 0) fail(errc::bad_input, "the weight must be positive");
  for (const RamificationComponent& comp : in.ramification) {
    if (comp.r < 2 || comp.r > 6)
      fail(errc::bad_input, "ramification indices lie between 2 and 6",
           {{"r", comp.r}});
    if (comp.v < 0) fail(errc::bad_input, "vanishing orders are non-negative");
  }
  for (const CuspOrder& cusp : in.cusps) {
    if (!valid_cusp_index(cusp.m))
      fail(errc::bad_input, "irregular indices are 2, 3, 4, or 6", {{"m", cusp.m}});
    if (cusp.v < 0) fail(errc::bad_input, "vanishing orders are non-negative");
  }
}

Rat geometric_order(const Rat& v, int m) {
  if (v < 0) fail(errc::bad_input, "vanishing orders are non-negative");
  if (!valid_cusp_index(m))
    fail(errc::bad_input, "irregular indices are 2, 3, 4, or 6", {{"m", m}});
  return v / m;
}

Verdict extends_check(const SlopeInput& in, const Rat& k) {
  validate(in);
  if (k <= 0) fail(errc::bad_input, "the weight multiplier must be positive");

  Verdict out;
  out.passed = true;
  for (size_t i = 0; i < in.ramification.size(); ++i) {
    const RamificationComponent& comp = in.ramification[i];
    const Rat need = Rat(comp.r - 1) * k;
    push(&out, "ramification", "component " + std::to_string(i) + " (r=" + std::to_string(comp.r) + ")",
         comp.v >= need, compare_text(comp.v, ">=", need));
  }
  for (size_t i = 0; i < in.cusps.size(); ++i) {
    const CuspOrder& cusp = in.cusps[i];
    const Rat need = Rat(cusp.m) * k;
    const bool regular = cusp.m == 1;
    push(&out, regular ? "regular-cusps" : "irregular-cusps",
         "cusp " + std::to_string(i) + (regular ? "" : " (m=" + std::to_string(cusp.m) + ")"),
         cusp.v >= need, compare_text(cusp.v, ">=", need));
  }
  out.verdict = out.passed ? "Extends" : "DoesNotExtend";
  return out;
}

Verdict slope_check(const SlopeInput& in) {
  validate(in);

  Verdict out;
  out.passed = true;
  const Rat denom(in.n + 1);

  for (size_t i = 0; i < in.ramification.size(); ++i) {
    const RamificationComponent& comp = in.ramification[i];
    const Rat lhs = comp.v / in.k;
    const Rat rhs = Rat(comp.r - 1) / denom;
    push(&out, "ramification", "component " + std::to_string(i) + " (r=" + std::to_string(comp.r) + ")",
         lhs > rhs, compare_text(lhs, ">", rhs));
  }
  for (size_t i = 0; i < in.cusps.size(); ++i) {
    const CuspOrder& cusp = in.cusps[i];
    const Rat lhs = cusp.v / in.k;
    const Rat rhs = Rat(cusp.m) / denom;
    const bool regular = cusp.m == 1;
    push(&out, regular ? "regular-cusps" : "irregular-cusps",
         "cusp " + std::to_string(i) + (regular ? "" : " (m=" + std::to_string(cusp.m) + ")"),
         lhs > rhs, compare_text(lhs, ">", rhs));
  }

  const bool shortcut = in.d.has_value() && in.n >= 13 && *in.d < -3;
  if (in.d.has_value()) {
    push(&out, "shortcut", "", true,
         std::string("n >= 13 and d < -3 ") + (shortcut ? "holds" : "does not hold") +
             " (n=" + std::to_string(in.n) + ", d=" + std::to_string(*in.d) + ")");
  }

  int need = 0;
  for (const RamificationComponent& comp : in.ramification)
    need = std::max(need, comp.r - 2);
  for (const CuspOrder& cusp : in.cusps)
    if (cusp.m > 1) need = std::max(need, cusp.m - 1);
  const bool dim_ok = shortcut || in.n >= need;
  push(&out, "dimension", "", dim_ok,
       shortcut ? "granted by the shortcut"
                : std::to_string(in.n) + " >= " + std::to_string(need));

  const bool sing_ok = shortcut || in.canonical_singularities_asserted;
  push(&out, "singularities", "", sing_ok,
       shortcut ? "granted by the shortcut"
                : (in.canonical_singularities_asserted
                       ? "asserted at most canonical"
                       : "not asserted"));

  out.verdict = out.passed ? "GeneralType" : "Inconclusive";
  return out;
}

nlohmann::json Verdict::to_json() const {
  nlohmann::json cl = nlohmann::json::array();
  for (const ClauseReport& c : clauses) {
    nlohmann::json item{{"clause", c.clause}, {"ok", c.ok}, {"detail", c.detail}};
    if (!c.subject.empty()) item["subject"] = c.subject;
    cl.push_back(item);
  }
  return nlohmann::json{{"passed", passed}, {"verdict", verdict}, {"clauses", cl}};
}

SlopeInput slope_input_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(errc::bad_input, "slope input must be an object");
  SlopeInput in;
  if (!j.contains("n") || !j["n"].is_number_integer())
    fail(errc::bad_input, "field 'n' must be an integer");
  in.n = j["n"].get<int>();
  if (!j.contains("k")) fail(errc::bad_input, "field 'k' is required");
  in.k = parse_order(j["k"], "'k'");
  for (const auto& comp : j.value("ramification", nlohmann::json::array())) {
    if (!comp.is_object() || !comp.contains("r") || !comp.contains("v"))
      fail(errc::bad_input, "ramification entries need fields 'r' and 'v'");
    in.ramification.push_back(
        {comp["r"].get<int>(), parse_order(comp["v"], "'v'")});
  }
  for (const auto& cusp : j.value("cusps", nlohmann::json::array())) {
    if (!cusp.is_object() || !cusp.contains("kind") || !cusp.contains("v"))
      fail(errc::bad_input, "cusp entries need fields 'kind' and 'v'");
    const std::string kind = cusp["kind"].get<std::string>();
    int m = 1;
    if (kind == "irregular") {
      if (!cusp.contains("m")) fail(errc::bad_input, "irregular cusps need field 'm'");
      m = cusp["m"].get<int>();
    } else if (kind != "regular") {
      fail(errc::bad_input, "cusp kind must be regular or irregular", {{"kind", kind}});
    }
    in.cusps.push_back({m, parse_order(cusp["v"], "'v'")});
  }
  in.canonical_singularities_asserted =
      j.value("canonical_singularities_asserted", false);
  if (j.contains("d")) {
    if (!j["d"].is_number_integer()) fail(errc::bad_input, "field 'd' must be an integer");
    in.d = j["d"].get<int>();
  }
  validate(in);
  return in;
}

nlohmann::json slope_input_to_json(const SlopeInput& in) {
  nlohmann::json ram = nlohmann::json::array();
  for (const RamificationComponent& comp : in.ramification)
    ram.push_back({{"r", comp.r}, {"v", to_string(comp.v)}});
  nlohmann::json cusps = nlohmann::json::array();
  for (const CuspOrder& cusp : in.cusps) {
    nlohmann::json item{{"v", to_string(cusp.v)}};
    if (cusp.m == 1) {
      item["kind"] = "regular";
    } else {
      item["kind"] = "irregular";
      item["m"] = cusp.m;
    }
    cusps.push_back(item);
  }
  nlohmann::json out{{"n", in.n},
                     {"k", to_string(in.k)},
                     {"ramification", ram},
                     {"cusps", cusps},
                     {"canonical_singularities_asserted",
                      in.canonical_singularities_asserted}};
  if (in.d) out["d"] = *in.d;
  return out;
}

}  // namespace cusps
