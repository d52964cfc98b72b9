#pragma once

// The extension criterion and the low-slope general-type gate: exact rational
// comparisons of user-supplied vanishing orders against thresholds built from
// ramification indices and irregular-cusp indices.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cusps/error.hpp"
#include "cusps/field.hpp"

namespace cusps {

// One irreducible component of the ramification divisor.
struct RamificationComponent {
  int r = 2;  // ramification index, between 2 and 6
  Rat v = 0;  // vanishing order of the form along the component
};

// One boundary cusp with the vanishing order of the form there.
struct CuspOrder {
  int m = 1;  // 1 for a regular cusp, else the irregular index: 2, 3, 4, or 6
  Rat v = 0;
};

struct SlopeInput {
  int n = 1;  // the variety comes from signature (1, n)
  Rat k = 1;  // weight of the cusp form
  std::vector<RamificationComponent> ramification;
  std::vector<CuspOrder> cusps;
  // Whether the compactified variety is asserted to have at most canonical
  // singularities; never computed here.
  bool canonical_singularities_asserted = false;
  // Square-free field parameter; when present and n >= 13, d < -3, the
  // dimension bound and the singularity assertion are known to hold.
  std::optional<int> d;
};

void validate(const SlopeInput& in);

// Vanishing order seen downstairs: v at a regular cusp (m = 1), v/m at an
// irregular cusp of index m.
Rat geometric_order(const Rat& v, int m);

struct ClauseReport {
  std::string clause;   // ramification | regular-cusps | irregular-cusps |
                        // dimension | singularities | shortcut
  std::string subject;  // which component or cusp, empty for global clauses
  bool ok = true;
  std::string detail;   // the exact comparison that was evaluated
};

struct Verdict {
  bool passed = false;
  std::string verdict;  // Extends / DoesNotExtend resp. GeneralType / Inconclusive
  std::vector<ClauseReport> clauses;

  nlohmann::json to_json() const;
};

// Weak inequalities under which the k-canonical form of a modular form of
// arithmetic weight (n+1)k extends over the regular locus: v >= (r-1)k along
// ramification, v >= k at regular cusps, v >= m*k at irregular cusps.
Verdict extends_check(const SlopeInput& in, const Rat& k);

// Strict slope inequalities v/k > (r-1)/(n+1), 1/(n+1), m/(n+1), the
// dimension bound n >= max(r-2, m-1), and the singularity assertion; the
// verdict is GeneralType exactly when everything holds.  With field data
// supplied and n >= 13, d < -3, the last two hold automatically.
Verdict slope_check(const SlopeInput& in);

SlopeInput slope_input_from_json(const nlohmann::json& j);
nlohmann::json slope_input_to_json(const SlopeInput& in);

}  // namespace cusps
