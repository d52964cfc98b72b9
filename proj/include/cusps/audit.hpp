#pragma once

#include "json.hpp"

namespace cusps {

// Re-runs the bundled worked examples from scratch.  Each case loads a Gram
// matrix shipped under data/examples/, recomputes every stated fact about it
// (signature, discriminant group, isotropy, subgroup memberships, cusp type,
// trace-form identities), and records one verdict per claim:
//
//   confirmed      the computation reproduces the claim;
//   refuted        the computation contradicts it -- a concrete witness
//                  (offending value, offset, or matrix) is attached;
//   not-applicable a prerequisite claim already failed, or the claim needs
//                  input outside exact lattice arithmetic -- a note says which.
//
// The report is deterministic: fixed case order and sorted object keys.
nlohmann::json audit_examples();

}  // namespace cusps
