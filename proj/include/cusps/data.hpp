#pragma once

#include <map>
#include <string>

namespace cusps {

// Data files compiled into the binary (see cmake/embed_data.cmake); keys are
// paths relative to data/, e.g. "families/fam_m7.json".
const std::map<std::string, std::string>& embedded_data();

}  // namespace cusps
