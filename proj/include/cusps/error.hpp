#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace cusps {

// Failure kinds surfaced to callers and, via the CLI, as machine-readable
// JSON error objects.  Exit codes: input/validation problems map to 1,
// internal invariant breakage to 2.
enum class errc {
  bad_input,
  not_hermitian,
  not_integral,
  degenerate,
  spec_too_small,
  unclassifiable_pair,
  imprimitive_image,
  unknown_case,
  size_cap,
  internal,
};

const char* errc_name(errc c);
int errc_exit_code(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, std::string message, nlohmann::json details = nlohmann::json::object())
      : std::runtime_error(std::move(message)), code_(code), details_(std::move(details)) {}

  errc code() const { return code_; }
  const nlohmann::json& details() const { return details_; }

  nlohmann::json to_json() const {
    nlohmann::json j{{"error", errc_name(code_)}, {"message", what()}};
    if (!details_.empty()) j["details"] = details_;
    return j;
  }

 private:
  errc code_;
  nlohmann::json details_;
};

[[noreturn]] inline void fail(errc code, std::string message,
                              nlohmann::json details = nlohmann::json::object()) {
  throw error(code, std::move(message), std::move(details));
}

}  // namespace cusps
