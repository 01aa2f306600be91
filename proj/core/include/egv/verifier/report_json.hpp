#pragma once

#include <string>

#include "egv/verifier/verifier.hpp"

namespace egv {

/// Stable-key JSON for one case (see README for the schema).
std::string to_json(const VerificationReport& r, int indent = 2);
std::string to_json(const SuiteReport& r, int indent = 2);

}  // namespace egv
