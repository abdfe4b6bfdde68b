#pragma once

#include <string>

#include <json.hpp>

namespace homw1::report {

inline constexpr const char* kToolName = "homw1";
inline constexpr const char* kToolVersion = "1.0.0";

// Reports keep insertion order and serialize byte-identically for identical
// inputs; volatile fields (timing) stay out of the canonical form.
using Json = nlohmann::ordered_json;

Json make_report(const std::string& command);
std::string serialize_report(const Json& r);

// Thread cap from HOMW1_THREADS (>= 1); hardware concurrency when unset.
int thread_limit();

}  // namespace homw1::report
