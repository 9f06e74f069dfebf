#pragma once

namespace schemaforge {

inline constexpr const char* kToolName = "schema-forge";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace schemaforge
