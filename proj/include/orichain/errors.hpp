#pragma once

#include <stdexcept>
#include <string>

namespace orichain {

// Malformed input document or unknown field/value.
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// A claimed subcomplex contains simplices not present in the ambient complex.
struct SubcomplexError : std::runtime_error {
  explicit SubcomplexError(const std::string& what) : std::runtime_error(what) {}
};

// Radial projection away from a vertex is undefined at that vertex.
struct UndefinedProjectionError : std::domain_error {
  explicit UndefinedProjectionError(const std::string& what) : std::domain_error(what) {}
};

// Requested dimension exceeds the configured bound.
struct DimensionLimitError : std::runtime_error {
  explicit DimensionLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A supplied identification table does not fit the chain it claims to glue.
struct GluingMismatchError : std::runtime_error {
  explicit GluingMismatchError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orichain
