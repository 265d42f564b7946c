#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace g2kit {

/// Base error for every failure the library raises on bad input or
/// unsupported exact-mode operations.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Scenario / polynomial parse failure carrying a path into the document
/// (JSON-pointer style for scenario files, offset text for grammar errors).
struct ParseError : Error {
  std::string path;

  ParseError(const std::string& message, std::string where)
      : Error(message + " (at " + where + ")"), path(std::move(where)) {}
};

}  // namespace g2kit
