#pragma once

#include <stdexcept>
#include <string>

namespace sqt {

/// Invalid input data: non-partition triples, unbalanced triplets,
/// malformed files, zero vectors where a direction is required.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// A broken internal contract (inconsistent lifting system, postcondition
/// failure).  Indicates a bug or an invalid complex slipping past validation.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sqt
