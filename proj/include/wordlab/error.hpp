#pragma once

#include <stdexcept>
#include <string>

namespace wordlab {

enum class ErrorKind {
  parse,
  invalid_argument,
  alphabet_mismatch,
  depth_exceeded,
  incomplete_set,
  not_a_member,
  not_a_code,
  not_prefix,
  not_bifix,
  not_maximal_code,
  insufficient_depth,
  not_a_basis,
  equal_letters,
  lengths_not_normalized,
  non_positive_length,
  out_of_domain,
  non_growing_seed,
  incomplete_returns,
  decomposition_impossible,
  depth_exhausted,
  not_found,
  internal,
};

const char* to_string(ErrorKind kind) noexcept;

// All library failures are reported through this type; `kind()` is stable
// and used by the CLI to pick an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wordlab
