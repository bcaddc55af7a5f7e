#include "wordlab/error.hpp"

namespace wordlab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse: return "parse-error";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::alphabet_mismatch: return "alphabet-mismatch";
    case ErrorKind::depth_exceeded: return "depth-exceeded";
    case ErrorKind::incomplete_set: return "incomplete-set";
    case ErrorKind::not_a_member: return "not-a-member";
    case ErrorKind::not_a_code: return "not-a-code";
    case ErrorKind::not_prefix: return "not-prefix";
    case ErrorKind::not_bifix: return "not-bifix";
    case ErrorKind::not_maximal_code: return "not-maximal-code";
    case ErrorKind::insufficient_depth: return "insufficient-depth";
    case ErrorKind::not_a_basis: return "not-a-basis";
    case ErrorKind::equal_letters: return "equal-letters";
    case ErrorKind::lengths_not_normalized: return "lengths-not-normalized";
    case ErrorKind::non_positive_length: return "non-positive-length";
    case ErrorKind::out_of_domain: return "out-of-domain";
    case ErrorKind::non_growing_seed: return "non-growing-seed";
    case ErrorKind::incomplete_returns: return "incomplete-returns";
    case ErrorKind::decomposition_impossible: return "decomposition-impossible";
    case ErrorKind::depth_exhausted: return "depth-exhausted";
    case ErrorKind::not_found: return "not-found";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace wordlab
