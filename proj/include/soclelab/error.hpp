#pragma once

#include <stdexcept>
#include <string>

namespace soclelab {

// Failure categories surfaced by the library. The CLI maps input-shaped
// errors to exit code 2 and cap/timeout errors to exit code 3.
enum class errc {
  duplicate_label,
  unknown_label,
  cycle_detected,
  invalid_modulus,
  not_prime,
  size_cap_exceeded,
  parse_error,
  side_mismatch,
  oracle_cap_exceeded,
  enumeration_cap_exceeded,
  empty_poset,
  zero_ring,
  incomparable_pair,
  not_two_sided,
  not_minimal_element,
  not_maximal_element,
  missing_assignment,
  render_cap_exceeded,
  timeout,
  input_error,
  internal_error,
};

inline const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::unknown_label: return "UnknownLabel";
    case errc::cycle_detected: return "CycleDetected";
    case errc::invalid_modulus: return "InvalidModulus";
    case errc::not_prime: return "NotPrime";
    case errc::size_cap_exceeded: return "SizeCapExceeded";
    case errc::parse_error: return "ParseError";
    case errc::side_mismatch: return "SideMismatch";
    case errc::oracle_cap_exceeded: return "OracleCapExceeded";
    case errc::enumeration_cap_exceeded: return "EnumerationCapExceeded";
    case errc::empty_poset: return "EmptyPoset";
    case errc::zero_ring: return "ZeroRing";
    case errc::incomparable_pair: return "IncomparablePair";
    case errc::not_two_sided: return "NotTwoSided";
    case errc::not_minimal_element: return "NotMinimalElement";
    case errc::not_maximal_element: return "NotMaximalElement";
    case errc::missing_assignment: return "MissingAssignment";
    case errc::render_cap_exceeded: return "RenderCapExceeded";
    case errc::timeout: return "Timeout";
    case errc::input_error: return "InputError";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

// Cap and timeout errors are recoverable "instance too big" conditions,
// everything else is a malformed input or a logic bug.
inline bool is_cap_error(errc c) noexcept {
  return c == errc::size_cap_exceeded || c == errc::oracle_cap_exceeded ||
         c == errc::enumeration_cap_exceeded || c == errc::render_cap_exceeded ||
         c == errc::timeout;
}

}  // namespace soclelab
