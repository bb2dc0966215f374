#pragma once

#include <stdexcept>
#include <string>

namespace rigiditykit {

// Error codes double as CLI exit-code hints: input-shaped problems map to
// exit 2, negative analysis verdicts to exit 1.
enum class Errc {
  invalid_input,
  unknown_vertex,
  disconnected,
  excluded_graph,
  no_witness,
  no_center,
  broken_link,
  coverage,
  not_irreducible,
  too_large,
  amenable,
  not_in_t,
  not_proportional,
  cap_exceeded,
  verify_mismatch,
  internal,
};

inline const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::invalid_input: return "invalid input";
    case Errc::unknown_vertex: return "unknown vertex";
    case Errc::disconnected: return "disconnected";
    case Errc::excluded_graph: return "excluded graph";
    case Errc::no_witness: return "no witness";
    case Errc::no_center: return "no center";
    case Errc::broken_link: return "broken link";
    case Errc::coverage: return "coverage";
    case Errc::not_irreducible: return "not irreducible";
    case Errc::too_large: return "too large";
    case Errc::amenable: return "amenable";
    case Errc::not_in_t: return "not in class T";
    case Errc::not_proportional: return "not proportional";
    case Errc::cap_exceeded: return "cap exceeded";
    case Errc::verify_mismatch: return "verify mismatch";
    case Errc::internal: return "internal error";
  }
  return "unknown error";
}

// True for conditions caused by malformed or out-of-contract input rather
// than by a negative mathematical verdict.
inline bool is_input_error(Errc c) noexcept {
  switch (c) {
    case Errc::invalid_input:
    case Errc::unknown_vertex:
    case Errc::too_large:
    case Errc::internal:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rigiditykit
