#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclegas {

enum class ErrorCode {
  domain,          // argument outside the mathematical domain
  convergence,     // quadrature or series failed to reach tolerance
  size,            // enumeration bound exceeded
  divergence,      // grand partition product does not exist
  degenerate_band, // fewer than one mode in a frequency band
  invariant,       // an internal cross-check disagreed
  io,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::domain: return "domain";
    case ErrorCode::convergence: return "convergence";
    case ErrorCode::size: return "size";
    case ErrorCode::divergence: return "divergence";
    case ErrorCode::degenerate_band: return "degenerate_band";
    case ErrorCode::invariant: return "invariant";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace cyclegas
