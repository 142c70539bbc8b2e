#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace singlet {

enum class ErrorKind {
  NotHermitian,
  NotUnitTrace,
  NotPSD,
  NonFinite,
  NoConvergence,
  BlochNormExceeded,
  InvalidSpunState,
  Unphysical,
  OutOfDomain,
  Parse,
  Io,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotUnitTrace: return "NotUnitTrace";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BlochNormExceeded: return "BlochNormExceeded";
    case ErrorKind::InvalidSpunState: return "InvalidSpunState";
    case ErrorKind::Unphysical: return "Unphysical";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a kind tag,
/// so callers (and the CLI) can map it to a category without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace singlet
