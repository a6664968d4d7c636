#pragma once

#include <stdexcept>
#include <string>

namespace betahole {

// Every failure raised by the library carries a stable kind name
// (e.g. "NoSuchRotation", "DegenerateBeta") that the CLI reports verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace betahole
