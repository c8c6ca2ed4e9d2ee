#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace witt {

// Domain error with a stable machine-readable name ("NotDivisorClosed",
// "TorsionRing", ...) plus a human-readable detail string.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& detail) {
  throw Error(std::move(name), detail);
}

}  // namespace witt
