#pragma once

#include <stdexcept>
#include <string>

namespace tube {

/// An enumeration was asked for beyond its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, int requested, int cap)
      : std::runtime_error(what + ": " + std::to_string(requested) + " exceeds cap " +
                           std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  int requested() const { return requested_; }
  int cap() const { return cap_; }

 private:
  int requested_;
  int cap_;
};

}  // namespace tube

namespace tube {

/// Malformed or inconsistent user input (JSON records, flags, files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tube
