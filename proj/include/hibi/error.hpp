#pragma once

#include <stdexcept>
#include <string>

namespace hibi {

// Malformed user input: bad poset documents, out-of-range parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A claim that should hold by construction failed. The message names the
// violated claim so the CLI can report it.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Buchberger or marked reduction ran past its iteration cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void verify(bool condition, const std::string& claim) {
  if (!condition) throw VerificationError(claim);
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InputError(message);
}

}  // namespace hibi
