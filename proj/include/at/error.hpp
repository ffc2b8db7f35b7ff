#pragma once

#include <stdexcept>
#include <string>

namespace at {

// Failure taxonomy. The CLI maps these onto exit codes: invalid_input,
// precondition and embedding_invalid become exit 2, oracle_too_large and
// overflow become exit 3, certificate_violation becomes exit 1.
enum class errc {
    invalid_input,         // malformed file / argument
    embedding_invalid,     // rotation system fails face-trace or Euler checks
    not_two_connected,
    precondition,          // operation called outside its contract
    oracle_too_large,      // configured size cap exceeded
    overflow,              // integer overflow in exact arithmetic
    certificate_violation  // a certified quantity failed re-verification
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace at
