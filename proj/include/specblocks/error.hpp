#pragma once

#include <stdexcept>
#include <string>

namespace specblocks {

// Error categories, mapped onto CLI exit codes: validation -> 2,
// cap_exceeded -> 3, oracle_disagreement -> 4.
enum class errc {
  validation,
  cap_exceeded,
  oracle_disagreement,
  solver_failure,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

inline Error validation_error(const std::string& what) { return {errc::validation, what}; }
inline Error cap_exceeded(const std::string& what) { return {errc::cap_exceeded, what}; }
inline Error oracle_disagreement(const std::string& what) { return {errc::oracle_disagreement, what}; }
inline Error solver_failure(const std::string& what) { return {errc::solver_failure, what}; }

}  // namespace specblocks
