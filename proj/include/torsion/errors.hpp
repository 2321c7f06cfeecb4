#ifndef TORSION_ERRORS_HPP
#define TORSION_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torsion {

// Bad user-supplied data: unsatisfied preconditions, malformed problem files.
// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee failed (oracle disagreement, degree bound exceeded,
// non-stabilizing local algebra).  The CLI maps this to exit code 3.
class InvariantError : public std::runtime_error {
public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace torsion

#endif
