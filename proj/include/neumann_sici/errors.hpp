#pragma once

#include <stdexcept>
#include <string>

namespace neumann_sici {

/// Thrown when an argument lies outside an operation's domain.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an iterative evaluation cannot reach its requested tolerance.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw domain_error(what);
}

}  // namespace detail
}  // namespace neumann_sici
