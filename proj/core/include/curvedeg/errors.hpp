#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace curvedeg {

// Caller violated an operation's stated precondition (e.g. a non-squarefree
// polynomial handed to a Sturm count, or a candidate/scenario mismatch).
class contract_error : public std::logic_error {
  using std::logic_error::logic_error;
};

// The search node budget was exhausted.  Carries how far the search got so
// the caller can report or resume with a larger budget.
class resource_limit_error : public std::runtime_error {
 public:
  resource_limit_error(const std::string& what, std::uint64_t nodes)
      : std::runtime_error(what), nodes_visited(nodes) {}

  std::uint64_t nodes_visited;
};

// Malformed persisted or textual data (catalog files, polynomial strings).
class format_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An arithmetic outcome that contradicts a theorem the computation relies
// on.  Reaching this means either the implementation or the input catalog
// is corrupt; it is never a normal result.
class inconsistency_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace curvedeg
