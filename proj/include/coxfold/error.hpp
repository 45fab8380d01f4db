#pragma once

#include <stdexcept>
#include <string>

namespace coxfold {

// Base for all library failures. The CLI maps concrete types to exit codes;
// library code only throws, it never exits.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, bad schema values, invalid symmetries.
struct parse_error : error {
  using error::error;
};

// A symmetry group does not leave the root basis data invariant.
struct equivariance_error : error {
  using error::error;
};

// A bi-orbit inner product matches no Coxeter label, or orbit data is
// inconsistent with the group action.
struct classification_error : error {
  using error::error;
};

// A root basis violates condition (a), (b) or (c), or lacks the data
// needed to define the group action on V.
struct root_basis_error : error {
  using error::error;
};

}  // namespace coxfold
