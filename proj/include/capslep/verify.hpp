#pragma once

// Invariant suite run by `capslep verify`: every identity the library relies
// on, evaluated at one (L, Theta) configuration.

#include <string>
#include <vector>

#include "capslep/capop.hpp"

namespace capslep::verify {

struct InvariantResult {
  std::string group;
  std::string name;
  double value = 0.0;      ///< worst observed deviation
  double tolerance = 0.0;  ///< passes when value <= tolerance
  bool passed = false;
  bool skipped = false;
  std::string note;
};

struct VerifyReport {
  std::vector<InvariantResult> results;

  [[nodiscard]] bool passed() const;
  /// Distinct group names in first-seen order.
  [[nodiscard]] std::vector<std::string> groups() const;
};

VerifyReport run_invariants(const capop::CapProblem& cap);

/// Largest deviation of the sphere (resp. cap) Gram matrix of all vector
/// eigenfields from the identity (resp. diag(eta)), by product quadrature.
struct VectorGramDeviation {
  double sphere = 0.0;
  double cap = 0.0;
};
VectorGramDeviation vector_field_gram(const capop::CapProblem& cap);

}  // namespace capslep::verify
