// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRAND_VALIDATE_HPP_
#define STRAND_VALIDATE_HPP_

#include <string>
#include <vector>

#include "strand/model.hpp"

namespace strand {

struct CheckResult {
  std::string name;
  // Capabilities under which the check is an axiom.
  Flavor guard;
  // True when the model's declared flavor satisfies the guard. Checks that
  // are not required are still reported so that a model can be compared
  // against other flavors.
  bool required = false;
  bool passed = true;
  double deviation = 0.0;
  int instances = 0;
  std::string detail;
};

struct ValidationOptions {
  // Quantified checks range over words of at most this many atoms drawn
  // from the base objects and their duals.
  int word_length = 3;
  // Words whose braiding matrices would exceed this side length are skipped
  // in braiding and twist checks (and counted in the detail text).
  long max_braid_dim = 256;
};

struct ValidationReport {
  std::string model;
  Flavor flavor;
  double tolerance = 1e-10;
  std::vector<CheckResult> checks;

  // Every required check passed.
  bool ok() const;
  const CheckResult* Find(const std::string& name) const;
  // Every check whose guard is implied by `guard` ran and passed, and the
  // model provides each capability `guard` asks for. Symmetry, pivotality
  // and the dagger types count as provided when their checks pass.
  bool ValidatedFor(const Flavor& guard) const;
  // Names of the checks that block ValidatedFor(guard).
  std::vector<std::string> Blocking(const Flavor& guard) const;
  std::string ToText() const;
};

ValidationReport ValidateModel(const ModelSpec& model,
                               const ValidationOptions& options = {});

}  // namespace strand

#endif  // STRAND_VALIDATE_HPP_
