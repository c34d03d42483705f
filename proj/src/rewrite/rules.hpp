// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRAND_REWRITE_RULES_HPP_
#define STRAND_REWRITE_RULES_HPP_

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "rewrite/diagram.hpp"
#include "strand/rewrite.hpp"

namespace strand::rewrite {

struct Ctx {
  explicit Ctx(const Signature& s) : sig(s), typer(s) {}
  const Signature& sig;
  Typer typer;
};

enum class Phase { kTerm, kLayering, kDiagram };

using TermFn = std::function<std::optional<Term>(const Term&, Ctx&)>;
using LayerFn =
    std::function<std::optional<Diagram>(const Diagram&, std::size_t, Ctx&)>;
using SampleFn = std::function<std::optional<RuleInstance>(
    const Signature&, std::mt19937_64&)>;

struct RuleImpl {
  RewriteRule rule;
  Phase phase = Phase::kTerm;
  TermFn term;
  LayerFn layer;
  SampleFn sample;
};

const std::vector<RuleImpl>& Rules();
const RuleImpl* FindRuleImpl(const std::string& name);

// Interchange policy used by normalization: swap layers i and i+1.
bool ShouldSwap(const Diagram& d, std::size_t i);

}  // namespace strand::rewrite

#endif  // STRAND_REWRITE_RULES_HPP_
