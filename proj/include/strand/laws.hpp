// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

// Executable catalog of coherence laws. Each law is a list of equations
// between terms built from object and generator slots; a check binds the
// slots to base objects and random natural matrices of a model, evaluates
// both sides, and additionally tries to prove the equation by rewriting.

#ifndef STRAND_LAWS_HPP_
#define STRAND_LAWS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "strand/model.hpp"
#include "strand/term.hpp"
#include "strand/validate.hpp"

namespace strand {

// A generator slot typed by words over the law's object slots. A slot name
// with a trailing '*' denotes the right dual, a trailing '^' the left dual.
struct GeneratorSlot {
  std::string name;
  std::vector<std::string> dom;
  std::vector<std::string> cod;
};

struct Binding {
  std::map<std::string, ObjectExpr> objects;
  GeneratorMap generators;

  // "V=s W=s; f: s → s, g: s → s"
  std::string Describe() const;
};

class LawContext {
 public:
  LawContext(const Signature& sig, const Binding& binding)
      : sig_(sig), binding_(binding) {}
  const Signature& sig() const { return sig_; }
  ObjectExpr Obj(const std::string& slot) const;
  Term Gen(const std::string& slot) const;

 private:
  const Signature& sig_;
  const Binding& binding_;
};

struct LawEquation {
  std::string label;
  Term lhs;
  Term rhs;
};

struct Citation {
  std::string location;
  std::string quote;
};

struct Law {
  std::string name;
  // Weakest flavor in which the law is stated.
  Flavor guard;
  Citation citation;
  std::vector<std::string> objects;
  std::vector<GeneratorSlot> generators;
  std::function<std::vector<LawEquation>(const LawContext&)> equations;
  // For conditional laws: the reason the hypothesis fails in a validated
  // model, or nothing when it holds and the equations must be checked.
  std::function<std::optional<std::string>(const ValidationReport&)>
      vacuous_when;
};

const std::vector<Law>& LawCatalog();
const Law* FindLaw(const std::string& name);

enum class LawMethod { kRewrite, kEvaluate, kBoth };
enum class LawResult {
  kPass,
  kFail,
  // The law's hypothesis does not hold in the model.
  kVacuous,
  kGuardUnsatisfied,
  // No binding could be drawn (every slot assignment has an empty space of
  // natural morphisms).
  kUnknown,
};

std::string_view LawMethodName(LawMethod m);
std::string_view LawResultName(LawResult r);

struct LawReport {
  std::string law;
  std::string binding;
  LawMethod method = LawMethod::kEvaluate;
  LawResult result = LawResult::kPass;
  // Largest entrywise deviation between the two sides over all equations.
  double deviation = 0.0;
  // Equations proved equal by rewriting, out of `equations`.
  int rewrite_equal = 0;
  int equations = 0;
  std::string detail;
};

// Draws object assignments from the model's base objects and natural
// generator matrices with basis coefficients uniform in the unit square.
std::optional<Binding> SampleBinding(const Law& law, const ModelSpec& model,
                                     std::mt19937_64& rng);

// Errors: GuardUnsatisfied when `report` does not validate the law's guard;
// BindingIllTyped when the binding misses a slot or a generator has the
// wrong type or matrix shape.
LawReport CheckLaw(const Law& law, const ModelSpec& model,
                   const Binding& binding, const ValidationReport& report);
LawReport CheckLaw(const Law& law, const ModelSpec& model,
                   const Binding& binding);

// Every catalog law whose guard `flavor` satisfies, on `samples` bindings
// per law from an engine seeded with seed + catalog index. Laws the model
// is not validated for yield one kGuardUnsatisfied report each.
std::vector<LawReport> RunSuite(const Flavor& flavor, const ModelSpec& model,
                                int samples, std::uint64_t seed);

struct SuiteSummary {
  int pass = 0;  // includes vacuous results
  int fail = 0;  // includes unsatisfied guards
  int unknown = 0;
};

SuiteSummary Summarize(const std::vector<LawReport>& reports);
// One line per law with counts, methods and the largest deviation, followed
// by the failing bindings.
std::string LawReportsText(const std::vector<LawReport>& reports);
// JSON array of LawReport records.
std::string LawReportsJson(const std::vector<LawReport>& reports);

}  // namespace strand

#endif  // STRAND_LAWS_HPP_
