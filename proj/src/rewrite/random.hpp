// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRAND_REWRITE_RANDOM_HPP_
#define STRAND_REWRITE_RANDOM_HPP_

#include <functional>
#include <random>
#include <vector>

#include "strand/rewrite.hpp"

namespace strand::rewrite {

// Type-directed random term construction over a signature.
class TermSampler {
 public:
  TermSampler(const Signature& sig, std::mt19937_64& rng,
              RandomTermOptions options = {});

  int Uniform(int lo, int hi);
  bool Coin() { return Uniform(0, 1) == 1; }

  // Atoms drawn from the declared objects and the duals the flavor licenses.
  const std::vector<Atom>& alphabet() const { return alphabet_; }
  ObjectExpr RandomAtomWord();
  ObjectExpr RandomWord(int lo, int hi);

  // Random terms with the given domain (From) or codomain (To).
  Term From(const ObjectExpr& x, int depth);
  Term To(const ObjectExpr& x, int depth);
  Term Any(int depth);

  // Generators with one-atom domain and codomain, possibly daggered when
  // the flavor has a dagger.
  std::vector<Term> UnaryBoxes();

  // A single box (no Compose, Tensor or Id) of a random licensed kind, or an
  // invalid Term when none is available.
  Term AtomicBox();

  Boundary Type(const Term& t) { return typer_.Type(t); }
  const Signature& signature() const { return *sig_; }

 private:
  Term Leaf(const ObjectExpr& x, bool from);
  Term Build(const ObjectExpr& x, int depth, bool from);

  const Signature* sig_;
  std::mt19937_64* rng_;
  RandomTermOptions options_;
  Typer typer_;
  std::vector<Atom> alphabet_;
};

// id_left ⊗ box ⊗ id_right with unit factors left out.
Term Place(const ObjectExpr& left, const Term& box, const ObjectExpr& right);

}  // namespace strand::rewrite

#endif  // STRAND_REWRITE_RANDOM_HPP_
