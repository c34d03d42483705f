// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRAND_BUILTINS_HPP_
#define STRAND_BUILTINS_HPP_

#include <random>
#include <string>
#include <vector>

#include "strand/model.hpp"

namespace strand {

// One object V of dimension n, swap braiding, identity twist and duality,
// conjugate-transpose dagger.
ModelSpec SymVect(int n);

// One-dimensional objects a1 … a(n-1) with c_{a,b} = exp(iπ·k·a·b/n) and
// θ_a = exp(iπ·k·a²/n). Duals carry the negated charge, so morphisms only
// connect words of equal total charge.
ModelSpec AbelianAnyon(int n, int k);

// AbelianAnyon(2, 1) with its object named s: c_{s,s} = θ_s = i.
ModelSpec Semion();

// One object V of dimension 2 with the standard quasitriangular braiding
//   Ř = [[q,0,0,0],[0,0,1,0],[0,1,q−q⁻¹,0],[0,0,0,q]],
// duality B = diag(√q, 1/√q) and twist q²·I. Real q carries the
// conjugate-transpose dagger and the non-unitary dagger type.
ModelSpec RMatrix(Complex q);

// Copy of `model` with braid(u, v)[row, col] shifted by `delta`.
ModelSpec PerturbBraid(const ModelSpec& model, const std::string& u,
                       const std::string& v, int row, int col, Complex delta);

// Orthonormal basis (Frobenius inner product) of the matrices X: dom → cod
// that commute with the model's braidings against every base atom and its
// first two duals, and with the twists.
const std::vector<ComplexMatrix>& NaturalBasis(const ModelSpec& model,
                                               const ObjectExpr& dom,
                                               const ObjectExpr& cod);

// A random natural morphism: basis coefficients with real and imaginary
// parts uniform in [0, 1). Throws Error(kBindingIllTyped) when the space is
// zero.
ComplexMatrix RandomMorphism(const ModelSpec& model, const ObjectExpr& dom,
                             const ObjectExpr& cod, std::mt19937_64& rng);

}  // namespace strand

#endif  // STRAND_BUILTINS_HPP_
