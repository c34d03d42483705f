// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

// Composite morphisms built from the structural constructors. Every function
// checks the flavor carried by the signature and throws
// Error(kFlavorViolation) when a needed capability is absent.

#ifndef STRAND_DERIVED_HPP_
#define STRAND_DERIVED_HPP_

#include "strand/term.hpp"

namespace strand {

// 𝟙 → W⊗V* for f: V → W.
Term NameOf(const Term& f, const Signature& sig);
// W*⊗V → 𝟙 for f: V → W.
Term ConameOf(const Term& f, const Signature& sig);
// f*: W* → V*.
Term Transpose(const Term& f, const Signature& sig);

// Sources of a left rigidity (β: 𝟙 → V∨⊗V, δ: V⊗V∨ → 𝟙).
enum class LeftFamily {
  kPrimitive,      // LBirth / LDeath
  kBraided,        // c⁻¹_{V*,V}∘b_V and d_V∘c_{V,V*}
  kDagger,         // (d_V)† and (b_V)†
  kPseudoPivotal,  // built from b_{V*}, d_{V*} and piv
};

std::string_view LeftFamilyName(LeftFamily f);

struct LeftRigidity {
  Term beta;
  Term delta;
};

LeftRigidity LeftRigidityFromBraiding(const ObjectExpr& x,
                                      const Signature& sig);
LeftRigidity LeftRigidityFromDagger(const ObjectExpr& x, const Signature& sig);
LeftRigidity LeftRigidityPseudoPivotal(const ObjectExpr& x,
                                       const Signature& sig);
LeftRigidity LeftRigidityOf(LeftFamily family, const ObjectExpr& x,
                            const Signature& sig);
// True when `family` can be built under the signature's flavor.
bool LeftFamilyAvailable(LeftFamily family, const Flavor& flavor);

// f∨: W∨ → V∨ for f: V → W, mirror image of Transpose.
Term LeftTranspose(const Term& f, const Signature& sig,
                   LeftFamily family = LeftFamily::kPrimitive);

// ψ_X: X** → X and a two-sided inverse X → X**.
Term Psi(const ObjectExpr& x, const Signature& sig);
Term PsiInv(const ObjectExpr& x, const Signature& sig);
// piv_X = ψ⁻¹_X ∘ θ_X: X → X**, and its inverse θ⁻¹_X ∘ ψ_X.
Term PivFromTwist(const ObjectExpr& x, const Signature& sig);
Term PivInvFromTwist(const ObjectExpr& x, const Signature& sig);

// φ_X relating two left rigidities: (id ⊗ δ'_X) ∘ (β_X ⊗ id), where (β', δ')
// come from `from` and (β, δ) from `to`.
Term UniquePhi(const ObjectExpr& x, const Signature& sig,
               LeftFamily from = LeftFamily::kDagger,
               LeftFamily to = LeftFamily::kBraided);

// p_X: X → (X*)∨ and q_X: X → (X∨)*, with inverses; snake composites
// through the primitive left rigidity.
Term PMap(const ObjectExpr& x, const Signature& sig);
Term PMapInv(const ObjectExpr& x, const Signature& sig);
Term QMap(const ObjectExpr& x, const Signature& sig);
Term QMapInv(const ObjectExpr& x, const Signature& sig);

// s • f for a scalar s: 𝟙 → 𝟙. Throws Error(kNotAScalar).
Term ScalarMul(const Term& s, const Term& f, const Signature& sig);

enum class TraceStyle {
  kOver,      // d ∘ c_{V,V*} ∘ ((θ ∘ f) ⊗ id) ∘ b
  kUnder,     // d ∘ c⁻¹_{V*,V} ∘ ((θ⁻¹ ∘ f) ⊗ id) ∘ b
  kBraided,   // d ∘ c_{V,V*} ∘ (f ⊗ id) ∘ b, needs no twist
  kPivotal,   // d_{V*} ∘ (piv ⊗ id) ∘ (f ⊗ id) ∘ b with piv from the twist
};

std::string_view TraceStyleName(TraceStyle s);

// Throws Error(kNotEndomorphism) unless f: V → V.
Term QuantumTrace(const Term& f, const Signature& sig,
                  TraceStyle style = TraceStyle::kOver);
Term QuantumDim(const ObjectExpr& x, const Signature& sig,
                TraceStyle style = TraceStyle::kOver);

enum class PartialTraceStyle { kVanilla, kGoofyUp, kGoofyDown };

std::string_view PartialTraceStyleName(PartialTraceStyle s);

// Traces V out of f: A⊗V → B⊗V. Throws Error(kBoundaryMismatch) when f does
// not have that type.
Term PartialTrace(const Term& f, PartialTraceStyle style, const ObjectExpr& a,
                  const ObjectExpr& b, const ObjectExpr& v,
                  const Signature& sig);

// Dagger moved to generator leaves. Throws Error(kFlavorViolation) when the
// flavor has no dagger, or when a braiding or twist is daggered without a
// dagger type.
Term DaggerPushdown(const Term& t, const Signature& sig);

// Hom(V⊗U, W) ≅ Hom(V, W⊗U*): Bar(f) = (f ⊗ id_{U*}) ∘ (id_V ⊗ b_U).
Term HomBar(const Term& f, const ObjectExpr& u, const Signature& sig);
// Inverse of HomBar: (id_W ⊗ d_U) ∘ (g ⊗ id_U).
Term HomTilde(const Term& g, const ObjectExpr& u, const Signature& sig);
// Hom(V, U⊗W) ≅ Hom(U*⊗V, W): (d_U ⊗ id_W) ∘ (id_{U*} ⊗ f).
Term HomBend(const Term& f, const ObjectExpr& u, const Signature& sig);
// Inverse of HomBend: (id_U ⊗ g) ∘ (b_U ⊗ id_V).
Term HomUnbend(const Term& g, const ObjectExpr& u, const Signature& sig);
// Hom(V, W⊗U) ≅ Hom(V⊗U∨, W): (id_W ⊗ δ_U) ∘ (f ⊗ id_{U∨}).
Term HomLeftBar(const Term& f, const ObjectExpr& u, const Signature& sig);
// Inverse of HomLeftBar: (g ⊗ id_U) ∘ (id_V ⊗ β_U).
Term HomLeftTilde(const Term& g, const ObjectExpr& u, const Signature& sig);
// Hom(U⊗V, W) ≅ Hom(V, U∨⊗W): (id_{U∨} ⊗ f) ∘ (β_U ⊗ id_V).
Term HomLeftBend(const Term& f, const ObjectExpr& u, const Signature& sig);
// Inverse of HomLeftBend: (δ_U ⊗ id_W) ∘ (id_U ⊗ g).
Term HomLeftUnbend(const Term& g, const ObjectExpr& u, const Signature& sig);

}  // namespace strand

#endif  // STRAND_DERIVED_HPP_
