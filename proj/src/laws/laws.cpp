// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include "strand/laws.hpp"

#include <algorithm>
#include <cstdio>
#include <locale>
#include <sstream>
#include <tuple>
#include <utility>

#include <json.hpp>

#include "strand/builtins.hpp"
#include "strand/derived.hpp"
#include "strand/error.hpp"
#include "strand/rewrite.hpp"

namespace strand {

namespace {

Term I(const ObjectExpr& x) { return Term::Id(x); }

Term T(std::initializer_list<Term> parts) {
  Term out;
  for (const Term& p : parts) out = out.valid() ? Term::Tensor(out, p) : p;
  return out;
}

Term C(const Term& g, const Term& f) { return Term::Compose(g, f); }

Flavor Guard(std::string_view words) { return ParseFlavor(words); }

// Left rigidity snakes: (δ ⊗ id_V) ∘ (id_V ⊗ β) = id_V and
// (id_{V∨} ⊗ δ) ∘ (β ⊗ id_{V∨}) = id_{V∨}.
void LeftSnakes(std::vector<LawEquation>& out, const std::string& tag,
                const LeftRigidity& lr, const ObjectExpr& v,
                const Signature& sig) {
  ObjectExpr vl = sig.Canon(LeftDual(v));
  out.push_back({tag + " snake V", Seq({T({I(v), lr.beta}), T({lr.delta, I(v)})}),
                 I(v)});
  out.push_back({tag + " snake V∨",
                 Seq({T({lr.beta, I(vl)}), T({I(vl), lr.delta})}), I(vl)});
}

std::vector<LeftFamily> AvailableFamilies(const Flavor& fl) {
  std::vector<LeftFamily> out;
  for (LeftFamily f : {LeftFamily::kPrimitive, LeftFamily::kBraided,
                       LeftFamily::kDagger, LeftFamily::kPseudoPivotal}) {
    if (LeftFamilyAvailable(f, fl)) out.push_back(f);
  }
  return out;
}

// Triangles and naturality of φ: from-family → to-family.
void PhiEquations(std::vector<LawEquation>& out, LeftFamily from,
                  LeftFamily to, const LawContext& c) {
  const Signature& sig = c.sig();
  ObjectExpr v = c.Obj("V");
  std::string tag = std::string(LeftFamilyName(from)) + "→" +
                    std::string(LeftFamilyName(to));
  LeftRigidity src = LeftRigidityOf(from, v, sig);
  LeftRigidity dst = LeftRigidityOf(to, v, sig);
  Term phi = UniquePhi(v, sig, from, to);
  out.push_back({tag + " birth triangle",
                 Seq({src.beta, T({phi, I(v)})}), dst.beta});
  out.push_back({tag + " death triangle",
                 Seq({T({I(v), phi}), dst.delta}), src.delta});
  out.push_back({tag + " inverse",
                 Seq({phi, UniquePhi(v, sig, to, from)}),
                 I(sig.Canon(LeftDual(v)))});
  Term f = c.Gen("f");
  ObjectExpr w = c.Obj("W");
  out.push_back({tag + " naturality",
                 Seq({LeftTranspose(f, sig, from), phi}),
                 Seq({UniquePhi(w, sig, from, to), LeftTranspose(f, sig, to)})});
}

std::vector<LawEquation> PartialTraceTypeOne(const LawContext& c) {
  const Signature& sig = c.sig();
  ObjectExpr a = c.Obj("A"), b = c.Obj("B"), v = c.Obj("V");
  Term f = c.Gen("f");
  Term fd = Term::Dagger(f);
  auto tr = [&](const Term& t, PartialTraceStyle s, const ObjectExpr& from,
                const ObjectExpr& to) {
    return PartialTrace(t, s, from, to, v, sig);
  };
  using S = PartialTraceStyle;
  return {
      {"goofyUp = goofyDown", tr(f, S::kGoofyUp, a, b),
       tr(f, S::kGoofyDown, a, b)},
      {"vanilla(f)† = goofy(f†)", Term::Dagger(tr(f, S::kVanilla, a, b)),
       tr(fd, S::kGoofyUp, b, a)},
      {"goofy(f)† = vanilla(f†)", Term::Dagger(tr(f, S::kGoofyUp, a, b)),
       tr(fd, S::kVanilla, b, a)},
  };
}

std::vector<LawEquation> PartialCyclic(const LawContext& c) {
  const Signature& sig = c.sig();
  ObjectExpr a = c.Obj("A"), b = c.Obj("B"), v = c.Obj("V");
  Term f = c.Gen("f");
  auto goofy = [&](const Term& t) {
    return PartialTrace(t, PartialTraceStyle::kGoofyUp, a, b, v, sig);
  };
  Term conj = Seq({T({I(a), Term::Twist(v)}), f, T({I(b), Term::TwistInv(v)})});
  Term conj_inv =
      Seq({T({I(a), Term::TwistInv(v)}), f, T({I(b), Term::Twist(v)})});
  return {{"conjugated by θ", goofy(f), goofy(conj)},
          {"conjugated by θ⁻¹", goofy(f), goofy(conj_inv)}};
}

std::vector<LawEquation> PartialTraceTypeTwo(const LawContext& c) {
  const Signature& sig = c.sig();
  ObjectExpr a = c.Obj("A"), b = c.Obj("B"), v = c.Obj("V");
  Term f = c.Gen("f");
  Term fd = Term::Dagger(f);
  using S = PartialTraceStyle;
  return {
      {"goofyUp(f)† = goofyDown(f†)",
       Term::Dagger(PartialTrace(f, S::kGoofyUp, a, b, v, sig)),
       PartialTrace(fd, S::kGoofyDown, b, a, v, sig)},
      {"vanilla(f)† = vanilla(f†)",
       Term::Dagger(PartialTrace(f, S::kVanilla, a, b, v, sig)),
       PartialTrace(fd, S::kVanilla, b, a, v, sig)},
  };
}

// Constraints on φ: dagger left rigidity → braided left rigidity.
std::vector<LawEquation> Restrictions(const LawContext& c, bool unitary) {
  const Signature& sig = c.sig();
  ObjectExpr v = c.Obj("V");
  ObjectExpr vl = sig.Canon(LeftDual(v));
  Term phi = UniquePhi(v, sig, LeftFamily::kDagger, LeftFamily::kBraided);
  Term phi_inv = UniquePhi(v, sig, LeftFamily::kBraided, LeftFamily::kDagger);
  Term phi_dag = Term::Dagger(phi);
  Term phi_inv_dag = Term::Dagger(phi_inv);
  if (unitary) {
    return {
        {"death side",
         Seq({Term::BraidInv(vl, v), T({phi_dag, I(v)}), Term::Death(v)}),
         Seq({Term::Braid(v, vl), T({phi, I(v)}), Term::Death(v)})},
        {"birth side",
         Seq({Term::Birth(v), T({I(v), phi_inv}), Term::BraidInv(vl, v)}),
         Seq({Term::Birth(v), T({I(v), phi_inv_dag}), Term::Braid(v, vl)})},
    };
  }
  return {
      {"death side", Seq({T({phi_dag, I(v)}), Term::Death(v)}),
       Seq({T({phi, I(v)}), Term::Death(v)})},
      {"birth side", Seq({Term::Birth(v), T({I(v), phi_inv})}),
       Seq({Term::Birth(v), T({I(v), phi_inv_dag})})},
  };
}

bool ChecksPass(const ValidationReport& r, const std::string& prefix) {
  bool any = false;
  for (const CheckResult& c : r.checks) {
    if (c.name.rfind(prefix, 0) != 0) continue;
    any = true;
    if (!c.passed) return false;
  }
  return any;
}

std::vector<Law> BuildCatalog() {
  std::vector<Law> laws;
  auto add = [&laws](Law law) { laws.push_back(std::move(law)); };

  // Quantum information flow.
  add({"absorption",
       Guard("right-rigid"),
       {"absorption theorem", "notions of absorption"},
       {"V", "W", "X"},
       {{"f", {"V"}, {"W"}}, {"g", {"W"}, {"X"}}},
       [](const LawContext& c) {
         const Signature& sig = c.sig();
         Term f = c.Gen("f"), g = c.Gen("g");
         return std::vector<LawEquation>{
             {"(g ⊗ id) ∘ name(f) = name(g ∘ f)",
              C(T({g, I(Dual(c.Obj("V")))}), NameOf(f, sig)),
              NameOf(C(g, f), sig)}};
       },
       {}});
  add({"compositionality",
       Guard("right-rigid"),
       {"absorption theorem", "notions of absorption"},
       {"V", "W", "X"},
       {{"f", {"V"}, {"W"}}, {"g", {"W"}, {"X"}}},
       [](const LawContext& c) {
         const Signature& sig = c.sig();
         Term f = c.Gen("f"), g = c.Gen("g");
         return std::vector<LawEquation>{
             {"(id ⊗ coname(f)) ∘ (name(g) ⊗ id) = g ∘ f",
              C(T({I(c.Obj("X")), ConameOf(f, sig)}),
                T({NameOf(g, sig), I(c.Obj("V"))})),
              C(g, f)}};
       },
       {}});
  add({"compositional_cut",
       Guard("right-rigid"),
       {"absorption theorem", "notions of absorption"},
       {"V", "W", "X", "Y"},
       {{"f", {"V"}, {"W"}}, {"g", {"W"}, {"X"}}, {"h", {"X"}, {"Y"}}},
       [](const LawContext& c) {
         const Signature& sig = c.sig();
         Term f = c.Gen("f"), g = c.Gen("g"), h = c.Gen("h");
         return std::vector<LawEquation>{
             {"(id ⊗ coname(g)) ∘ (name(h) ⊗ f) = h ∘ g ∘ f",
              C(T({I(c.Obj("Y")), ConameOf(g, sig)}), T({NameOf(h, sig), f})),
              C(h, C(g, f))}};
       },
       {}});
  add({"backward_absorption",
       Guard("right-rigid"),
       {"absorption theorem", "notions of absorption"},
       {"V", "W", "X"},
       {{"f", {"V"}, {"W"}}, {"g", {"W"}, {"X"}}},
       [](const LawContext& c) {
         const Signature& sig = c.sig();
         Term f = c.Gen("f"), g = c.Gen("g");
         return std::vector<LawEquation>{
             {"coname(g) ∘ (id ⊗ f) = coname(g ∘ f)",
              C(ConameOf(g, sig), T({I(Dual(c.Obj("X"))), f})),
              ConameOf(C(g, f), sig)}};
       },
       {}});

  // Hom-space isomorphisms.
  add({"hom_iso.bar_tilde",
       Guard("right-rigid"),
       {"Hom isomorphism lemma", "the isomorphism of Hom spaces"},
       {"V", "U", "W"},
       {{"f", {"V", "U"}, {"W"}}, {"g", {"V"}, {"W", "U*"}}},
       [](const LawContext& c) {
         const Signature& sig = c.sig();
         ObjectExpr u = c.Obj("U");
         Term f = c.Gen("f"), g = c.Gen("g");
         return std::vector<LawEquation>{
             {"tilde(bar(f)) = f", HomTilde(HomBar(f, u, sig), u, sig), f},
             {"bar(tilde(g)) = g", HomBar(HomTilde(g, u, sig), u, sig), g}};
       },
       {}});
  add({"hom_iso.bend_unbend",
       Guard("right-rigid"),
       {"Hom isomorphism lemma", "the isomorphism of Hom spaces"},
       {"V", "U", "W"},
       {{"f", {"V"}, {"U", "W"}}, {"g", {"U*", "V"}, {"W"}}},
       [](const LawContext& c) {
         const Signature& sig = c.sig();
         ObjectExpr u = c.Obj("U");
         Term f = c.Gen("f"), g = c.Gen("g");
         return std::vector<LawEquation>{
             {"unbend(bend(f)) = f", HomUnbend(HomBend(f, u, sig), u, sig), f},
             {"bend(unbend(g)) = g", HomBend(HomUnbend(g, u, sig), u, sig),
              g}};
       },
       {}});
  add({"hom_iso.left_bar_tilde",
       Guard("left-rigid"),
       {"Hom isomorphism lemma, left-rigid variants",
        "the isomorphism of Hom spaces"},
       {"V", "U", "W"},
       {{"f", {"V"}, {"W", "U"}}, {"g", {"V", "U^"}, {"W"}}},
       [](const LawContext& c) {
         const Signature& sig = c.sig();
         ObjectExpr u = c.Obj("U");
         Term f = c.Gen("f"), g = c.Gen("g");
         return std::vector<LawEquation>{
             {"tilde(bar(f)) = f",
              HomLeftTilde(HomLeftBar(f, u, sig), u, sig), f},
             {"bar(tilde(g)) = g",
              HomLeftBar(HomLeftTilde(g, u, sig), u, sig), g}};
       },
       {}});
  add({"hom_iso.left_bend_unbend",
       Guard("left-rigid"),
       {"Hom isomorphism lemma, left-rigid variants",
        "the isomorphism of Hom spaces"},
       {"V", "U", "W"},
       {{"f", {"U", "V"}, {"W"}}, {"g", {"V"}, {"U^", "W"}}},
       [](const LawContext& c) {
         const Signature& sig = c.sig();
         ObjectExpr u = c.Obj("U");
         Term f = c.Gen("f"), g = c.Gen("g");
         return std::vector<LawEquation>{
             {"unbend(bend(f)) = f",
              HomLeftUnbend(HomLeftBend(f, u, sig), u, sig), f},
             {"bend(unbend(g)) = g",
              HomLeftBend(HomLeftUnbend(g, u, sig), u, sig), g}};
       },
       {}});

  // Uniqueness of left rigidity.
  add({"left_rigidity.unique_phi",
       Guard("rigid"),
       {"uniqueness of left rigidity",
        "family of unique natural isomorphisms"},
       {"V", "W"},
       {{"f", {"V"}, {"W"}}},
       [](const LawContext& c) {
         std::vector<LawEquation> out;
         std::vector<LeftFamily> fams = AvailableFamilies(c.sig().flavor());
         for (LeftFamily from : fams) {
           for (LeftFamily to : fams) {
             if (from != to) PhiEquations(out, from, to, c);
           }
         }
         return out;
       },
       [](const ValidationReport& r) -> std::optional<std::string> {
         if (AvailableFamilies(r.flavor).size() < 2) {
           return "only one left rigidity is available";
         }
         return std::nullopt;
       }});
  add({"left_rigidity.braided_unique_iso",
       Guard("braided-rigid"),
       {"braided rigid left dual comparison", "respects left rigidity"},
       {"V", "W"},
       {{"f", {"V"}, {"W"}}},
       [](const LawContext& c) {
         std::vector<LawEquation> out;
         PhiEquations(out, LeftFamily::kBraided, LeftFamily::kPrimitive, c);
         return out;
       },
       {}});
  add({"rigid.p_q_isomorphisms",
       Guard("rigid"),
       {"double dual comparison lemma",
        "exist canonical natural isomorphisms"},
       {"V", "W"},
       {{"f", {"V"}, {"W"}}},
       [](const LawContext& c) {
         const Signature& sig = c.sig();
         ObjectExpr v = c.Obj("V"), w = c.Obj("W");
         Term f = c.Gen("f");
         return std::vector<LawEquation>{
             {"p⁻¹ ∘ p = id", Seq({PMap(v, sig), PMapInv(v, sig)}), I(v)},
             {"p ∘ p⁻¹ = id", Seq({PMapInv(v, sig), PMap(v, sig)}),
              I(sig.Canon(LeftDual(Dual(v))))},
             {"q⁻¹ ∘ q = id", Seq({QMap(v, sig), QMapInv(v, sig)}), I(v)},
             {"q ∘ q⁻¹ = id", Seq({QMapInv(v, sig), QMap(v, sig)}),
              I(sig.Canon(Dual(LeftDual(v))))},
             {"p natural", Seq({f, PMap(w, sig)}),
              Seq({PMap(v, sig), LeftTranspose(Transpose(f, sig), sig)})},
             {"q natural", Seq({f, QMap(w, sig)}),
              Seq({QMap(v, sig), Transpose(LeftTranspose(f, sig), sig)})}};
       },
       {}});
  add({"pseudo_pivotal.left_rigidity",
       Guard("balanced-rigid"),
       {"pseudo-pivotal left rigidity", "a canonical choice given by"},
       {"V"},
       {},
       [](const LawContext& c) {
         std::vector<LawEquation> out;
         ObjectExpr v = c.Obj("V");
         LeftSnakes(out, "pseudo-pivotal", LeftRigidityPseudoPivotal(v, c.sig()),
                    v, c.sig());
         return out;
       },
       {}});
  add({"balanced.pivotal_round_trip",
       Guard("balanced-rigid"),
       {"balanced and pseudo-pivotal structures",
        "balanced iff V is pseudo-pivotal"},
       {"V", "W"},
       {{"f", {"V"}, {"W"}}},
       [](const LawContext& c) {
         const Signature& sig = c.sig();
         ObjectExpr v = c.Obj("V"), w = c.Obj("W");
         Term f = c.Gen("f");
         return std::vector<LawEquation>{
             {"θ = ψ ∘ piv", Term::Twist(v),
              Seq({PivFromTwist(v, sig), Psi(v, sig)})},
             {"piv = ψ⁻¹ ∘ θ", PivFromTwist(v, sig),
              Seq({Term::Twist(v), PsiInv(v, sig)})},
             {"ψ ∘ ψ⁻¹ = id", Seq({PsiInv(v, sig), Psi(v, sig)}), I(v)},
             {"ψ⁻¹ ∘ ψ = id", Seq({Psi(v, sig), PsiInv(v, sig)}),
              I(Dual(Dual(v)))},
             {"piv monoidal", PivFromTwist(Tensor(v, w), sig),
              T({PivFromTwist(v, sig), PivFromTwist(w, sig)})},
             {"piv natural", Seq({f, PivFromTwist(w, sig)}),
              Seq({PivFromTwist(v, sig), Transpose(Transpose(f, sig), sig)})}};
       },
       {}});

  // Quantum traces.
  add({"quantum_trace.cyclic",
       Guard("balanced-rigid"),
       {"quantum trace remark", "the quantum trace is cyclic"},
       {"V", "W"},
       {{"f", {"V"}, {"W"}}, {"g", {"W"}, {"V"}}},
       [](const LawContext& c) {
         std::vector<LawEquation> out;
         Term f = c.Gen("f"), g = c.Gen("g");
         for (TraceStyle s :
              {TraceStyle::kOver, TraceStyle::kUnder, TraceStyle::kPivotal}) {
           out.push_back({"tr(f ∘ g) = tr(g ∘ f), " +
                              std::string(TraceStyleName(s)),
                          QuantumTrace(C(f, g), c.sig(), s),
                          QuantumTrace(C(g, f), c.sig(), s)});
         }
         return out;
       },
       {}});
  add({"quantum_trace.multiplicative",
       Guard("balanced-rigid"),
       {"pseudo-pivotal quantum trace", "define the quantum trace"},
       {"V", "W"},
       {{"f", {"V"}, {"V"}}, {"g", {"W"}, {"W"}}},
       [](const LawContext& c) {
         const Signature& sig = c.sig();
         Term f = c.Gen("f"), g = c.Gen("g");
         TraceStyle s = TraceStyle::kPivotal;
         return std::vector<LawEquation>{
             {"tr(f ⊗ g) = tr(f) tr(g)", QuantumTrace(T({f, g}), sig, s),
              T({QuantumTrace(f, sig, s), QuantumTrace(g, sig, s)})}};
       },
       {}});
  add({"quantum_trace.spherical",
       Guard("ribbon"),
       {"spherical categories", "the category is spherical"},
       {"V"},
       {{"f", {"V"}, {"V"}}},
       [](const LawContext& c) {
         const Signature& sig = c.sig();
         ObjectExpr v = c.Obj("V");
         Term f = c.Gen("f");
         return std::vector<LawEquation>{
             {"dim(V) = dim(V*)", QuantumDim(v, sig), QuantumDim(Dual(v), sig)},
             {"over = under", QuantumTrace(f, sig, TraceStyle::kOver),
              QuantumTrace(f, sig, TraceStyle::kUnder)},
             {"over = pivotal", QuantumTrace(f, sig, TraceStyle::kOver),
              QuantumTrace(f, sig, TraceStyle::kPivotal)}};
       },
       {}});

  // Partial traces and twists.
  add({"braid_twist_trick",
       Guard("balanced-rigid"),
       {"braid-twist trick lemma", "the moves depicted in"},
       {"V"},
       {},
       [](const LawContext& c) {
         ObjectExpr v = c.Obj("V");
         ObjectExpr vs = Dual(v);
         Term th = Term::Twist(v), thi = Term::TwistInv(v);
         Term ths = Term::Twist(vs), thsi = Term::TwistInv(vs);
         Term under = Term::BraidInv(vs, v);
         Term over = Term::Braid(v, vs);
         Term d = Term::Death(v), b = Term::Birth(v);
         return std::vector<LawEquation>{
             {"death, θ⁻¹ on V", Seq({T({thi, I(vs)}), under, d}),
              Seq({T({I(v), ths}), over, d})},
             {"death, θ⁻¹ on V*", Seq({T({I(v), thsi}), under, d}),
              Seq({T({th, I(vs)}), over, d})},
             {"birth, θ⁻¹ on V*", Seq({b, under, T({thsi, I(v)})}),
              Seq({b, T({th, I(vs)}), over})},
             {"birth, θ⁻¹ on V", Seq({b, under, T({I(vs), thi})}),
              Seq({b, T({I(v), ths}), over})}};
       },
       {}});
  add({"partial_trace.goofy_relation",
       Guard("balanced-rigid"),
       {"goofy partial traces fact", "θ denotes the family of natural twist"},
       {"A", "B", "V"},
       {{"f", {"A", "V"}, {"B", "V"}}},
       [](const LawContext& c) {
         const Signature& sig = c.sig();
         ObjectExpr a = c.Obj("A"), b = c.Obj("B"), v = c.Obj("V");
         Term f = c.Gen("f");
         Term conj = Seq({T({I(a), Term::Twist(v)}), f,
                          T({I(b), Term::TwistInv(v)})});
         return std::vector<LawEquation>{
             {"goofyDown(f) = goofyUp((id ⊗ θ⁻¹) ∘ f ∘ (id ⊗ θ))",
              PartialTrace(f, PartialTraceStyle::kGoofyDown, a, b, v, sig),
              PartialTrace(conj, PartialTraceStyle::kGoofyUp, a, b, v, sig)}};
       },
       {}});
  add({"partial_trace.type_one",
       Guard("typeI"),
       {"Type I partial-trace theorem", "Consider the Vanilla partial trace"},
       {"A", "B", "V"},
       {{"f", {"A", "V"}, {"B", "V"}}},
       PartialTraceTypeOne,
       {}});
  add({"partial_trace.type_one_cyclic",
       Guard("typeI"),
       {"Type I partial-trace corollary", "partial cyclic with respect to"},
       {"A", "B", "V"},
       {{"f", {"A", "V"}, {"B", "V"}}},
       PartialCyclic,
       {}});
  add({"partial_trace.type_two",
       Guard("typeII"),
       {"Type II partial-trace theorem", "Then the following are true"},
       {"A", "B", "V"},
       {{"f", {"A", "V"}, {"B", "V"}}},
       PartialTraceTypeTwo,
       {}});

  // Dagger compatibility.
  Flavor type_one_rigid = Guard("dagger-rigid braided");
  type_one_rigid.dagger_type = DaggerType::kI;
  Flavor type_two_rigid = type_one_rigid;
  type_two_rigid.dagger_type = DaggerType::kII;
  add({"restriction.type_one",
       type_one_rigid.Closed(),
       {"Type I restriction lemma", "we have the following restrictions"},
       {"V"},
       {},
       [](const LawContext& c) { return Restrictions(c, true); },
       {}});
  add({"restriction.type_two",
       type_two_rigid.Closed(),
       {"Type II restriction lemma", "restriction lemma is much weaker"},
       {"V"},
       {},
       [](const LawContext& c) { return Restrictions(c, false); },
       {}});
  add({"hermitian.phi_is_dual_twist",
       Guard("typeI-ribbon"),
       {"Hermitian ribbon characterization", "such that φV = θV∗"},
       {"V"},
       {},
       [](const LawContext& c) {
         const Signature& sig = c.sig();
         ObjectExpr v = c.Obj("V");
         Term th = Term::Twist(sig.Canon(Dual(v)));
         LeftRigidity dag = LeftRigidityFromDagger(v, sig);
         LeftRigidity br = LeftRigidityFromBraiding(v, sig);
         return std::vector<LawEquation>{
             {"φ = θ_{V*}",
              UniquePhi(v, sig, LeftFamily::kDagger, LeftFamily::kBraided),
              th},
             {"birth triangle", Seq({dag.beta, T({th, I(v)})}), br.beta},
             {"death triangle", Seq({T({I(v), th}), br.delta}), dag.delta}};
       },
       {}});
  add({"no_go.unitary_type_two",
       Guard("dagger braided"),
       {"unitary Type II no-go theorem", "Then V is symmetric"},
       {"V", "W"},
       {},
       [](const LawContext& c) {
         ObjectExpr v = c.Obj("V"), w = c.Obj("W");
         return std::vector<LawEquation>{
             {"c_{W,V} ∘ c_{V,W} = id",
              Seq({Term::Braid(v, w), Term::Braid(w, v)}), I(Tensor(v, w))}};
       },
       [](const ValidationReport& r) -> std::optional<std::string> {
         if (!ChecksPass(r, "typeII.")) return "Type II checks fail";
         if (!ChecksPass(r, "typeI.unitary_braid")) {
           return "braiding is not unitary";
         }
         return std::nullopt;
       }});

  // Transpose functor.
  add({"transpose.functor",
       Guard("right-rigid"),
       {"star monoidal equivalence lemma", "fully faithful monoidal functor"},
       {"V", "W", "X"},
       {{"f", {"V"}, {"W"}}, {"g", {"W"}, {"X"}}},
       [](const LawContext& c) {
         const Signature& sig = c.sig();
         Term f = c.Gen("f"), g = c.Gen("g");
         ObjectExpr v = c.Obj("V");
         return std::vector<LawEquation>{
             {"(g ∘ f)* = f* ∘ g*", Transpose(C(g, f), sig),
              C(Transpose(f, sig), Transpose(g, sig))},
             {"id* = id", Transpose(I(v), sig), I(sig.Canon(Dual(v)))}};
       },
       {}});
  return laws;
}

ObjectExpr SlotObject(const std::string& word,
                      const std::map<std::string, ObjectExpr>& objects) {
  std::string base = word;
  int op = 0;
  if (!base.empty() && (base.back() == '*' || base.back() == '^')) {
    op = base.back() == '*' ? 1 : 2;
    base.pop_back();
  }
  auto it = objects.find(base);
  if (it == objects.end()) {
    throw Error(ErrorCode::kBindingIllTyped, "object slot '" + base +
                                                 "' is not bound");
  }
  if (op == 1) return Dual(it->second);
  if (op == 2) return LeftDual(it->second);
  return it->second;
}

ObjectExpr SlotWord(const std::vector<std::string>& words,
                    const std::map<std::string, ObjectExpr>& objects) {
  ObjectExpr out = Unit();
  for (const std::string& w : words) out = Tensor(out, SlotObject(w, objects));
  return out;
}

// Slot values: base objects, their right duals when the model is
// right-rigid, and the unit.
std::vector<ObjectExpr> SlotAlphabet(const ModelSpec& model) {
  std::vector<ObjectExpr> out;
  for (const auto& [name, dim] : model.structure().dims) {
    out.push_back(ObjectExpr::Generator(name));
  }
  if (model.flavor().right_rigid) {
    for (std::size_t i = 0, n = out.size(); i < n; ++i) {
      out.push_back(model.Canon(Dual(out[i])));
    }
  }
  out.push_back(Unit());
  return out;
}

// Slot types for an object assignment, or nothing when some generator
// space is empty.
std::optional<std::vector<std::pair<ObjectExpr, ObjectExpr>>> SlotTypes(
    const Law& law, const ModelSpec& model,
    const std::map<std::string, ObjectExpr>& objects) {
  std::vector<std::pair<ObjectExpr, ObjectExpr>> out;
  for (const GeneratorSlot& g : law.generators) {
    ObjectExpr dom = model.Canon(SlotWord(g.dom, objects));
    ObjectExpr cod = model.Canon(SlotWord(g.cod, objects));
    if (NaturalBasis(model, dom, cod).empty()) return std::nullopt;
    out.emplace_back(dom, cod);
  }
  return out;
}

std::string FormatDeviation(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", d);
  return buf;
}

using RewriteCache =
    std::map<std::tuple<const Node*, const Node*, std::string>, bool>;

LawReport Check(const Law& law, const ModelSpec& model, const Binding& binding,
                const ValidationReport& report, RewriteCache* cache) {
  if (!report.ValidatedFor(law.guard)) {
    std::string why;
    for (const std::string& b : report.Blocking(law.guard)) {
      why += (why.empty() ? "" : "; ") + b;
    }
    throw Error(ErrorCode::kGuardUnsatisfied,
                "law " + law.name + " needs " + law.guard.ToString() + ": " +
                    why);
  }
  LawReport out;
  out.law = law.name;
  out.binding = binding.Describe();
  if (law.vacuous_when) {
    if (std::optional<std::string> why = law.vacuous_when(report)) {
      out.result = LawResult::kVacuous;
      out.detail = *why;
      return out;
    }
  }
  for (const std::string& slot : law.objects) {
    if (!binding.objects.count(slot)) {
      throw Error(ErrorCode::kBindingIllTyped,
                  "object slot '" + slot + "' is not bound");
    }
  }
  for (const GeneratorSlot& g : law.generators) {
    auto it = binding.generators.find(g.name);
    if (it == binding.generators.end()) {
      throw Error(ErrorCode::kBindingIllTyped,
                  "generator slot '" + g.name + "' is not bound");
    }
    ObjectExpr dom = model.Canon(SlotWord(g.dom, binding.objects));
    ObjectExpr cod = model.Canon(SlotWord(g.cod, binding.objects));
    const GeneratorData& data = it->second;
    if (model.Canon(data.dom) != dom || model.Canon(data.cod) != cod) {
      throw Error(ErrorCode::kBindingIllTyped,
                  "generator '" + g.name + "' must have type " +
                      ToString(dom) + " → " + ToString(cod));
    }
    if (data.matrix.rows() != model.Dim(cod) ||
        data.matrix.cols() != model.Dim(dom)) {
      throw Error(ErrorCode::kBindingIllTyped,
                  "generator '" + g.name + "' has a matrix of the wrong shape");
    }
  }

  Flavor flavor = model.flavor().Union(law.guard);
  ModelSpec bound = model.WithFlavor(flavor).WithGenerators(binding.generators);
  Signature sig = bound.MakeSignature();
  LawContext ctx(sig, binding);
  std::vector<LawEquation> eqs = law.equations(ctx);
  out.equations = static_cast<int>(eqs.size());
  bool all_pass = true;
  for (const LawEquation& eq : eqs) {
    auto key = std::make_tuple(eq.lhs.node(), eq.rhs.node(), flavor.ToString());
    bool equal = false;
    auto hit = cache ? cache->find(key) : RewriteCache::iterator{};
    if (cache && hit != cache->end()) {
      equal = hit->second;
    } else {
      try {
        equal = EqualByRewrite(eq.lhs, eq.rhs, sig) == RewriteVerdict::kEqual;
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        equal = false;  // step limit
      }
      if (cache) cache->emplace(key, equal);
    }
    if (equal) ++out.rewrite_equal;
    ComplexMatrix lhs = Eval(eq.lhs, bound);
    ComplexMatrix rhs = Eval(eq.rhs, bound);
    double dev = MaxDeviation(lhs, rhs);
    double scale = 1.0;
    if (lhs.size() > 0) scale = std::max(scale, lhs.cwiseAbs().maxCoeff());
    if (rhs.size() > 0) scale = std::max(scale, rhs.cwiseAbs().maxCoeff());
    out.deviation = std::max(out.deviation, dev);
    if (!(dev <= bound.tolerance() * scale)) {
      all_pass = false;
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += eq.label + " deviates by " + FormatDeviation(dev);
    }
  }
  out.method = out.rewrite_equal == out.equations ? LawMethod::kBoth
                                                  : LawMethod::kEvaluate;
  out.result = all_pass ? LawResult::kPass : LawResult::kFail;
  return out;
}

}  // namespace

std::string Binding::Describe() const {
  std::string out;
  for (const auto& [slot, x] : objects) {
    if (!out.empty()) out += ' ';
    out += slot + "=" + ToString(x);
  }
  bool first = true;
  for (const auto& [name, g] : generators) {
    out += first ? "; " : ", ";
    first = false;
    out += name + ": " + ToString(g.dom) + " → " + ToString(g.cod);
  }
  return out;
}

ObjectExpr LawContext::Obj(const std::string& slot) const {
  return sig_.Canon(SlotObject(slot, binding_.objects));
}

Term LawContext::Gen(const std::string& slot) const {
  if (!binding_.generators.count(slot)) {
    throw Error(ErrorCode::kBindingIllTyped,
                "generator slot '" + slot + "' is not bound");
  }
  return Term::Gen(slot);
}

const std::vector<Law>& LawCatalog() {
  static const std::vector<Law> catalog = BuildCatalog();
  return catalog;
}

const Law* FindLaw(const std::string& name) {
  for (const Law& law : LawCatalog()) {
    if (law.name == name) return &law;
  }
  return nullptr;
}

std::string_view LawMethodName(LawMethod m) {
  switch (m) {
    case LawMethod::kRewrite: return "rewrite";
    case LawMethod::kEvaluate: return "evaluate";
    case LawMethod::kBoth: return "both";
  }
  return "?";
}

std::string_view LawResultName(LawResult r) {
  switch (r) {
    case LawResult::kPass: return "pass";
    case LawResult::kFail: return "fail";
    case LawResult::kVacuous: return "vacuous";
    case LawResult::kGuardUnsatisfied: return "guard-unsatisfied";
    case LawResult::kUnknown: return "unknown";
  }
  return "?";
}

std::optional<Binding> SampleBinding(const Law& law, const ModelSpec& model,
                                     std::mt19937_64& rng) {
  std::vector<ObjectExpr> atoms = SlotAlphabet(model);
  std::map<std::string, ObjectExpr> objects;
  std::optional<std::vector<std::pair<ObjectExpr, ObjectExpr>>> types;
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  for (int attempt = 0; attempt < 64 && !types; ++attempt) {
    objects.clear();
    for (const std::string& slot : law.objects) {
      objects[slot] = atoms[pick(rng)];
    }
    types = SlotTypes(law, model, objects);
  }
  // Fall back to binding every slot to the same object.
  for (std::size_t i = 0; i < atoms.size() && !types; ++i) {
    objects.clear();
    for (const std::string& slot : law.objects) {
      objects[slot] = atoms[i];
    }
    types = SlotTypes(law, model, objects);
  }
  if (!types) return std::nullopt;
  Binding out;
  out.objects = objects;
  for (std::size_t i = 0; i < law.generators.size(); ++i) {
    const auto& [dom, cod] = (*types)[i];
    GeneratorData data;
    data.dom = dom;
    data.cod = cod;
    data.matrix = RandomMorphism(model, dom, cod, rng);
    out.generators.emplace(law.generators[i].name, std::move(data));
  }
  return out;
}

LawReport CheckLaw(const Law& law, const ModelSpec& model,
                   const Binding& binding, const ValidationReport& report) {
  return Check(law, model, binding, report, nullptr);
}

LawReport CheckLaw(const Law& law, const ModelSpec& model,
                   const Binding& binding) {
  return CheckLaw(law, model, binding, ValidateModel(model));
}

std::vector<LawReport> RunSuite(const Flavor& flavor, const ModelSpec& model,
                                int samples, std::uint64_t seed) {
  std::vector<LawReport> out;
  ValidationReport report = ValidateModel(model);
  RewriteCache cache;
  const std::vector<Law>& catalog = LawCatalog();
  for (std::size_t index = 0; index < catalog.size(); ++index) {
    const Law& law = catalog[index];
    if (!flavor.Closed().Satisfies(law.guard)) continue;
    if (!report.ValidatedFor(law.guard)) {
      LawReport r;
      r.law = law.name;
      r.result = LawResult::kGuardUnsatisfied;
      for (const std::string& b : report.Blocking(law.guard)) {
        r.detail += (r.detail.empty() ? "" : "; ") + b;
      }
      out.push_back(std::move(r));
      continue;
    }
    std::mt19937_64 rng(seed + index);
    for (int s = 0; s < samples; ++s) {
      std::optional<Binding> binding = SampleBinding(law, model, rng);
      if (!binding) {
        LawReport r;
        r.law = law.name;
        r.result = LawResult::kUnknown;
        r.detail = "no natural morphism fits the generator slots";
        out.push_back(std::move(r));
        break;
      }
      LawReport r = Check(law, model, *binding, report, &cache);
      bool vacuous = r.result == LawResult::kVacuous;
      out.push_back(std::move(r));
      if (vacuous) break;
    }
  }
  return out;
}

SuiteSummary Summarize(const std::vector<LawReport>& reports) {
  SuiteSummary s;
  for (const LawReport& r : reports) {
    switch (r.result) {
      case LawResult::kPass:
      case LawResult::kVacuous: ++s.pass; break;
      case LawResult::kFail:
      case LawResult::kGuardUnsatisfied: ++s.fail; break;
      case LawResult::kUnknown: ++s.unknown; break;
    }
  }
  return s;
}

std::string LawReportsText(const std::vector<LawReport>& reports) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  std::vector<std::string> order;
  std::map<std::string, std::vector<const LawReport*>> by_law;
  for (const LawReport& r : reports) {
    if (!by_law.count(r.law)) order.push_back(r.law);
    by_law[r.law].push_back(&r);
  }
  for (const std::string& name : order) {
    const auto& rs = by_law[name];
    int pass = 0, fail = 0, both = 0;
    double dev = 0.0;
    LawResult shown = LawResult::kPass;
    std::string detail;
    for (const LawReport* r : rs) {
      dev = std::max(dev, r->deviation);
      if (r->method == LawMethod::kBoth) ++both;
      if (r->result == LawResult::kPass) ++pass;
      if (r->result != LawResult::kPass) {
        if (r->result != LawResult::kVacuous) ++fail;
        shown = r->result;
        if (detail.empty()) detail = r->detail;
      }
    }
    char line[200];
    std::snprintf(line, sizeof line,
                  "%-18s %-36s %3d/%-3zu max dev %-9.3g rewrite-proved %d",
                  std::string(LawResultName(shown)).c_str(), name.c_str(),
                  pass, rs.size(), dev, both);
    os << line;
    if (!detail.empty()) os << "  " << detail;
    os << "\n";
  }
  for (const LawReport& r : reports) {
    if (r.result != LawResult::kFail) continue;
    os << "  failed " << r.law << " [" << r.binding << "]: " << r.detail
       << "\n";
  }
  SuiteSummary s = Summarize(reports);
  os << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.unknown
     << " unknown\n";
  return os.str();
}

std::string LawReportsJson(const std::vector<LawReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const LawReport& r : reports) {
    out.push_back({{"law", r.law},
                   {"binding", r.binding},
                   {"method", std::string(LawMethodName(r.method))},
                   {"result", std::string(LawResultName(r.result))},
                   {"deviation", r.deviation},
                   {"rewrite_equal", r.rewrite_equal},
                   {"equations", r.equations},
                   {"detail", r.detail}});
  }
  return out.dump(2);
}

}  // namespace strand
