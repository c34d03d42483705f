// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

// Matrix models and term evaluation.
//
// Wire spaces: a word X = a1 ⊗ ... ⊗ ak is C^{n1} ⊗ ... ⊗ C^{nk} with the
// first atom as the most significant index. Duality data for an object V of
// dimension n is a pair of n×n matrices B, D with
//   b_V = Σ B[i,j] e_i ⊗ e^j       and      d_V(e^j ⊗ e_i) = D[j,i],
// so the snake equations hold iff B·D = D·B = I. Data for V*, V**, ... and
// for compound words is derived: B(V*) = D(V), D(V*) = B(V*)⁻¹; the braiding
// of a dual atom is forced by naturality with b and d; compound braidings
// follow the strict hexagons; compound twists follow the balancing equation.

#ifndef STRAND_MODEL_HPP_
#define STRAND_MODEL_HPP_

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "strand/term.hpp"

namespace strand {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

enum class DaggerRealization {
  kNone,
  kConjugateTranspose,
  // Generator adjoints come from explicit tables; structural morphisms use
  // the conjugate transpose.
  kTables,
};

struct DualityData {
  ComplexMatrix birth;                 // B
  std::optional<ComplexMatrix> death;  // D; B⁻¹ when absent
};

struct StructureData {
  std::string name;
  Flavor flavor;
  std::map<std::string, int> dims;
  std::map<std::string, DualityData> duality;
  // Explicit β/δ for base objects, used only when no canonical left
  // rigidity exists: β_V = Σ B[i,j] e^i ⊗ e_j, δ_V(e_j ⊗ e^i) = D[j,i].
  std::map<std::string, DualityData> left_duality;
  std::map<std::pair<std::string, std::string>, ComplexMatrix> braid;
  std::map<std::string, ComplexMatrix> twist;
  // Optional θ_{V*}; the transpose of θ_V otherwise.
  std::map<std::string, ComplexMatrix> dual_twist;
  DaggerRealization dagger = DaggerRealization::kNone;
  double tolerance = 1e-10;
};

struct GeneratorData {
  ObjectExpr dom;
  ObjectExpr cod;
  ComplexMatrix matrix;
  std::optional<std::string> adjoint;
  std::optional<ComplexMatrix> adjoint_matrix;
};

using GeneratorMap = std::map<std::string, GeneratorData>;

class ModelCache;

// Immutable model handle. Copies share structure data and derived-matrix
// caches; the caches are internally synchronized.
class ModelSpec {
 public:
  // Throws Error(kShapeMismatch) or Error(kInvalidModel) on inconsistent data.
  explicit ModelSpec(StructureData data, GeneratorMap generators = {});

  const std::string& name() const { return data_->name; }
  const Flavor& flavor() const { return data_->flavor; }
  double tolerance() const { return data_->tolerance; }
  const StructureData& structure() const { return *data_; }
  const GeneratorMap& generators() const { return *generators_; }

  // Same structure with `extra` generators added (replacing equal names).
  ModelSpec WithGenerators(const GeneratorMap& extra) const;
  ModelSpec WithFlavor(const Flavor& flavor) const;

  // Signature over the model's objects and generators.
  Signature MakeSignature() const;

  ObjectExpr Canon(const ObjectExpr& x) const;
  long Dim(const ObjectExpr& x) const;

  // Structural matrices on canonical words.
  const ComplexMatrix& Birth(const ObjectExpr& x) const;
  const ComplexMatrix& Death(const ObjectExpr& x) const;
  const ComplexMatrix& LBirth(const ObjectExpr& x) const;
  const ComplexMatrix& LDeath(const ObjectExpr& x) const;
  const ComplexMatrix& Braid(const ObjectExpr& u, const ObjectExpr& v) const;
  const ComplexMatrix& BraidInv(const ObjectExpr& u,
                                const ObjectExpr& v) const;
  const ComplexMatrix& Twist(const ObjectExpr& x) const;
  const ComplexMatrix& TwistInv(const ObjectExpr& x) const;

  // Adjoint of a generator under the model's dagger realization.
  ComplexMatrix GeneratorAdjoint(const std::string& name) const;

  const ModelCache& cache() const { return *cache_; }

 private:
  std::shared_ptr<const StructureData> data_;
  std::shared_ptr<const GeneratorMap> generators_;
  std::shared_ptr<ModelCache> cache_;
};

// Functorial evaluation. Errors: UnassignedGenerator, FlavorViolation,
// ShapeMismatch.
ComplexMatrix Eval(const Term& t, const ModelSpec& model);
// eval(t) · x without materializing identity tensor factors.
ComplexMatrix ApplyTerm(const Term& t, const ComplexMatrix& x,
                        const ModelSpec& model);

// The single entry of a 1×1 matrix; Error(kNotScalarShaped) otherwise.
Complex ModelScalar(const ComplexMatrix& m);

// Entrywise max-norm distance; +inf when the shapes differ.
double MaxDeviation(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix Kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace strand

#endif  // STRAND_MODEL_HPP_
