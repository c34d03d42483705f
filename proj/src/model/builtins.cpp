// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include "strand/builtins.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "model_cache.hpp"
#include "strand/error.hpp"

namespace strand {
namespace {

ComplexMatrix Scalar(Complex z) {
  ComplexMatrix m(1, 1);
  m(0, 0) = z;
  return m;
}

std::string FormatParam(Complex q) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(6);
  if (q.imag() == 0.0) {
    os << q.real();
  } else {
    os << q.real() << (q.imag() < 0 ? "" : "+") << q.imag() << "i";
  }
  return os.str();
}

}  // namespace

ModelSpec SymVect(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidModel, "SymVect needs n >= 1");
  StructureData d;
  d.name = "symvect(" + std::to_string(n) + ")";
  d.flavor = ParseFlavor("dagger-compact-closed ribbon");
  d.dims["V"] = n;
  d.duality["V"] = {ComplexMatrix::Identity(n, n), std::nullopt};
  ComplexMatrix swap = ComplexMatrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) swap(j * n + i, i * n + j) = 1.0;
  }
  d.braid[{"V", "V"}] = swap;
  d.twist["V"] = ComplexMatrix::Identity(n, n);
  d.dagger = DaggerRealization::kConjugateTranspose;
  return ModelSpec(std::move(d));
}

namespace {

ModelSpec Anyon(int n, int k, const std::vector<std::string>& names,
                const std::string& model_name) {
  StructureData d;
  d.name = model_name;
  d.flavor = ParseFlavor("typeI-ribbon");
  const double pi = std::numbers::pi;
  for (std::size_t a = 0; a < names.size(); ++a) {
    int ca = static_cast<int>(a) + 1;
    d.dims[names[a]] = 1;
    d.duality[names[a]] = {Scalar(1.0), std::nullopt};
    d.twist[names[a]] = Scalar(std::polar(1.0, pi * k * ca * ca / n));
    for (std::size_t b = 0; b < names.size(); ++b) {
      int cb = static_cast<int>(b) + 1;
      d.braid[{names[a], names[b]}] =
          Scalar(std::polar(1.0, pi * k * ca * cb / n));
    }
  }
  d.dagger = DaggerRealization::kConjugateTranspose;
  return ModelSpec(std::move(d));
}

}  // namespace

ModelSpec AbelianAnyon(int n, int k) {
  if (n < 2) throw Error(ErrorCode::kInvalidModel, "AbelianAnyon needs n >= 2");
  std::vector<std::string> names;
  for (int a = 1; a < n; ++a) names.push_back("a" + std::to_string(a));
  return Anyon(n, k, names,
               "anyon(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

ModelSpec Semion() { return Anyon(2, 1, {"s"}, "semion"); }

ModelSpec RMatrix(Complex q) {
  if (std::abs(q) == 0.0) {
    throw Error(ErrorCode::kInvalidModel, "RMatrix needs q != 0");
  }
  StructureData d;
  d.name = "rmatrix(q=" + FormatParam(q) + ")";
  bool real = q.imag() == 0.0;
  d.flavor = ParseFlavor(real ? "typeII-ribbon" : "ribbon");
  d.dagger = real ? DaggerRealization::kConjugateTranspose
                  : DaggerRealization::kNone;
  d.dims["V"] = 2;
  ComplexMatrix r = ComplexMatrix::Zero(4, 4);
  r(0, 0) = q;
  r(3, 3) = q;
  r(2, 1) = 1.0;
  r(1, 2) = 1.0;
  r(2, 2) = q - 1.0 / q;
  d.braid[{"V", "V"}] = r;
  ComplexMatrix b = ComplexMatrix::Zero(2, 2);
  b(0, 0) = std::sqrt(q);
  b(1, 1) = 1.0 / std::sqrt(q);
  d.duality["V"] = {b, std::nullopt};
  d.twist["V"] = q * q * ComplexMatrix::Identity(2, 2);
  return ModelSpec(std::move(d));
}

ModelSpec PerturbBraid(const ModelSpec& model, const std::string& u,
                       const std::string& v, int row, int col, Complex delta) {
  StructureData d = model.structure();
  auto it = d.braid.find({u, v});
  if (it == d.braid.end() || row >= it->second.rows() ||
      col >= it->second.cols()) {
    throw Error(ErrorCode::kInvalidModel, "no such braiding entry");
  }
  it->second(row, col) += delta;
  d.name += "+perturbed";
  return ModelSpec(std::move(d), model.generators());
}

// ---------------------------------------------------------------------------

const std::vector<ComplexMatrix>& NaturalBasis(const ModelSpec& model,
                                               const ObjectExpr& dom_in,
                                               const ObjectExpr& cod_in) {
  ObjectExpr dom = model.Canon(dom_in);
  ObjectExpr cod = model.Canon(cod_in);
  ModelCache& cache = const_cast<ModelCache&>(model.cache());
  if (const auto* hit = cache.FindBasis(dom, cod)) return *hit;

  const Flavor& fl = model.flavor();
  long rows = model.Dim(cod);
  long cols = model.Dim(dom);
  long unknowns = rows * cols;

  std::vector<ObjectExpr> probes;
  if (fl.braided) {
    for (const auto& [name, n] : model.structure().dims) {
      ObjectExpr w = ObjectExpr::Generator(name);
      probes.push_back(w);
      if (fl.right_rigid) {
        probes.push_back(Dual(w));
        probes.push_back(Dual(Dual(w)));
      }
    }
  }

  // Residuals of each elementary matrix; the constraints are linear in X.
  auto residuals = [&](const ComplexMatrix& x) {
    std::vector<ComplexMatrix> out;
    for (const ObjectExpr& w : probes) {
      long nw = model.Dim(w);
      ComplexMatrix iw = ComplexMatrix::Identity(nw, nw);
      out.push_back(model.Braid(cod, w) * Kron(x, iw) -
                    Kron(iw, x) * model.Braid(dom, w));
      out.push_back(model.Braid(w, cod) * Kron(iw, x) -
                    Kron(x, iw) * model.Braid(w, dom));
    }
    if (fl.balanced) out.push_back(model.Twist(cod) * x - x * model.Twist(dom));
    return out;
  };

  std::vector<ComplexMatrix> basis;
  if (probes.empty() && !fl.balanced) {
    for (long c = 0; c < cols; ++c) {
      for (long r = 0; r < rows; ++r) {
        ComplexMatrix e = ComplexMatrix::Zero(rows, cols);
        e(r, c) = 1.0;
        basis.push_back(std::move(e));
      }
    }
    return cache.InsertBasis(dom, cod, std::move(basis));
  }

  long height = 0;
  std::vector<ComplexMatrix> columns;
  for (long k = 0; k < unknowns; ++k) {
    ComplexMatrix e = ComplexMatrix::Zero(rows, cols);
    e(k % rows, k / rows) = 1.0;
    std::vector<ComplexMatrix> res = residuals(e);
    long h = 0;
    for (const ComplexMatrix& m : res) h += m.size();
    ComplexMatrix col(h, 1);
    long at = 0;
    for (const ComplexMatrix& m : res) {
      col.block(at, 0, m.size(), 1) =
          Eigen::Map<const ComplexMatrix>(m.data(), m.size(), 1);
      at += m.size();
    }
    height = h;
    columns.push_back(std::move(col));
  }
  ComplexMatrix a(height, unknowns);
  for (long k = 0; k < unknowns; ++k) a.col(k) = columns[k];
  ComplexMatrix gram = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(gram);
  double top = std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
  for (long k = 0; k < unknowns; ++k) {
    if (std::abs(eig.eigenvalues()(k)) < 1e-14 * top) {
      ComplexMatrix v = eig.eigenvectors().col(k);
      basis.push_back(Eigen::Map<ComplexMatrix>(v.data(), rows, cols));
    }
  }
  return cache.InsertBasis(dom, cod, std::move(basis));
}

ComplexMatrix RandomMorphism(const ModelSpec& model, const ObjectExpr& dom,
                             const ObjectExpr& cod, std::mt19937_64& rng) {
  const std::vector<ComplexMatrix>& basis = NaturalBasis(model, dom, cod);
  if (basis.empty()) {
    throw Error(ErrorCode::kBindingIllTyped,
                "model '" + model.name() + "' has no nonzero natural " +
                    ToString(dom) + " → " + ToString(cod));
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ComplexMatrix out = ComplexMatrix::Zero(basis[0].rows(), basis[0].cols());
  for (const ComplexMatrix& b : basis) {
    double re = unit(rng);
    double im = unit(rng);
    out += Complex(re, im) * b;
  }
  return out;
}

}  // namespace strand
