// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include "strand/model.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>

#include "model_cache.hpp"
#include "strand/error.hpp"

namespace strand {
namespace {

ComplexMatrix Identity(long n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix RowMajorColumn(const ComplexMatrix& m) {
  ComplexMatrix v(m.rows() * m.cols(), 1);
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < m.cols(); ++j) v(i * m.cols() + j, 0) = m(i, j);
  }
  return v;
}

ObjectExpr Word(const Atom& a) { return ObjectExpr({a}); }

bool AllRight(const Atom& a) {
  for (DualMark m : a.marks) {
    if (m != DualMark::kRight) return false;
  }
  return true;
}

void ExpectShape(const ComplexMatrix& m, long rows, long cols,
                 const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(ErrorCode::kShapeMismatch,
                what + " is " + std::to_string(m.rows()) + "×" +
                    std::to_string(m.cols()) + ", expected " +
                    std::to_string(rows) + "×" + std::to_string(cols));
  }
}

ComplexMatrix Inverse(const ComplexMatrix& m, const std::string& what) {
  Eigen::FullPivLU<ComplexMatrix> lu(m);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::kInvalidModel, what + " is not invertible");
  }
  return lu.inverse();
}

}  // namespace

ComplexMatrix Kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double MaxDeviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

Complex ModelScalar(const ComplexMatrix& m) {
  if (m.rows() != 1 || m.cols() != 1) {
    throw Error(ErrorCode::kNotScalarShaped,
                "matrix is " + std::to_string(m.rows()) + "×" +
                    std::to_string(m.cols()));
  }
  return m(0, 0);
}

// ---------------------------------------------------------------------------

ModelSpec::ModelSpec(StructureData data, GeneratorMap generators)
    : cache_(std::make_shared<ModelCache>()) {
  data.flavor = data.flavor.Closed();
  const Flavor& fl = data.flavor;
  if (fl.dagger != (data.dagger != DaggerRealization::kNone)) {
    throw Error(ErrorCode::kInvalidModel,
                "a dagger flavor needs a dagger realization and vice versa");
  }
  for (const auto& [obj, n] : data.dims) {
    if (n < 1) {
      throw Error(ErrorCode::kInvalidModel,
                  "object '" + obj + "' needs a positive dimension");
    }
    if (fl.right_rigid) {
      auto it = data.duality.find(obj);
      if (it == data.duality.end()) {
        throw Error(ErrorCode::kInvalidModel,
                    "no duality data for object '" + obj + "'");
      }
      ExpectShape(it->second.birth, n, n, "birth of " + obj);
      if (it->second.death) ExpectShape(*it->second.death, n, n, "death of " + obj);
    }
    if (fl.left_rigid && !fl.identifies_left_duals()) {
      auto it = data.left_duality.find(obj);
      if (it == data.left_duality.end()) {
        throw Error(ErrorCode::kInvalidModel,
                    "no left duality data for object '" + obj + "'");
      }
      ExpectShape(it->second.birth, n, n, "left birth of " + obj);
      if (it->second.death) {
        ExpectShape(*it->second.death, n, n, "left death of " + obj);
      }
    }
    if (fl.braided) {
      for (const auto& [other, m] : data.dims) {
        auto it = data.braid.find({obj, other});
        if (it == data.braid.end()) {
          throw Error(ErrorCode::kInvalidModel,
                      "no braiding for (" + obj + ", " + other + ")");
        }
        ExpectShape(it->second, n * m, n * m,
                    "braiding (" + obj + ", " + other + ")");
      }
    }
    if (fl.balanced) {
      auto it = data.twist.find(obj);
      if (it == data.twist.end()) {
        throw Error(ErrorCode::kInvalidModel, "no twist for '" + obj + "'");
      }
      ExpectShape(it->second, n, n, "twist of " + obj);
    }
    auto dt = data.dual_twist.find(obj);
    if (dt != data.dual_twist.end()) {
      ExpectShape(dt->second, n, n, "dual twist of " + obj);
    }
  }
  data_ = std::make_shared<const StructureData>(std::move(data));
  for (const auto& [name, g] : generators) {
    long rows = Dim(g.cod);
    long cols = Dim(g.dom);
    ExpectShape(g.matrix, rows, cols, "generator " + name);
    if (g.adjoint_matrix) {
      ExpectShape(*g.adjoint_matrix, cols, rows, "adjoint table of " + name);
    }
  }
  generators_ = std::make_shared<const GeneratorMap>(std::move(generators));
}

ModelSpec ModelSpec::WithGenerators(const GeneratorMap& extra) const {
  GeneratorMap merged = *generators_;
  for (const auto& [name, g] : extra) {
    long rows = Dim(g.cod);
    long cols = Dim(g.dom);
    ExpectShape(g.matrix, rows, cols, "generator " + name);
    merged.insert_or_assign(name, g);
  }
  ModelSpec out = *this;
  out.generators_ = std::make_shared<const GeneratorMap>(std::move(merged));
  return out;
}

ModelSpec ModelSpec::WithFlavor(const Flavor& flavor) const {
  StructureData d = *data_;
  d.flavor = flavor;
  return ModelSpec(std::move(d), *generators_);
}

Signature ModelSpec::MakeSignature() const {
  Signature sig(data_->flavor);
  for (const auto& [obj, n] : data_->dims) sig.AddObject(obj);
  for (const auto& [name, g] : *generators_) {
    sig.AddGenerator({name, g.dom, g.cod, g.adjoint});
  }
  return sig;
}

ObjectExpr ModelSpec::Canon(const ObjectExpr& x) const {
  return data_->flavor.identifies_left_duals() ? IdentifyLeftDuals(x) : x;
}

long ModelSpec::Dim(const ObjectExpr& x) const {
  long n = 1;
  for (const Atom& a : x.atoms()) {
    auto it = data_->dims.find(a.name);
    if (it == data_->dims.end()) {
      throw Error(ErrorCode::kUnassignedGenerator,
                  "object '" + a.name + "' has no dimension in model '" +
                      data_->name + "'");
    }
    n *= it->second;
  }
  return n;
}

// Atom-level data. All words passed below are canonical.
namespace {

// (I_a ⊗ m ⊗ I_b) · x.
ComplexMatrix ApplyLocal(const ComplexMatrix& m, long a, long b,
                         const ComplexMatrix& x) {
  long in = m.cols();
  long out = m.rows();
  if (x.rows() != a * in * b) {
    throw Error(ErrorCode::kShapeMismatch,
                "operand has " + std::to_string(x.rows()) + " rows, expected " +
                    std::to_string(a * in * b));
  }
  ComplexMatrix y(a * out * b, x.cols());
  if (b == 1) {
    for (long c = 0; c < x.cols(); ++c) {
      Eigen::Map<const ComplexMatrix> xs(x.data() + c * x.rows(), in, a);
      Eigen::Map<ComplexMatrix> ys(y.data() + c * y.rows(), out, a);
      ys.noalias() = m * xs;
    }
    return y;
  }
  using Slice = Eigen::Map<const ComplexMatrix, 0, Eigen::OuterStride<>>;
  using OutSlice = Eigen::Map<ComplexMatrix, 0, Eigen::OuterStride<>>;
  if (in * out < a) {
    // Many small blocks: accumulate scaled b×a slices, one per entry of m.
    for (long c = 0; c < x.cols(); ++c) {
      const Complex* xc = x.data() + c * x.rows();
      Complex* yc = y.data() + c * y.rows();
      for (long o = 0; o < out; ++o) {
        OutSlice ys(yc + o * b, b, a, Eigen::OuterStride<>(out * b));
        ys.setZero();
        for (long k = 0; k < in; ++k) {
          if (m(o, k) == Complex(0.0)) continue;
          Slice xs(xc + k * b, b, a, Eigen::OuterStride<>(in * b));
          ys += m(o, k) * xs;
        }
      }
    }
    return y;
  }
  ComplexMatrix mt = m.transpose();
  for (long c = 0; c < x.cols(); ++c) {
    for (long i = 0; i < a; ++i) {
      Eigen::Map<const ComplexMatrix> xs(x.data() + c * x.rows() + i * in * b,
                                         b, in);
      Eigen::Map<ComplexMatrix> ys(y.data() + c * y.rows() + i * out * b, b,
                                   out);
      ys.noalias() = xs * mt;
    }
  }
  return y;
}


class Builder {
 public:
  Builder(const StructureData& d, ModelCache& c, const ModelSpec& m)
      : data_(d), cache_(c), model_(m) {}

  const ComplexMatrix& AtomB(const Atom& a) {
    ModelCache::Key key{Slot::kAtomB, Word(a), {}};
    if (const ComplexMatrix* hit = cache_.Find(key)) return *hit;
    RequireRight(a);
    if (a.is_plain()) return cache_.Insert(key, Duality(a.name).birth);
    return cache_.Insert(key, AtomD(a.undual()));
  }

  const ComplexMatrix& AtomD(const Atom& a) {
    ModelCache::Key key{Slot::kAtomD, Word(a), {}};
    if (const ComplexMatrix* hit = cache_.Find(key)) return *hit;
    RequireRight(a);
    if (a.is_plain() && Duality(a.name).death) {
      return cache_.Insert(key, *Duality(a.name).death);
    }
    return cache_.Insert(key, Inverse(AtomB(a), "birth of " + ToString(a)));
  }

  ComplexMatrix AtomBirth(const Atom& a) { return RowMajorColumn(AtomB(a)); }
  ComplexMatrix AtomDeath(const Atom& a) {
    return RowMajorColumn(AtomD(a)).transpose();
  }

  const ComplexMatrix& AtomBraid(const Atom& x, const Atom& y) {
    ModelCache::Key key{Slot::kAtomBraid, Word(x), Word(y)};
    if (const ComplexMatrix* hit = cache_.Find(key)) return *hit;
    RequireRight(x);
    RequireRight(y);
    if (x.is_plain() && y.is_plain()) {
      auto it = data_.braid.find({x.name, y.name});
      if (it == data_.braid.end()) {
        throw Error(ErrorCode::kInvalidModel,
                    "no braiding for (" + x.name + ", " + y.name + ")");
      }
      return cache_.Insert(key, it->second);
    }
    ComplexMatrix out;
    if (!x.is_plain()) {
      // c_{V*,W} from c⁻¹_{V,W} by bending the V strand.
      Atom v = x.undual();
      long nv = AtomDim(v);
      long nw = AtomDim(y);
      ComplexMatrix cinv = Inverse(AtomBraid(v, y), "braiding");
      ComplexMatrix t = Kron(AtomDeath(v), Identity(nw)) *
                        Kron(Identity(nv), cinv);
      out = Kron(t, Identity(nv)) * Kron(Identity(nv * nw), AtomBirth(v));
    } else {
      // c_{W,V*} is the inverse of the bent c_{W,V}.
      Atom v = y.undual();
      long nv = AtomDim(v);
      long nw = AtomDim(x);
      ComplexMatrix t = Kron(AtomDeath(v), Identity(nw)) *
                        Kron(Identity(nv), AtomBraid(x, v));
      ComplexMatrix bent =
          Kron(t, Identity(nv)) * Kron(Identity(nv * nw), AtomBirth(v));
      out = Inverse(bent, "bent braiding");
    }
    return cache_.Insert(key, std::move(out));
  }

  const ComplexMatrix& AtomTwist(const Atom& a) {
    ModelCache::Key key{Slot::kAtomTwist, Word(a), {}};
    if (const ComplexMatrix* hit = cache_.Find(key)) return *hit;
    RequireRight(a);
    if (a.is_plain()) {
      auto it = data_.twist.find(a.name);
      if (it == data_.twist.end()) {
        throw Error(ErrorCode::kInvalidModel, "no twist for '" + a.name + "'");
      }
      return cache_.Insert(key, it->second);
    }
    if (a.marks.size() == 1) {
      auto it = data_.dual_twist.find(a.name);
      if (it != data_.dual_twist.end()) return cache_.Insert(key, it->second);
    }
    Atom v = a.undual();
    long n = AtomDim(v);
    ComplexMatrix f = AtomTwist(v);
    ComplexMatrix out = Kron(AtomDeath(v), Identity(n)) *
                        Kron(Kron(Identity(n), f), Identity(n)) *
                        Kron(Identity(n), AtomBirth(v));
    return cache_.Insert(key, std::move(out));
  }

  const ComplexMatrix& Birth(const ObjectExpr& x) {
    ModelCache::Key key{Slot::kBirth, x, {}};
    if (const ComplexMatrix* hit = cache_.Find(key)) return *hit;
    ComplexMatrix out;
    if (x.is_unit()) {
      out = Identity(1);
    } else if (x.size() == 1) {
      out = AtomBirth(x[0]);
    } else {
      ObjectExpr head = x.slice(0, 1);
      ObjectExpr rest = x.slice(1, x.size());
      long na = model_.Dim(head);
      out = ApplyLocal(Birth(rest), na, na, Birth(head));
    }
    return cache_.Insert(key, std::move(out));
  }

  const ComplexMatrix& Death(const ObjectExpr& x) {
    ModelCache::Key key{Slot::kDeath, x, {}};
    if (const ComplexMatrix* hit = cache_.Find(key)) return *hit;
    ComplexMatrix out;
    if (x.is_unit()) {
      out = Identity(1);
    } else if (x.size() == 1) {
      out = AtomDeath(x[0]);
    } else {
      ObjectExpr head = x.slice(0, 1);
      ObjectExpr rest = x.slice(1, x.size());
      long nr = model_.Dim(rest);
      out = ApplyLocal(Death(head).transpose(), nr, nr, Death(rest).transpose())
              .transpose();
    }
    return cache_.Insert(key, std::move(out));
  }

  const ComplexMatrix& Braid(const ObjectExpr& u, const ObjectExpr& v) {
    ModelCache::Key key{Slot::kBraid, u, v};
    if (const ComplexMatrix* hit = cache_.Find(key)) return *hit;
    ComplexMatrix out;
    if (u.is_unit() || v.is_unit()) {
      out = Identity(model_.Dim(u) * model_.Dim(v));
    } else if (u.size() > 1) {
      ObjectExpr head = u.slice(0, 1);
      ObjectExpr rest = u.slice(1, u.size());
      long nh = model_.Dim(head);
      long nr = model_.Dim(rest);
      out = ApplyLocal(Braid(head, v), 1, nr,
                       ApplyLocal(Braid(rest, v), nh, 1,
                                  Identity(nh * nr * model_.Dim(v))));
    } else if (v.size() > 1) {
      ObjectExpr head = v.slice(0, 1);
      ObjectExpr rest = v.slice(1, v.size());
      long nh = model_.Dim(head);
      long nr = model_.Dim(rest);
      out = ApplyLocal(Braid(u, rest), nh, 1,
                       ApplyLocal(Braid(u, head), 1, nr,
                                  Identity(model_.Dim(u) * nh * nr)));
    } else {
      out = AtomBraid(u[0], v[0]);
    }
    return cache_.Insert(key, std::move(out));
  }

  const ComplexMatrix& BraidInv(const ObjectExpr& u, const ObjectExpr& v) {
    ModelCache::Key key{Slot::kBraidInv, u, v};
    if (const ComplexMatrix* hit = cache_.Find(key)) return *hit;
    // The hexagon factorization of Braid, inverted factor by factor.
    ComplexMatrix out;
    if (u.is_unit() || v.is_unit()) {
      out = Identity(model_.Dim(u) * model_.Dim(v));
    } else if (u.size() > 1) {
      ObjectExpr head = u.slice(0, 1);
      ObjectExpr rest = u.slice(1, u.size());
      long nh = model_.Dim(head);
      long nr = model_.Dim(rest);
      out = ApplyLocal(BraidInv(rest, v), nh, 1,
                       ApplyLocal(BraidInv(head, v), 1, nr,
                                  Identity(model_.Dim(v) * nh * nr)));
    } else if (v.size() > 1) {
      ObjectExpr head = v.slice(0, 1);
      ObjectExpr rest = v.slice(1, v.size());
      long nh = model_.Dim(head);
      long nr = model_.Dim(rest);
      out = ApplyLocal(BraidInv(u, head), 1, nr,
                       ApplyLocal(BraidInv(u, rest), nh, 1,
                                  Identity(nh * nr * model_.Dim(u))));
    } else {
      out = Inverse(Braid(u, v), "braiding");
    }
    return cache_.Insert(key, std::move(out));
  }

  const ComplexMatrix& Twist(const ObjectExpr& x) {
    ModelCache::Key key{Slot::kTwist, x, {}};
    if (const ComplexMatrix* hit = cache_.Find(key)) return *hit;
    ComplexMatrix out;
    if (x.is_unit()) {
      out = Identity(1);
    } else if (x.size() == 1) {
      out = AtomTwist(x[0]);
    } else {
      ObjectExpr head = x.slice(0, 1);
      ObjectExpr rest = x.slice(1, x.size());
      out = Braid(rest, head) * Braid(head, rest) *
            Kron(Twist(head), Twist(rest));
    }
    return cache_.Insert(key, std::move(out));
  }

  const ComplexMatrix& TwistInv(const ObjectExpr& x) {
    ModelCache::Key key{Slot::kTwistInv, x, {}};
    if (const ComplexMatrix* hit = cache_.Find(key)) return *hit;
    return cache_.Insert(key, Inverse(Twist(x), "twist"));
  }

  const ComplexMatrix& LBirth(const ObjectExpr& x) {
    ModelCache::Key key{Slot::kLBirth, x, {}};
    if (const ComplexMatrix* hit = cache_.Find(key)) return *hit;
    const Flavor& fl = data_.flavor;
    ComplexMatrix out;
    if (fl.dagger) {
      out = Death(x).adjoint();
    } else if (fl.braided && fl.right_rigid) {
      out = BraidInv(model_.Canon(Dual(x)), x) * Birth(x);
    } else if (x.is_unit()) {
      out = Identity(1);
    } else if (x.size() == 1) {
      out = RowMajorColumn(LeftDuality(x[0]).birth);
    } else {
      ObjectExpr head = x.slice(0, 1);
      ObjectExpr rest = x.slice(1, x.size());
      long nr = model_.Dim(rest);
      out = Kron(Kron(Identity(nr), LBirth(head)), Identity(nr)) * LBirth(rest);
    }
    return cache_.Insert(key, std::move(out));
  }

  const ComplexMatrix& LDeath(const ObjectExpr& x) {
    ModelCache::Key key{Slot::kLDeath, x, {}};
    if (const ComplexMatrix* hit = cache_.Find(key)) return *hit;
    const Flavor& fl = data_.flavor;
    ComplexMatrix out;
    if (fl.dagger) {
      out = Birth(x).adjoint();
    } else if (fl.braided && fl.right_rigid) {
      out = Death(x) * Braid(x, model_.Canon(Dual(x)));
    } else if (x.is_unit()) {
      out = Identity(1);
    } else if (x.size() == 1) {
      const DualityData& d = LeftDuality(x[0]);
      ComplexMatrix dm = d.death ? *d.death
                                 : Inverse(d.birth, "left birth of " + x[0].name);
      out = RowMajorColumn(dm).transpose();
    } else {
      ObjectExpr head = x.slice(0, 1);
      ObjectExpr rest = x.slice(1, x.size());
      long na = model_.Dim(head);
      out = LDeath(head) * Kron(Kron(Identity(na), LDeath(rest)), Identity(na));
    }
    return cache_.Insert(key, std::move(out));
  }

 private:
  long AtomDim(const Atom& a) { return model_.Dim(Word(a)); }

  const DualityData& Duality(const std::string& name) {
    auto it = data_.duality.find(name);
    if (it == data_.duality.end()) {
      throw Error(ErrorCode::kInvalidModel,
                  "no duality data for object '" + name + "'");
    }
    return it->second;
  }

  const DualityData& LeftDuality(const Atom& a) {
    auto it = data_.left_duality.find(a.name);
    if (!a.is_plain() || it == data_.left_duality.end()) {
      throw Error(ErrorCode::kInvalidModel,
                  "no left duality data for " + ToString(a));
    }
    return it->second;
  }

  static void RequireRight(const Atom& a) {
    if (!AllRight(a)) {
      throw Error(ErrorCode::kInvalidModel,
                  "no structure data for the left dual atom " + ToString(a));
    }
  }

  const StructureData& data_;
  ModelCache& cache_;
  const ModelSpec& model_;
};

}  // namespace


const ComplexMatrix& ModelSpec::Birth(const ObjectExpr& x) const {
  return Builder(*data_, *cache_, *this).Birth(Canon(x));
}
const ComplexMatrix& ModelSpec::Death(const ObjectExpr& x) const {
  return Builder(*data_, *cache_, *this).Death(Canon(x));
}
const ComplexMatrix& ModelSpec::LBirth(const ObjectExpr& x) const {
  return Builder(*data_, *cache_, *this).LBirth(Canon(x));
}
const ComplexMatrix& ModelSpec::LDeath(const ObjectExpr& x) const {
  return Builder(*data_, *cache_, *this).LDeath(Canon(x));
}
const ComplexMatrix& ModelSpec::Braid(const ObjectExpr& u,
                                      const ObjectExpr& v) const {
  return Builder(*data_, *cache_, *this).Braid(Canon(u), Canon(v));
}
const ComplexMatrix& ModelSpec::BraidInv(const ObjectExpr& u,
                                         const ObjectExpr& v) const {
  return Builder(*data_, *cache_, *this).BraidInv(Canon(u), Canon(v));
}
const ComplexMatrix& ModelSpec::Twist(const ObjectExpr& x) const {
  return Builder(*data_, *cache_, *this).Twist(Canon(x));
}
const ComplexMatrix& ModelSpec::TwistInv(const ObjectExpr& x) const {
  return Builder(*data_, *cache_, *this).TwistInv(Canon(x));
}


ComplexMatrix ModelSpec::GeneratorAdjoint(const std::string& name) const {
  if (data_->dagger == DaggerRealization::kNone) {
    throw Error(ErrorCode::kFlavorViolation,
                "model '" + data_->name + "' has no dagger");
  }
  auto it = generators_->find(name);
  if (it == generators_->end()) {
    throw Error(ErrorCode::kUnassignedGenerator,
                "generator '" + name + "' has no matrix in model '" +
                    data_->name + "'");
  }
  const GeneratorData& g = it->second;
  if (data_->dagger == DaggerRealization::kTables) {
    if (g.adjoint_matrix) return *g.adjoint_matrix;
    if (g.adjoint) {
      auto adj = generators_->find(*g.adjoint);
      if (adj != generators_->end()) return adj->second.matrix;
    }
  }
  return g.matrix.adjoint();
}

// ---------------------------------------------------------------------------
// Evaluation.

namespace {

class Evaluator {
 public:
  explicit Evaluator(const ModelSpec& m) : model_(m), fl_(m.flavor()) {}

  // (dom dim, cod dim).
  std::pair<long, long> Dims(const Term& t) {
    auto it = dims_.find(t.node());
    if (it != dims_.end()) return it->second;
    std::pair<long, long> out;
    switch (t.kind()) {
      case Kind::kId:
      case Kind::kTwist:
      case Kind::kTwistInv: {
        long n = model_.Dim(t.object());
        out = {n, n};
        break;
      }
      case Kind::kCompose: {
        auto f = Dims(t.rhs());
        auto g = Dims(t.lhs());
        if (f.second != g.first) {
          throw Error(ErrorCode::kShapeMismatch,
                      "composite of " + std::to_string(g.first) + "-column and " +
                          std::to_string(f.second) + "-row matrices");
        }
        out = {f.first, g.second};
        break;
      }
      case Kind::kTensor: {
        auto f = Dims(t.lhs());
        auto g = Dims(t.rhs());
        out = {f.first * g.first, f.second * g.second};
        break;
      }
      case Kind::kBraid:
      case Kind::kBraidInv: {
        long n = model_.Dim(t.object()) * model_.Dim(t.object2());
        out = {n, n};
        break;
      }
      case Kind::kGen:
      case Kind::kBirth:
      case Kind::kDeath:
      case Kind::kLBirth:
      case Kind::kLDeath:
      case Kind::kDagger: {
        const ComplexMatrix& m = Leaf(t);
        out = {m.cols(), m.rows()};
        break;
      }
    }
    dims_.emplace(t.node(), out);
    return out;
  }

  // (I_a ⊗ t ⊗ I_b) · x.
  ComplexMatrix Apply(const Term& t, long a, long b, const ComplexMatrix& x) {
    switch (t.kind()) {
      case Kind::kId: {
        long n = Dims(t).first;
        if (x.rows() != a * n * b) {
          throw Error(ErrorCode::kShapeMismatch, "identity operand mismatch");
        }
        return x;
      }
      case Kind::kCompose:
        if (Materialize(t, a, b, x)) return ApplyLocal(Matrix(t), a, b, x);
        return Apply(t.lhs(), a, b, Apply(t.rhs(), a, b, x));
      case Kind::kTensor: {
        if (Materialize(t, a, b, x)) return ApplyLocal(Matrix(t), a, b, x);
        auto l = Dims(t.lhs());
        auto r = Dims(t.rhs());
        ComplexMatrix mid = Apply(t.rhs(), a * l.first, b, x);
        return Apply(t.lhs(), a, r.second * b, mid);
      }
      case Kind::kBraid:
      case Kind::kBraidInv:
        Need(fl_.braided, t.kind(), "braided");
        return ApplyBraid(model_.Canon(t.object()), model_.Canon(t.object2()),
                          t.kind() == Kind::kBraidInv, a, b, x);
      case Kind::kTwist:
      case Kind::kTwistInv:
        Need(fl_.balanced, t.kind(), "balanced");
        return ApplyTwist(model_.Canon(t.object()),
                          t.kind() == Kind::kTwistInv, a, b, x);
      default:
        return ApplyLocal(Leaf(t), a, b, x);
    }
  }

  // Wide braidings and twists are applied factor by factor, through the
  // hexagon and balance equations, instead of as dense matrices.
  static constexpr long kDenseLimit = 64;

  ComplexMatrix ApplyBraid(const ObjectExpr& u, const ObjectExpr& v, bool inv,
                           long a, long b, const ComplexMatrix& x) {
    if (u.is_unit() || v.is_unit()) return x;
    if (model_.Dim(u) * model_.Dim(v) <= kDenseLimit ||
        (u.size() == 1 && v.size() == 1)) {
      return ApplyLocal(inv ? model_.BraidInv(u, v) : model_.Braid(u, v), a,
                        b, x);
    }
    if (u.size() > 1) {
      ObjectExpr head = u.slice(0, 1);
      ObjectExpr rest = u.slice(1, u.size());
      long nh = model_.Dim(head);
      long nr = model_.Dim(rest);
      if (!inv) {
        return ApplyBraid(head, v, false, a, nr * b,
                          ApplyBraid(rest, v, false, a * nh, b, x));
      }
      return ApplyBraid(rest, v, true, a * nh, b,
                        ApplyBraid(head, v, true, a, nr * b, x));
    }
    ObjectExpr head = v.slice(0, 1);
    ObjectExpr rest = v.slice(1, v.size());
    long nh = model_.Dim(head);
    long nr = model_.Dim(rest);
    if (!inv) {
      return ApplyBraid(u, rest, false, a * nh, b,
                        ApplyBraid(u, head, false, a, nr * b, x));
    }
    return ApplyBraid(u, head, true, a, nr * b,
                      ApplyBraid(u, rest, true, a * nh, b, x));
  }

  ComplexMatrix ApplyTwist(const ObjectExpr& w, bool inv, long a, long b,
                           const ComplexMatrix& x) {
    if (w.is_unit()) return x;
    if (w.size() == 1 || model_.Dim(w) <= kDenseLimit) {
      return ApplyLocal(inv ? model_.TwistInv(w) : model_.Twist(w), a, b, x);
    }
    ObjectExpr head = w.slice(0, 1);
    ObjectExpr rest = w.slice(1, w.size());
    long nh = model_.Dim(head);
    long nr = model_.Dim(rest);
    if (!inv) {
      // θ_{h⊗r} = c_{r,h} ∘ c_{h,r} ∘ (θ_h ⊗ θ_r)
      ComplexMatrix y = ApplyTwist(rest, false, a * nh, b, x);
      y = ApplyTwist(head, false, a, nr * b, y);
      y = ApplyBraid(head, rest, false, a, b, y);
      return ApplyBraid(rest, head, false, a, b, y);
    }
    ComplexMatrix y = ApplyBraid(rest, head, true, a, b, x);
    y = ApplyBraid(head, rest, true, a, b, y);
    y = ApplyTwist(head, true, a, nr * b, y);
    return ApplyTwist(rest, true, a * nh, b, y);
  }

  ComplexMatrix Full(const Term& t) {
    if (t.kind() != Kind::kCompose && t.kind() != Kind::kTensor &&
        t.kind() != Kind::kId) {
      return Leaf(t);
    }
    long n = Dims(t).first;
    return Apply(t, 1, 1, ComplexMatrix::Identity(n, n));
  }

 private:
  // A small composite applied to many columns at once is cheaper as a
  // matrix built once from its own domain.
  bool Materialize(const Term& t, long a, long b, const ComplexMatrix& x) {
    auto [n, m] = Dims(t);
    return n * m <= 4096 && a * b * x.cols() > n;
  }

  const ComplexMatrix& Matrix(const Term& t) {
    auto it = materialized_.find(t.node());
    if (it != materialized_.end()) return it->second;
    return materialized_.emplace(t.node(), Full(t)).first->second;
  }

  void Need(bool ok, Kind k, const char* what) {
    if (!ok) {
      throw Error(ErrorCode::kFlavorViolation,
                  std::string(KindName(k)) + " needs a " + what +
                      " model; '" + model_.name() + "' is " + fl_.ToString());
    }
  }

  const ComplexMatrix& Leaf(const Term& t) {
    auto it = leaves_.find(t.node());
    if (it != leaves_.end()) return it->second;
    ComplexMatrix m;
    switch (t.kind()) {
      case Kind::kGen: {
        auto g = model_.generators().find(t.name());
        if (g == model_.generators().end()) {
          throw Error(ErrorCode::kUnassignedGenerator,
                      "generator '" + t.name() + "' has no matrix in model '" +
                          model_.name() + "'");
        }
        m = g->second.matrix;
        break;
      }
      case Kind::kBirth:
        Need(fl_.right_rigid, t.kind(), "right-rigid");
        m = model_.Birth(t.object());
        break;
      case Kind::kDeath:
        Need(fl_.right_rigid, t.kind(), "right-rigid");
        m = model_.Death(t.object());
        break;
      case Kind::kLBirth:
        Need(fl_.left_rigid, t.kind(), "left-rigid");
        m = model_.LBirth(t.object());
        break;
      case Kind::kLDeath:
        Need(fl_.left_rigid, t.kind(), "left-rigid");
        m = model_.LDeath(t.object());
        break;
      case Kind::kBraid:
        Need(fl_.braided, t.kind(), "braided");
        m = model_.Braid(t.object(), t.object2());
        break;
      case Kind::kBraidInv:
        Need(fl_.braided, t.kind(), "braided");
        m = model_.BraidInv(t.object(), t.object2());
        break;
      case Kind::kTwist:
        Need(fl_.balanced, t.kind(), "balanced");
        m = model_.Twist(t.object());
        break;
      case Kind::kTwistInv:
        Need(fl_.balanced, t.kind(), "balanced");
        m = model_.TwistInv(t.object());
        break;
      case Kind::kDagger:
        Need(fl_.dagger, t.kind(), "dagger");
        if (t.lhs().kind() == Kind::kGen) {
          m = model_.GeneratorAdjoint(t.lhs().name());
        } else {
          m = Full(t.lhs()).adjoint();
        }
        break;
      default:
        m = Full(t);
        break;
    }
    return leaves_.emplace(t.node(), std::move(m)).first->second;
  }

  const ModelSpec& model_;
  const Flavor& fl_;
  std::unordered_map<const Node*, std::pair<long, long>> dims_;
  std::unordered_map<const Node*, ComplexMatrix> leaves_;
  std::unordered_map<const Node*, ComplexMatrix> materialized_;
};

}  // namespace

ComplexMatrix Eval(const Term& t, const ModelSpec& model) {
  Evaluator ev(model);
  return ev.Full(t);
}

ComplexMatrix ApplyTerm(const Term& t, const ComplexMatrix& x,
                        const ModelSpec& model) {
  Evaluator ev(model);
  return ev.Apply(t, 1, 1, x);
}

}  // namespace strand
