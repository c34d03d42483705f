// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include "strand/validate.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "strand/derived.hpp"
#include "strand/error.hpp"

namespace strand {
namespace {

Flavor TypeGuard(DaggerType type, bool rigid, bool balanced) {
  Flavor f;
  f.dagger_type = type;
  f.right_rigid = rigid;
  f.balanced = balanced;
  return f.Closed();
}

Term Id(const ObjectExpr& x) { return Term::Id(x); }
Term T(const Term& a, const Term& b) { return Term::Tensor(a, b); }

class Validator {
 public:
  Validator(const ModelSpec& model, const ValidationOptions& opt)
      : model_(model), sig_(model.MakeSignature()), opt_(opt) {
    report_.model = model.name();
    report_.flavor = model.flavor();
    report_.tolerance = model.tolerance();
    for (const auto& [name, n] : model.structure().dims) {
      ObjectExpr x = ObjectExpr::Generator(name);
      alphabet_.push_back(x);
    }
    if (fl().right_rigid) {
      std::size_t base = alphabet_.size();
      for (std::size_t i = 0; i < base; ++i) {
        alphabet_.push_back(Dual(alphabet_[i]));
      }
    }
    std::vector<ObjectExpr> layer = {Unit()};
    for (int len = 1; len <= opt.word_length; ++len) {
      std::vector<ObjectExpr> next;
      for (const ObjectExpr& w : layer) {
        for (const ObjectExpr& a : alphabet_) next.push_back(Tensor(w, a));
      }
      words_.insert(words_.end(), next.begin(), next.end());
      layer = std::move(next);
    }
  }

  ValidationReport Run() {
    Add("shapes", Flavor::Monoidal(), [](auto&) {});
    if (fl().right_rigid) SnakeRight();
    LeftSnakes();
    if (fl().braided) Braiding();
    if (fl().balanced) Balancing();
    if (fl().balanced && fl().right_rigid) {
      Ribbon();
      Pivotal();
    }
    if (fl().dagger) Dagger();
    return std::move(report_);
  }

 private:
  using Emit = std::function<void(const Term&, const Term&, const std::string&)>;

  const Flavor& fl() const { return model_.flavor(); }

  bool FitsBraid(const ObjectExpr& u, const ObjectExpr& v) {
    if (model_.Dim(u) * model_.Dim(v) <= opt_.max_braid_dim) return true;
    ++skipped_;
    return false;
  }

  double Dev(const Term& lhs, const Term& rhs) {
    Boundary ty = Typecheck(lhs, sig_);
    long n = model_.Dim(ty.dom);
    if (n <= 16) return MaxDeviation(Eval(lhs, model_), Eval(rhs, model_));
    // Large domains are compared on random probe vectors.
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    ComplexMatrix probe(n, 2);
    for (long i = 0; i < probe.size(); ++i) {
      probe.data()[i] = Complex(unit(rng_), unit(rng_));
    }
    return MaxDeviation(ApplyTerm(lhs, probe, model_),
                        ApplyTerm(rhs, probe, model_));
  }

  void Add(const std::string& name, const Flavor& guard,
           const std::function<void(const Emit&)>& body) {
    CheckResult c;
    c.name = name;
    c.guard = guard;
    c.required = fl().Satisfies(guard);
    skipped_ = 0;
    std::string worst;
    Emit emit = [&](const Term& lhs, const Term& rhs, const std::string& at) {
      double d = Dev(lhs, rhs);
      if (std::isnan(d)) d = INFINITY;
      ++c.instances;
      if (c.instances == 1 || d > c.deviation) {
        c.deviation = d;
        worst = at;
      }
    };
    try {
      body(emit);
      c.passed = c.deviation <= model_.tolerance();
      std::ostringstream os;
      if (!c.passed) os << "worst at " << worst;
      if (skipped_ > 0) {
        if (!os.str().empty()) os << "; ";
        os << skipped_ << " oversized instances skipped";
      }
      c.detail = os.str();
    } catch (const Error& e) {
      c.passed = false;
      c.deviation = INFINITY;
      c.detail = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  void SnakeRight() {
    Add("snake.right", ParseFlavor("right-rigid"), [&](const Emit& emit) {
      for (const ObjectExpr& x : words_) {
        ObjectExpr xs = Dual(x);
        emit(Seq({T(Term::Birth(x), Id(x)), T(Id(x), Term::Death(x))}), Id(x),
             ToString(x));
        emit(Seq({T(Id(xs), Term::Birth(x)), T(Term::Death(x), Id(xs))}),
             Id(xs), ToString(xs));
      }
    });
  }

  void LeftSnakes() {
    struct Fam {
      LeftFamily family;
      const char* guard;
    };
    for (Fam fam : {Fam{LeftFamily::kPrimitive, "left-rigid"},
                    Fam{LeftFamily::kBraided, "braided-rigid"},
                    Fam{LeftFamily::kDagger, "dagger-rigid"},
                    Fam{LeftFamily::kPseudoPivotal, "balanced-rigid"}}) {
      if (!LeftFamilyAvailable(fam.family, fl())) continue;
      bool braids = fam.family != LeftFamily::kPrimitive &&
                    fam.family != LeftFamily::kDagger;
      std::string name =
          "snake.left." + std::string(LeftFamilyName(fam.family));
      Add(name, ParseFlavor(fam.guard), [&](const Emit& emit) {
        for (const ObjectExpr& x : words_) {
          ObjectExpr xl = sig_.Canon(LeftDual(x));
          if (braids && !FitsBraid(x, xl)) continue;
          LeftRigidity lr = LeftRigidityOf(fam.family, x, sig_);
          emit(Seq({T(lr.beta, Id(xl)), T(Id(xl), lr.delta)}), Id(xl),
               ToString(xl));
          emit(Seq({T(Id(x), lr.beta), T(lr.delta, Id(x))}), Id(x),
               ToString(x));
        }
      });
    }
  }

  void Braiding() {
    Add("braid.invertible", ParseFlavor("braided"), [&](const Emit& emit) {
      for (const ObjectExpr& v : alphabet_) {
        for (const ObjectExpr& w : alphabet_) {
          std::string at = ToString(v) + ", " + ToString(w);
          emit(Seq({Term::Braid(v, w), Term::BraidInv(v, w)}),
               Id(Tensor(v, w)), at);
          emit(Seq({Term::BraidInv(v, w), Term::Braid(v, w)}),
               Id(Tensor(w, v)), at);
        }
      }
    });
    // The strict hexagons define the braiding of compound words, so the
    // checkable content is the braid relation on atom triples.
    Add("hexagon.braid_relation", ParseFlavor("braided"),
        [&](const Emit& emit) {
          for (const ObjectExpr& a : alphabet_) {
            for (const ObjectExpr& b : alphabet_) {
              for (const ObjectExpr& c : alphabet_) {
                Term lhs = Seq({T(Term::Braid(a, b), Id(c)),
                                T(Id(b), Term::Braid(a, c)),
                                T(Term::Braid(b, c), Id(a))});
                Term rhs = Seq({T(Id(a), Term::Braid(b, c)),
                                T(Term::Braid(a, c), Id(b)),
                                T(Id(c), Term::Braid(a, b))});
                emit(lhs, rhs,
                     ToString(a) + ", " + ToString(b) + ", " + ToString(c));
              }
            }
          }
        });
    Add("naturality.braid", ParseFlavor("braided"), [&](const Emit& emit) {
      for (const ObjectExpr& w : alphabet_) {
        if (fl().right_rigid) {
          for (const ObjectExpr& x : words_) {
            ObjectExpr xs = Dual(x);
            ObjectExpr pair = Tensor(x, xs);
            ObjectExpr copair = Tensor(xs, x);
            if (!FitsBraid(pair, w)) continue;
            std::string at = ToString(x) + " past " + ToString(w);
            emit(Seq({T(Term::Birth(x), Id(w)), Term::Braid(pair, w)}),
                 T(Id(w), Term::Birth(x)), at);
            emit(Seq({T(Id(w), Term::Birth(x)), Term::Braid(w, pair)}),
                 T(Term::Birth(x), Id(w)), at);
            emit(Seq({Term::Braid(copair, w), T(Id(w), Term::Death(x))}),
                 T(Term::Death(x), Id(w)), at);
            emit(Seq({Term::Braid(w, copair), T(Term::Death(x), Id(w))}),
                 T(Id(w), Term::Death(x)), at);
          }
        }
        for (const GeneratorDecl& g : sig_.generators()) {
          if (!FitsBraid(g.dom, w) || !FitsBraid(g.cod, w)) continue;
          Term f = Term::Gen(g.name);
          std::string at = g.name + " past " + ToString(w);
          emit(Seq({T(f, Id(w)), Term::Braid(g.cod, w)}),
               Seq({Term::Braid(g.dom, w), T(Id(w), f)}), at);
          emit(Seq({T(Id(w), f), Term::Braid(w, g.cod)}),
               Seq({Term::Braid(w, g.dom), T(f, Id(w))}), at);
        }
      }
    });
    Add("symmetric", ParseFlavor("symmetric"), [&](const Emit& emit) {
      for (const ObjectExpr& v : alphabet_) {
        for (const ObjectExpr& w : alphabet_) {
          emit(Seq({Term::Braid(v, w), Term::Braid(w, v)}), Id(Tensor(v, w)),
               ToString(v) + ", " + ToString(w));
        }
      }
    });
  }

  void Balancing() {
    Add("balancing", ParseFlavor("balanced"), [&](const Emit& emit) {
      for (const ObjectExpr& a : alphabet_) {
        emit(Seq({Term::Twist(a), Term::TwistInv(a)}), Id(a), ToString(a));
      }
      if (fl().right_rigid) {
        for (const ObjectExpr& x : words_) {
          ObjectExpr xs = Dual(x);
          if (!FitsBraid(x, xs)) continue;
          emit(Seq({Term::Birth(x), Term::Twist(Tensor(x, xs))}),
               Term::Birth(x), ToString(x));
          emit(Seq({Term::Twist(Tensor(xs, x)), Term::Death(x)}),
               Term::Death(x), ToString(x));
        }
      }
      for (const GeneratorDecl& g : sig_.generators()) {
        Term f = Term::Gen(g.name);
        emit(Seq({f, Term::Twist(g.cod)}), Seq({Term::Twist(g.dom), f}),
             g.name);
      }
    });
  }

  void Ribbon() {
    Add("ribbon", ParseFlavor("ribbon"), [&](const Emit& emit) {
      for (const ObjectExpr& x : words_) {
        if (!FitsBraid(x, x)) continue;
        emit(Term::Twist(Dual(x)), Transpose(Term::Twist(x), sig_),
             ToString(x));
      }
    });
  }

  void Pivotal() {
    Flavor guard;
    guard.pivotal = guard.right_rigid = true;
    Add("pivotal", guard.Closed(), [&](const Emit& emit) {
      for (const ObjectExpr& x : alphabet_) {
        ObjectExpr xs = Dual(x);
        emit(Seq({PivFromTwist(xs, sig_),
                  Transpose(PivFromTwist(x, sig_), sig_)}),
             Id(xs), ToString(x));
        for (const ObjectExpr& y : alphabet_) {
          emit(PivFromTwist(Tensor(x, y), sig_),
               T(PivFromTwist(x, sig_), PivFromTwist(y, sig_)),
               ToString(x) + ", " + ToString(y));
        }
      }
    });
  }

  void Dagger() {
    Add("dagger.generator_adjoints", ParseFlavor("dagger"),
        [&](const Emit& emit) {
          for (const GeneratorDecl& g : sig_.generators()) {
            if (!g.adjoint || !sig_.find(*g.adjoint)) continue;
            emit(Term::Dagger(Term::Gen(g.name)), Term::Gen(*g.adjoint),
                 g.name);
          }
        });
    if (fl().braided && fl().right_rigid) {
      Add("dagger.structural_natural", ParseFlavor("dagger braided-rigid"),
          [&](const Emit& emit) {
            for (const ObjectExpr& x : alphabet_) {
              ObjectExpr xs = Dual(x);
              Term beta = Term::Dagger(Term::Death(x));
              Term delta = Term::Dagger(Term::Birth(x));
              for (const ObjectExpr& w : alphabet_) {
                std::string at = ToString(x) + " past " + ToString(w);
                emit(Seq({T(beta, Id(w)), Term::Braid(Tensor(xs, x), w)}),
                     T(Id(w), beta), at);
                emit(Seq({T(Id(w), beta), Term::Braid(w, Tensor(xs, x))}),
                     T(beta, Id(w)), at);
                emit(Seq({Term::Braid(Tensor(x, xs), w), T(Id(w), delta)}),
                     T(delta, Id(w)), at);
                emit(Seq({Term::Braid(w, Tensor(x, xs)), T(delta, Id(w))}),
                     T(Id(w), delta), at);
              }
            }
          });
    }
    if (!fl().braided) return;
    Add("typeI.unitary_braid", TypeGuard(DaggerType::kI, false, false),
        [&](const Emit& emit) {
          for (const ObjectExpr& v : alphabet_) {
            for (const ObjectExpr& w : alphabet_) {
              emit(Term::Dagger(Term::Braid(v, w)), Term::BraidInv(v, w),
                   ToString(v) + ", " + ToString(w));
            }
          }
        });
    if (fl().balanced) {
      Add("typeI.unitary_twist", TypeGuard(DaggerType::kI, false, true),
          [&](const Emit& emit) {
            for (const ObjectExpr& a : alphabet_) {
              emit(Term::Dagger(Term::Twist(a)), Term::TwistInv(a),
                   ToString(a));
            }
          });
    }
    if (fl().right_rigid) {
      Add("typeI.restriction", TypeGuard(DaggerType::kI, true, false),
          [&](const Emit& emit) { Restrictions(emit, true); });
    }
    Add("typeII.braid_adjoint", TypeGuard(DaggerType::kII, false, false),
        [&](const Emit& emit) {
          for (const ObjectExpr& v : alphabet_) {
            for (const ObjectExpr& w : alphabet_) {
              emit(Term::Dagger(Term::Braid(v, w)), Term::Braid(w, v),
                   ToString(v) + ", " + ToString(w));
            }
          }
        });
    if (fl().balanced) {
      Add("typeII.self_adjoint_twist", TypeGuard(DaggerType::kII, false, true),
          [&](const Emit& emit) {
            for (const ObjectExpr& a : alphabet_) {
              emit(Term::Dagger(Term::Twist(a)), Term::Twist(a), ToString(a));
            }
          });
    }
    if (fl().right_rigid) {
      Add("typeII.restriction", TypeGuard(DaggerType::kII, true, false),
          [&](const Emit& emit) { Restrictions(emit, false); });
    }
  }

  // Constraints on the comparison φ between the dagger and braided left
  // rigidities.
  void Restrictions(const Emit& emit, bool unitary) {
    for (const ObjectExpr& x : alphabet_) {
      ObjectExpr xl = Dual(x);
      Term phi = UniquePhi(x, sig_, LeftFamily::kDagger, LeftFamily::kBraided);
      Term phi_inv =
          UniquePhi(x, sig_, LeftFamily::kBraided, LeftFamily::kDagger);
      Term phi_dag = Term::Dagger(phi);
      Term phi_inv_dag = Term::Dagger(phi_inv);
      std::string at = ToString(x);
      if (unitary) {
        emit(Seq({Term::BraidInv(xl, x), T(phi_dag, Id(x)), Term::Death(x)}),
             Seq({Term::Braid(x, xl), T(phi, Id(x)), Term::Death(x)}), at);
        emit(Seq({Term::Birth(x), T(Id(x), phi_inv), Term::BraidInv(xl, x)}),
             Seq({Term::Birth(x), T(Id(x), phi_inv_dag), Term::Braid(x, xl)}),
             at);
      } else {
        emit(Seq({T(phi_dag, Id(x)), Term::Death(x)}),
             Seq({T(phi, Id(x)), Term::Death(x)}), at);
        emit(Seq({Term::Birth(x), T(Id(x), phi_inv)}),
             Seq({Term::Birth(x), T(Id(x), phi_inv_dag)}), at);
      }
    }
  }

  const ModelSpec& model_;
  Signature sig_;
  ValidationOptions opt_;
  ValidationReport report_;
  std::vector<ObjectExpr> alphabet_;
  std::vector<ObjectExpr> words_;
  std::mt19937_64 rng_{0x5eed};
  int skipped_ = 0;
};

bool AllPass(const ValidationReport& r, const std::string& prefix) {
  bool any = false;
  for (const CheckResult& c : r.checks) {
    if (c.name.rfind(prefix, 0) == 0) {
      any = true;
      if (!c.passed) return false;
    }
  }
  return any;
}

}  // namespace

bool ValidationReport::ok() const {
  for (const CheckResult& c : checks) {
    if (c.required && !c.passed) return false;
  }
  return true;
}

const CheckResult* ValidationReport::Find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<std::string> ValidationReport::Blocking(const Flavor& g) const {
  std::vector<std::string> out;
  auto need = [&](bool want, bool have, const char* what) {
    if (want && !have) out.push_back(std::string("model is not ") + what);
  };
  need(g.right_rigid, flavor.right_rigid, "right-rigid");
  need(g.left_rigid, flavor.left_rigid, "left-rigid");
  need(g.braided, flavor.braided, "braided");
  need(g.balanced, flavor.balanced, "balanced");
  need(g.ribbon, flavor.ribbon, "ribbon");
  need(g.dagger, flavor.dagger, "dagger");
  need(g.symmetric, AllPass(*this, "symmetric"), "symmetric");
  need(g.pivotal, AllPass(*this, "pivotal"), "pivotal");
  if (g.dagger_type == DaggerType::kI) {
    need(true, AllPass(*this, "typeI."), "Type I");
  }
  if (g.dagger_type == DaggerType::kII) {
    bool two = AllPass(*this, "typeII.") ||
               (AllPass(*this, "typeI.") && AllPass(*this, "symmetric"));
    need(true, two, "Type II");
  }
  for (const CheckResult& c : checks) {
    if (g.Satisfies(c.guard) && !c.passed) {
      char dev[32];
      std::snprintf(dev, sizeof dev, "%.3g", c.deviation);
      out.push_back("check " + c.name + " failed (deviation " + dev + ")");
    }
  }
  return out;
}

bool ValidationReport::ValidatedFor(const Flavor& guard) const {
  return Blocking(guard).empty();
}

std::string ValidationReport::ToText() const {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << "model " << model << " [" << flavor.ToString() << "], tolerance "
     << tolerance << "\n";
  for (const CheckResult& c : checks) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-4s %-30s max dev %-10.3g %4d inst",
                  c.passed ? "PASS" : "FAIL", c.name.c_str(), c.deviation,
                  c.instances);
    os << line;
    if (!c.required) os << "  (informational)";
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  os << (ok() ? "valid" : "INVALID") << " for declared flavor\n";
  return os.str();
}

ValidationReport ValidateModel(const ModelSpec& model,
                               const ValidationOptions& options) {
  return Validator(model, options).Run();
}

}  // namespace strand
