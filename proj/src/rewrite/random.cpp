// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include "rewrite/random.hpp"

#include <string>
#include <vector>

namespace strand::rewrite {

Term Place(const ObjectExpr& left, const Term& box, const ObjectExpr& right) {
  Term out = box;
  if (!right.is_unit()) out = Term::Tensor(out, Term::Id(right));
  if (!left.is_unit()) out = Term::Tensor(Term::Id(left), out);
  return out;
}

TermSampler::TermSampler(const Signature& sig, std::mt19937_64& rng,
                         RandomTermOptions options)
    : sig_(&sig), rng_(&rng), options_(options), typer_(sig) {
  const Flavor& fl = sig.flavor();
  for (const std::string& name : sig.objects()) {
    Atom a{name, {}};
    alphabet_.push_back(a);
    if (fl.right_rigid) alphabet_.push_back(a.right_dual());
    if (fl.left_rigid && !fl.identifies_left_duals()) {
      alphabet_.push_back(a.left_dual());
    }
  }
}

int TermSampler::Uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(*rng_);
}

ObjectExpr TermSampler::RandomAtomWord() { return RandomWord(1, 1); }

ObjectExpr TermSampler::RandomWord(int lo, int hi) {
  if (alphabet_.empty()) return Unit();
  int n = Uniform(lo, hi);
  std::vector<Atom> atoms;
  for (int i = 0; i < n; ++i) {
    atoms.push_back(
        alphabet_[Uniform(0, static_cast<int>(alphabet_.size()) - 1)]);
  }
  return ObjectExpr(std::move(atoms));
}

std::vector<Term> TermSampler::UnaryBoxes() {
  std::vector<Term> out;
  for (const GeneratorDecl& g : sig_->generators()) {
    if (g.dom.size() != 1 || g.cod.size() != 1) continue;
    out.push_back(Term::Gen(g.name));
    if (sig_->flavor().dagger && !g.adjoint) {
      out.push_back(Term::Dagger(Term::Gen(g.name)));
    }
  }
  return out;
}

Term TermSampler::AtomicBox() {
  const Flavor& fl = sig_->flavor();
  std::vector<Term> options;
  for (const GeneratorDecl& g : sig_->generators()) {
    options.push_back(Term::Gen(g.name));
    if (fl.dagger && !g.adjoint) {
      options.push_back(Term::Dagger(Term::Gen(g.name)));
    }
  }
  if (!alphabet_.empty()) {
    ObjectExpr a = RandomAtomWord();
    ObjectExpr b = RandomAtomWord();
    if (fl.braided) {
      options.push_back(Term::Braid(a, b));
      options.push_back(Term::BraidInv(a, b));
    }
    if (fl.balanced) {
      options.push_back(Term::Twist(a));
      options.push_back(Term::TwistInv(a));
    }
    if (fl.right_rigid) {
      options.push_back(Term::Birth(a));
      options.push_back(Term::Death(a));
    }
    if (fl.left_rigid) {
      options.push_back(Term::LBirth(a));
      options.push_back(Term::LDeath(a));
    }
  }
  if (options.empty()) return Term();
  return options[Uniform(0, static_cast<int>(options.size()) - 1)];
}

Term TermSampler::Leaf(const ObjectExpr& x, bool from) {
  const Flavor& fl = sig_->flavor();
  const std::size_t n = x.size();
  std::vector<Term> options{Term::Id(x)};
  for (const GeneratorDecl& g : sig_->generators()) {
    ObjectExpr dom = sig_->Canon(g.dom);
    ObjectExpr cod = sig_->Canon(g.cod);
    if ((from ? dom : cod) == x) options.push_back(Term::Gen(g.name));
    if (fl.dagger && (from ? cod : dom) == x) {
      options.push_back(Term::Dagger(Term::Gen(g.name)));
    }
  }
  if (fl.braided && n >= 2) {
    std::size_t k = static_cast<std::size_t>(Uniform(1, static_cast<int>(n) - 1));
    ObjectExpr p = x.slice(0, k);
    ObjectExpr q = x.slice(k, n);
    // Braid(u, v): u⊗v → v⊗u; BraidInv(u, v): v⊗u → u⊗v.
    options.push_back(from ? Term::Braid(p, q) : Term::Braid(q, p));
    options.push_back(from ? Term::BraidInv(q, p) : Term::BraidInv(p, q));
  }
  if (fl.balanced && n >= 1) {
    options.push_back(Term::Twist(x));
    options.push_back(Term::TwistInv(x));
  }
  // Insert a cup (from) or cap (to) somewhere when the word is short.
  if (n <= 2 && !alphabet_.empty()) {
    std::size_t k = static_cast<std::size_t>(Uniform(0, static_cast<int>(n)));
    ObjectExpr w = RandomAtomWord();
    if (fl.right_rigid) {
      Term box = from ? Term::Birth(w) : Term::Death(w);
      options.push_back(Place(x.slice(0, k), box, x.slice(k, n)));
    }
    if (fl.left_rigid) {
      Term box = from ? Term::LBirth(w) : Term::LDeath(w);
      options.push_back(Place(x.slice(0, k), box, x.slice(k, n)));
    }
  }
  // Contract an adjacent dual pair (from) or create one (to).
  for (std::size_t i = 0; i + 1 < n; ++i) {
    ObjectExpr a = x.slice(i, i + 1);
    ObjectExpr b = x.slice(i + 1, i + 2);
    ObjectExpr pre = x.slice(0, i);
    ObjectExpr post = x.slice(i + 2, n);
    if (fl.right_rigid) {
      if (from && a == sig_->Canon(Dual(b))) {
        options.push_back(Place(pre, Term::Death(b), post));
      }
      if (!from && b == sig_->Canon(Dual(a))) {
        options.push_back(Place(pre, Term::Birth(a), post));
      }
    }
    if (fl.left_rigid) {
      if (from && b == sig_->Canon(LeftDual(a))) {
        options.push_back(Place(pre, Term::LDeath(a), post));
      }
      if (!from && a == sig_->Canon(LeftDual(b))) {
        options.push_back(Place(pre, Term::LBirth(b), post));
      }
    }
  }
  return options[Uniform(0, static_cast<int>(options.size()) - 1)];
}

Term TermSampler::Build(const ObjectExpr& x, int depth, bool from) {
  if (depth <= 0) return Leaf(x, from);
  int r = Uniform(0, 9);
  if (r <= 2) return Leaf(x, from);
  if (r <= 5) {
    if (from) {
      Term f = Build(x, depth - 1, true);
      Term g = Build(Type(f).cod, depth - 1, true);
      return Term::Compose(g, f);
    }
    Term g = Build(x, depth - 1, false);
    Term f = Build(Type(g).dom, depth - 1, false);
    return Term::Compose(g, f);
  }
  if (r <= 7 || !sig_->flavor().dagger) {
    std::size_t k = static_cast<std::size_t>(
        Uniform(0, static_cast<int>(x.size())));
    if (x.size() >= 2 && (k == 0 || k == x.size())) k = x.size() / 2;
    return Term::Tensor(Build(x.slice(0, k), depth - 1, from),
                        Build(x.slice(k, x.size()), depth - 1, from));
  }
  return Term::Dagger(Build(x, depth - 1, !from));
}

Term TermSampler::From(const ObjectExpr& x, int depth) {
  return Build(x, depth, true);
}

Term TermSampler::To(const ObjectExpr& x, int depth) {
  return Build(x, depth, false);
}

Term TermSampler::Any(int depth) {
  return From(RandomWord(0, options_.max_word), depth);
}

}  // namespace strand::rewrite

namespace strand {

Term RandomTerm(const Signature& sig, std::mt19937_64& rng,
                const RandomTermOptions& options) {
  rewrite::TermSampler sampler(sig, rng, options);
  return sampler.Any(options.depth);
}

}  // namespace strand
