// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRAND_SRC_MODEL_MODEL_CACHE_HPP_
#define STRAND_SRC_MODEL_MODEL_CACHE_HPP_

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "strand/model.hpp"

namespace strand {

enum class Slot : unsigned char {
  kAtomB,
  kAtomD,
  kAtomBraid,
  kAtomTwist,
  kBirth,
  kDeath,
  kLBirth,
  kLDeath,
  kBraid,
  kBraidInv,
  kTwist,
  kTwistInv,
};

// Memo of derived structural matrices, keyed by canonical words. Entries are
// never erased, so returned references stay valid.
class ModelCache {
 public:
  using Key = std::tuple<Slot, ObjectExpr, ObjectExpr>;

  const ComplexMatrix* Find(const Key& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  const ComplexMatrix& Insert(const Key& key, ComplexMatrix value) {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.try_emplace(key, std::move(value)).first->second;
  }

  // Orthonormal bases of natural morphism spaces, keyed by (dom, cod).
  const std::vector<ComplexMatrix>* FindBasis(const ObjectExpr& dom,
                                              const ObjectExpr& cod) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bases_.find({dom, cod});
    return it == bases_.end() ? nullptr : &it->second;
  }

  const std::vector<ComplexMatrix>& InsertBasis(
      const ObjectExpr& dom, const ObjectExpr& cod,
      std::vector<ComplexMatrix> basis) {
    std::lock_guard<std::mutex> lock(mu_);
    return bases_.try_emplace({dom, cod}, std::move(basis)).first->second;
  }

 private:
  mutable std::mutex mu_;
  std::map<Key, ComplexMatrix> entries_;
  std::map<std::pair<ObjectExpr, ObjectExpr>, std::vector<ComplexMatrix>>
      bases_;
};

}  // namespace strand

#endif  // STRAND_SRC_MODEL_MODEL_CACHE_HPP_
