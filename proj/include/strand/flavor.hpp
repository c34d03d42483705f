// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRAND_FLAVOR_HPP_
#define STRAND_FLAVOR_HPP_

#include <string>
#include <string_view>

namespace strand {

enum class DaggerType : unsigned char { kNone, kI, kII };

// Capabilities of the ambient strict monoidal category. Construct through
// Closed() so that implied capabilities are present.
struct Flavor {
  bool right_rigid = false;
  bool left_rigid = false;
  bool braided = false;
  bool symmetric = false;
  bool balanced = false;
  bool ribbon = false;
  bool pivotal = false;
  bool dagger = false;
  DaggerType dagger_type = DaggerType::kNone;

  bool operator==(const Flavor&) const = default;

  // Adds every capability implied by the present ones.
  Flavor Closed() const;

  // V∨ and V* are the same object whenever a canonical left rigidity exists.
  bool identifies_left_duals() const {
    return right_rigid && (braided || dagger || pivotal);
  }

  bool type_one() const { return dagger_type == DaggerType::kI; }
  // A symmetric unitary braiding also satisfies the non-unitary clause.
  bool type_two() const {
    return dagger_type == DaggerType::kII ||
           (dagger_type == DaggerType::kI && symmetric);
  }

  // True iff every capability demanded by `guard` is present here.
  bool Satisfies(const Flavor& guard) const;

  Flavor Union(const Flavor& other) const;

  std::string ToString() const;

  static Flavor Monoidal() { return Flavor{}; }
};

// Accepts capability words and preset names separated by spaces, commas or
// '+': e.g. "ribbon dagger typeI" or "dagger-compact-closed". Throws
// Error(kSyntax) on unknown words.
Flavor ParseFlavor(std::string_view text);

}  // namespace strand

#endif  // STRAND_FLAVOR_HPP_
