// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include "strand/flavor.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "strand/error.hpp"

namespace strand {

Flavor Flavor::Closed() const {
  Flavor f = *this;
  if (f.ribbon) f.balanced = f.right_rigid = true;
  if (f.symmetric) f.braided = true;
  if (f.balanced) f.braided = true;
  if (f.dagger_type != DaggerType::kNone) f.dagger = f.braided = true;
  if (f.identifies_left_duals()) f.left_rigid = true;
  return f;
}

bool Flavor::Satisfies(const Flavor& guard) const {
  auto needs = [](bool want, bool have) { return !want || have; };
  if (!needs(guard.right_rigid, right_rigid)) return false;
  if (!needs(guard.left_rigid, left_rigid)) return false;
  if (!needs(guard.braided, braided)) return false;
  if (!needs(guard.symmetric, symmetric)) return false;
  if (!needs(guard.balanced, balanced)) return false;
  if (!needs(guard.ribbon, ribbon)) return false;
  if (!needs(guard.pivotal, pivotal)) return false;
  if (!needs(guard.dagger, dagger)) return false;
  if (guard.dagger_type == DaggerType::kI && !type_one()) return false;
  if (guard.dagger_type == DaggerType::kII && !type_two()) return false;
  return true;
}

Flavor Flavor::Union(const Flavor& other) const {
  Flavor f = *this;
  f.right_rigid |= other.right_rigid;
  f.left_rigid |= other.left_rigid;
  f.braided |= other.braided;
  f.symmetric |= other.symmetric;
  f.balanced |= other.balanced;
  f.ribbon |= other.ribbon;
  f.pivotal |= other.pivotal;
  f.dagger |= other.dagger;
  if (other.dagger_type != DaggerType::kNone) f.dagger_type = other.dagger_type;
  return f.Closed();
}

std::string Flavor::ToString() const {
  std::vector<std::string> words;
  if (right_rigid) words.emplace_back("right-rigid");
  if (left_rigid) words.emplace_back("left-rigid");
  if (braided) words.emplace_back("braided");
  if (symmetric) words.emplace_back("symmetric");
  if (balanced) words.emplace_back("balanced");
  if (ribbon) words.emplace_back("ribbon");
  if (pivotal) words.emplace_back("pivotal");
  if (dagger) words.emplace_back("dagger");
  if (dagger_type == DaggerType::kI) words.emplace_back("typeI");
  if (dagger_type == DaggerType::kII) words.emplace_back("typeII");
  if (words.empty()) return "monoidal";
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

namespace {

Flavor FlavorWord(const std::string& w) {
  Flavor f;
  if (w == "monoidal") return f;
  if (w == "right-rigid") { f.right_rigid = true; return f; }
  if (w == "left-rigid") { f.left_rigid = true; return f; }
  if (w == "rigid") { f.right_rigid = f.left_rigid = true; return f; }
  if (w == "braided") { f.braided = true; return f; }
  if (w == "braided-rigid") { f.braided = f.right_rigid = true; return f; }
  if (w == "symmetric") { f.symmetric = true; return f; }
  if (w == "balanced") { f.balanced = true; return f; }
  if (w == "balanced-rigid") { f.balanced = f.right_rigid = true; return f; }
  if (w == "ribbon") { f.ribbon = true; return f; }
  if (w == "pivotal") { f.pivotal = true; return f; }
  if (w == "dagger") { f.dagger = true; return f; }
  if (w == "dagger-rigid") { f.dagger = f.right_rigid = true; return f; }
  if (w == "compact-closed") { f.symmetric = f.right_rigid = true; return f; }
  if (w == "dagger-compact-closed") {
    f.symmetric = f.right_rigid = f.dagger = true;
    f.dagger_type = DaggerType::kI;
    return f;
  }
  // The type words on their own name the dagger balanced right-rigid
  // flavors of the corresponding type.
  if (w == "typeI" || w == "typeII") {
    f.balanced = f.right_rigid = f.dagger = true;
    f.dagger_type = w == "typeI" ? DaggerType::kI : DaggerType::kII;
    return f;
  }
  if (w == "typeI-ribbon" || w == "typeII-ribbon" || w == "hermitian-ribbon") {
    f.ribbon = f.dagger = true;
    f.dagger_type = w == "typeII-ribbon" ? DaggerType::kII : DaggerType::kI;
    return f;
  }
  throw Error(ErrorCode::kSyntax, "unknown flavor word '" + w + "'");
}

}  // namespace

Flavor ParseFlavor(std::string_view text) {
  Flavor out;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) out = out.Union(FlavorWord(word));
    word.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '+') {
      flush();
    } else {
      word += ch;
    }
  }
  flush();
  return out.Closed();
}

}  // namespace strand
