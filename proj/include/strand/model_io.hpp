// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

// JSON form of a ModelSpec:
//   {"name": "...", "flavor": "typeII-ribbon",
//    "objects": {"V": 2},
//    "duality": {"V": {"birth": M, "death": M}},       // death optional
//    "left_duality": {...},                             // same shape
//    "generators": {"f": {"dom": "V", "cod": "V ⊗ V*", "matrix": M,
//                         "adjoint": "g", "adjoint_matrix": M}},
//    "braid": {"V,V": M}, "twist": {"V": M}, "dual_twist": {"V": M},
//    "dagger": "none" | "conjugate-transpose" | "tables",
//    "tolerance": 1e-10}
// M is a row-major list of [re, im] pairs whose length fixes the shape
// together with the object dimensions.

#ifndef STRAND_MODEL_IO_HPP_
#define STRAND_MODEL_IO_HPP_

#include <string>

#include "strand/model.hpp"

namespace strand {

// Throws Error(kSyntax) on malformed JSON or fields and Error(kInvalidModel)
// or Error(kShapeMismatch) on inconsistent data.
ModelSpec ModelFromJson(const std::string& text);
std::string ModelToJson(const ModelSpec& model);

ModelSpec LoadModel(const std::string& path);
void SaveModel(const ModelSpec& model, const std::string& path);

}  // namespace strand

#endif  // STRAND_MODEL_IO_HPP_
