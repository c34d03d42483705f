// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numbers>

#include "strand/builtins.hpp"
#include "strand/error.hpp"
#include "strand/model_io.hpp"
#include "strand/validate.hpp"

namespace strand {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidModel;
}

TEST(ParseObjectExpr, InvertsToString) {
  for (const char* text : {"V", "V ⊗ W*", "V** ⊗ W∨ ⊗ V", "𝟙"}) {
    EXPECT_EQ(ToString(ParseObjectExpr(text)), text);
  }
  EXPECT_EQ(ParseObjectExpr("V (x) W^"), ParseObjectExpr("V ⊗ W∨"));
  EXPECT_TRUE(ParseObjectExpr("unit").is_unit());
  EXPECT_EQ(CodeOf([] { ParseObjectExpr("V ⊗"); }), ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf([] { ParseObjectExpr("V W"); }), ErrorCode::kSyntax);
}

TEST(ModelJson, PresetsRoundTrip) {
  for (const ModelSpec& m :
       {SymVect(2), Semion(), AbelianAnyon(3, 1), RMatrix(1.3),
        RMatrix(std::polar(1.0, std::numbers::pi / 5))}) {
    ModelSpec back = ModelFromJson(ModelToJson(m));
    EXPECT_EQ(back.name(), m.name());
    EXPECT_EQ(back.flavor(), m.flavor());
    EXPECT_EQ(back.structure().dims, m.structure().dims);
    for (const auto& [key, mat] : m.structure().braid) {
      EXPECT_EQ(back.structure().braid.at(key), mat);
    }
    EXPECT_EQ(ModelToJson(back), ModelToJson(m));
    EXPECT_TRUE(ValidateModel(back).ok());
  }
}

TEST(ModelJson, GeneratorsAndDaggerTables) {
  const char* text = R"({
    "name": "tiny", "flavor": "dagger",
    "objects": {"V": 2},
    "generators": {
      "f": {"dom": "V", "cod": "V ⊗ V", "matrix": [[1,0],[0,0],[0,0],[0,1],
                                                  [0,0],[0,0],[2,0],[0,0]],
            "adjoint": "g"},
      "g": {"dom": "V ⊗ V", "cod": "V", "matrix": [[1,0],[0,0],[0,0],[0,0],
                                                  [0,0],[0,0],[0,0],[0,0]],
            "adjoint": "f"}
    },
    "dagger": "tables"
  })";
  ModelSpec m = ModelFromJson(text);
  EXPECT_EQ(m.generators().at("f").matrix.rows(), 4);
  EXPECT_EQ(m.generators().at("f").matrix(3, 0), Complex(2.0));
  EXPECT_EQ(m.GeneratorAdjoint("f"), m.generators().at("g").matrix);
  EXPECT_EQ(m.structure().dagger, DaggerRealization::kTables);
}

TEST(ModelJson, Errors) {
  EXPECT_EQ(CodeOf([] { ModelFromJson("{"); }), ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf([] { ModelFromJson(R"({"name": "x"})"); }),
            ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf([] {
              ModelFromJson(R"({"objects": {"V": 2}, "flavor": "braided",
                               "braid": {"V,V": [[1,0]]}})");
            }),
            ErrorCode::kShapeMismatch);
  EXPECT_EQ(CodeOf([] {
              ModelFromJson(R"({"objects": {"V": 1}, "flavor": "braided"})");
            }),
            ErrorCode::kInvalidModel);
  EXPECT_EQ(CodeOf([] {
              ModelFromJson(R"({"objects": {"V": 1}, "dagger": "maybe"})");
            }),
            ErrorCode::kSyntax);
}

}  // namespace
}  // namespace strand
