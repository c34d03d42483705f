// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include "strand/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "strand/error.hpp"

namespace strand {
namespace {

using nlohmann::json;

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorCode::kSyntax, "model JSON: " + what);
}

const json& Field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) Bad(where + " lacks '" + key + "'");
  return j.at(key);
}

ComplexMatrix MatrixFromJson(const json& j, long rows, long cols,
                             const std::string& where) {
  if (!j.is_array()) Bad(where + " is not a list");
  if (static_cast<long>(j.size()) != rows * cols) {
    throw Error(ErrorCode::kShapeMismatch,
                where + " has " + std::to_string(j.size()) +
                    " entries, expected " + std::to_string(rows) + "×" +
                    std::to_string(cols));
  }
  ComplexMatrix m(rows, cols);
  for (long k = 0; k < rows * cols; ++k) {
    const json& z = j[k];
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() ||
        !z[1].is_number()) {
      Bad(where + " entry " + std::to_string(k) + " is not [re, im]");
    }
    m(k / cols, k % cols) = Complex(z[0].get<double>(), z[1].get<double>());
  }
  return m;
}

json MatrixToJson(const ComplexMatrix& m) {
  json out = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < m.cols(); ++j) {
      out.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return out;
}

ObjectExpr ObjectField(const json& j, const char* key,
                       const std::string& where) {
  const json& v = Field(j, key, where);
  if (!v.is_string()) Bad(where + "." + key + " is not a string");
  return ParseObjectExpr(v.get<std::string>());
}

std::map<std::string, DualityData> DualityFromJson(
    const json& j, const std::map<std::string, int>& dims,
    const std::string& where) {
  std::map<std::string, DualityData> out;
  if (!j.is_object()) Bad(where + " is not an object");
  for (const auto& [obj, entry] : j.items()) {
    auto it = dims.find(obj);
    if (it == dims.end()) Bad(where + " names unknown object '" + obj + "'");
    long n = it->second;
    DualityData d;
    d.birth = MatrixFromJson(Field(entry, "birth", where + "." + obj), n, n,
                             where + "." + obj + ".birth");
    if (entry.contains("death")) {
      d.death = MatrixFromJson(entry.at("death"), n, n,
                               where + "." + obj + ".death");
    }
    out.emplace(obj, std::move(d));
  }
  return out;
}

json DualityToJson(const std::map<std::string, DualityData>& m) {
  json out = json::object();
  for (const auto& [obj, d] : m) {
    json e = {{"birth", MatrixToJson(d.birth)}};
    if (d.death) e["death"] = MatrixToJson(*d.death);
    out[obj] = e;
  }
  return out;
}

long DimOf(const std::map<std::string, int>& dims, const std::string& obj,
           const std::string& where) {
  auto it = dims.find(obj);
  if (it == dims.end()) Bad(where + " names unknown object '" + obj + "'");
  return it->second;
}

long WordDim(const std::map<std::string, int>& dims, const ObjectExpr& x,
             const std::string& where) {
  long n = 1;
  for (const Atom& a : x.atoms()) n *= DimOf(dims, a.name, where);
  return n;
}

}  // namespace

ModelSpec ModelFromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    Bad(e.what());
  }
  if (!j.is_object()) Bad("top level is not an object");
  try {
    StructureData d;
    d.name = j.value("name", std::string("model"));
    d.flavor = ParseFlavor(j.value("flavor", std::string("monoidal")));
    const json& objects = Field(j, "objects", "model");
    if (!objects.is_object()) Bad("objects is not an object");
    for (const auto& [obj, n] : objects.items()) {
      if (!n.is_number_integer()) Bad("dimension of '" + obj + "'");
      d.dims[obj] = n.get<int>();
    }
    if (j.contains("duality")) {
      d.duality = DualityFromJson(j.at("duality"), d.dims, "duality");
    }
    if (j.contains("left_duality")) {
      d.left_duality =
          DualityFromJson(j.at("left_duality"), d.dims, "left_duality");
    }
    if (j.contains("braid")) {
      for (const auto& [key, m] : j.at("braid").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) Bad("braid key '" + key + "'");
        std::string u = key.substr(0, comma);
        std::string v = key.substr(comma + 1);
        long n = DimOf(d.dims, u, "braid") * DimOf(d.dims, v, "braid");
        d.braid[{u, v}] = MatrixFromJson(m, n, n, "braid." + key);
      }
    }
    for (const char* key : {"twist", "dual_twist"}) {
      if (!j.contains(key)) continue;
      auto& target = std::string(key) == "twist" ? d.twist : d.dual_twist;
      for (const auto& [obj, m] : j.at(key).items()) {
        long n = DimOf(d.dims, obj, key);
        target[obj] = MatrixFromJson(m, n, n, std::string(key) + "." + obj);
      }
    }
    std::string dagger = j.value("dagger", std::string("none"));
    if (dagger == "none") {
      d.dagger = DaggerRealization::kNone;
    } else if (dagger == "conjugate-transpose") {
      d.dagger = DaggerRealization::kConjugateTranspose;
    } else if (dagger == "tables") {
      d.dagger = DaggerRealization::kTables;
    } else {
      Bad("unknown dagger realization '" + dagger + "'");
    }
    d.tolerance = j.value("tolerance", 1e-10);

    GeneratorMap gens;
    if (j.contains("generators")) {
      for (const auto& [name, g] : j.at("generators").items()) {
        std::string where = "generators." + name;
        GeneratorData gd;
        gd.dom = ObjectField(g, "dom", where);
        gd.cod = ObjectField(g, "cod", where);
        long rows = WordDim(d.dims, gd.cod, where);
        long cols = WordDim(d.dims, gd.dom, where);
        gd.matrix =
            MatrixFromJson(Field(g, "matrix", where), rows, cols, where);
        if (g.contains("adjoint")) gd.adjoint = g.at("adjoint").get<std::string>();
        if (g.contains("adjoint_matrix")) {
          gd.adjoint_matrix = MatrixFromJson(g.at("adjoint_matrix"), cols, rows,
                                             where + ".adjoint_matrix");
        }
        gens.emplace(name, std::move(gd));
      }
    }
    return ModelSpec(std::move(d), std::move(gens));
  } catch (const json::exception& e) {
    Bad(e.what());
  }
}

std::string ModelToJson(const ModelSpec& model) {
  const StructureData& d = model.structure();
  json j;
  j["name"] = d.name;
  j["flavor"] = d.flavor.ToString();
  j["objects"] = json::object();
  for (const auto& [obj, n] : d.dims) j["objects"][obj] = n;
  if (!d.duality.empty()) j["duality"] = DualityToJson(d.duality);
  if (!d.left_duality.empty()) j["left_duality"] = DualityToJson(d.left_duality);
  if (!d.braid.empty()) {
    json b = json::object();
    for (const auto& [key, m] : d.braid) {
      b[key.first + "," + key.second] = MatrixToJson(m);
    }
    j["braid"] = b;
  }
  if (!d.twist.empty()) {
    for (const auto& [obj, m] : d.twist) j["twist"][obj] = MatrixToJson(m);
  }
  if (!d.dual_twist.empty()) {
    for (const auto& [obj, m] : d.dual_twist) {
      j["dual_twist"][obj] = MatrixToJson(m);
    }
  }
  switch (d.dagger) {
    case DaggerRealization::kNone: j["dagger"] = "none"; break;
    case DaggerRealization::kConjugateTranspose:
      j["dagger"] = "conjugate-transpose";
      break;
    case DaggerRealization::kTables: j["dagger"] = "tables"; break;
  }
  j["tolerance"] = d.tolerance;
  if (!model.generators().empty()) {
    json gens = json::object();
    for (const auto& [name, g] : model.generators()) {
      json e = {{"dom", ToString(g.dom)},
                {"cod", ToString(g.cod)},
                {"matrix", MatrixToJson(g.matrix)}};
      if (g.adjoint) e["adjoint"] = *g.adjoint;
      if (g.adjoint_matrix) e["adjoint_matrix"] = MatrixToJson(*g.adjoint_matrix);
      gens[name] = e;
    }
    j["generators"] = gens;
  }
  return j.dump(2) + "\n";
}

ModelSpec LoadModel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kSyntax, "cannot read model file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return ModelFromJson(os.str());
}

void SaveModel(const ModelSpec& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kSyntax, "cannot write model file '" + path + "'");
  out << ModelToJson(model);
}

}  // namespace strand
