// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include "strand/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <locale>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "strand/builtins.hpp"
#include "strand/error.hpp"
#include "strand/laws.hpp"
#include "strand/model_io.hpp"
#include "strand/rewrite.hpp"
#include "strand/text.hpp"
#include "strand/validate.hpp"

namespace strand {

namespace {

// Raised for usage and file errors; maps to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const NamedTerm& FindTerm(const Program& p, const std::string& name) {
  const NamedTerm* t = p.Find(name);
  if (!t) throw UsageError("no term named '" + name + "'");
  return *t;
}

double Clean(double x) { return x == 0.0 ? 0.0 : x; }  // drops the sign of -0

// Accepts "1.3", "0.8+0.6i", "-0.5i" and "i".
Complex ParseComplex(const std::string& text) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  std::string s = text;
  if (s.empty()) throw UsageError("empty number");
  if (s.back() != 'i') {
    double re = 0;
    in >> re;
    if (!in || in.peek() != EOF) throw UsageError("bad number '" + text + "'");
    return {re, 0.0};
  }
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto num = [&](const std::string& part, double unit_value) {
    if (part.empty() || part == "+") return unit_value;
    if (part == "-") return -unit_value;
    std::istringstream is(part);
    is.imbue(std::locale::classic());
    double v = 0;
    is >> v;
    if (!is || is.peek() != EOF) throw UsageError("bad number '" + text + "'");
    return v;
  };
  if (split == std::string::npos) return {0.0, num(s, 1.0)};
  return {num(s.substr(0, split), 0.0), num(s.substr(split), 1.0)};
}

ModelSpec BuiltinModel(const std::string& kind,
                       const std::optional<std::string>& param) {
  if (kind == "symvect") {
    int n = param ? std::stoi(*param) : 2;
    if (n < 1) throw UsageError("symvect needs a positive dimension");
    return SymVect(n);
  }
  if (kind == "semion") {
    if (param) throw UsageError("semion takes no parameter");
    return Semion();
  }
  if (kind == "anyon") {
    int n = 3, k = 1;
    if (param) {
      std::size_t comma = param->find(',');
      if (comma == std::string::npos) throw UsageError("anyon expects n,k");
      n = std::stoi(param->substr(0, comma));
      k = std::stoi(param->substr(comma + 1));
    }
    return AbelianAnyon(n, k);
  }
  if (kind == "rmatrix") {
    return RMatrix(param ? ParseComplex(*param) : Complex(1.3, 0.0));
  }
  throw UsageError("unknown builtin '" + kind +
                   "' (expected symvect, semion, anyon or rmatrix)");
}

std::string DescribeBoundary(const Boundary& b) {
  return ToString(b.dom) + " → " + ToString(b.cod);
}

int Check(const std::string& file, std::ostream& out, std::ostream& err) {
  Program p = ParseProgram(ReadFile(file));
  int code = kExitOk;
  for (const NamedTerm& t : p.terms) {
    try {
      out << t.name << " : " << DescribeBoundary(Typecheck(t.term, p.signature))
          << "\n";
    } catch (const Error& e) {
      err << file << ":" << t.span.line << ":" << t.span.column << ": term "
          << t.name << ": " << e.what() << "\n";
      code = kExitFailed;
    }
  }
  return code;
}

int Normalize(const std::string& file, const std::string& name, bool trace,
              std::ostream& out) {
  Program p = ParseProgram(ReadFile(file));
  const NamedTerm& t = FindTerm(p, name);
  Normalized n = strand::Normalize(t.term, p.signature);
  out << PrintTerm(n.term) << "\n";
  if (trace) {
    for (const TraceStep& s : n.trace.steps) {
      out << "  " << s.rule << " @ " << ToString(s.position) << "\n";
    }
    out << "  " << n.trace.steps.size() << " steps\n";
  }
  return kExitOk;
}

int EvalCommand(const std::string& file, const std::string& name,
                const std::string& model_path, std::ostream& out) {
  Program p = ParseProgram(ReadFile(file));
  const NamedTerm& t = FindTerm(p, name);
  ModelSpec model = LoadModel(model_path);
  Boundary b = Typecheck(t.term, p.signature);
  ComplexMatrix m = Eval(t.term, model);
  out << t.name << " : " << DescribeBoundary(b) << "  [" << m.rows() << "x"
      << m.cols() << "]\n"
      << FormatMatrix(m);
  return kExitOk;
}

int Validate(const std::string& model_path, std::ostream& out) {
  ModelSpec model = LoadModel(model_path);
  ValidationReport r = ValidateModel(model);
  out << r.ToText();
  return r.ok() ? kExitOk : kExitFailed;
}

int Laws(const std::string& model_path, const std::optional<std::string>& flavor,
         int samples, std::uint64_t seed,
         const std::optional<std::string>& json, std::ostream& out) {
  ModelSpec model = LoadModel(model_path);
  Flavor f = model.flavor();
  if (flavor) {
    try {
      f = ParseFlavor(*flavor);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<LawReport> reports = RunSuite(f, model, samples, seed);
  out << "laws for " << model.name() << " under [" << f.Closed().ToString()
      << "], " << samples << " samples, seed " << seed << "\n"
      << LawReportsText(reports);
  if (json) {
    std::ofstream js(*json, std::ios::binary);
    if (!js) throw UsageError("cannot write '" + *json + "'");
    js << LawReportsJson(reports) << "\n";
  }
  SuiteSummary s = Summarize(reports);
  return s.fail == 0 ? kExitOk : kExitFailed;
}

int Builtin(const std::string& kind, const std::optional<std::string>& param,
            const std::string& path, std::ostream& out) {
  ModelSpec model = BuiltinModel(kind, param);
  SaveModel(model, path);
  out << "wrote " << model.name() << " [" << model.flavor().ToString()
      << "] to " << path << "\n";
  return kExitOk;
}

}  // namespace

std::string FormatComplex(Complex z) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(12) << Clean(z.real());
  double im = Clean(z.imag());
  os << (std::signbit(im) ? "-" : "+") << std::abs(im) << "i";
  return os.str();
}

std::string FormatMatrix(const ComplexMatrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += "  ";
      out += FormatComplex(m(i, j));
    }
    out += "\n";
  }
  return out;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Strict monoidal category terms: typecheck, rewrite, evaluate "
               "and check coherence laws.",
               "strand"};
  app.require_subcommand(1);

  std::string file, term, model_path, kind, emit;
  std::optional<std::string> flavor, json, param;
  bool trace = false;
  int samples = 25;
  std::uint64_t seed = 7;

  CLI::App* check = app.add_subcommand("check", "Parse and typecheck a file");
  check->add_option("file", file, "Term file")->required();

  CLI::App* normalize =
      app.add_subcommand("normalize", "Print the normal form of a term");
  normalize->add_option("file", file, "Term file")->required();
  normalize->add_option("--term", term, "Term name")->required();
  normalize->add_flag("--trace", trace, "Print the rewrite steps");

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a term in a model");
  eval->add_option("file", file, "Term file")->required();
  eval->add_option("--term", term, "Term name")->required();
  eval->add_option("--model", model_path, "Model JSON")->required();

  CLI::App* validate =
      app.add_subcommand("validate", "Check a model against its flavor");
  validate->add_option("--model", model_path, "Model JSON")->required();

  CLI::App* laws = app.add_subcommand("laws", "Run the law suite on a model");
  laws->add_option("--model", model_path, "Model JSON")->required();
  laws->add_option("--flavor", flavor,
                   "Flavor selecting the laws (default: the model's)");
  laws->add_option("--samples", samples, "Bindings per law")
      ->check(CLI::PositiveNumber);
  laws->add_option("--seed", seed, "Random seed");
  laws->add_option("--json", json, "Write the reports as JSON");

  CLI::App* builtin = app.add_subcommand("builtin", "Write a preset model");
  builtin->add_option("kind", kind, "symvect, semion, anyon or rmatrix")
      ->required();
  builtin->add_option("--param", param,
                      "symvect: dimension; anyon: n,k; rmatrix: q");
  builtin->add_option("--emit", emit, "Output path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return Check(file, out, err);
    if (*normalize) return Normalize(file, term, trace, out);
    if (*eval) return EvalCommand(file, term, model_path, out);
    if (*validate) return Validate(model_path, out);
    if (*laws) return Laws(model_path, flavor, samples, seed, json, out);
    if (*builtin) return Builtin(kind, param, emit, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << file << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kSyntax ? kExitUsage : kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kSyntax ? kExitUsage : kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace strand
