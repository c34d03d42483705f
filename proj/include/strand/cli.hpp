// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end.
//
//   strand check <file>
//   strand normalize <file> --term <name> [--trace]
//   strand eval <file> --term <name> --model <model.json>
//   strand validate --model <model.json>
//   strand laws --model <model.json> [--flavor <words>] [--samples N]
//               [--seed S] [--json <out>]
//   strand builtin <symvect|semion|anyon|rmatrix> [--param P] --emit <path>
//
// Exit codes: 0 success, 1 a failed check, validation or law, 2 a usage,
// parse or file error.

#ifndef STRAND_CLI_HPP_
#define STRAND_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "strand/model.hpp"

namespace strand {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// "re+imi" with 12 significant digits, independent of the global locale.
std::string FormatComplex(Complex z);
// One row per line, entries separated by two spaces.
std::string FormatMatrix(const ComplexMatrix& m);

}  // namespace strand

#endif  // STRAND_CLI_HPP_
