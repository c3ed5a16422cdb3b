// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Command dispatch of the intdec tool, callable in-process.
//
// Exit codes: 0 true / success, 1 false (unsat, not equivalent, not included,
// not a member), 2 usage or input error, 3 capacity error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace intdec::cli {

inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kCapacityError = 3;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace intdec::cli
