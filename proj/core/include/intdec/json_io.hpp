// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// JSON forms of sets and parametric DBMs. Integers that do not fit in 64 bits
// are written as decimal strings; both forms are accepted on input.
//
// IdfSet:
//   {"dim": n, "cells": [{"z": {"states": k, "initial": s, "accepting": [s...],
//                               "transitions": [[state per letter]...]},
//                         "d": [[{"coeffs": [..], "rel": "le"|"lt"|"eq", "const": c}...]...]}]}
// Parametric DBM:
//   {"n": n, "relations": [["le"|"lt"...]...], "phi": "formula over c_i_j",
//    "infinite": [[bool...]...]}         ("infinite" is optional)
// DBM:
//   {"n": n, "bounds": [[{"value": int | "inf", "strict": bool}...]...]}
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "intdec/dbm.hpp"
#include "intdec/idf.hpp"

namespace intdec::json_io {

std::string export_idf(const IdfSet& f, int indent = 2);

/// Throws InvalidArgument on malformed input or a violated representation
/// invariant.
IdfSet import_idf(std::string_view text);

/// Accepts one parametric DBM, one plain DBM, or an array mixing both.
std::vector<dbm::CpDbmPlus> parse_cpdbm(std::string_view text);

dbm::Dbm parse_dbm(std::string_view text);
std::string export_dbm(const dbm::Dbm& m, int indent = 2);

/// Name of the parameter variable for entry (i, j), e.g. "c_0_1".
std::string parameter_name(std::size_t i, std::size_t j);

}  // namespace intdec::json_io
