// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Fourier-Motzkin elimination over exact integer constraint systems with
// strict and non-strict inequalities and equations. Equations are removed by
// exact pivoting before any inequality is combined.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "intdec/decimal.hpp"

namespace intdec::decimal::fm {

using System = std::vector<LinearConstraint>;

/// Divides out common factors, drops trivially true constraints, removes
/// duplicates and bounds dominated by a tighter bound with identical
/// coefficients. Returns false when a trivially false constraint is found.
bool tidy(System& system);

/// Eliminates `var` (its coefficient becomes zero everywhere). Returns
/// nullopt when infeasibility is detected on the way.
std::optional<System> eliminate(System system, std::size_t var);

/// Whether the system has a real (equivalently rational) solution.
bool feasible(System system, std::size_t dimension);

/// A rational solution, if any.
std::optional<RationalVector> solve(System system, std::size_t dimension);

/// Removes column `var`, which must be zero in every constraint.
System drop_column(const System& system, std::size_t var);

}  // namespace intdec::decimal::fm
