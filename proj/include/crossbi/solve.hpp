#pragma once

#include <optional>
#include <span>
#include <vector>

#include "crossbi/linmap.hpp"

namespace crossbi {

struct SolveResult {
    enum class Kind { Unique, None, Many };

    Kind kind = Kind::None;
    // Set for Unique and Many.
    Vec particular;
    // Basis of the kernel; empty for Unique.
    std::vector<Vec> nullspace;

    bool unique() const { return kind == Kind::Unique; }
};

// Exact Gaussian elimination on system * x = rhs.
SolveResult solve_linear(const LinMap &system, std::span<const Scalar> rhs);

std::size_t rank(const LinMap &m);

// Two-sided inverse of a square matrix, or nullopt when singular.
std::optional<LinMap> inverse(const LinMap &m);

} // namespace crossbi
