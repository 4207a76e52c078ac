#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ngcat {

/// Dense integer matrix, row-major rows.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Solves A·x ≡ b (mod modulus) for x.
///
/// The modulus is split into prime powers and recombined by CRT.  Over each
/// Z/p^e the matrix is diagonalized by row and column operations, always
/// pivoting on an entry of least p-adic valuation (which then divides the
/// rest of the active block).  Free coordinates of the diagonal system are
/// set to zero, so the output is deterministic.  Returns nullopt when the
/// system is inconsistent.
std::optional<std::vector<std::int64_t>> solve_mod(const IntMatrix& a, const std::vector<std::int64_t>& b,
                                                   std::int64_t modulus);

}  // namespace ngcat
