#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace kvrep {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// A x = b (mod M), with M >= 1.
struct LinearSystemZ
{
  IntMatrix a;
  std::vector<std::int64_t> b;
  std::int64_t modulus = 1;
  /// Number of unknowns; inferred from the first row when negative.
  int unknowns = -1;
};

/// Diagonal form U A V = D over Z/M, computed by unimodular 2x2 row and
/// column operations (extended gcd), entries reduced mod M after every
/// step. U is applied on the fly to an optional right-hand side; V is kept,
/// and so is U when keep_row_transform is set.
class ModularDiagonalization
{
public:
  ModularDiagonalization(IntMatrix a, int cols, std::int64_t modulus, std::vector<std::int64_t>* rhs = nullptr,
                         bool keep_row_transform = false);

  std::int64_t modulus() const noexcept { return modulus_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  /// Number of nonzero diagonal entries; they occupy positions 0..rank-1.
  int rank() const noexcept { return static_cast<int>(diagonal_.size()); }
  const std::vector<std::int64_t>& diagonal() const noexcept { return diagonal_; }

  /// Solves D y = rhs' for the transformed right-hand side and returns V y.
  std::optional<std::vector<std::int64_t>> solve_transformed(const std::vector<std::int64_t>& rhs) const;

  /// Generators of the kernel {x : A x = 0 mod M} as a Z/M-module.
  std::vector<std::vector<std::int64_t>> kernel_generators() const;

  /// U b mod M. Needs keep_row_transform.
  std::vector<std::int64_t> row_transform(const std::vector<std::int64_t>& b) const;

  /// b lies in the image of A iff (U b)_r is divisible by image_moduli()[r]
  /// for every row: gcd(d_r, M) on the diagonal, M below it.
  std::vector<std::int64_t> image_moduli() const;

private:
  std::int64_t modulus_;
  int rows_;
  int cols_;
  std::vector<std::int64_t> diagonal_;
  IntMatrix v_; // cols x cols
  IntMatrix u_; // rows x rows, empty unless requested
};

/// Any solution of the system, or nullopt when none exists.
std::optional<std::vector<std::int64_t>> solve_mod(const LinearSystemZ& system);

} // namespace kvrep
