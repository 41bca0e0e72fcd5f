#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kvrep/abelian.hpp"
#include "kvrep/cochain.hpp"
#include "kvrep/two_group.hpp"

namespace kvrep {

/// Classifying data (n, rho, beta, c) of a representation. beta is kept in
/// its equivariant form: one character of pi1 per basis index.
struct RepQuadruple
{
  TwoGroupPtr two_group;
  int n = 0;
  PermHom rho;
  std::vector<Character> beta;
  QZCochain c;
};

/// The coefficient module (Q/Z)^n twisted by rho.
std::shared_ptr<const QZModule> coefficient_module(const TwoGroupData& t, const PermHom& rho);

/// Assembles a quadruple with c = 0 when `c` is omitted. Only sizes are
/// checked here; see validate.
RepQuadruple make_quadruple(TwoGroupPtr t, PermHom rho, std::vector<Character> beta,
                            std::optional<QZCochain> c = std::nullopt);

/// beta_*(alpha): coordinate i of the value is beta_i(alpha(g1, g2, g3)).
QZCochain obstruction(const TwoGroupData& t, const PermHom& rho, const std::vector<Character>& beta);

enum class CheckStatus { passed, failed, skipped };

struct Check
{
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::vector<int> witness; ///< first violating tuple, empty on success
  std::string detail;
};

struct ValidationReport
{
  std::vector<Check> checks;

  bool ok() const;
  const Check* find(const std::string& name) const;
};

/// Checks, in order: shape, rho_homomorphism, beta_equivariant
/// (beta(rho(g)(i)) = g beta(i), witness (g, i)), c_normalized and
/// obstruction (dc = beta_*(alpha), witness (g1, g2, g3, i)). A failing
/// shape or homomorphism check skips the rest.
ValidationReport validate(const RepQuadruple& q);

/// Regular representation: n = pq with basis index k p + l for character
/// k and group element l.
RepQuadruple regular_rep(const TwoGroupPtr& t);

/// (1, trivial, trivial, 0).
RepQuadruple trivial_rep(const TwoGroupPtr& t);
/// (n, trivial, trivial, z) for a normalized 2-cocycle z with trivial
/// coefficients of rank n.
RepQuadruple cocyclic_rep(const TwoGroupPtr& t, const QZCochain& z);
/// (n, rho, trivial, 0).
RepQuadruple permutation_rep(const TwoGroupPtr& t, const PermHom& rho);

/// Block sum: indices of b follow those of a.
RepQuadruple direct_sum(const RepQuadruple& a, const RepQuadruple& b);

/// Relabels basis indices by sigma: rho' = sigma rho sigma^-1,
/// (sigma beta)_i = beta_{sigma^-1(i)}, (sigma c)_i = c_{sigma^-1(i)}.
RepQuadruple apply_sigma(const RepQuadruple& q, const Perm& sigma);

/// Replaces c by c + db.
RepQuadruple shift_by_coboundary(const RepQuadruple& q, const QZCochain& b);

/// Lexicographically first sigma with q2 = sigma q1 up to a coboundary in c,
/// or nullopt. Throws InvalidArgument for different 2-groups.
std::optional<Perm> equivalent(const RepQuadruple& q1, const RepQuadruple& q2);

/// Matrix of ranks r_{i'i} of a morphism from a rank-n to a rank-n' target.
struct RanksMatrix
{
  int rows = 0; ///< n'
  int cols = 0; ///< n
  std::vector<std::vector<int>> r;

  RanksMatrix() = default;
  RanksMatrix(int rows, int cols) : rows(rows), cols(cols), r(rows, std::vector<int>(cols, 0)) {}
  int& at(int i_target, int i_source) { return r[static_cast<std::size_t>(i_target)][static_cast<std::size_t>(i_source)]; }
  int at(int i_target, int i_source) const { return r[static_cast<std::size_t>(i_target)][static_cast<std::size_t>(i_source)]; }
  friend bool operator==(const RanksMatrix&, const RanksMatrix&) = default;
};

/// r_{rho'(g)(i'), rho(g)(i)} = r_{i'i} for all g, and r vanishes where
/// beta'_{i'} != beta_i.
bool is_invariant(const RanksMatrix& r, const RepQuadruple& source, const RepQuadruple& target);

} // namespace kvrep
