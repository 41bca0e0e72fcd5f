#pragma once

#include <vector>

#include "kvrep/quadruple.hpp"

namespace kvrep {

struct EnumerationBounds
{
  int max_n = 6;
  int max_order = 24;
  /// Cap on the number of candidate (rho, beta, class) triples examined.
  int max_candidates = 20000;
};

/// All homomorphisms G -> S_n, found by assigning images to a greedy
/// generating set and closing under multiplication, pruning on conflicts.
/// Sorted by image vectors.
std::vector<PermHom> permutation_homs(const FiniteGroup& g, int n, EnumerationBounds bounds = {});

/// One homomorphism per S_n-conjugacy class: the lexicographically least
/// conjugate.
std::vector<PermHom> permutation_homs_up_to_conjugacy(const FiniteGroup& g, int n, EnumerationBounds bounds = {});

/// All equivariant beta for rho: per rho-orbit, a character fixed by the
/// stabilizer of the orbit minimum, transported along the orbit.
std::vector<std::vector<Character>> equivariant_betas(const TwoGroupData& t, const PermHom& rho);

/// Pairwise inequivalent quadruples of dimension n covering every class.
std::vector<RepQuadruple> enumerate_reps(const TwoGroupPtr& t, int n, EnumerationBounds bounds = {});

} // namespace kvrep
