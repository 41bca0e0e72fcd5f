#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "kvrep/cochain.hpp"
#include "kvrep/group.hpp"
#include "kvrep/quadruple.hpp"

namespace kvrep {

/// X(n', n) = [n'] x [n] with the right action
/// (i', i).g = (rho'(g^-1)(i'), rho(g^-1)(i)). Point (i', i) has index i' n + i.
GSet intertwining_set(const RepQuadruple& source, const RepQuadruple& target);

struct OrbitRecord
{
  std::pair<int, int> representative; ///< (i', i), the least point
  std::vector<int> points;            ///< sorted point indices
  std::vector<int> stabilizer;        ///< sorted pi0 elements
  std::optional<QZCochain> zhat;      ///< on make_subgroup(pi0, stabilizer)
  int zregular_count = 0;
  bool is_torsor = false;
};

struct HomReport
{
  int source_n = 0;
  int target_n = 0;
  std::vector<OrbitRecord> orbits;
  int total_rank = 0;
};

/// Orbits of X(n', n) on which beta'_{i'} = beta_i, sorted by representative.
/// The condition is checked at every point. zhat is left empty.
std::vector<OrbitRecord> intertwining_orbits(const RepQuadruple& source, const RepQuadruple& target);

/// zhat(h1, h2) = c'(h2^-1, h1^-1)_{i'} - c(h2^-1, h1^-1)_i at the orbit
/// representative, as a trivial-coefficient 2-cocycle on the stabilizer.
/// Throws InvalidArgument when the record does not match the pair.
QZCochain zhat_cocycle(const OrbitRecord& orbit, const RepQuadruple& source, const RepQuadruple& target);

/// g is z-regular when z(g, h) = z(h, g) for every h in the centralizer of g.
bool is_zregular(const FiniteGroup& h, const QZCochain& z, int g);

/// Number of z-regular conjugacy classes of h. Throws NotACocycle.
int zregular_count(const FiniteGroup& h, const QZCochain& z);

/// Orbits, stabilizers, zhat cocycles and the intertwining number. When the
/// source is regular_rep, orbit k is the one through (k, index(beta_k) p).
HomReport hom_rank(const RepQuadruple& source, const RepQuadruple& target);

/// hom_rank(q, q').total_rank == hom_rank(q', q).total_rank.
bool symmetry_check(const RepQuadruple& q, const RepQuadruple& q2);

/// Twist tau(g)(x) = x.g^-1, so that the module action of tau is
/// (g f)(x) = f(x.g).
PermHom point_twist(const GSet& x);

/// z(g1, g2)(i', i) = c'(g1, g2)_{i'} - c(g1, g2)_i on the points of one
/// intertwining orbit, zero elsewhere; a 2-cocycle for point_twist.
QZCochain orbit_cocycle(const OrbitRecord& orbit, const RepQuadruple& source, const RepQuadruple& target);

/// Scalar -z(gbar, g)(x0) with x = x0.gbar and x0 the orbit representative
/// point. Requires a torsor orbit; z must use point_twist coefficients.
QZ torsor_transport(const OrbitRecord& orbit, const QZCochain& z, int x, int g);

/// Index of the orbit containing (i, index(beta_i) p), the canonical point
/// over i of Hom(R, q'), for each target index i.
std::vector<int> regular_orbit_index(const HomReport& report, const RepQuadruple& target);

/// Entry j is d_{rho(g)(j)} when beta_{rho(g)(j)} = chi, else 0.
std::vector<int> universal_eval(const std::vector<int>& d, const RepQuadruple& target, const Character& chi, int g);

using UniversalEval = std::function<std::vector<int>(const std::vector<int>&, const RepQuadruple&, const Character&, int)>;

/// Sum over all characters chi of eval(d, q', chi, e).
std::vector<int> universal_roundtrip(const std::vector<int>& d, const RepQuadruple& target,
                                     const UniversalEval& eval = universal_eval);

/// universal_roundtrip(d, q') == d.
bool universal_check(const std::vector<int>& d, const RepQuadruple& target, const UniversalEval& eval = universal_eval);

/// rho(g^-1)(i) when chi = beta_i, else nullopt.
std::optional<int> end_omega_basis_component(const Character& chi, int g, const RepQuadruple& target, int i);

/// Sum of d_k times the indicator of orbit k.
RanksMatrix ranks_matrix(const HomReport& report, const std::vector<int>& multiplicities);

} // namespace kvrep
