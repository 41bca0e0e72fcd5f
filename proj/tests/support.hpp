#pragma once

// Small fixtures and random generators shared by the test binaries.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "kvrep/cochain.hpp"
#include "kvrep/enumerate.hpp"
#include "kvrep/group.hpp"
#include "kvrep/quadruple.hpp"
#include "kvrep/two_group.hpp"

namespace kvtest {

inline kvrep::GroupPtr share(kvrep::FiniteGroup g)
{
  return std::make_shared<const kvrep::FiniteGroup>(std::move(g));
}

inline kvrep::FiniteGroup klein_four()
{
  return kvrep::direct_product(kvrep::cyclic_group(2), kvrep::cyclic_group(2));
}

inline kvrep::Perm random_perm(int n, std::mt19937& rng)
{
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return kvrep::Perm(v);
}

/// Random value k/den with den drawn from `dens`.
inline kvrep::QZ random_qz(std::mt19937& rng, std::vector<int> dens = {1, 2, 3, 4, 6})
{
  std::uniform_int_distribution<std::size_t> pick(0, dens.size() - 1);
  const int den = dens[pick(rng)];
  std::uniform_int_distribution<int> num(0, den - 1);
  return kvrep::QZ(num(rng), den);
}

inline kvrep::QZCochain random_cochain(const std::shared_ptr<const kvrep::QZModule>& mod, int degree, bool normalized,
                                       std::mt19937& rng)
{
  kvrep::QZCochain c(mod, degree);
  for (std::size_t idx = 0; idx < c.tuple_count(); ++idx) {
    const auto args = c.args_of(idx);
    if (normalized && std::find(args.begin(), args.end(), 0) != args.end())
      continue;
    for (auto& x : c[idx])
      x = random_qz(rng);
  }
  return c;
}

/// The Klein-four cocycle z(a, b) = a_1 b_2 / 2 on direct_product(Z/2, Z/2)
/// (element index 2 a_1 + a_2), rank one with trivial coefficients.
inline kvrep::QZCochain klein_cocycle(const kvrep::GroupPtr& v4)
{
  kvrep::QZCochain z(kvrep::QZModule::trivial(v4, 1), 2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      z.at({a, b})[0] = kvrep::QZ((a / 2) * (b % 2), 2);
  return z;
}

template<class T>
const T& pick(const std::vector<T>& v, std::mt19937& rng)
{
  std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
  return v[d(rng)];
}

/// Groups of order at most 8.
inline std::vector<kvrep::FiniteGroup> small_groups()
{
  using namespace kvrep;
  return {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_four(),
          cyclic_group(5), cyclic_group(6), symmetric_group(3), cyclic_group(7), cyclic_group(8),
          direct_product(cyclic_group(2), cyclic_group(4)), dihedral_group(4),
          direct_product(klein_four(), cyclic_group(2))};
}

/// Homomorphisms G -> Z/m as residue vectors.
inline std::vector<std::vector<int>> cyclic_homs(const kvrep::FiniteGroup& g, int m)
{
  std::vector<std::vector<int>> out;
  for (const auto& h : kvrep::permutation_homs(g, m)) {
    std::vector<int> phi;
    bool rotation = true;
    for (const auto& img : h.images()) {
      const int k = img(0);
      for (int i = 0; i < m && rotation; ++i)
        rotation = img(i) == (i + k) % m;
      phi.push_back(k);
    }
    if (rotation)
      out.push_back(std::move(phi));
  }
  return out;
}

/// Actions of G on A by automorphisms, as Pi1Action values.
inline std::vector<kvrep::Pi1Action> all_actions(const kvrep::FiniteGroup& g, const kvrep::AbelianGroup& a)
{
  std::vector<kvrep::Pi1Action> out;
  for (const auto& h : kvrep::permutation_homs(g, a.order())) {
    try {
      out.emplace_back(g, a, h.images());
    } catch (const kvrep::InvalidArgument&) {
    }
  }
  return out;
}

struct TwoGroupSpec
{
  bool nontrivial_action = false;
  bool nontrivial_alpha = false;
};

/// A random 2-group with |pi0| <= 8 and |pi1| <= 4. Requested features are
/// honoured when the drawn groups allow them; the result reports what it got.
inline kvrep::TwoGroupData random_two_group(std::mt19937& rng, TwoGroupSpec want, TwoGroupSpec* got = nullptr)
{
  using namespace kvrep;
  static const std::vector<FiniteGroup> groups = small_groups();
  static const std::vector<AbelianGroup> pi1s = {AbelianGroup(), AbelianGroup({2}), AbelianGroup({3}),
                                                 AbelianGroup({4}), AbelianGroup({2, 2})};
  for (;;) {
    const auto& g = pick(groups, rng);
    const auto& a = pick(pi1s, rng);
    auto actions = all_actions(g, a);
    std::vector<Pi1Action> chosen;
    for (const auto& act : actions)
      if (act.is_trivial() != want.nontrivial_action)
        chosen.push_back(act);
    if (chosen.empty())
      continue;
    const auto action = pick(chosen, rng);

    const int p = g.order();
    std::vector<int> alpha(static_cast<std::size_t>(p) * p * p, 0);
    if (want.nontrivial_alpha) {
      // Pair a nonzero phi: G -> Z/m with a nonzero m-torsion u fixed by the action.
      std::vector<std::pair<std::vector<int>, std::pair<int, int>>> options;
      for (int m : {2, 3, 4})
        for (const auto& phi : cyclic_homs(g, m)) {
          if (std::all_of(phi.begin(), phi.end(), [](int r) { return r == 0; }))
            continue;
          for (int u = 1; u < a.order(); ++u) {
            int mu = 0;
            for (int k = 0; k < m; ++k)
              mu = a.add(mu, u);
            bool fixed = true;
            for (int x = 0; x < p; ++x)
              fixed = fixed && action.apply(x, u) == u;
            if (mu == 0 && fixed)
              options.push_back({phi, {m, u}});
          }
        }
      if (options.empty())
        continue;
      const auto& [phi, mu] = pick(options, rng);
      alpha = inflated_cyclic_alpha(g, a, phi, mu.first, mu.second);
      // Add the coboundary of a random normalized 2-cochain.
      auto mod = std::make_shared<const Pi1Module>(share(g), a, action);
      Pi1Cochain b(mod, 2);
      std::uniform_int_distribution<int> val(0, a.order() - 1);
      for (int x = 1; x < p; ++x)
        for (int y = 1; y < p; ++y)
          b.at({x, y}) = val(rng);
      const auto db = coboundary(b);
      for (std::size_t k = 0; k < alpha.size(); ++k)
        alpha[k] = a.add(alpha[k], db[k]);
    }
    auto t = make_two_group(g, a, action, alpha);
    if (got)
      *got = TwoGroupSpec{!t.action().is_trivial(), !t.alpha().is_zero()};
    return t;
  }
}

inline kvrep::QZCochain random_one_cochain(const kvrep::RepQuadruple& q, std::mt19937& rng)
{
  return random_cochain(q.c.module_ptr(), 1, true, rng);
}

/// A random valid quadruple of dimension n, or nullopt when the obstruction
/// is not solvable for the draws made.
inline std::optional<kvrep::RepQuadruple> random_quadruple(const kvrep::TwoGroupPtr& t, int n, std::mt19937& rng,
                                                           bool random_class = true)
{
  using namespace kvrep;
  const auto homs = permutation_homs(t->pi0(), n);
  for (int attempt = 0; attempt < 20; ++attempt) {
    const auto& rho = pick(homs, rng);
    const auto betas = equivariant_betas(*t, rho);
    const auto& beta = pick(betas, rng);
    const auto c0 = solve_coboundary(obstruction(*t, rho, beta));
    if (!c0)
      continue;
    auto mod = coefficient_module(*t, rho);
    QZCochain c = *c0;
    if (random_class)
      c += pick(h2_representatives(*mod), rng);
    c += coboundary(random_cochain(mod, 1, true, rng));
    return make_quadruple(t, rho, beta, QZCochain(mod, 2, c.values()));
  }
  return std::nullopt;
}

} // namespace kvtest
