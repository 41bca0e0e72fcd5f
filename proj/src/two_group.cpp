#include "kvrep/two_group.hpp"

#include <string>

#include "kvrep/error.hpp"

namespace kvrep {

TwoGroupData make_split(const FiniteGroup& pi0, const AbelianGroup& pi1, const Pi1Action& action)
{
  const auto p = static_cast<std::size_t>(pi0.order());
  return make_two_group(pi0, pi1, action, std::vector<int>(p * p * p, 0));
}

TwoGroupData make_two_group(const FiniteGroup& pi0, const AbelianGroup& pi1, const Pi1Action& action,
                            const std::vector<int>& alpha)
{
  auto group = std::make_shared<const FiniteGroup>(pi0);
  if (static_cast<int>(action.perms().size()) != pi0.order())
    throw InvalidArgument("action has " + std::to_string(action.perms().size()) + " entries for pi0 of order " +
                          std::to_string(pi0.order()));
  for (const auto& perm : action.perms())
    if (perm.degree() != pi1.order())
      throw InvalidArgument("action permutations do not act on pi1");
  // Re-validate: the action may have been assembled against other groups.
  Pi1Action checked(pi0, pi1, action.perms());
  auto module = std::make_shared<const Pi1Module>(group, pi1, std::move(checked));
  for (int v : alpha)
    if (v < 0 || v >= pi1.order())
      throw InvalidArgument("alpha value out of range for pi1");
  Pi1Cochain a(module, 3, alpha);
  if (auto pos = a.normalization_violation())
    throw NotNormalized(*pos);
  if (auto w = cocycle_violation(a))
    throw NotACocycle(*w);
  return TwoGroupData(std::move(group), std::move(module), std::move(a));
}

} // namespace kvrep

namespace kvrep {

std::vector<int> inflated_cyclic_alpha(const FiniteGroup& pi0, const AbelianGroup& pi1, const std::vector<int>& phi,
                                       int m, int u)
{
  const int p = pi0.order();
  if (static_cast<int>(phi.size()) != p || m < 1)
    throw InvalidArgument("inflated_cyclic_alpha: phi must give one residue per pi0 element");
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      if ((phi[static_cast<std::size_t>(pi0.mul(a, b))] - phi[static_cast<std::size_t>(a)] -
           phi[static_cast<std::size_t>(b)]) % m != 0)
        throw InvalidArgument("inflated_cyclic_alpha: phi is not a homomorphism to Z/m");
  if (u < 0 || u >= pi1.order())
    throw InvalidArgument("inflated_cyclic_alpha: u out of range");

  // k u for k = 0..m-1.
  std::vector<int> mult(static_cast<std::size_t>(m) + 1, 0);
  for (int k = 1; k <= m; ++k)
    mult[static_cast<std::size_t>(k)] = pi1.add(mult[static_cast<std::size_t>(k) - 1], u);
  if (mult[static_cast<std::size_t>(m)] != 0)
    throw InvalidArgument("inflated_cyclic_alpha: u is not m-torsion");

  auto r = [&](int g) { return ((phi[static_cast<std::size_t>(g)] % m) + m) % m; };
  std::vector<int> alpha(static_cast<std::size_t>(p) * p * p, 0);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) {
        const int k = r(b) + r(c) >= m ? r(a) : 0;
        alpha[(static_cast<std::size_t>(a) * p + b) * p + c] = mult[static_cast<std::size_t>(k)];
      }
  return alpha;
}

} // namespace kvrep
