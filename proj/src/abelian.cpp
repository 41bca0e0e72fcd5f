#include "kvrep/abelian.hpp"

#include <string>

#include "kvrep/error.hpp"

namespace kvrep {

AbelianGroup::AbelianGroup(std::vector<int> cyclic_orders)
  : orders_(std::move(cyclic_orders))
{
  for (int m : orders_) {
    if (m < 1)
      throw InvalidArgument("cyclic factor orders must be >= 1");
    order_ *= m;
  }
}

std::vector<int> AbelianGroup::tuple(int index) const
{
  if (index < 0 || index >= order_)
    throw InvalidArgument("abelian group element index out of range: " + std::to_string(index));
  std::vector<int> t(orders_.size());
  for (std::size_t j = orders_.size(); j-- > 0;) {
    t[j] = index % orders_[j];
    index /= orders_[j];
  }
  return t;
}

int AbelianGroup::index(const std::vector<int>& tuple) const
{
  if (tuple.size() != orders_.size())
    throw InvalidArgument("tuple length does not match the number of cyclic factors");
  int idx = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const int m = orders_[j];
    idx = idx * m + ((tuple[j] % m) + m) % m;
  }
  return idx;
}

int AbelianGroup::add(int a, int b) const
{
  auto ta = tuple(a), tb = tuple(b);
  for (std::size_t j = 0; j < ta.size(); ++j)
    ta[j] += tb[j];
  return index(ta);
}

int AbelianGroup::neg(int a) const
{
  auto t = tuple(a);
  for (auto& x : t)
    x = -x;
  return index(t);
}

int AbelianGroup::generator(int j) const
{
  std::vector<int> t(orders_.size(), 0);
  t.at(static_cast<std::size_t>(j)) = 1;
  return index(t);
}

QZ evaluate(const AbelianGroup& a, const Character& chi, int u)
{
  if (chi.exps.size() != a.cyclic_orders().size())
    throw InvalidArgument("character does not belong to this group");
  const auto t = a.tuple(u);
  QZ v;
  for (std::size_t j = 0; j < t.size(); ++j)
    v += QZ(static_cast<std::int64_t>(chi.exps[j]) * t[j], a.cyclic_orders()[j]);
  return v;
}

std::vector<Character> dual_group(const AbelianGroup& a)
{
  std::vector<Character> out;
  out.reserve(static_cast<std::size_t>(a.order()));
  for (int k = 0; k < a.order(); ++k)
    out.push_back(Character{a.tuple(k)});
  return out;
}

int character_index(const AbelianGroup& a, const Character& chi)
{
  if (chi.exps.size() != a.cyclic_orders().size())
    throw InvalidArgument("character does not belong to this group");
  for (std::size_t j = 0; j < chi.exps.size(); ++j)
    if (chi.exps[j] < 0 || chi.exps[j] >= a.cyclic_orders()[j])
      throw InvalidArgument("character exponent out of range");
  return a.index(chi.exps);
}

Character character_at(const AbelianGroup& a, int index)
{
  return Character{a.tuple(index)};
}

Character trivial_character(const AbelianGroup& a)
{
  return Character{std::vector<int>(a.cyclic_orders().size(), 0)};
}

Pi1Action::Pi1Action(const FiniteGroup& group, const AbelianGroup& target, std::vector<Perm> perms)
  : perms_(std::move(perms))
{
  if (static_cast<int>(perms_.size()) != group.order())
    throw InvalidArgument("action needs one permutation per pi0 element");
  for (std::size_t g = 0; g < perms_.size(); ++g) {
    const auto& p = perms_[g];
    if (p.degree() != target.order())
      throw InvalidArgument("action permutation has wrong degree");
    if (p(0) != 0)
      throw InvalidArgument("action of element " + std::to_string(g) + " does not fix zero");
    for (int u = 0; u < target.order(); ++u)
      for (int v = 0; v < target.order(); ++v)
        if (p(target.add(u, v)) != target.add(p(u), p(v)))
          throw InvalidArgument("action of element " + std::to_string(g) + " is not additive");
  }
  if (!perms_[0].is_identity())
    throw InvalidArgument("identity of pi0 acts nontrivially");
  for (int a = 0; a < group.order(); ++a)
    for (int b = 0; b < group.order(); ++b)
      if (perms_[static_cast<std::size_t>(group.mul(a, b))] !=
          perms_[static_cast<std::size_t>(a)] * perms_[static_cast<std::size_t>(b)])
        throw InvalidArgument("left action law fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

Pi1Action Pi1Action::trivial(const FiniteGroup& group, const AbelianGroup& target)
{
  Pi1Action a;
  a.perms_.assign(static_cast<std::size_t>(group.order()), Perm::identity(target.order()));
  return a;
}

bool Pi1Action::is_trivial() const
{
  for (const auto& p : perms_)
    if (!p.is_identity())
      return false;
  return true;
}

Character act_on_character(const FiniteGroup& pi0, const AbelianGroup& pi1, const Pi1Action& action, int g,
                           const Character& chi)
{
  if (static_cast<int>(action.perms().size()) != pi0.order() ||
      (!action.perms().empty() && action.perms().front().degree() != pi1.order()))
    throw InvalidArgument("action does not match the given groups");
  if (chi.exps.size() != pi1.cyclic_orders().size())
    throw InvalidArgument("character does not belong to pi1");
  const int ginv = pi0.inv(g);
  Character out;
  out.exps.resize(chi.exps.size());
  for (int j = 0; j < pi1.rank(); ++j) {
    // chi(g^-1 e_j) = a'_j / m_j; m_j-torsion, so the product is integral.
    const QZ v = evaluate(pi1, chi, action.apply(ginv, pi1.generator(j)));
    const auto m = pi1.cyclic_orders()[static_cast<std::size_t>(j)];
    out.exps[static_cast<std::size_t>(j)] = static_cast<int>(v.num() * (m / v.den()));
  }
  return out;
}

} // namespace kvrep
