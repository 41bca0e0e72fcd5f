#pragma once

#include <compare>
#include <vector>

#include "kvrep/group.hpp"
#include "kvrep/qz.hpp"

namespace kvrep {

/// Z/m_1 x ... x Z/m_r. Elements are exponent tuples enumerated
/// lexicographically (first coordinate most significant), zero first.
class AbelianGroup
{
public:
  AbelianGroup() : AbelianGroup(std::vector<int>{}) {}
  explicit AbelianGroup(std::vector<int> cyclic_orders);

  const std::vector<int>& cyclic_orders() const noexcept { return orders_; }
  int rank() const noexcept { return static_cast<int>(orders_.size()); }
  int order() const noexcept { return order_; }

  std::vector<int> tuple(int index) const;
  int index(const std::vector<int>& tuple) const;

  int add(int a, int b) const;
  int neg(int a) const;
  static constexpr int zero() noexcept { return 0; }
  /// Index of the j-th unit vector.
  int generator(int j) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
  std::vector<int> orders_;
  int order_ = 1;
};

/// A character u -> sum_j exps_j * u_j / m_j of an AbelianGroup.
struct Character
{
  std::vector<int> exps;

  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;
};

QZ evaluate(const AbelianGroup& a, const Character& chi, int u);

/// All characters in lexicographic exps order; index 0 is trivial.
/// Because exps range over the same box as element tuples, the k-th
/// character has exps equal to the k-th element's tuple.
std::vector<Character> dual_group(const AbelianGroup& a);

int character_index(const AbelianGroup& a, const Character& chi);
Character character_at(const AbelianGroup& a, int index);
Character trivial_character(const AbelianGroup& a);

/// A left action of a finite group by automorphisms of an abelian group,
/// one permutation of element indices per group element.
class Pi1Action
{
public:
  Pi1Action() = default;
  /// Throws InvalidArgument if any permutation is not an additive
  /// automorphism or the left action law fails.
  Pi1Action(const FiniteGroup& group, const AbelianGroup& target, std::vector<Perm> perms);

  static Pi1Action trivial(const FiniteGroup& group, const AbelianGroup& target);

  int apply(int g, int u) const { return perms_[static_cast<std::size_t>(g)](u); }
  const std::vector<Perm>& perms() const noexcept { return perms_; }
  bool is_trivial() const;

  friend bool operator==(const Pi1Action&, const Pi1Action&) = default;

private:
  std::vector<Perm> perms_;
};

/// (g chi)(u) = chi(g^-1 u).
Character act_on_character(const FiniteGroup& pi0, const AbelianGroup& pi1, const Pi1Action& action, int g,
                           const Character& chi);

} // namespace kvrep
