#pragma once

#include <memory>

#include "kvrep/abelian.hpp"
#include "kvrep/cochain.hpp"
#include "kvrep/group.hpp"

namespace kvrep {

/// Classifying data of an essentially finite 2-group: pi0, the pi0-module
/// pi1 and a normalized classifying 3-cocycle alpha.
class TwoGroupData
{
public:
  const FiniteGroup& pi0() const noexcept { return *pi0_; }
  const GroupPtr& pi0_ptr() const noexcept { return pi0_; }
  const AbelianGroup& pi1() const noexcept { return module_->target(); }
  const Pi1Action& action() const noexcept { return module_->action(); }
  const std::shared_ptr<const Pi1Module>& module_ptr() const noexcept { return module_; }
  const Pi1Cochain& alpha() const noexcept { return alpha_; }

  int p() const noexcept { return pi0_->order(); }
  int q() const noexcept { return pi1().order(); }

  /// Structural equality: identical tables, cyclic orders, action and alpha.
  friend bool operator==(const TwoGroupData& a, const TwoGroupData& b)
  {
    return *a.pi0_ == *b.pi0_ && *a.module_ == *b.module_ && a.alpha_.values() == b.alpha_.values();
  }

private:
  friend TwoGroupData make_two_group(const FiniteGroup&, const AbelianGroup&, const Pi1Action&,
                                     const std::vector<int>&);
  TwoGroupData(GroupPtr pi0, std::shared_ptr<const Pi1Module> module, Pi1Cochain alpha)
    : pi0_(std::move(pi0)), module_(std::move(module)), alpha_(std::move(alpha))
  {}

  GroupPtr pi0_;
  std::shared_ptr<const Pi1Module> module_;
  Pi1Cochain alpha_;
};

using TwoGroupPtr = std::shared_ptr<const TwoGroupData>;

/// Split 2-group: alpha = 0.
TwoGroupData make_split(const FiniteGroup& pi0, const AbelianGroup& pi1, const Pi1Action& action);

/// `alpha` holds p^3 pi1 element indices, alpha(g1,g2,g3) at
/// (g1 p + g2) p + g3. Throws NotNormalized or NotACocycle (with the first
/// failing quadruple as witness).
TwoGroupData make_two_group(const FiniteGroup& pi0, const AbelianGroup& pi1, const Pi1Action& action,
                            const std::vector<int>& alpha);

/// alpha(a, b, c) = phi(a) * floor((phi(b) + phi(c)) / m) * u, the standard
/// generator of H^3(Z/m, Z) pulled back along phi: pi0 -> Z/m (given by
/// residues) and pushed into pi1 through m-torsion u. A cocycle whenever u
/// is fixed by the action.
std::vector<int> inflated_cyclic_alpha(const FiniteGroup& pi0, const AbelianGroup& pi1, const std::vector<int>& phi,
                                       int m, int u);

} // namespace kvrep
