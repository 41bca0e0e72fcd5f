#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kvrep/abelian.hpp"
#include "kvrep/error.hpp"
#include "kvrep/group.hpp"
#include "kvrep/qz.hpp"
#include "kvrep/smith.hpp"

namespace kvrep {

/// Coefficients (Q/Z)^n with G acting through a permutation homomorphism
/// rho by g(l_1, ..., l_n) = (l_{rho(g^-1)(1)}, ..., l_{rho(g^-1)(n)}).
class QZModule
{
public:
  using Value = std::vector<QZ>;

  QZModule(GroupPtr group, PermHom twist);
  /// Trivial action on (Q/Z)^rank.
  static QZModule trivial(GroupPtr group, int rank);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  int rank() const noexcept { return twist_.degree(); }
  const PermHom& twist() const noexcept { return twist_; }

  Value zero() const { return Value(static_cast<std::size_t>(rank())); }
  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value act(int g, const Value& v) const;
  static bool is_zero(const Value& v);

  friend bool operator==(const QZModule& a, const QZModule& b)
  {
    return (a.group_ == b.group_ || *a.group_ == *b.group_) && a.twist_ == b.twist_;
  }

private:
  GroupPtr group_;
  PermHom twist_;
};

/// pi1 as a pi0-module; values are element indices of the abelian group.
class Pi1Module
{
public:
  using Value = int;

  Pi1Module(GroupPtr group, AbelianGroup target, Pi1Action action);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const AbelianGroup& target() const noexcept { return target_; }
  const Pi1Action& action() const noexcept { return action_; }

  Value zero() const { return 0; }
  Value add(Value a, Value b) const { return target_.add(a, b); }
  Value sub(Value a, Value b) const { return target_.add(a, target_.neg(b)); }
  Value act(int g, Value v) const { return action_.apply(g, v); }
  static bool is_zero(Value v) { return v == 0; }

  friend bool operator==(const Pi1Module& a, const Pi1Module& b)
  {
    return (a.group_ == b.group_ || *a.group_ == *b.group_) && a.target_ == b.target_ && a.action_ == b.action_;
  }

private:
  GroupPtr group_;
  AbelianGroup target_;
  Pi1Action action_;
};

/// A d-cochain G^d -> module, stored densely. The tuple (g_1, ..., g_d) has
/// flat index sum_k g_k p^(d-k) (first argument most significant).
template<class Module>
class Cochain
{
public:
  using Value = typename Module::Value;

  Cochain(Module module, int degree)
    : Cochain(std::make_shared<const Module>(std::move(module)), degree)
  {}

  Cochain(std::shared_ptr<const Module> module, int degree)
    : module_(std::move(module)), degree_(degree)
  {
    if (degree_ < 0)
      throw InvalidArgument("negative cochain degree");
    values_.assign(tuple_count(), module_->zero());
  }

  Cochain(std::shared_ptr<const Module> module, int degree, std::vector<Value> values)
    : module_(std::move(module)), degree_(degree), values_(std::move(values))
  {
    if (degree_ < 0)
      throw InvalidArgument("negative cochain degree");
    if (values_.size() != tuple_count())
      throw InvalidArgument("cochain has " + std::to_string(values_.size()) + " values, expected " +
                            std::to_string(tuple_count()));
  }

  const Module& module() const noexcept { return *module_; }
  const std::shared_ptr<const Module>& module_ptr() const noexcept { return module_; }
  int degree() const noexcept { return degree_; }
  int group_order() const noexcept { return module_->group().order(); }

  std::size_t tuple_count() const
  {
    std::size_t n = 1;
    for (int k = 0; k < degree_; ++k)
      n *= static_cast<std::size_t>(module_->group().order());
    return n;
  }

  std::size_t index_of(std::span<const int> args) const
  {
    std::size_t idx = 0;
    const auto p = static_cast<std::size_t>(group_order());
    for (int a : args)
      idx = idx * p + static_cast<std::size_t>(a);
    return idx;
  }

  std::vector<int> args_of(std::size_t index) const
  {
    std::vector<int> args(static_cast<std::size_t>(degree_));
    const auto p = static_cast<std::size_t>(group_order());
    for (std::size_t k = args.size(); k-- > 0;) {
      args[k] = static_cast<int>(index % p);
      index /= p;
    }
    return args;
  }

  const Value& operator[](std::size_t index) const { return values_[index]; }
  Value& operator[](std::size_t index) { return values_[index]; }
  const Value& at(std::span<const int> args) const { return values_[index_of(args)]; }
  Value& at(std::span<const int> args) { return values_[index_of(args)]; }
  const Value& at(std::initializer_list<int> args) const { return at(std::span<const int>(args.begin(), args.size())); }
  Value& at(std::initializer_list<int> args) { return at(std::span<const int>(args.begin(), args.size())); }
  const std::vector<Value>& values() const noexcept { return values_; }

  /// First tuple containing the identity with a nonzero value.
  std::optional<std::vector<int>> normalization_violation() const
  {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (Module::is_zero(values_[i]))
        continue;
      auto args = args_of(i);
      for (int a : args)
        if (a == 0)
          return args;
    }
    return std::nullopt;
  }

  bool is_normalized() const { return !normalization_violation().has_value(); }

  bool is_zero() const
  {
    for (const auto& v : values_)
      if (!Module::is_zero(v))
        return false;
    return true;
  }

  Cochain& operator+=(const Cochain& o)
  {
    check_compatible(o);
    for (std::size_t i = 0; i < values_.size(); ++i)
      values_[i] = module_->add(values_[i], o.values_[i]);
    return *this;
  }

  Cochain& operator-=(const Cochain& o)
  {
    check_compatible(o);
    for (std::size_t i = 0; i < values_.size(); ++i)
      values_[i] = module_->sub(values_[i], o.values_[i]);
    return *this;
  }

  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  Cochain operator-() const
  {
    Cochain r(module_, degree_);
    r -= *this;
    return r;
  }

  bool same_module(const Cochain& o) const { return module_ == o.module_ || *module_ == *o.module_; }

  friend bool operator==(const Cochain& a, const Cochain& b)
  {
    return a.degree_ == b.degree_ && a.same_module(b) && a.values_ == b.values_;
  }

private:
  void check_compatible(const Cochain& o) const
  {
    if (degree_ != o.degree_ || !same_module(o))
      throw InvalidArgument("cochains of different degree or module");
  }

  std::shared_ptr<const Module> module_;
  int degree_;
  std::vector<Value> values_;
};

using QZCochain = Cochain<QZModule>;
using Pi1Cochain = Cochain<Pi1Module>;

/// (dc)(g_1..g_{d+1}) = g_1 c(g_2..g_{d+1})
///   + sum_{i=1..d} (-1)^i c(g_1, .., g_i g_{i+1}, .., g_{d+1})
///   + (-1)^{d+1} c(g_1..g_d).
template<class Module>
Cochain<Module> coboundary(const Cochain<Module>& c)
{
  const auto& mod = c.module();
  const auto& g = mod.group();
  const int d = c.degree();
  Cochain<Module> out(c.module_ptr(), d + 1);
  std::vector<int> args(static_cast<std::size_t>(d) + 1), sub(static_cast<std::size_t>(d));
  for (std::size_t idx = 0; idx < out.tuple_count(); ++idx) {
    args = out.args_of(idx);
    std::copy(args.begin() + 1, args.end(), sub.begin());
    auto v = mod.act(args[0], c.at(sub));
    for (int i = 1; i <= d; ++i) {
      for (int k = 0, src = 0; k < d; ++k, ++src) {
        if (k == i - 1) {
          sub[static_cast<std::size_t>(k)] = g.mul(args[static_cast<std::size_t>(src)], args[static_cast<std::size_t>(src) + 1]);
          ++src;
        } else {
          sub[static_cast<std::size_t>(k)] = args[static_cast<std::size_t>(src)];
        }
      }
      v = (i % 2 == 0) ? mod.add(v, c.at(sub)) : mod.sub(v, c.at(sub));
    }
    std::copy(args.begin(), args.end() - 1, sub.begin());
    v = ((d + 1) % 2 == 0) ? mod.add(v, c.at(sub)) : mod.sub(v, c.at(sub));
    out[idx] = std::move(v);
  }
  return out;
}

/// First tuple where the coboundary is nonzero.
template<class Module>
std::optional<std::vector<int>> cocycle_violation(const Cochain<Module>& c)
{
  const auto dc = coboundary(c);
  for (std::size_t idx = 0; idx < dc.tuple_count(); ++idx)
    if (!Module::is_zero(dc[idx]))
      return dc.args_of(idx);
  return std::nullopt;
}

template<class Module>
bool is_cocycle(const Cochain<Module>& c)
{
  return !cocycle_violation(c).has_value();
}

/// Returns c with dc = target, normalized when target is, or nullopt when
/// target is not a coboundary. Requires target degree >= 2. Throws
/// NotACocycle if target is not closed.
std::optional<QZCochain> solve_coboundary(const QZCochain& target);

/// True iff c1 - c2 is a coboundary. Throws on module/degree mismatch.
bool cohomologous(const QZCochain& c1, const QZCochain& c2);

struct CohomologyBounds
{
  int max_group_order = 24;
  int max_rank = 8;
};

/// One normalized 2-cocycle per class of H^2(G, (Q/Z)^n_rho), the first
/// being zero.
std::vector<QZCochain> h2_representatives(const QZModule& module, CohomologyBounds bounds = {});

/// Pushes a pi1-valued cochain forward along characters gamma(i) into
/// (Q/Z)^n_rho: coordinate i of the value is gamma(i)(value).
QZCochain push_forward(const Pi1Cochain& c, const std::vector<Character>& gamma, const PermHom& rho);

/// Matrix of d restricted to (optionally normalized) d-cochains, with the
/// unknown ordering used by the solver: (tuple, coordinate) pairs in
/// lexicographic order.
struct CoboundaryMatrix
{
  IntMatrix a;
  std::vector<std::size_t> column_tuple; ///< flat tuple index per unknown
  std::vector<int> column_coord;
  std::vector<std::size_t> row_tuple;
  std::vector<int> row_coord;
};

CoboundaryMatrix coboundary_matrix(const QZModule& module, int degree, bool normalized);

} // namespace kvrep
