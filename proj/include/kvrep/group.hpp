#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace kvrep {

/// A permutation of {0, ..., n-1}, stored by images.
class Perm
{
public:
  Perm() = default;

  /// Throws InvalidArgument unless `images` is a bijection of 0..n-1.
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;

  /// Composition as functions: (a * b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b);

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<int> images_;
};

struct GroupOptions
{
  /// Groups up to this order have associativity checked exhaustively.
  int associativity_bound = 64;
  /// Accept groups above the bound without the associativity check.
  bool allow_unchecked = false;
};

/// A finite group given by its multiplication table; element 0 is the
/// identity and table[i][j] is the index of g_i * g_j.
class FiniteGroup
{
public:
  using Table = std::vector<std::vector<int>>;

  explicit FiniteGroup(Table table, GroupOptions options = {});

  int order() const noexcept { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  static constexpr int identity() noexcept { return 0; }
  const Table& table() const noexcept { return table_; }

  bool is_abelian() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

private:
  Table table_;
  std::vector<int> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Constructors for the families used throughout the tests and the CLI.
FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup symmetric_group(int n);
/// Dihedral group of order 2n.
FiniteGroup dihedral_group(int n);
/// Closure of permutation generators. Elements are ordered by image
/// vector, which puts the identity first.
FiniteGroup group_from_permutations(const std::vector<Perm>& generators);

struct ConjugacyClass
{
  int representative;       ///< least element index in the class
  std::vector<int> members; ///< sorted
};

/// Classes sorted by representative.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

/// Sorted list of elements commuting with `x`.
std::vector<int> centralizer(const FiniteGroup& g, int x);

/// A homomorphism into a symmetric group S_n, one permutation per domain
/// element. Construction only checks sizes; use `homomorphism_violation`.
class PermHom
{
public:
  PermHom() = default;
  PermHom(int degree, std::vector<Perm> images);

  static PermHom trivial(const FiniteGroup& domain, int degree);

  int degree() const noexcept { return degree_; }
  int domain_order() const noexcept { return static_cast<int>(images_.size()); }
  const Perm& operator()(int g) const { return images_[static_cast<std::size_t>(g)]; }
  const std::vector<Perm>& images() const noexcept { return images_; }

  friend bool operator==(const PermHom&, const PermHom&) = default;

private:
  int degree_ = 0;
  std::vector<Perm> images_;
};

/// First pair (i, j) with images[g_i g_j] != images[g_i] * images[g_j],
/// or (0, 0) when images[e] is not the identity.
std::optional<std::pair<int, int>> homomorphism_violation(const FiniteGroup& g, const PermHom& h);

/// Cayley embedding: g maps to the permutation i -> index(g_i * g^-1).
PermHom cayley_embedding(const FiniteGroup& g);

/// Homomorphism between two finite groups.
struct GroupHom
{
  std::vector<int> images;

  bool is_homomorphism(const FiniteGroup& domain, const FiniteGroup& codomain) const;
};

/// A right action of a group on {0, ..., size-1}: point x maps to act[g](x),
/// with act[gh] = act[h] * act[g].
class GSet
{
public:
  /// Throws InvalidArgument if the action laws fail.
  GSet(const FiniteGroup& group, std::vector<Perm> act);

  int size() const noexcept { return size_; }
  int group_order() const noexcept { return static_cast<int>(act_.size()); }
  int apply(int x, int g) const { return act_[static_cast<std::size_t>(g)](x); }
  const std::vector<Perm>& action() const noexcept { return act_; }

private:
  int size_;
  std::vector<Perm> act_;
};

struct Orbit
{
  int representative;          ///< least point of the orbit
  std::vector<int> points;     ///< sorted
  std::vector<int> stabilizer; ///< sorted elements fixing the representative
};

/// Orbits sorted by representative.
std::vector<Orbit> orbits(const GSet& x);

/// A subgroup as a standalone group, with the embedding of its elements.
struct Subgroup
{
  GroupPtr group;
  std::vector<int> elements; ///< sorted; elements[k] is the image of k
};

/// Throws InvalidArgument if `elements` is not a subgroup.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);

/// A small generating set, chosen greedily in index order.
std::vector<int> generating_set(const FiniteGroup& g);

} // namespace kvrep
