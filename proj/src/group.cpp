#include "kvrep/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "kvrep/error.hpp"

namespace kvrep {

Perm::Perm(std::vector<int> images)
  : images_(std::move(images))
{
  const int n = degree();
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw InvalidArgument("permutation images are not a bijection of 0.." + std::to_string(n - 1));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Perm Perm::identity(int n)
{
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  Perm p;
  p.images_ = std::move(im);
  return p;
}

bool Perm::is_identity() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i))
      return false;
  return true;
}

Perm Perm::inverse() const
{
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return r;
}

Perm operator*(const Perm& a, const Perm& b)
{
  if (a.degree() != b.degree())
    throw InvalidArgument("composing permutations of different degree");
  Perm r;
  r.images_.resize(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i)
    r.images_[i] = a(b.images_[i]);
  return r;
}

FiniteGroup::FiniteGroup(Table table, GroupOptions options)
  : table_(std::move(table))
{
  const int p = order();
  if (p == 0)
    throw InvalidArgument("group table is empty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != p)
      throw InvalidArgument("group table is not square");
    for (int v : row)
      if (v < 0 || v >= p)
        throw InvalidArgument("group table entry out of range");
  }
  for (int i = 0; i < p; ++i) {
    if (mul(0, i) != i || mul(i, 0) != i)
      throw InvalidArgument("element 0 is not the identity (index " + std::to_string(i) + ")");
  }
  // Latin square: every row and column a permutation.
  for (int i = 0; i < p; ++i) {
    std::vector<char> row_seen(static_cast<std::size_t>(p), 0), col_seen(static_cast<std::size_t>(p), 0);
    for (int j = 0; j < p; ++j) {
      auto r = static_cast<std::size_t>(mul(i, j));
      auto c = static_cast<std::size_t>(mul(j, i));
      if (row_seen[r] || col_seen[c])
        throw InvalidArgument("cancellation fails in row/column " + std::to_string(i));
      row_seen[r] = col_seen[c] = 1;
    }
  }
  if (p > options.associativity_bound) {
    if (!options.allow_unchecked)
      throw TooLarge("group order above associativity-check bound", p, options.associativity_bound);
  } else {
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        const int ab = mul(a, b);
        for (int c = 0; c < p; ++c)
          if (mul(ab, c) != mul(a, mul(b, c)))
            throw InvalidArgument("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + ")");
      }
  }
  inverse_.resize(static_cast<std::size_t>(p));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      if (mul(a, b) == 0)
        inverse_[static_cast<std::size_t>(a)] = b;
}

bool FiniteGroup::is_abelian() const
{
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

FiniteGroup cyclic_group(int n)
{
  if (n < 1)
    throw InvalidArgument("cyclic group order must be positive");
  FiniteGroup::Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
  // (x, y) has index x * |b| + y, so (0, 0) stays first.
  const int pa = a.order(), pb = b.order(), p = pa * pb;
  FiniteGroup::Table t(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(p)));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
        a.mul(i / pb, j / pb) * pb + b.mul(i % pb, j % pb);
  GroupOptions opts;
  opts.allow_unchecked = true;
  return FiniteGroup(std::move(t), opts);
}

FiniteGroup group_from_permutations(const std::vector<Perm>& generators)
{
  if (generators.empty())
    throw InvalidArgument("no generators");
  const int n = generators.front().degree();
  std::set<Perm> elements{Perm::identity(n)};
  std::vector<Perm> frontier{Perm::identity(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& s : generators) {
        Perm y = x * s;
        if (elements.insert(y).second)
          next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  std::vector<Perm> list(elements.begin(), elements.end());
  std::map<Perm, int> index;
  for (std::size_t k = 0; k < list.size(); ++k)
    index.emplace(list[k], static_cast<int>(k));
  const auto p = list.size();
  FiniteGroup::Table t(p, std::vector<int>(p));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      t[i][j] = index.at(list[i] * list[j]);
  GroupOptions opts;
  opts.allow_unchecked = true;
  return FiniteGroup(std::move(t), opts);
}

FiniteGroup symmetric_group(int n)
{
  if (n < 1)
    throw InvalidArgument("symmetric group degree must be positive");
  if (n == 1)
    return cyclic_group(1);
  std::vector<int> swap(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i)
    cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  return group_from_permutations({Perm(swap), Perm(cycle)});
}

FiniteGroup dihedral_group(int n)
{
  if (n < 1)
    throw InvalidArgument("dihedral group parameter must be positive");
  if (n == 1)
    return cyclic_group(2);
  if (n == 2)
    return direct_product(cyclic_group(2), cyclic_group(2));
  std::vector<int> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n;
    refl[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  return group_from_permutations({Perm(rot), Perm(refl)});
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g)
{
  const int p = g.order();
  std::vector<char> assigned(static_cast<std::size_t>(p), 0);
  std::vector<ConjugacyClass> classes;
  for (int x = 0; x < p; ++x) {
    if (assigned[static_cast<std::size_t>(x)])
      continue;
    std::set<int> members;
    for (int h = 0; h < p; ++h)
      members.insert(g.mul(g.mul(h, x), g.inv(h)));
    for (int m : members)
      assigned[static_cast<std::size_t>(m)] = 1;
    classes.push_back({x, std::vector<int>(members.begin(), members.end())});
  }
  return classes;
}

std::vector<int> centralizer(const FiniteGroup& g, int x)
{
  if (x < 0 || x >= g.order())
    throw InvalidArgument("element index out of range: " + std::to_string(x));
  std::vector<int> out;
  for (int h = 0; h < g.order(); ++h)
    if (g.mul(h, x) == g.mul(x, h))
      out.push_back(h);
  return out;
}

PermHom::PermHom(int degree, std::vector<Perm> images)
  : degree_(degree), images_(std::move(images))
{
  if (degree_ < 0)
    throw InvalidArgument("negative permutation degree");
  for (const auto& p : images_)
    if (p.degree() != degree_)
      throw InvalidArgument("permutation of degree " + std::to_string(p.degree()) + " in a hom into S_" +
                            std::to_string(degree_));
}

PermHom PermHom::trivial(const FiniteGroup& domain, int degree)
{
  return PermHom(degree, std::vector<Perm>(static_cast<std::size_t>(domain.order()), Perm::identity(degree)));
}

std::optional<std::pair<int, int>> homomorphism_violation(const FiniteGroup& g, const PermHom& h)
{
  if (h.domain_order() != g.order())
    throw InvalidArgument("homomorphism has " + std::to_string(h.domain_order()) + " images for a group of order " +
                          std::to_string(g.order()));
  if (!h(0).is_identity())
    return std::pair{0, 0};
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (h(g.mul(a, b)) != h(a) * h(b))
        return std::pair{a, b};
  return std::nullopt;
}

PermHom cayley_embedding(const FiniteGroup& g)
{
  const int p = g.order();
  std::vector<Perm> images;
  images.reserve(static_cast<std::size_t>(p));
  for (int x = 0; x < p; ++x) {
    std::vector<int> im(static_cast<std::size_t>(p));
    const int xinv = g.inv(x);
    for (int i = 0; i < p; ++i)
      im[static_cast<std::size_t>(i)] = g.mul(i, xinv);
    images.emplace_back(std::move(im));
  }
  return PermHom(p, std::move(images));
}

bool GroupHom::is_homomorphism(const FiniteGroup& domain, const FiniteGroup& codomain) const
{
  if (static_cast<int>(images.size()) != domain.order())
    return false;
  for (int v : images)
    if (v < 0 || v >= codomain.order())
      return false;
  for (int a = 0; a < domain.order(); ++a)
    for (int b = 0; b < domain.order(); ++b)
      if (images[static_cast<std::size_t>(domain.mul(a, b))] !=
          codomain.mul(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

GSet::GSet(const FiniteGroup& group, std::vector<Perm> act)
  : size_(act.empty() ? 0 : act.front().degree()), act_(std::move(act))
{
  if (static_cast<int>(act_.size()) != group.order())
    throw InvalidArgument("G-set needs one permutation per group element");
  for (const auto& p : act_)
    if (p.degree() != size_)
      throw InvalidArgument("G-set permutations of unequal degree");
  if (!act_[0].is_identity())
    throw InvalidArgument("identity does not act trivially");
  for (int a = 0; a < group.order(); ++a)
    for (int b = 0; b < group.order(); ++b)
      if (act_[static_cast<std::size_t>(group.mul(a, b))] !=
          act_[static_cast<std::size_t>(b)] * act_[static_cast<std::size_t>(a)])
        throw InvalidArgument("right action law fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

std::vector<Orbit> orbits(const GSet& x)
{
  std::vector<char> seen(static_cast<std::size_t>(x.size()), 0);
  std::vector<Orbit> out;
  for (int pt = 0; pt < x.size(); ++pt) {
    if (seen[static_cast<std::size_t>(pt)])
      continue;
    Orbit o;
    o.representative = pt;
    std::set<int> pts;
    for (int g = 0; g < x.group_order(); ++g) {
      const int y = x.apply(pt, g);
      pts.insert(y);
      if (y == pt)
        o.stabilizer.push_back(g);
    }
    for (int y : pts)
      seen[static_cast<std::size_t>(y)] = 1;
    o.points.assign(pts.begin(), pts.end());
    out.push_back(std::move(o));
  }
  return out;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements)
{
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0)
    throw InvalidArgument("subgroup must contain the identity");
  std::map<int, int> local;
  for (std::size_t k = 0; k < elements.size(); ++k)
    local.emplace(elements[k], static_cast<int>(k));
  const auto m = elements.size();
  FiniteGroup::Table t(m, std::vector<int>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto it = local.find(g.mul(elements[i], elements[j]));
      if (it == local.end())
        throw InvalidArgument("element set is not closed under multiplication");
      t[i][j] = it->second;
    }
  GroupOptions opts;
  opts.allow_unchecked = true;
  return Subgroup{std::make_shared<const FiniteGroup>(std::move(t), opts), std::move(elements)};
}

std::vector<int> generating_set(const FiniteGroup& g)
{
  std::vector<int> gens;
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  in[0] = 1;
  std::vector<int> members{0};
  for (int x = 1; x < g.order(); ++x) {
    if (in[static_cast<std::size_t>(x)])
      continue;
    gens.push_back(x);
    // Right-multiplication closure of every current member.
    std::vector<int> frontier = members;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int y : frontier)
        for (int s : gens) {
          const int z = g.mul(y, s);
          if (!in[static_cast<std::size_t>(z)]) {
            in[static_cast<std::size_t>(z)] = 1;
            members.push_back(z);
            next.push_back(z);
          }
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

} // namespace kvrep
