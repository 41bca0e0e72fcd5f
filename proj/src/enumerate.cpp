#include "kvrep/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kvrep/error.hpp"

namespace kvrep {

namespace {

void check_bounds(const FiniteGroup& g, int n, const EnumerationBounds& bounds)
{
  if (n < 0)
    throw InvalidArgument("negative dimension");
  if (n > bounds.max_n)
    throw TooLarge("dimension n", n, bounds.max_n);
  if (g.order() > bounds.max_order)
    throw TooLarge("pi0 order", g.order(), bounds.max_order);
}

int element_order(const FiniteGroup& g, int x)
{
  int k = 1;
  for (int y = x; y != 0; y = g.mul(y, x))
    ++k;
  return k;
}

int perm_order(const Perm& p)
{
  int k = 1;
  for (Perm q = p; !q.is_identity(); q = q * p)
    ++k;
  return k;
}

std::vector<Perm> all_perms(int n)
{
  std::vector<Perm> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  do
    out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Closes the partial map from the identity along right multiplication by
// the first `k` generators; false on a conflict.
bool close(const FiniteGroup& g, const std::vector<int>& gens, const std::vector<Perm>& gen_images, std::size_t k,
           std::vector<std::optional<Perm>>& img)
{
  std::fill(img.begin(), img.end(), std::nullopt);
  img[0] = Perm::identity(gen_images.front().degree());
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    const int x = frontier.back();
    frontier.pop_back();
    for (std::size_t s = 0; s < k; ++s) {
      const int y = g.mul(x, gens[s]);
      Perm cand = *img[static_cast<std::size_t>(x)] * gen_images[s];
      auto& slot = img[static_cast<std::size_t>(y)];
      if (!slot) {
        slot = std::move(cand);
        frontier.push_back(y);
      } else if (*slot != cand) {
        return false;
      }
    }
  }
  return true;
}

} // namespace

std::vector<PermHom> permutation_homs(const FiniteGroup& g, int n, EnumerationBounds bounds)
{
  check_bounds(g, n, bounds);
  const int p = g.order();
  const auto gens = generating_set(g);
  if (gens.empty())
    return {PermHom::trivial(g, n)};

  const auto perms = all_perms(n);
  std::vector<int> perm_ord;
  for (const auto& s : perms)
    perm_ord.push_back(perm_order(s));

  std::vector<PermHom> out;
  std::vector<Perm> gen_images(gens.size());
  std::vector<std::optional<Perm>> img(static_cast<std::size_t>(p));

  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      std::vector<Perm> images;
      for (auto& x : img)
        images.push_back(*x);
      PermHom h(n, std::move(images));
      if (!homomorphism_violation(g, h))
        out.push_back(std::move(h));
      return;
    }
    const int ord = element_order(g, gens[k]);
    for (std::size_t c = 0; c < perms.size(); ++c) {
      if (ord % perm_ord[c] != 0)
        continue;
      gen_images[k] = perms[c];
      if (close(g, gens, gen_images, k + 1, img))
        self(self, k + 1);
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end(), [](const PermHom& a, const PermHom& b) { return a.images() < b.images(); });
  return out;
}

std::vector<PermHom> permutation_homs_up_to_conjugacy(const FiniteGroup& g, int n, EnumerationBounds bounds)
{
  const auto all = permutation_homs(g, n, bounds);
  const auto perms = all_perms(n);
  std::vector<PermHom> out;
  for (const auto& h : all) {
    std::vector<Perm> best = h.images();
    for (const auto& s : perms) {
      const Perm si = s.inverse();
      std::vector<Perm> conj;
      for (const auto& x : h.images())
        conj.push_back(s * x * si);
      if (conj < best)
        best = std::move(conj);
    }
    if (best == h.images())
      out.push_back(h);
  }
  return out;
}

std::vector<std::vector<Character>> equivariant_betas(const TwoGroupData& t, const PermHom& rho)
{
  const auto& g = t.pi0();
  const int n = rho.degree();
  if (rho.domain_order() != g.order())
    throw InvalidArgument("rho is not indexed by pi0");
  const auto chars = dual_group(t.pi1());

  // Orbits under i -> rho(g)(i); same partition as the right action.
  std::vector<int> orbit_of(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    if (orbit_of[static_cast<std::size_t>(i)] >= 0)
      continue;
    for (int x = 0; x < g.order(); ++x)
      orbit_of[static_cast<std::size_t>(rho(x)(i))] = static_cast<int>(reps.size());
    reps.push_back(i);
  }

  // Admissible characters per orbit: fixed by the stabilizer of the minimum.
  std::vector<std::vector<Character>> choices;
  for (int r : reps) {
    std::vector<Character> ok;
    for (const auto& chi : chars) {
      bool fixed = true;
      for (int x = 0; x < g.order() && fixed; ++x)
        if (rho(x)(r) == r)
          fixed = act_on_character(g, t.pi1(), t.action(), x, chi) == chi;
      if (fixed)
        ok.push_back(chi);
    }
    choices.push_back(std::move(ok));
  }

  std::vector<std::vector<Character>> out;
  std::vector<std::size_t> pick(reps.size(), 0);
  for (;;) {
    std::vector<Character> beta(static_cast<std::size_t>(n));
    for (std::size_t o = 0; o < reps.size(); ++o)
      for (int x = 0; x < g.order(); ++x)
        beta[static_cast<std::size_t>(rho(x)(reps[o]))] =
          act_on_character(g, t.pi1(), t.action(), x, choices[o][pick[o]]);
    out.push_back(std::move(beta));
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size())
      pick[k++] = 0;
    if (k == pick.size())
      break;
  }
  return out;
}

std::vector<RepQuadruple> enumerate_reps(const TwoGroupPtr& t, int n, EnumerationBounds bounds)
{
  check_bounds(t->pi0(), n, bounds);
  std::vector<RepQuadruple> out;
  int examined = 0;
  for (const auto& rho : permutation_homs_up_to_conjugacy(t->pi0(), n, bounds)) {
    const auto mod = coefficient_module(*t, rho);
    std::optional<std::vector<QZCochain>> classes;
    for (const auto& beta : equivariant_betas(*t, rho)) {
      const auto c0 = solve_coboundary(obstruction(*t, rho, beta));
      if (!c0)
        continue;
      if (!classes)
        classes = h2_representatives(*mod, {bounds.max_order, std::max(bounds.max_n, 1)});
      for (const auto& z : *classes) {
        if (++examined > bounds.max_candidates)
          throw TooLarge("enumeration candidates", examined, bounds.max_candidates);
        auto q = make_quadruple(t, rho, beta, QZCochain(mod, 2, (*c0 + z).values()));
        bool seen = false;
        for (const auto& r : out)
          if (r.rho == q.rho && equivalent(r, q)) {
            seen = true;
            break;
          }
        if (!seen)
          out.push_back(std::move(q));
      }
    }
  }
  return out;
}

} // namespace kvrep
