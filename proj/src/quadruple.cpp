#include "kvrep/quadruple.hpp"

#include <string>

#include "kvrep/error.hpp"

namespace kvrep {

std::shared_ptr<const QZModule> coefficient_module(const TwoGroupData& t, const PermHom& rho)
{
  return std::make_shared<const QZModule>(t.pi0_ptr(), rho);
}

RepQuadruple make_quadruple(TwoGroupPtr t, PermHom rho, std::vector<Character> beta, std::optional<QZCochain> c)
{
  if (!t)
    throw InvalidArgument("quadruple without a 2-group");
  if (rho.domain_order() != t->p())
    throw InvalidArgument("rho has " + std::to_string(rho.domain_order()) + " images, pi0 has order " +
                          std::to_string(t->p()));
  const int n = rho.degree();
  if (static_cast<int>(beta.size()) != n)
    throw InvalidArgument("beta has " + std::to_string(beta.size()) + " characters for n = " + std::to_string(n));
  for (const auto& chi : beta)
    character_index(t->pi1(), chi); // range check
  auto mod = coefficient_module(*t, rho);
  QZCochain cc = c ? *c : QZCochain(mod, 2);
  if (cc.degree() != 2 || !(cc.module() == *mod))
    throw InvalidArgument("c is not a 2-cochain with coefficients twisted by rho");
  return RepQuadruple{std::move(t), n, std::move(rho), std::move(beta), std::move(cc)};
}

QZCochain obstruction(const TwoGroupData& t, const PermHom& rho, const std::vector<Character>& beta)
{
  return push_forward(t.alpha(), beta, rho);
}

bool ValidationReport::ok() const
{
  for (const auto& c : checks)
    if (c.status != CheckStatus::passed)
      return false;
  return true;
}

const Check* ValidationReport::find(const std::string& name) const
{
  for (const auto& c : checks)
    if (c.name == name)
      return &c;
  return nullptr;
}

namespace {

std::string shape_problem(const RepQuadruple& q)
{
  if (!q.two_group)
    return "missing 2-group";
  const auto& t = *q.two_group;
  if (q.n < 0)
    return "negative dimension";
  if (q.rho.domain_order() != t.p())
    return "rho is not indexed by pi0";
  if (q.rho.degree() != q.n)
    return "rho does not act on n points";
  for (const auto& img : q.rho.images())
    if (img.degree() != q.n)
      return "rho image of wrong degree";
  if (static_cast<int>(q.beta.size()) != q.n)
    return "beta does not have n entries";
  for (const auto& chi : q.beta) {
    if (chi.exps.size() != t.pi1().cyclic_orders().size())
      return "beta character of wrong length";
    for (std::size_t j = 0; j < chi.exps.size(); ++j)
      if (chi.exps[j] < 0 || chi.exps[j] >= t.pi1().cyclic_orders()[j])
        return "beta exponent out of range";
  }
  if (q.c.degree() != 2)
    return "c is not a 2-cochain";
  if (!(q.c.module().group() == t.pi0()) || !(q.c.module().twist() == q.rho))
    return "c is not twisted by rho";
  return {};
}

} // namespace

ValidationReport validate(const RepQuadruple& q)
{
  ValidationReport report;
  auto& checks = report.checks;
  for (const char* name : {"shape", "rho_homomorphism", "beta_equivariant", "c_normalized", "obstruction"})
    checks.push_back(Check{name, CheckStatus::skipped, {}, {}});

  if (auto problem = shape_problem(q); !problem.empty()) {
    checks[0].status = CheckStatus::failed;
    checks[0].detail = problem;
    return report;
  }
  checks[0].status = CheckStatus::passed;

  const auto& t = *q.two_group;
  const auto& g = t.pi0();
  if (auto v = homomorphism_violation(g, q.rho)) {
    checks[1].status = CheckStatus::failed;
    checks[1].witness = {v->first, v->second};
    return report;
  }
  checks[1].status = CheckStatus::passed;

  checks[2].status = CheckStatus::passed;
  for (int x = 0; x < g.order() && checks[2].status == CheckStatus::passed; ++x)
    for (int i = 0; i < q.n; ++i)
      if (q.beta[static_cast<std::size_t>(q.rho(x)(i))] !=
          act_on_character(g, t.pi1(), t.action(), x, q.beta[static_cast<std::size_t>(i)])) {
        checks[2].status = CheckStatus::failed;
        checks[2].witness = {x, i};
        break;
      }

  if (auto pos = q.c.normalization_violation()) {
    checks[3].status = CheckStatus::failed;
    checks[3].witness = *pos;
  } else {
    checks[3].status = CheckStatus::passed;
  }

  const auto dc = coboundary(q.c);
  const auto target = obstruction(t, q.rho, q.beta);
  checks[4].status = CheckStatus::passed;
  for (std::size_t idx = 0; idx < dc.tuple_count() && checks[4].status == CheckStatus::passed; ++idx)
    for (int i = 0; i < q.n; ++i)
      if (dc[idx][static_cast<std::size_t>(i)] != target[idx][static_cast<std::size_t>(i)]) {
        checks[4].status = CheckStatus::failed;
        checks[4].witness = dc.args_of(idx);
        checks[4].witness.push_back(i);
        break;
      }
  return report;
}

RepQuadruple regular_rep(const TwoGroupPtr& t)
{
  const auto& g = t->pi0();
  const auto& a = t->pi1();
  const int p = t->p(), q = t->q(), n = p * q;
  const auto kappa = cayley_embedding(g);
  const auto chars = dual_group(a);

  std::vector<Perm> images;
  for (int x = 0; x < p; ++x) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int k = 0; k < q; ++k)
      for (int l = 0; l < p; ++l)
        img[static_cast<std::size_t>(k * p + l)] = k * p + kappa(x)(l);
    images.emplace_back(std::move(img));
  }
  PermHom rho(n, std::move(images));

  // Component (k, l) is u -> chi_k(g_l u), that is g_l^-1 chi_k.
  std::vector<Character> beta;
  for (int k = 0; k < q; ++k)
    for (int l = 0; l < p; ++l)
      beta.push_back(act_on_character(g, a, t->action(), g.inv(l), chars[static_cast<std::size_t>(k)]));

  auto mod = coefficient_module(*t, rho);
  QZCochain c(mod, 2);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      auto& v = c.at({i, j});
      for (int k = 0; k < q; ++k)
        for (int l = 0; l < p; ++l)
          v[static_cast<std::size_t>(k * p + l)] = evaluate(a, chars[static_cast<std::size_t>(k)], t->alpha().at({l, i, j}));
    }
  return RepQuadruple{t, n, std::move(rho), std::move(beta), std::move(c)};
}

RepQuadruple trivial_rep(const TwoGroupPtr& t)
{
  return make_quadruple(t, PermHom::trivial(t->pi0(), 1), {trivial_character(t->pi1())});
}

RepQuadruple cocyclic_rep(const TwoGroupPtr& t, const QZCochain& z)
{
  if (z.degree() != 2 || !(z.module().group() == t->pi0()) ||
      !(z.module().twist() == PermHom::trivial(t->pi0(), z.module().rank())))
    throw InvalidArgument("cocyclic_rep: z must be a 2-cochain on pi0 with trivial coefficients");
  if (auto pos = z.normalization_violation())
    throw NotNormalized(*pos);
  if (auto w = cocycle_violation(z))
    throw NotACocycle(*w);
  const int n = z.module().rank();
  std::vector<Character> beta(static_cast<std::size_t>(n), trivial_character(t->pi1()));
  auto rho = PermHom::trivial(t->pi0(), n);
  QZCochain c(coefficient_module(*t, rho), 2, z.values());
  return make_quadruple(t, std::move(rho), std::move(beta), std::move(c));
}

RepQuadruple permutation_rep(const TwoGroupPtr& t, const PermHom& rho)
{
  if (rho.domain_order() != t->p())
    throw InvalidArgument("permutation_rep: rho is not indexed by pi0");
  if (auto v = homomorphism_violation(t->pi0(), rho))
    throw InvalidArgument("permutation_rep: rho is not a homomorphism at (" + std::to_string(v->first) + "," +
                          std::to_string(v->second) + ")");
  std::vector<Character> beta(static_cast<std::size_t>(rho.degree()), trivial_character(t->pi1()));
  return make_quadruple(t, rho, std::move(beta));
}

RepQuadruple apply_sigma(const RepQuadruple& q, const Perm& sigma)
{
  if (sigma.degree() != q.n)
    throw InvalidArgument("apply_sigma: sigma has the wrong degree");
  const Perm back = sigma.inverse();
  std::vector<Perm> images;
  for (const auto& r : q.rho.images())
    images.push_back(sigma * r * back);
  PermHom rho(q.n, std::move(images));

  std::vector<Character> beta(static_cast<std::size_t>(q.n));
  for (int i = 0; i < q.n; ++i)
    beta[static_cast<std::size_t>(i)] = q.beta[static_cast<std::size_t>(back(i))];

  QZCochain c(coefficient_module(*q.two_group, rho), 2);
  for (std::size_t idx = 0; idx < c.tuple_count(); ++idx)
    for (int i = 0; i < q.n; ++i)
      c[idx][static_cast<std::size_t>(i)] = q.c[idx][static_cast<std::size_t>(back(i))];
  return RepQuadruple{q.two_group, q.n, std::move(rho), std::move(beta), std::move(c)};
}

RepQuadruple shift_by_coboundary(const RepQuadruple& q, const QZCochain& b)
{
  if (b.degree() != 1 || !(b.module() == q.c.module()))
    throw InvalidArgument("shift_by_coboundary: b must be a 1-cochain in the coefficient module of q");
  RepQuadruple out = q;
  out.c = QZCochain(q.c.module_ptr(), 2, (q.c + coboundary(b)).values());
  return out;
}

std::optional<Perm> equivalent(const RepQuadruple& q1, const RepQuadruple& q2)
{
  if (!q1.two_group || !q2.two_group || !(*q1.two_group == *q2.two_group))
    throw InvalidArgument("equivalent: quadruples over different 2-groups");
  if (q1.n != q2.n)
    return std::nullopt;
  const int n = q1.n;
  const int p = q1.two_group->p();

  // Depth-first over sigma(0), sigma(1), ... in increasing order, which
  // visits complete permutations in lexicographic order.
  std::vector<int> sigma(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  auto consistent = [&](int i) {
    const int si = sigma[static_cast<std::size_t>(i)];
    if (q2.beta[static_cast<std::size_t>(si)] != q1.beta[static_cast<std::size_t>(i)])
      return false;
    // rho2(g)(sigma(j)) = sigma(rho1(g)(j)) for all assigned j involving i.
    for (int g = 0; g < p; ++g) {
      const int fwd = q1.rho(g)(i);
      const int sf = sigma[static_cast<std::size_t>(fwd)];
      if (sf >= 0 && q2.rho(g)(si) != sf)
        return false;
      for (int j = 0; j < i; ++j)
        if (q1.rho(g)(j) == i && q2.rho(g)(sigma[static_cast<std::size_t>(j)]) != si)
          return false;
    }
    return true;
  };

  std::optional<Perm> found;
  auto search = [&](auto&& self, int i) -> bool {
    if (i == n) {
      Perm s(sigma);
      const auto moved = apply_sigma(q1, s);
      if (moved.rho == q2.rho && moved.beta == q2.beta && cohomologous(q2.c, moved.c)) {
        found = s;
        return true;
      }
      return false;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)])
        continue;
      sigma[static_cast<std::size_t>(i)] = v;
      used[static_cast<std::size_t>(v)] = true;
      if (consistent(i) && self(self, i + 1))
        return true;
      used[static_cast<std::size_t>(v)] = false;
      sigma[static_cast<std::size_t>(i)] = -1;
    }
    return false;
  };
  search(search, 0);
  return found;
}

bool is_invariant(const RanksMatrix& r, const RepQuadruple& source, const RepQuadruple& target)
{
  if (r.rows != target.n || r.cols != source.n)
    return false;
  for (int it = 0; it < target.n; ++it)
    for (int is = 0; is < source.n; ++is) {
      const int v = r.at(it, is);
      if (v < 0)
        return false;
      if (v != 0 && target.beta[static_cast<std::size_t>(it)] != source.beta[static_cast<std::size_t>(is)])
        return false;
      for (int g = 0; g < source.two_group->p(); ++g)
        if (r.at(target.rho(g)(it), source.rho(g)(is)) != v)
          return false;
    }
  return true;
}

} // namespace kvrep

namespace kvrep {

RepQuadruple direct_sum(const RepQuadruple& a, const RepQuadruple& b)
{
  if (!(*a.two_group == *b.two_group))
    throw InvalidArgument("direct_sum: quadruples over different 2-groups");
  const int n = a.n + b.n;
  std::vector<Perm> images;
  for (int g = 0; g < a.two_group->p(); ++g) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < a.n; ++i)
      img[static_cast<std::size_t>(i)] = a.rho(g)(i);
    for (int i = 0; i < b.n; ++i)
      img[static_cast<std::size_t>(a.n + i)] = a.n + b.rho(g)(i);
    images.emplace_back(std::move(img));
  }
  PermHom rho(n, std::move(images));
  auto beta = a.beta;
  beta.insert(beta.end(), b.beta.begin(), b.beta.end());
  QZCochain c(coefficient_module(*a.two_group, rho), 2);
  for (std::size_t idx = 0; idx < c.tuple_count(); ++idx) {
    auto& v = c[idx];
    std::copy(a.c[idx].begin(), a.c[idx].end(), v.begin());
    std::copy(b.c[idx].begin(), b.c[idx].end(), v.begin() + a.n);
  }
  return RepQuadruple{a.two_group, n, std::move(rho), std::move(beta), std::move(c)};
}

} // namespace kvrep
