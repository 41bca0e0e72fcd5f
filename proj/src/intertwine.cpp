#include "kvrep/intertwine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kvrep/error.hpp"

namespace kvrep {

namespace {

void require_same_two_group(const RepQuadruple& a, const RepQuadruple& b)
{
  if (!a.two_group || !b.two_group || !(*a.two_group == *b.two_group))
    throw InvalidArgument("quadruples over different 2-groups");
}

int point_of(const HomReport& r, int it, int is)
{
  return it * r.source_n + is;
}

bool is_regular_source(const RepQuadruple& source)
{
  const auto& t = source.two_group;
  if (source.n != t->p() * t->q())
    return false;
  const auto r = regular_rep(t);
  return source.rho == r.rho && source.beta == r.beta && source.c.values() == r.c.values();
}

} // namespace

GSet intertwining_set(const RepQuadruple& source, const RepQuadruple& target)
{
  require_same_two_group(source, target);
  const auto& g = source.two_group->pi0();
  const int n = source.n, n2 = target.n;
  std::vector<Perm> act;
  for (int x = 0; x < g.order(); ++x) {
    const Perm& s = source.rho(g.inv(x));
    const Perm& t = target.rho(g.inv(x));
    std::vector<int> img(static_cast<std::size_t>(n) * n2);
    for (int it = 0; it < n2; ++it)
      for (int is = 0; is < n; ++is)
        img[static_cast<std::size_t>(it * n + is)] = t(it) * n + s(is);
    act.emplace_back(std::move(img));
  }
  return GSet(g, std::move(act));
}

std::vector<OrbitRecord> intertwining_orbits(const RepQuadruple& source, const RepQuadruple& target)
{
  const auto x = intertwining_set(source, target);
  const int n = source.n;
  const int p = source.two_group->p();
  std::vector<OrbitRecord> out;
  for (auto& o : orbits(x)) {
    const int it = o.representative / n, is = o.representative % n;
    const bool match = target.beta[static_cast<std::size_t>(it)] == source.beta[static_cast<std::size_t>(is)];
    for (int pt : o.points)
      if ((target.beta[static_cast<std::size_t>(pt / n)] == source.beta[static_cast<std::size_t>(pt % n)]) != match)
        throw std::logic_error("intertwining condition differs within an orbit");
    if (!match)
      continue;
    OrbitRecord rec;
    rec.representative = {it, is};
    rec.is_torsor = o.stabilizer.size() == 1;
    if (rec.is_torsor != (static_cast<int>(o.points.size()) == p))
      throw std::logic_error("orbit-stabilizer mismatch");
    rec.points = std::move(o.points);
    rec.stabilizer = std::move(o.stabilizer);
    out.push_back(std::move(rec));
  }
  return out;
}

QZCochain zhat_cocycle(const OrbitRecord& orbit, const RepQuadruple& source, const RepQuadruple& target)
{
  require_same_two_group(source, target);
  const auto& g = source.two_group->pi0();
  const auto [it, is] = orbit.representative;
  if (it < 0 || it >= target.n || is < 0 || is >= source.n)
    throw InvalidArgument("stale orbit record: representative out of range");
  std::vector<int> stab;
  for (int x = 0; x < g.order(); ++x)
    if (target.rho(x)(it) == it && source.rho(x)(is) == is)
      stab.push_back(x);
  if (stab != orbit.stabilizer)
    throw InvalidArgument("stale orbit record: stabilizer does not match the quadruples");
  if (target.beta[static_cast<std::size_t>(it)] != source.beta[static_cast<std::size_t>(is)])
    throw InvalidArgument("stale orbit record: representative is not intertwining");

  const auto sub = make_subgroup(g, stab);
  QZCochain z(QZModule::trivial(sub.group, 1), 2);
  const int h = sub.group->order();
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b) {
      const int g1 = sub.elements[static_cast<std::size_t>(a)];
      const int g2 = sub.elements[static_cast<std::size_t>(b)];
      const int u = g.inv(g2), v = g.inv(g1);
      z.at({a, b})[0] = target.c.at({u, v})[static_cast<std::size_t>(it)] - source.c.at({u, v})[static_cast<std::size_t>(is)];
    }
  if (!z.is_normalized() || !is_cocycle(z))
    throw std::logic_error("zhat is not a normalized 2-cocycle");
  return z;
}

bool is_zregular(const FiniteGroup& h, const QZCochain& z, int g)
{
  for (int x : centralizer(h, g))
    if (z.at({g, x})[0] != z.at({x, g})[0])
      return false;
  return true;
}

int zregular_count(const FiniteGroup& h, const QZCochain& z)
{
  if (z.degree() != 2 || z.module().rank() != 1 || !(z.module().group() == h))
    throw InvalidArgument("zregular_count: z must be a rank-one 2-cochain on the given group");
  if (auto w = cocycle_violation(z))
    throw NotACocycle(*w);
  int count = 0;
  for (const auto& cls : conjugacy_classes(h))
    if (is_zregular(h, z, cls.representative))
      ++count;
  return count;
}

HomReport hom_rank(const RepQuadruple& source, const RepQuadruple& target)
{
  HomReport r;
  r.source_n = source.n;
  r.target_n = target.n;
  r.orbits = intertwining_orbits(source, target);
  for (auto& o : r.orbits) {
    o.zhat = zhat_cocycle(o, source, target);
    o.zregular_count = zregular_count(o.zhat->module().group(), *o.zhat);
    r.total_rank += o.zregular_count;
  }
  // Out of the regular representation every orbit is a torsor; report it
  // at its point (i, index(beta_i) p) and list orbits by i.
  if (is_regular_source(source)) {
    const auto idx = regular_orbit_index(r, target);
    std::vector<OrbitRecord> rebased;
    const int p = source.two_group->p();
    for (int i = 0; i < target.n; ++i) {
      const int o = idx[static_cast<std::size_t>(i)];
      if (o < 0 || !r.orbits[static_cast<std::size_t>(o)].is_torsor)
        throw std::logic_error("hom_rank: regular source with a non-torsor orbit");
      auto rec = r.orbits[static_cast<std::size_t>(o)];
      rec.representative = {i, character_index(target.two_group->pi1(), target.beta[static_cast<std::size_t>(i)]) * p};
      rebased.push_back(std::move(rec));
    }
    if (rebased.size() != r.orbits.size())
      throw std::logic_error("hom_rank: regular source with extra orbits");
    r.orbits = std::move(rebased);
  }
  return r;
}

bool symmetry_check(const RepQuadruple& q, const RepQuadruple& q2)
{
  return hom_rank(q, q2).total_rank == hom_rank(q2, q).total_rank;
}

PermHom point_twist(const GSet& x)
{
  std::vector<Perm> images;
  const auto& act = x.action();
  // The inverse of g acts as the inverse permutation of g.
  for (const auto& a : act)
    images.push_back(a.inverse());
  return PermHom(x.size(), std::move(images));
}

QZCochain orbit_cocycle(const OrbitRecord& orbit, const RepQuadruple& source, const RepQuadruple& target)
{
  const auto x = intertwining_set(source, target);
  const int n = source.n;
  for (int pt : orbit.points)
    if (pt < 0 || pt >= x.size() ||
        target.beta[static_cast<std::size_t>(pt / n)] != source.beta[static_cast<std::size_t>(pt % n)])
      throw InvalidArgument("orbit_cocycle: orbit is not an intertwining orbit of this pair");
  QZCochain z(QZModule(source.two_group->pi0_ptr(), point_twist(x)), 2);
  for (std::size_t idx = 0; idx < z.tuple_count(); ++idx)
    for (int pt : orbit.points)
      z[idx][static_cast<std::size_t>(pt)] =
        target.c[idx][static_cast<std::size_t>(pt / n)] - source.c[idx][static_cast<std::size_t>(pt % n)];
  return z;
}

QZ torsor_transport(const OrbitRecord& orbit, const QZCochain& z, int x, int g)
{
  if (!orbit.is_torsor)
    throw InvalidArgument("torsor_transport: orbit is not a torsor");
  if (!std::binary_search(orbit.points.begin(), orbit.points.end(), x))
    throw InvalidArgument("torsor_transport: point not in orbit");
  const auto& mod = z.module();
  const auto& grp = mod.group();
  if (g < 0 || g >= grp.order())
    throw InvalidArgument("torsor_transport: group element out of range");
  const int x0 = orbit.points.front();
  // x0.h = tau(h^-1)(x0).
  for (int h = 0; h < grp.order(); ++h)
    if (mod.twist()(grp.inv(h))(x0) == x)
      return -z.at({h, g})[static_cast<std::size_t>(x0)];
  throw InvalidArgument("torsor_transport: point not reached from the representative");
}

std::vector<int> regular_orbit_index(const HomReport& report, const RepQuadruple& target)
{
  const int p = target.two_group->p();
  if (report.source_n != p * target.two_group->q() || report.target_n != target.n)
    throw InvalidArgument("regular_orbit_index: report is not of the form Hom(R, q')");
  std::vector<int> out;
  for (int i = 0; i < target.n; ++i) {
    const int k = character_index(target.two_group->pi1(), target.beta[static_cast<std::size_t>(i)]);
    const int pt = point_of(report, i, k * p);
    int found = -1;
    for (std::size_t o = 0; o < report.orbits.size() && found < 0; ++o)
      if (std::binary_search(report.orbits[o].points.begin(), report.orbits[o].points.end(), pt))
        found = static_cast<int>(o);
    out.push_back(found);
  }
  return out;
}

std::vector<int> universal_eval(const std::vector<int>& d, const RepQuadruple& target, const Character& chi, int g)
{
  if (static_cast<int>(d.size()) != target.n)
    throw InvalidArgument("universal_eval: d has " + std::to_string(d.size()) + " entries for n = " +
                          std::to_string(target.n));
  std::vector<int> out(d.size(), 0);
  for (int j = 0; j < target.n; ++j) {
    const int i = target.rho(g)(j);
    if (target.beta[static_cast<std::size_t>(i)] == chi)
      out[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<int> universal_roundtrip(const std::vector<int>& d, const RepQuadruple& target, const UniversalEval& eval)
{
  std::vector<int> sum(d.size(), 0);
  for (const auto& chi : dual_group(target.two_group->pi1())) {
    const auto part = eval(d, target, chi, 0);
    if (part.size() != sum.size())
      throw InvalidArgument("universal_roundtrip: evaluation changed the dimension");
    for (std::size_t j = 0; j < sum.size(); ++j)
      sum[j] += part[j];
  }
  return sum;
}

bool universal_check(const std::vector<int>& d, const RepQuadruple& target, const UniversalEval& eval)
{
  return universal_roundtrip(d, target, eval) == d;
}

std::optional<int> end_omega_basis_component(const Character& chi, int g, const RepQuadruple& target, int i)
{
  if (i < 0 || i >= target.n)
    throw InvalidArgument("end_omega_basis_component: index out of range");
  if (g < 0 || g >= target.two_group->p())
    throw InvalidArgument("end_omega_basis_component: group element out of range");
  if (target.beta[static_cast<std::size_t>(i)] != chi)
    return std::nullopt;
  return target.rho(target.two_group->pi0().inv(g))(i);
}

RanksMatrix ranks_matrix(const HomReport& report, const std::vector<int>& multiplicities)
{
  if (multiplicities.size() != report.orbits.size())
    throw InvalidArgument("ranks_matrix: one multiplicity per orbit");
  RanksMatrix r(report.target_n, report.source_n);
  for (std::size_t o = 0; o < report.orbits.size(); ++o)
    for (int pt : report.orbits[o].points)
      r.at(pt / report.source_n, pt % report.source_n) += multiplicities[o];
  return r;
}

} // namespace kvrep
