#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kvrep/error.hpp"
#include "kvrep/intertwine.hpp"
#include "support.hpp"

using namespace kvrep;

namespace {

TwoGroupPtr shared(TwoGroupData t)
{
  return std::make_shared<const TwoGroupData>(std::move(t));
}

TwoGroupPtr discrete(const FiniteGroup& g)
{
  return shared(make_split(g, AbelianGroup(), Pi1Action::trivial(g, AbelianGroup())));
}

RepQuadruple swap_rep(const TwoGroupPtr& t)
{
  return permutation_rep(t, PermHom(2, {Perm::identity(2), Perm({1, 0})}));
}

} // namespace

TEST_CASE("intertwining orbits")
{
  const auto t = discrete(cyclic_group(2));
  const auto i = trivial_rep(t);
  auto o = intertwining_orbits(i, i);
  REQUIRE(o.size() == 1);
  CHECK(o[0].points == std::vector<int>{0});
  CHECK(o[0].stabilizer == std::vector<int>{0, 1});
  CHECK_FALSE(o[0].is_torsor);

  o = intertwining_orbits(i, swap_rep(t));
  REQUIRE(o.size() == 1);
  CHECK(o[0].representative == std::pair{0, 0});
  CHECK(o[0].points == std::vector<int>{0, 1});
  CHECK(o[0].stabilizer == std::vector<int>{0});
  CHECK(o[0].is_torsor);

  CHECK_THROWS_AS(intertwining_orbits(i, trivial_rep(discrete(cyclic_group(3)))), InvalidArgument);
}

TEST_CASE("characters filter orbits")
{
  const auto one = cyclic_group(1);
  AbelianGroup a2({2});
  const auto t = shared(make_split(one, a2, Pi1Action::trivial(one, a2)));
  const auto r = regular_rep(t);
  const auto i = trivial_rep(t);
  const auto o = intertwining_orbits(r, i);
  REQUIRE(o.size() == 1);
  CHECK(o[0].representative == std::pair{0, 0});
  CHECK(hom_rank(r, i).total_rank == 1);
}

TEST_CASE("zhat cocycles")
{
  const auto v4 = kvtest::klein_four();
  const auto t = discrete(v4);
  const auto z = kvtest::klein_cocycle(t->pi0_ptr());
  const auto cz = cocyclic_rep(t, z);
  const auto i = trivial_rep(t);

  auto o = intertwining_orbits(i, i);
  CHECK(zhat_cocycle(o[0], i, i).is_zero());

  // Source cocyclic, target trivial: zhat(g1, g2) = -z(g2^-1, g1^-1).
  o = intertwining_orbits(cz, i);
  REQUIRE(o.size() == 1);
  const auto zh = zhat_cocycle(o[0], cz, i);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(zh.at({a, b})[0] == -z.at({v4.inv(b), v4.inv(a)})[0]);
  CHECK(zregular_count(zh.module().group(), zh) == 1);

  // Diagonal orbits of a quadruple with itself have zhat = 0.
  std::mt19937 rng(71);
  for (int trial = 0; trial < 5; ++trial) {
    const auto tt = shared(kvtest::random_two_group(rng, {trial % 2 == 0, true}));
    const auto q = kvtest::random_quadruple(tt, 2, rng);
    if (!q)
      continue;
    for (const auto& orb : intertwining_orbits(*q, *q))
      if (orb.representative.first == orb.representative.second)
        CHECK(zhat_cocycle(orb, *q, *q).is_zero());
  }

  auto stale = o[0];
  stale.stabilizer = {0};
  CHECK_THROWS_AS(zhat_cocycle(stale, cz, i), InvalidArgument);
}

TEST_CASE("z-regular counts")
{
  const auto v4 = kvtest::share(kvtest::klein_four());
  const auto z = kvtest::klein_cocycle(v4);
  CHECK(zregular_count(*v4, QZCochain(z.module_ptr(), 2)) == 4);
  CHECK(zregular_count(*v4, z) == 1);
  CHECK(zregular_count(*v4, -z) == 1);
  const auto one = kvtest::share(cyclic_group(1));
  CHECK(zregular_count(*one, QZCochain(QZModule::trivial(one, 1), 2)) == 1);

  auto bad = z;
  bad.at({1, 2})[0] = QZ(1, 3);
  CHECK_THROWS_AS(zregular_count(*v4, bad), NotACocycle);

  // Regularity is a class function; the zero cocycle counts classes; -z
  // gives the same count.
  std::mt19937 rng(73);
  for (const auto& g : {dihedral_group(4), symmetric_group(3), kvtest::klein_four()}) {
    const auto gp = kvtest::share(g);
    for (const auto& rep : h2_representatives(QZModule::trivial(gp, 1))) {
      const auto zz = rep + coboundary(kvtest::random_cochain(rep.module_ptr(), 1, true, rng));
      for (int x = 0; x < g.order(); ++x)
        for (int h = 0; h < g.order(); ++h)
          CHECK(is_zregular(g, zz, x) == is_zregular(g, zz, g.mul(g.mul(h, x), g.inv(h))));
      CHECK(zregular_count(g, zz) == zregular_count(g, -zz));
    }
    CHECK(zregular_count(g, QZCochain(QZModule::trivial(gp, 1), 2)) == static_cast<int>(conjugacy_classes(g).size()));
  }
  // D4 has a nontrivial class with two regular classes.
  const auto d4 = kvtest::share(dihedral_group(4));
  const auto reps = h2_representatives(QZModule::trivial(d4, 1));
  REQUIRE(reps.size() == 2);
  CHECK(zregular_count(*d4, reps[1]) == 2);
}

TEST_CASE("hom ranks")
{
  for (const auto& [g, classes] : std::vector<std::pair<FiniteGroup, int>>{
         {cyclic_group(2), 2}, {cyclic_group(4), 4}, {kvtest::klein_four(), 4}, {symmetric_group(3), 3}, {dihedral_group(4), 5}}) {
    const auto t = discrete(g);
    CHECK(hom_rank(trivial_rep(t), trivial_rep(t)).total_rank == classes);
  }
  const auto t = discrete(cyclic_group(2));
  const auto rep = hom_rank(trivial_rep(t), swap_rep(t));
  CHECK(rep.total_rank == 1);
  CHECK(rep.orbits.size() == 1);
  CHECK(symmetry_check(trivial_rep(t), trivial_rep(t)));
}

TEST_CASE("hom from the regular representation")
{
  std::mt19937 rng(79);
  int checked = 0;
  for (int trial = 0; trial < 16; ++trial) {
    const auto t = shared(kvtest::random_two_group(rng, {trial % 2 == 0, trial % 3 == 0}));
    if (t->p() * t->q() > 16)
      continue;
    const auto r = regular_rep(t);
    std::uniform_int_distribution<int> dim(1, 3);
    const auto q = kvtest::random_quadruple(t, dim(rng), rng);
    if (!q)
      continue;
    const auto rep = hom_rank(r, *q);
    CHECK(rep.total_rank == q->n);
    CHECK(rep.orbits.size() == static_cast<std::size_t>(q->n));
    for (const auto& o : rep.orbits)
      CHECK(o.is_torsor);
    const auto idx = regular_orbit_index(rep, *q);
    for (int i = 0; i < q->n; ++i) {
      CHECK(idx[static_cast<std::size_t>(i)] == i);
      const int k = character_index(t->pi1(), q->beta[static_cast<std::size_t>(i)]);
      CHECK(rep.orbits[static_cast<std::size_t>(i)].representative == std::pair<int, int>{i, k * t->p()});
    }
    CHECK(hom_rank(*q, r).total_rank == q->n);
    ++checked;
  }
  CHECK(checked >= 5);
}

TEST_CASE("symmetry on random pairs")
{
  std::mt19937 rng(83);
  for (int trial = 0; trial < 12; ++trial) {
    const auto t = shared(kvtest::random_two_group(rng, {trial % 2 == 0, trial % 3 == 0}));
    const auto a = kvtest::random_quadruple(t, 1 + trial % 3, rng);
    const auto b = kvtest::random_quadruple(t, 1 + (trial / 3) % 3, rng);
    if (a && b)
      CHECK(symmetry_check(*a, *b));
  }
  // Additivity in the target as a further sanity check.
  const auto t = discrete(symmetric_group(3));
  const auto i = trivial_rep(t);
  const auto perm = permutation_rep(t, cayley_embedding(t->pi0()));
  CHECK(hom_rank(i, direct_sum(i, perm)).total_rank == hom_rank(i, i).total_rank + hom_rank(i, perm).total_rank);
}

TEST_CASE("torsor transport")
{
  const auto t = discrete(cyclic_group(3));
  const auto i = trivial_rep(t);
  const auto perm = permutation_rep(t, cayley_embedding(t->pi0()));
  const auto orbits = intertwining_orbits(i, perm);
  REQUIRE(orbits.size() == 1);
  const auto& o = orbits[0];
  REQUIRE(o.is_torsor);

  const auto x = intertwining_set(i, perm);
  const auto zero = QZCochain(QZModule(t->pi0_ptr(), point_twist(x)), 2);
  for (int pt : o.points)
    for (int g = 0; g < 3; ++g)
      CHECK(torsor_transport(o, zero, pt, g).is_zero());

  std::mt19937 rng(89);
  const auto mod = zero.module_ptr();
  for (int trial = 0; trial < 5; ++trial) {
    const auto z = coboundary(kvtest::random_cochain(mod, 1, true, rng));
    CHECK(torsor_transport(o, z, o.points.front(), 0).is_zero());
    for (int pt : o.points)
      for (int g = 0; g < 3; ++g)
        for (int h = 0; h < 3; ++h) {
          const int pg = x.apply(pt, g);
          const QZ lhs = torsor_transport(o, z, pt, t->pi0().mul(g, h));
          const QZ rhs = z.at({g, h})[static_cast<std::size_t>(pt)] + torsor_transport(o, z, pg, h) + torsor_transport(o, z, pt, g);
          CHECK(lhs == rhs);
        }
  }

  // The cocycle of an actual pair.
  const auto s3 = discrete(symmetric_group(3));
  const auto ps = permutation_rep(s3, cayley_embedding(s3->pi0()));
  const auto cs = shift_by_coboundary(ps, kvtest::random_cochain(ps.c.module_ptr(), 1, true, rng));
  const auto is = trivial_rep(s3);
  const auto xs = intertwining_set(is, cs);
  for (const auto& orb : intertwining_orbits(is, cs)) {
    REQUIRE(orb.is_torsor);
    const auto z = orbit_cocycle(orb, is, cs);
    CHECK(is_cocycle(z));
    for (int pt : orb.points)
      for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h)
          CHECK(torsor_transport(orb, z, pt, s3->pi0().mul(g, h)) ==
                z.at({g, h})[static_cast<std::size_t>(pt)] + torsor_transport(orb, z, xs.apply(pt, g), h) +
                  torsor_transport(orb, z, pt, g));
  }

  const auto fixed = intertwining_orbits(i, i);
  CHECK_THROWS_AS(torsor_transport(fixed[0], zero, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(torsor_transport(o, zero, 99, 0), InvalidArgument);
}

TEST_CASE("universal functor")
{
  const auto t = discrete(cyclic_group(2));
  const auto sw = swap_rep(t);
  const Character triv{{}};
  CHECK(universal_eval({2, 3}, sw, triv, 1) == std::vector<int>{3, 2});
  CHECK(universal_eval({2, 3}, sw, triv, 0) == std::vector<int>{2, 3});
  CHECK(universal_roundtrip({2, 3}, sw) == std::vector<int>{2, 3});
  CHECK(universal_roundtrip({0, 0}, sw) == std::vector<int>{0, 0});
  CHECK_THROWS_AS(universal_eval({1}, sw, triv, 0), InvalidArgument);

  const auto one = cyclic_group(1);
  AbelianGroup a3({3});
  const auto t3 = shared(make_split(one, a3, Pi1Action::trivial(one, a3)));
  const auto r3 = regular_rep(t3);
  CHECK(universal_eval({4, 5, 6}, r3, Character{{1}}, 0) == std::vector<int>{0, 5, 0});
  const auto i3 = trivial_rep(t3);
  CHECK(universal_eval({7}, i3, Character{{2}}, 0) == std::vector<int>{0});
  CHECK(universal_check({7}, i3));

  std::mt19937 rng(97);
  for (int trial = 0; trial < 10; ++trial) {
    const auto tt = shared(kvtest::random_two_group(rng, {trial % 2 == 0, trial % 3 == 0}));
    const auto q = kvtest::random_quadruple(tt, 1 + trial % 4, rng);
    if (!q)
      continue;
    std::vector<int> d;
    std::uniform_int_distribution<int> val(0, 9);
    for (int k = 0; k < q->n; ++k)
      d.push_back(val(rng));
    CHECK(universal_check(d, *q));
  }

  // A corrupted evaluation that drops the character condition fails.
  const UniversalEval corrupted = [](const std::vector<int>& d, const RepQuadruple& q, const Character&, int g) {
    std::vector<int> out(d.size());
    for (int j = 0; j < q.n; ++j)
      out[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(q.rho(g)(j))];
    return out;
  };
  CHECK_FALSE(universal_check({4, 5, 6}, r3, corrupted));
}

TEST_CASE("End(omega) basis components")
{
  const auto t = discrete(cyclic_group(2));
  const auto sw = swap_rep(t);
  const Character triv{{}};
  CHECK(end_omega_basis_component(triv, 0, sw, 0) == 0);
  CHECK(end_omega_basis_component(triv, 1, sw, 0) == 1);
  CHECK_THROWS_AS(end_omega_basis_component(triv, 0, sw, 2), InvalidArgument);

  const auto one = cyclic_group(1);
  AbelianGroup a2({2});
  const auto r = regular_rep(shared(make_split(one, a2, Pi1Action::trivial(one, a2))));
  CHECK_FALSE(end_omega_basis_component(Character{{1}}, 0, r, 0).has_value());
  CHECK(end_omega_basis_component(Character{{1}}, 0, r, 1) == 1);

  // Over all pq basis elements, each V_i is hit by exactly p of them.
  const auto z2 = cyclic_group(2);
  const auto split = shared(make_split(z2, a2, Pi1Action::trivial(z2, a2)));
  const auto reg = regular_rep(split);
  for (int i = 0; i < reg.n; ++i) {
    int hits = 0;
    for (const auto& chi : dual_group(a2))
      for (int g = 0; g < 2; ++g)
        hits += end_omega_basis_component(chi, g, reg, i).has_value();
    CHECK(hits == 2);
  }
}

TEST_CASE("ranks matrices from reports")
{
  const auto t = discrete(symmetric_group(3));
  const auto i = trivial_rep(t);
  const auto perm = permutation_rep(t, cayley_embedding(t->pi0()));
  const auto rep = hom_rank(perm, perm);
  std::vector<int> mult(rep.orbits.size());
  for (std::size_t k = 0; k < mult.size(); ++k)
    mult[k] = static_cast<int>(k) + 1;
  CHECK(is_invariant(ranks_matrix(rep, mult), perm, perm));
  CHECK(ranks_matrix(hom_rank(i, perm), {2}) == [] {
    RanksMatrix m(6, 1);
    for (int k = 0; k < 6; ++k)
      m.at(k, 0) = 2;
    return m;
  }());
}
