#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iterator>
#include <map>
#include <set>

#include "kvrep/cochain.hpp"
#include "kvrep/error.hpp"
#include "support.hpp"

using namespace kvrep;
using kvtest::share;

namespace {

std::shared_ptr<const QZModule> swap_module()
{
  auto z2 = share(cyclic_group(2));
  return std::make_shared<const QZModule>(z2, PermHom(2, {Perm::identity(2), Perm({1, 0})}));
}

std::shared_ptr<const QZModule> s3_module()
{
  auto s3 = share(symmetric_group(3));
  return std::make_shared<const QZModule>(s3, cayley_embedding(*s3));
}

std::shared_ptr<const QZModule> trivial_module(FiniteGroup g, int rank = 1)
{
  return std::make_shared<const QZModule>(QZModule::trivial(share(std::move(g)), rank));
}

// Enumerates normalized 1-cochains of a rank-one trivial module with values
// in (1/den)Z/Z and returns the set of their coboundaries.
std::set<std::vector<QZModule::Value>> all_coboundaries(const std::shared_ptr<const QZModule>& mod, int den)
{
  const int p = mod->group().order();
  std::set<std::vector<QZModule::Value>> out;
  std::vector<int> digits(static_cast<std::size_t>(p - 1), 0);
  for (;;) {
    QZCochain b(mod, 1);
    for (int g = 1; g < p; ++g)
      b.at({g})[0] = QZ(digits[static_cast<std::size_t>(g - 1)], den);
    out.insert(coboundary(b).values());
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == den)
      digits[k++] = 0;
    if (k == digits.size())
      break;
  }
  return out;
}

} // namespace

TEST_CASE("coboundary of zero is zero")
{
  auto mod = swap_module();
  for (int d = 0; d <= 3; ++d)
    CHECK(coboundary(QZCochain(mod, d)).is_zero());
}

TEST_CASE("coboundary agrees with a hand expansion")
{
  auto mod = trivial_module(cyclic_group(2));
  QZCochain c(mod, 1);
  c.at({1})[0] = QZ(1, 2);
  const auto dc = coboundary(c);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(dc.at({a, b})[0] == c.at({b})[0] - c.at({(a + b) % 2})[0] + c.at({a})[0]);
  CHECK(dc.at({1, 1})[0] == QZ(1, 1));

  // Degree two with the swap twist, expanded directly.
  std::mt19937 rng(3);
  auto sm = swap_module();
  const auto c2 = kvtest::random_cochain(sm, 2, false, rng);
  const auto d2 = coboundary(c2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int e = 0; e < 2; ++e)
        for (int i = 0; i < 2; ++i) {
          const int src = a == 1 ? 1 - i : i;
          const QZ expect = c2.at({b, e})[static_cast<std::size_t>(src)] - c2.at({(a + b) % 2, e})[static_cast<std::size_t>(i)] +
                            c2.at({a, (b + e) % 2})[static_cast<std::size_t>(i)] - c2.at({a, b})[static_cast<std::size_t>(i)];
          CHECK(d2.at({a, b, e})[static_cast<std::size_t>(i)] == expect);
        }
}

TEST_CASE("d of d vanishes")
{
  std::mt19937 rng(11);
  for (const auto& mod : {swap_module(), s3_module(), trivial_module(kvtest::klein_four(), 2)})
    for (int d = 0; d <= 2; ++d)
      for (int trial = 0; trial < 5; ++trial) {
        const auto c = kvtest::random_cochain(mod, d, false, rng);
        CHECK(coboundary(coboundary(c)).is_zero());
      }
  // Degree three on a small group keeps G^5 affordable.
  auto z3 = trivial_module(cyclic_group(3), 2);
  for (int trial = 0; trial < 3; ++trial)
    CHECK(coboundary(coboundary(kvtest::random_cochain(z3, 3, false, rng))).is_zero());
}

TEST_CASE("normalization is preserved and detected")
{
  std::mt19937 rng(5);
  auto mod = s3_module();
  const auto c = kvtest::random_cochain(mod, 2, true, rng);
  CHECK(c.is_normalized());
  CHECK(coboundary(c).is_normalized());
  auto bad = c;
  bad.at({0, 3})[1] = QZ(1, 2);
  CHECK(bad.normalization_violation() == std::vector<int>{0, 3});
}

TEST_CASE("klein four cocycle is closed and not exact")
{
  auto v4 = share(kvtest::klein_four());
  const auto z = kvtest::klein_cocycle(v4);
  CHECK(is_cocycle(z));
  CHECK_FALSE(solve_coboundary(z).has_value());
  // Oracle: no normalized 1-cochain with values in (1/4)Z/Z has coboundary z.
  CHECK(all_coboundaries(z.module_ptr(), 4).count(z.values()) == 0);
  CHECK(cohomologous(z, z));
  CHECK_FALSE(cohomologous(z, QZCochain(z.module_ptr(), 2)));
}

TEST_CASE("non-closed cochains are rejected")
{
  std::mt19937 rng(17);
  auto mod = trivial_module(kvtest::klein_four());
  QZCochain c(mod, 2);
  do
    c = kvtest::random_cochain(mod, 2, true, rng);
  while (is_cocycle(c));
  CHECK_FALSE(is_cocycle(c));
  CHECK(cocycle_violation(c).has_value());
  CHECK_THROWS_AS(solve_coboundary(c), NotACocycle);
  CHECK_FALSE(cohomologous(c, QZCochain(mod, 2)));
  CHECK_THROWS_AS(cohomologous(c, QZCochain(swap_module(), 2)), InvalidArgument);
  CHECK_THROWS_AS(solve_coboundary(QZCochain(mod, 1)), InvalidArgument);
}

TEST_CASE("solve_coboundary inverts d")
{
  std::mt19937 rng(23);
  for (const auto& mod : {swap_module(), s3_module(), trivial_module(kvtest::klein_four(), 2),
                          trivial_module(dihedral_group(4))}) {
    for (bool normalized : {true, false}) {
      for (int d = 1; d <= 2; ++d) {
        const auto b = kvtest::random_cochain(mod, d, normalized, rng);
        const auto target = coboundary(b);
        const auto c = solve_coboundary(target);
        REQUIRE(c.has_value());
        CHECK(coboundary(*c) == target);
        if (normalized)
          CHECK(c->is_normalized());
        CHECK(cohomologous(target, target + coboundary(kvtest::random_cochain(mod, d, normalized, rng))));
      }
    }
  }
  CHECK(solve_coboundary(QZCochain(swap_module(), 2)).has_value());
}

TEST_CASE("cohomologous is an equivalence relation on samples")
{
  std::mt19937 rng(29);
  auto v4 = share(kvtest::klein_four());
  const auto z = kvtest::klein_cocycle(v4);
  const auto mod = z.module_ptr();
  std::vector<QZCochain> pool;
  for (int k = 0; k < 4; ++k) {
    const auto shift = coboundary(kvtest::random_cochain(mod, 1, true, rng));
    pool.push_back(shift);
    pool.push_back(z + shift);
  }
  for (const auto& a : pool) {
    CHECK(cohomologous(a, a));
    for (const auto& b : pool) {
      CHECK(cohomologous(a, b) == cohomologous(b, a));
      for (const auto& c : pool)
        if (cohomologous(a, b) && cohomologous(b, c))
          CHECK(cohomologous(a, c));
    }
  }
}

TEST_CASE("h2 representatives")
{
  CHECK(h2_representatives(QZModule::trivial(share(cyclic_group(1)), 1)).size() == 1);
  CHECK(h2_representatives(QZModule::trivial(share(cyclic_group(2)), 1)).size() == 1);
  CHECK(h2_representatives(QZModule::trivial(share(cyclic_group(4)), 1)).size() == 1);
  CHECK(h2_representatives(QZModule::trivial(share(symmetric_group(3)), 1)).size() == 1);
  CHECK(h2_representatives(QZModule::trivial(share(dihedral_group(4)), 1)).size() == 2);
  CHECK(h2_representatives(*swap_module()).size() == 1);
  CHECK(h2_representatives(QZModule::trivial(share(kvtest::klein_four()), 2)).size() == 4);
  const auto z3z3 = direct_product(cyclic_group(3), cyclic_group(3));
  CHECK(h2_representatives(QZModule::trivial(share(z3z3), 1)).size() == 3);

  const auto reps = h2_representatives(QZModule::trivial(share(kvtest::klein_four()), 1));
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].is_zero());
  for (std::size_t a = 0; a < reps.size(); ++a) {
    CHECK(reps[a].is_normalized());
    CHECK(is_cocycle(reps[a]));
    for (std::size_t b = a + 1; b < reps.size(); ++b)
      CHECK_FALSE(cohomologous(reps[a], reps[b]));
  }

  CHECK_THROWS_AS(h2_representatives(QZModule::trivial(share(symmetric_group(4)), 1), {12, 8}), TooLarge);
  CHECK_THROWS_AS(h2_representatives(QZModule::trivial(share(cyclic_group(2)), 3), {24, 2}), TooLarge);
}

TEST_CASE("row transform detects the image")
{
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> entry(0, 11);
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = 2 + trial % 5, cols = 1 + trial % 4;
    IntMatrix a(static_cast<std::size_t>(rows), std::vector<std::int64_t>(static_cast<std::size_t>(cols)));
    for (auto& row : a)
      for (auto& x : row)
        x = entry(rng) % 4 == 0 ? entry(rng) : 2 * entry(rng);
    const ModularDiagonalization d(a, cols, 12, nullptr, true);
    const auto moduli = d.image_moduli();
    auto in_image = [&](const std::vector<std::int64_t>& b) {
      const auto u = d.row_transform(b);
      for (std::size_t r = 0; r < u.size(); ++r)
        if (u[r] % moduli[r] != 0)
          return false;
      return true;
    };
    // Against brute force over Z/12 for small widths.
    std::set<std::vector<std::int64_t>> image;
    std::vector<std::int64_t> x(static_cast<std::size_t>(cols), 0);
    for (;;) {
      std::vector<std::int64_t> b(static_cast<std::size_t>(rows), 0);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
          b[static_cast<std::size_t>(r)] = (b[static_cast<std::size_t>(r)] +
                                            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                                              x[static_cast<std::size_t>(c)]) % 12;
      image.insert(b);
      std::size_t k = 0;
      while (k < x.size() && ++x[k] == 12)
        x[k++] = 0;
      if (k == x.size())
        break;
    }
    for (int probe = 0; probe < 40; ++probe) {
      std::vector<std::int64_t> b(static_cast<std::size_t>(rows));
      for (auto& v : b)
        v = entry(rng);
      if (probe % 2 == 0)
        b = *std::next(image.begin(), static_cast<long>(static_cast<std::size_t>(entry(rng)) % image.size()));
      CHECK(in_image(b) == (image.count(b) == 1));
    }
  }
  const ModularDiagonalization plain({{1}}, 1, 5);
  CHECK_THROWS_AS(plain.row_transform({1}), InvalidArgument);
}

TEST_CASE("larger h2 agrees with the solver")
{
  const auto e8 = direct_product(kvtest::klein_four(), cyclic_group(2));
  for (const auto& [mod, classes] : std::vector<std::pair<QZModule, std::size_t>>{
         {QZModule::trivial(share(e8), 1), 8}, {QZModule::trivial(share(e8), 2), 64}, {*s3_module(), 1}}) {
    const auto reps = h2_representatives(mod);
    CHECK(reps.size() == classes);
    // Pairwise against the solver on a sample.
    for (std::size_t a = 0; a < std::min<std::size_t>(reps.size(), 10); ++a)
      for (std::size_t b = a + 1; b < std::min<std::size_t>(reps.size(), 10); ++b)
        CHECK_FALSE(cohomologous(reps[a], reps[b]));
  }
}

TEST_CASE("h2 of klein four matches an exhaustive oracle")
{
  // Classes of normalized cocycles with values in (1/2)Z/Z modulo coboundaries
  // of (1/4)-valued 1-cochains; every class has such a representative.
  auto mod = trivial_module(kvtest::klein_four());
  const auto exact = all_coboundaries(mod, 4);
  std::vector<QZCochain> cocycles;
  for (int mask = 0; mask < (1 << 9); ++mask) {
    QZCochain c(mod, 2);
    int bit = 0;
    for (int a = 1; a < 4; ++a)
      for (int b = 1; b < 4; ++b)
        c.at({a, b})[0] = QZ((mask >> bit++) & 1, 2);
    if (is_cocycle(c))
      cocycles.push_back(c);
  }
  std::vector<QZCochain> classes;
  for (const auto& c : cocycles) {
    bool known = false;
    for (const auto& r : classes)
      known = known || exact.count((c - r).values()) > 0;
    if (!known)
      classes.push_back(c);
  }
  CHECK(classes.size() == 2);
  CHECK(h2_representatives(*mod).size() == classes.size());
}

TEST_CASE("push forward along characters")
{
  auto z2 = share(cyclic_group(2));
  AbelianGroup pi1({2});
  auto m = std::make_shared<const Pi1Module>(z2, pi1, Pi1Action::trivial(*z2, pi1));
  Pi1Cochain a(m, 3);
  a.at({1, 1, 1}) = 1;
  CHECK(is_cocycle(a));
  const auto pf = push_forward(a, {Character{{0}}, Character{{1}}}, PermHom::trivial(*z2, 2));
  CHECK(pf.at({1, 1, 1})[0] == QZ());
  CHECK(pf.at({1, 1, 1})[1] == QZ(1, 2));
  CHECK(is_cocycle(pf));
}
