#include "kvrep/cochain.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace kvrep {

QZModule::QZModule(GroupPtr group, PermHom twist)
  : group_(std::move(group)), twist_(std::move(twist))
{
  if (!group_)
    throw InvalidArgument("module without a group");
  if (twist_.domain_order() != group_->order())
    throw InvalidArgument("twist has " + std::to_string(twist_.domain_order()) + " images for a group of order " +
                          std::to_string(group_->order()));
}

QZModule QZModule::trivial(GroupPtr group, int rank)
{
  auto twist = PermHom::trivial(*group, rank);
  return QZModule(std::move(group), std::move(twist));
}

QZModule::Value QZModule::add(const Value& a, const Value& b) const
{
  Value r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] + b[i];
  return r;
}

QZModule::Value QZModule::sub(const Value& a, const Value& b) const
{
  Value r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] - b[i];
  return r;
}

QZModule::Value QZModule::act(int g, const Value& v) const
{
  const Perm& back = twist_(group_->inv(g));
  Value r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = v[static_cast<std::size_t>(back(static_cast<int>(i)))];
  return r;
}

bool QZModule::is_zero(const Value& v)
{
  for (const auto& x : v)
    if (!x.is_zero())
      return false;
  return true;
}

Pi1Module::Pi1Module(GroupPtr group, AbelianGroup target, Pi1Action action)
  : group_(std::move(group)), target_(std::move(target)), action_(std::move(action))
{
  if (!group_)
    throw InvalidArgument("module without a group");
  if (static_cast<int>(action_.perms().size()) != group_->order())
    throw InvalidArgument("pi1 action does not match pi0");
}

namespace {

bool has_identity(const std::vector<int>& args)
{
  for (int a : args)
    if (a == 0)
      return true;
  return false;
}

std::vector<int> tuple_args(std::size_t index, int degree, int p)
{
  std::vector<int> args(static_cast<std::size_t>(degree));
  for (std::size_t k = args.size(); k-- > 0;) {
    args[k] = static_cast<int>(index % static_cast<std::size_t>(p));
    index /= static_cast<std::size_t>(p);
  }
  return args;
}

std::size_t tuple_index(const std::vector<int>& args, int p)
{
  std::size_t idx = 0;
  for (int a : args)
    idx = idx * static_cast<std::size_t>(p) + static_cast<std::size_t>(a);
  return idx;
}

std::size_t power(int p, int d)
{
  std::size_t n = 1;
  for (int k = 0; k < d; ++k)
    n *= static_cast<std::size_t>(p);
  return n;
}

} // namespace

CoboundaryMatrix coboundary_matrix(const QZModule& module, int degree, bool normalized)
{
  const auto& g = module.group();
  const int p = g.order();
  const int n = module.rank();
  const int d = degree;
  CoboundaryMatrix out;

  std::vector<int> column_of(power(p, d) * static_cast<std::size_t>(n), -1);
  for (std::size_t t = 0; t < power(p, d); ++t) {
    if (normalized && has_identity(tuple_args(t, d, p)))
      continue;
    for (int i = 0; i < n; ++i) {
      column_of[t * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
        static_cast<int>(out.column_tuple.size());
      out.column_tuple.push_back(t);
      out.column_coord.push_back(i);
    }
  }
  const auto cols = out.column_tuple.size();

  std::vector<int> sub(static_cast<std::size_t>(d));
  for (std::size_t t = 0; t < power(p, d + 1); ++t) {
    const auto args = tuple_args(t, d + 1, p);
    if (normalized && has_identity(args))
      continue;
    const Perm& back = module.twist()(g.inv(args[0]));
    for (int i = 0; i < n; ++i) {
      std::vector<std::int64_t> row(cols, 0);
      auto add = [&](const std::vector<int>& targs, int coord, int sign) {
        const int col = column_of[tuple_index(targs, p) * static_cast<std::size_t>(n) + static_cast<std::size_t>(coord)];
        if (col >= 0)
          row[static_cast<std::size_t>(col)] += sign;
      };
      std::copy(args.begin() + 1, args.end(), sub.begin());
      add(sub, back(i), 1);
      for (int k = 1; k <= d; ++k) {
        for (int j = 0, src = 0; j < d; ++j, ++src) {
          if (j == k - 1) {
            sub[static_cast<std::size_t>(j)] =
              g.mul(args[static_cast<std::size_t>(src)], args[static_cast<std::size_t>(src) + 1]);
            ++src;
          } else {
            sub[static_cast<std::size_t>(j)] = args[static_cast<std::size_t>(src)];
          }
        }
        add(sub, i, k % 2 == 0 ? 1 : -1);
      }
      std::copy(args.begin(), args.end() - 1, sub.begin());
      add(sub, i, (d + 1) % 2 == 0 ? 1 : -1);
      out.a.push_back(std::move(row));
      out.row_tuple.push_back(t);
      out.row_coord.push_back(i);
    }
  }
  return out;
}

std::optional<QZCochain> solve_coboundary(const QZCochain& target)
{
  if (target.degree() < 2)
    throw InvalidArgument("solve_coboundary needs a target of degree >= 2");
  if (auto w = cocycle_violation(target))
    throw NotACocycle(*w);

  const auto& module = target.module();
  const bool normalized = target.is_normalized();
  std::int64_t e = 1;
  for (const auto& v : target.values())
    for (const auto& x : v)
      e = std::lcm(e, x.den());
  const std::int64_t m = e * module.group().order();

  const auto cm = coboundary_matrix(module, target.degree() - 1, normalized);
  LinearSystemZ sys;
  sys.modulus = m;
  sys.unknowns = static_cast<int>(cm.column_tuple.size());
  sys.b.reserve(cm.row_tuple.size());
  for (std::size_t r = 0; r < cm.row_tuple.size(); ++r) {
    const QZ& v = target[cm.row_tuple[r]][static_cast<std::size_t>(cm.row_coord[r])];
    sys.b.push_back(v.num() * (m / v.den()));
  }
  sys.a = cm.a;
  const auto x = solve_mod(sys);
  if (!x)
    return std::nullopt;

  QZCochain c(target.module_ptr(), target.degree() - 1);
  for (std::size_t k = 0; k < x->size(); ++k)
    c[cm.column_tuple[k]][static_cast<std::size_t>(cm.column_coord[k])] = QZ((*x)[k], m);
  if (!(coboundary(c) == target))
    throw std::logic_error("solve_coboundary: solution failed re-verification");
  return c;
}

bool cohomologous(const QZCochain& c1, const QZCochain& c2)
{
  if (c1.degree() != c2.degree() || !c1.same_module(c2))
    throw InvalidArgument("cohomologous: cochains of different degree or module");
  const auto diff = c1 - c2;
  if (diff.is_zero())
    return true;
  if (!is_cocycle(diff))
    return false;
  return solve_coboundary(diff).has_value();
}

std::vector<QZCochain> h2_representatives(const QZModule& module, CohomologyBounds bounds)
{
  const int p = module.group().order();
  if (p > bounds.max_group_order)
    throw TooLarge("h2_representatives: group order", p, bounds.max_group_order);
  if (module.rank() > bounds.max_rank)
    throw TooLarge("h2_representatives: module rank", module.rank(), bounds.max_rank);

  auto mod_ptr = std::make_shared<const QZModule>(module);
  std::vector<QZCochain> reps{QZCochain(mod_ptr, 2)};

  // Every class has a representative with values in (1/|G|)Z/Z.
  const std::int64_t m = p;
  const auto cm = coboundary_matrix(module, 2, true);
  const ModularDiagonalization diag(cm.a, static_cast<int>(cm.column_tuple.size()), m);

  // Classes are told apart by the image of a cocycle in coker(d^1), read
  // off the diagonal form of d^1 over Z/|G|^2.
  const std::int64_t m1 = m * m;
  const auto cm1 = coboundary_matrix(module, 1, true);
  const ModularDiagonalization diag1(cm1.a, static_cast<int>(cm1.column_tuple.size()), m1, nullptr, true);
  const auto moduli = diag1.image_moduli();
  auto key_of = [&](const QZCochain& z) {
    std::vector<std::int64_t> b;
    b.reserve(cm1.row_tuple.size());
    for (std::size_t r = 0; r < cm1.row_tuple.size(); ++r) {
      const QZ& v = z[cm1.row_tuple[r]][static_cast<std::size_t>(cm1.row_coord[r])];
      b.push_back(v.num() * (m1 / v.den()));
    }
    auto k = diag1.row_transform(b);
    for (std::size_t r = 0; r < k.size(); ++r)
      k[r] %= moduli[r];
    return k;
  };
  auto add_keys = [&](std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
    for (std::size_t r = 0; r < a.size(); ++r)
      a[r] = (a[r] + b[r]) % moduli[r];
    return a;
  };

  std::vector<QZCochain> generators;
  std::vector<std::vector<std::int64_t>> generator_keys;
  for (const auto& x : diag.kernel_generators()) {
    QZCochain z(mod_ptr, 2);
    for (std::size_t k = 0; k < x.size(); ++k)
      z[cm.column_tuple[k]][static_cast<std::size_t>(cm.column_coord[k])] = QZ(x[k], m);
    if (!is_cocycle(z))
      throw std::logic_error("h2_representatives: kernel vector is not a cocycle");
    auto key = key_of(z);
    if (std::all_of(key.begin(), key.end(), [](std::int64_t v) { return v == 0; }))
      continue;
    generators.push_back(std::move(z));
    generator_keys.push_back(std::move(key));
  }

  // Closure of {0} under adding generators, one representative per class.
  std::vector<std::vector<std::int64_t>> keys{std::vector<std::int64_t>(moduli.size(), 0)};
  std::set<std::vector<std::int64_t>> seen{keys.front()};
  for (std::size_t next = 0; next < reps.size(); ++next) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      auto key = add_keys(keys[next], generator_keys[k]);
      if (!seen.insert(key).second)
        continue;
      reps.push_back(reps[next] + generators[k]);
      keys.push_back(std::move(key));
    }
  }
  return reps;
}

QZCochain push_forward(const Pi1Cochain& c, const std::vector<Character>& gamma, const PermHom& rho)
{
  const auto& mod = c.module();
  if (static_cast<int>(gamma.size()) != rho.degree())
    throw InvalidArgument("push_forward: gamma and rho have different sizes");
  QZCochain out(QZModule(mod.group_ptr(), rho), c.degree());
  for (std::size_t idx = 0; idx < c.tuple_count(); ++idx) {
    auto& v = out[idx];
    for (std::size_t i = 0; i < gamma.size(); ++i)
      v[i] = evaluate(mod.target(), gamma[i], c[idx]);
  }
  return out;
}

} // namespace kvrep
