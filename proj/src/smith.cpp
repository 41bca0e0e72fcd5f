#include "kvrep/smith.hpp"

#include <numeric>
#include <utility>

#include "kvrep/error.hpp"

namespace kvrep {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m)
{
  x %= m;
  return x < 0 ? x + m : x;
}

// s a + t b = g with g = gcd(a, b) >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t)
{
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    a = std::exchange(b, a - q * b);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  s = s0;
  t = t0;
  return a;
}

// Inverse of a modulo m, for gcd(a, m) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m)
{
  std::int64_t s, t;
  ext_gcd(mod(a, m), m, s, t);
  return mod(s, m);
}

} // namespace

ModularDiagonalization::ModularDiagonalization(IntMatrix a, int cols, std::int64_t modulus,
                                               std::vector<std::int64_t>* rhs, bool keep_row_transform)
  : modulus_(modulus), rows_(static_cast<int>(a.size())), cols_(cols)
{
  if (cols_ < 0)
    throw InvalidArgument("negative column count");
  if (modulus_ < 1)
    throw InvalidArgument("modulus must be positive");
  if (modulus_ > (std::int64_t{1} << 30))
    throw TooLarge("linear system modulus", modulus_, std::int64_t{1} << 30);
  if (rhs && static_cast<int>(rhs->size()) != rows_)
    throw InvalidArgument("right-hand side length does not match the matrix");

  const std::int64_t m = modulus_;
  for (auto& row : a) {
    if (static_cast<int>(row.size()) != cols_)
      throw InvalidArgument("ragged matrix");
    for (auto& x : row)
      x = mod(x, m);
  }
  if (rhs)
    for (auto& x : *rhs)
      x = mod(x, m);

  v_.assign(static_cast<std::size_t>(cols_), std::vector<std::int64_t>(static_cast<std::size_t>(cols_), 0));
  for (int j = 0; j < cols_; ++j)
    v_[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1 % m;

  if (keep_row_transform) {
    u_.assign(static_cast<std::size_t>(rows_), std::vector<std::int64_t>(static_cast<std::size_t>(rows_), 0));
    for (int r = 0; r < rows_; ++r)
      u_[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = 1 % m;
  }

  auto at = [&](int r, int c) -> std::int64_t& { return a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };

  // Row ops: (row_t, row_r) <- (s row_t + u row_r, x row_t + y row_r).
  auto row_op = [&](int t, int r, std::int64_t s, std::int64_t u, std::int64_t x, std::int64_t y) {
    auto& rt = a[static_cast<std::size_t>(t)];
    auto& rr = a[static_cast<std::size_t>(r)];
    for (int c = 0; c < cols_; ++c) {
      const auto p = rt[static_cast<std::size_t>(c)], q = rr[static_cast<std::size_t>(c)];
      if (p == 0 && q == 0)
        continue;
      rt[static_cast<std::size_t>(c)] = mod(s * p + u * q, m);
      rr[static_cast<std::size_t>(c)] = mod(x * p + y * q, m);
    }
    if (!u_.empty()) {
      auto& ut = u_[static_cast<std::size_t>(t)];
      auto& ur = u_[static_cast<std::size_t>(r)];
      for (int c = 0; c < rows_; ++c) {
        const auto p = ut[static_cast<std::size_t>(c)], q = ur[static_cast<std::size_t>(c)];
        if (p == 0 && q == 0)
          continue;
        ut[static_cast<std::size_t>(c)] = mod(s * p + u * q, m);
        ur[static_cast<std::size_t>(c)] = mod(x * p + y * q, m);
      }
    }
    if (rhs) {
      auto& b = *rhs;
      const auto p = b[static_cast<std::size_t>(t)], q = b[static_cast<std::size_t>(r)];
      b[static_cast<std::size_t>(t)] = mod(s * p + u * q, m);
      b[static_cast<std::size_t>(r)] = mod(x * p + y * q, m);
    }
  };
  // Column ops act on A and V alike.
  auto col_op = [&](int t, int c, std::int64_t s, std::int64_t u, std::int64_t x, std::int64_t y) {
    auto apply = [&](IntMatrix& mat) {
      for (auto& row : mat) {
        const auto p = row[static_cast<std::size_t>(t)], q = row[static_cast<std::size_t>(c)];
        if (p == 0 && q == 0)
          continue;
        row[static_cast<std::size_t>(t)] = mod(s * p + u * q, m);
        row[static_cast<std::size_t>(c)] = mod(x * p + y * q, m);
      }
    };
    apply(a);
    apply(v_);
  };

  const int limit = std::min(rows_, cols_);
  for (int t = 0; t < limit; ++t) {
    // Pivot: first column with a nonzero entry below row t; within it the
    // entry sharing the smallest factor with M (a unit when possible).
    int prow = -1, pcol = -1;
    std::int64_t best = 0;
    for (int c = t; c < cols_ && prow < 0; ++c) {
      for (int r = t; r < rows_; ++r) {
        const auto x = at(r, c);
        if (x == 0)
          continue;
        const auto g = std::gcd(x, m);
        if (prow < 0 || g < best) {
          prow = r;
          pcol = c;
          best = g;
          if (g == 1)
            break;
        }
      }
    }
    if (prow < 0)
      break;
    if (prow != t) {
      std::swap(a[static_cast<std::size_t>(t)], a[static_cast<std::size_t>(prow)]);
      if (rhs)
        std::swap((*rhs)[static_cast<std::size_t>(t)], (*rhs)[static_cast<std::size_t>(prow)]);
      if (!u_.empty())
        std::swap(u_[static_cast<std::size_t>(t)], u_[static_cast<std::size_t>(prow)]);
    }
    if (pcol != t)
      col_op(t, pcol, 0, 1, 1, 0);

    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int r = t + 1; r < rows_; ++r) {
        const auto b = at(r, t);
        if (b == 0)
          continue;
        const auto p = at(t, t);
        if (b % p == 0) {
          row_op(t, r, 1, 0, mod(-(b / p), m), 1);
        } else {
          std::int64_t s, u;
          const auto g = ext_gcd(p, b, s, u);
          row_op(t, r, mod(s, m), mod(u, m), mod(-(b / g), m), mod(p / g, m));
        }
      }
      for (int c = t + 1; c < cols_; ++c) {
        const auto b = at(t, c);
        if (b == 0)
          continue;
        const auto p = at(t, t);
        if (b % p == 0) {
          col_op(t, c, 1, 0, mod(-(b / p), m), 1);
        } else {
          std::int64_t s, u;
          const auto g = ext_gcd(p, b, s, u);
          col_op(t, c, mod(s, m), mod(u, m), mod(-(b / g), m), mod(p / g, m));
          dirty = true; // the column may have refilled
        }
      }
    }
    diagonal_.push_back(at(t, t));
  }
}

std::optional<std::vector<std::int64_t>> ModularDiagonalization::solve_transformed(
  const std::vector<std::int64_t>& rhs) const
{
  const std::int64_t m = modulus_;
  std::vector<std::int64_t> y(static_cast<std::size_t>(cols_), 0);
  for (int r = 0; r < rows_; ++r) {
    const auto b = mod(rhs[static_cast<std::size_t>(r)], m);
    if (r >= rank()) {
      if (b != 0)
        return std::nullopt;
      continue;
    }
    const auto d = diagonal_[static_cast<std::size_t>(r)];
    const auto g = std::gcd(d, m);
    if (b % g != 0)
      return std::nullopt;
    const auto mg = m / g;
    y[static_cast<std::size_t>(r)] = mg == 1 ? 0 : mod((b / g) % mg * inverse_mod((d / g) % mg, mg), mg);
  }
  std::vector<std::int64_t> x(static_cast<std::size_t>(cols_), 0);
  for (int i = 0; i < cols_; ++i) {
    std::int64_t acc = 0;
    for (int k = 0; k < rank(); ++k)
      acc = mod(acc + v_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * y[static_cast<std::size_t>(k)], m);
    x[static_cast<std::size_t>(i)] = acc;
  }
  return x;
}

std::vector<std::vector<std::int64_t>> ModularDiagonalization::kernel_generators() const
{
  const std::int64_t m = modulus_;
  std::vector<std::vector<std::int64_t>> gens;
  for (int k = 0; k < cols_; ++k) {
    std::int64_t scale = 1;
    if (k < rank()) {
      const auto g = std::gcd(diagonal_[static_cast<std::size_t>(k)], m);
      scale = m / g;
      if (scale == m)
        continue;
    }
    std::vector<std::int64_t> x(static_cast<std::size_t>(cols_));
    bool nonzero = false;
    for (int i = 0; i < cols_; ++i) {
      x[static_cast<std::size_t>(i)] = mod(v_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * scale, m);
      nonzero = nonzero || x[static_cast<std::size_t>(i)] != 0;
    }
    if (nonzero)
      gens.push_back(std::move(x));
  }
  return gens;
}

std::vector<std::int64_t> ModularDiagonalization::row_transform(const std::vector<std::int64_t>& b) const
{
  if (u_.empty() && rows_ > 0)
    throw InvalidArgument("row transform was not kept");
  if (static_cast<int>(b.size()) != rows_)
    throw InvalidArgument("vector length does not match the matrix");
  std::vector<std::int64_t> out(static_cast<std::size_t>(rows_), 0);
  for (int r = 0; r < rows_; ++r) {
    const auto& row = u_[static_cast<std::size_t>(r)];
    std::int64_t acc = 0;
    for (int c = 0; c < rows_; ++c)
      if (b[static_cast<std::size_t>(c)] != 0)
        acc = mod(acc + row[static_cast<std::size_t>(c)] * mod(b[static_cast<std::size_t>(c)], modulus_), modulus_);
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

std::vector<std::int64_t> ModularDiagonalization::image_moduli() const
{
  std::vector<std::int64_t> out(static_cast<std::size_t>(rows_), modulus_);
  for (int r = 0; r < rank(); ++r)
    out[static_cast<std::size_t>(r)] = std::gcd(diagonal_[static_cast<std::size_t>(r)], modulus_);
  return out;
}

std::optional<std::vector<std::int64_t>> solve_mod(const LinearSystemZ& system)
{
  std::vector<std::int64_t> rhs = system.b;
  const int cols = system.unknowns >= 0 ? system.unknowns
                   : system.a.empty()  ? 0
                                       : static_cast<int>(system.a.front().size());
  ModularDiagonalization diag(system.a, cols, system.modulus, &rhs);
  return diag.solve_transformed(rhs);
}

} // namespace kvrep
