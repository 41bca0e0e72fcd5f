#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kvrep {

/// An element of Q/Z, written additively, standing in for a root of unity
/// in k*. Always kept reduced: 0 <= num < den, gcd(num, den) = 1, and zero
/// is 0/1.
class QZ
{
public:
  constexpr QZ() noexcept = default;
  /// Any integer fraction; reduced modulo 1. Throws if den <= 0.
  QZ(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  /// Additive order, equal to the reduced denominator.
  std::int64_t order() const noexcept { return den_; }

  QZ operator-() const;
  QZ& operator+=(const QZ& o);
  QZ& operator-=(const QZ& o) { return *this += -o; }
  friend QZ operator+(QZ a, const QZ& b) { return a += b; }
  friend QZ operator-(QZ a, const QZ& b) { return a -= b; }
  /// Integer multiple k * a.
  friend QZ operator*(std::int64_t k, const QZ& a);

  friend bool operator==(const QZ&, const QZ&) = default;
  friend auto operator<=>(const QZ&, const QZ&) = default;

  /// The canonical "num/den" string.
  std::string str() const;
  /// Parses "num/den" or an integer; the result is reduced.
  static QZ parse(std::string_view text);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline QZ add(const QZ& a, const QZ& b) { return a + b; }
inline QZ neg(const QZ& a) { return -a; }
inline QZ scale(const QZ& a, std::int64_t k) { return k * a; }
inline std::int64_t order(const QZ& a) { return a.order(); }

std::ostream& operator<<(std::ostream& os, const QZ& a);

} // namespace kvrep
