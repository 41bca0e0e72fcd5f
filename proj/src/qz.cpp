#include "kvrep/qz.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "kvrep/error.hpp"

namespace kvrep {

QZ::QZ(std::int64_t num, std::int64_t den)
{
  if (den <= 0)
    throw InvalidArgument("QZ denominator must be positive");
  num %= den;
  if (num < 0)
    num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

QZ QZ::operator-() const
{
  return num_ == 0 ? *this : QZ(den_ - num_, den_);
}

QZ& QZ::operator+=(const QZ& o)
{
  const std::int64_t l = std::lcm(den_, o.den_);
  *this = QZ(num_ * (l / den_) + o.num_ * (l / o.den_), l);
  return *this;
}

QZ operator*(std::int64_t k, const QZ& a)
{
  // k mod den first so the product stays small.
  std::int64_t kk = k % a.den_;
  if (kk < 0)
    kk += a.den_;
  return QZ(kk * a.num_, a.den_);
}

std::string QZ::str() const
{
  return std::to_string(num_) + "/" + std::to_string(den_);
}

QZ QZ::parse(std::string_view text)
{
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    if (!s.empty() && s.front() == '+')
      ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
      throw InvalidArgument("malformed Q/Z value \"" + std::string(text) + "\"");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return QZ(parse_int(text), 1);
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0)
    throw InvalidArgument("Q/Z denominator must be positive in \"" + std::string(text) + "\"");
  return QZ(parse_int(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const QZ& a)
{
  return os << a.str();
}

} // namespace kvrep
