#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kvrep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad table, wrong sizes, mismatched groups.
class InvalidArgument : public Error
{
public:
  using Error::Error;
};

/// A size exceeds a configured enumeration or validation bound.
class TooLarge : public Error
{
public:
  TooLarge(const std::string& what, long long size, long long bound)
    : Error(what + ": size " + std::to_string(size) + " exceeds bound " + std::to_string(bound)),
      size_(size), bound_(bound)
  {}

  long long size() const noexcept { return size_; }
  long long bound() const noexcept { return bound_; }

private:
  long long size_;
  long long bound_;
};

/// A cochain failed the cocycle test. The witness is the first argument
/// tuple (in lexicographic order) at which the coboundary is nonzero.
class NotACocycle : public Error
{
public:
  explicit NotACocycle(std::vector<int> witness)
    : Error("not a cocycle at " + format(witness)), witness_(std::move(witness))
  {}

  const std::vector<int>& witness() const noexcept { return witness_; }

private:
  static std::string format(const std::vector<int>& w)
  {
    std::string s = "(";
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k)
        s += ",";
      s += std::to_string(w[k]);
    }
    return s + ")";
  }

  std::vector<int> witness_;
};

/// A cochain flagged as normalized has a nonzero value at an argument
/// tuple containing the identity.
class NotNormalized : public Error
{
public:
  explicit NotNormalized(std::vector<int> position)
    : Error("cochain not normalized at a tuple containing the identity"),
      position_(std::move(position))
  {}

  const std::vector<int>& position() const noexcept { return position_; }

private:
  std::vector<int> position_;
};

} // namespace kvrep
