#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dlpt {

/// Two unperturbed levels are closer than the degeneracy tolerance.
class DegenerateSpectrum : public std::runtime_error {
 public:
  DegenerateSpectrum(std::size_t first, std::size_t second, double gap)
      : std::runtime_error("degenerate spectrum: levels " + std::to_string(first) + " and " +
                           std::to_string(second) + " differ by " + std::to_string(gap)),
        first_(first),
        second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Least-squares design matrix lost rank.
class RankDeficientFit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dlpt
