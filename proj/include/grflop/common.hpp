#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grflop {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Raised for malformed or out-of-range inputs (bad weights, ambient
/// mismatches, unparsable expressions).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

/// Accepts "3", "-3/2", "6/4" (canonicalized).
Rational parse_rational(std::string_view text);

/// Checked narrowing of an exact integer.
std::int64_t to_int64(const BigInt& value);

/// The Grassmannian Gr(r, n) of r-planes in an n-dimensional space.
class Grassmannian {
 public:
  Grassmannian(int r, int n);

  int r() const { return r_; }
  int n() const { return n_; }
  int quotient_rank() const { return n_ - r_; }
  int dimension() const { return r_ * (n_ - r_); }

  auto operator<=>(const Grassmannian&) const = default;

  std::string to_string() const;

 private:
  int r_;
  int n_;
};

void require_same_ambient(const Grassmannian& a, const Grassmannian& b);

}  // namespace grflop
