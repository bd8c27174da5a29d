#include "grflop/common.hpp"

namespace grflop {

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational out;
  std::string s(text);
  if (s.empty() || out.set_str(s, 10) != 0) {
    throw InputError("not a rational number: '" + s + "'");
  }
  if (out.get_den() == 0) throw InputError("zero denominator: '" + s + "'");
  out.canonicalize();
  return out;
}

std::int64_t to_int64(const BigInt& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return value.get_si();
}

Grassmannian::Grassmannian(int r, int n) : r_(r), n_(n) {
  if (r < 1 || r >= n) {
    throw InputError("Gr(r,n) requires 1 <= r < n, got r=" + std::to_string(r) +
                     " n=" + std::to_string(n));
  }
}

std::string Grassmannian::to_string() const {
  return "Gr(" + std::to_string(r_) + "," + std::to_string(n_) + ")";
}

void require_same_ambient(const Grassmannian& a, const Grassmannian& b) {
  if (a != b) throw InputError("ambient mismatch: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace grflop
