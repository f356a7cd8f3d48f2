#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nichols/errors.hpp"

namespace nichols {

int euler_phi(int n);

/// Integer coefficients (lowest degree first) of the n-th cyclotomic polynomial.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

/// An element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, zeta, ..., zeta^(phi(N)-1).
///
/// Values are always kept at their minimal conductor, so 0 and 1 (and every
/// rational) live at conductor 1 and equality is plain component comparison.
class CycScalar {
public:
  CycScalar() : coeffs_{mpq_class(0)} {}
  CycScalar(long value) : coeffs_{mpq_class(value)} {}  // NOLINT: implicit by design of literals
  explicit CycScalar(mpq_class value) : coeffs_{std::move(value)} { coeffs_[0].canonicalize(); }

  /// zeta_n^k, reduced.
  static CycScalar root_of_unity(int n, long k);

  /// Parses "3/4", "-zeta(4)^1", "1/2*zeta(5)^2 - 1", ...
  static CycScalar parse(std::string_view text);

  int conductor() const noexcept { return conductor_; }
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }
  bool is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }
  bool is_rational() const noexcept { return conductor_ == 1; }

  /// Same value written over Q(zeta_n); n must be a multiple of conductor().
  /// The result is intentionally not normalized (inspection only).
  std::vector<mpq_class> coefficients_at(int n) const;

  CycScalar inverse() const;
  std::string to_string() const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& other);
  CycScalar& operator-=(const CycScalar& other);
  CycScalar& operator*=(const CycScalar& other);
  CycScalar& operator/=(const CycScalar& other) { return *this *= other.inverse(); }

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }

  friend bool operator==(const CycScalar& a, const CycScalar& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }

  /// Builds from raw power-basis coefficients over Q(zeta_n) (any length;
  /// reduced modulo the cyclotomic polynomial).
  static CycScalar from_coefficients(int n, std::vector<mpq_class> coeffs);

private:
  void normalize();

  int conductor_ = 1;
  std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& x);

}  // namespace nichols
