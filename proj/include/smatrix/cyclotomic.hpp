#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycloNumber at conductor N is stored in the power basis 1, z, ..., z^{phi(N)-1}
// of Q[x]/Phi_N(x).  Two numbers at the same conductor are equal iff their
// coefficient vectors are equal; mixed conductors are promoted to the lcm, which
// is capped (default 10080, overridable with SMATRIX_MAX_CONDUCTOR).

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "smatrix/errors.hpp"

namespace smatrix {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Integer polynomial, coefficients low degree first.
using IntPoly = std::vector<BigInt>;

inline constexpr std::int64_t kDefaultMaxConductor = 10080;

/// Active lcm cap for mixed-conductor promotion.
std::int64_t max_conductor();

std::int64_t euler_phi(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

/// Phi_N, obtained by dividing x^N - 1 by Phi_d for every proper divisor d | N.
IntPoly cyclotomic_polynomial(std::int64_t n);

IntPoly poly_multiply(const IntPoly& a, const IntPoly& b);

/// e^{2 pi i k / N}, stored reduced: (N/g, k/g) with g = gcd(k, N), and (1, 0) for 1.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(std::int64_t order, std::int64_t exponent);

  static RootOfUnity one() { return {}; }
  static RootOfUnity minus_one() { return {2, 1}; }
  /// Accepts "z{N}^{k}", "1" and "-1".
  static RootOfUnity parse(std::string_view text);

  std::int64_t order() const noexcept { return order_; }
  std::int64_t exponent() const noexcept { return exponent_; }
  bool is_one() const noexcept { return order_ == 1; }

  /// Exponent of this root as a power of zeta_N; order() must divide N.
  std::int64_t exponent_in(std::int64_t n) const;

  RootOfUnity inverse() const { return {order_, order_ - exponent_}; }
  RootOfUnity pow(std::int64_t e) const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend RootOfUnity operator/(const RootOfUnity& a, const RootOfUnity& b) { return a * b.inverse(); }
  RootOfUnity& operator*=(const RootOfUnity& o) { return *this = *this * o; }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

  /// "1", "-1" or "z{N}^{k}".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RootOfUnity& z) { return os << z.to_string(); }

 private:
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 0;
};

class CycloNumber {
 public:
  CycloNumber() : coeffs_(1) {}
  CycloNumber(int value) : coeffs_{Rational(value)} {}              // NOLINT: Eigen needs Scalar(0), Scalar(1)
  CycloNumber(std::int64_t value) : coeffs_{Rational(value)} {}     // NOLINT
  CycloNumber(const Rational& value) : coeffs_{value} {}            // NOLINT

  /// Coefficients must already be reduced: exactly phi(conductor) of them.
  static CycloNumber from_coefficients(std::int64_t conductor, std::vector<Rational> coeffs);
  /// The root at conductor = its order.
  static CycloNumber root(const RootOfUnity& r);

  std::int64_t conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  /// Same value at a multiple of the current conductor.
  CycloNumber promoted(std::int64_t target) const;

  /// Complex conjugate, zeta -> zeta^{-1}.
  CycloNumber conj() const;
  CycloNumber inverse() const;
  CycloNumber pow(std::int64_t e) const;

  /// Set if the value is +-zeta_N^k for the stored conductor N.
  std::optional<RootOfUnity> as_root_of_unity() const;

  CycloNumber operator-() const;
  friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }
  CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
  CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
  CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }
  CycloNumber& operator/=(const CycloNumber& o) { return *this = *this / o; }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  /// Root-of-unity literal when possible, otherwise a sum "c0 + c1*zN^1 + ...".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const CycloNumber& x) { return os << x.to_string(); }

 private:
  CycloNumber(std::int64_t conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  std::int64_t conductor_ = 1;
  std::vector<Rational> coeffs_;
};

/// zeta_target^{k * target / N} reduced mod Phi_target.  Throws ConductorMismatch
/// if the order of r does not divide target.
CycloNumber embed(const RootOfUnity& r, std::int64_t target);

/// lcm(a, b), throwing ConductorCapExceeded past max_conductor().
std::int64_t promote_conductor(std::int64_t a, std::int64_t b);

}  // namespace smatrix

namespace Eigen {

template <>
struct NumTraits<smatrix::CycloNumber> : GenericNumTraits<smatrix::CycloNumber> {
  using Real = smatrix::CycloNumber;
  using NonInteger = smatrix::CycloNumber;
  using Literal = smatrix::CycloNumber;
  using Nested = smatrix::CycloNumber;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 200
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};

}  // namespace Eigen

namespace smatrix {

using CycloMatrix = Eigen::Matrix<CycloNumber, Eigen::Dynamic, Eigen::Dynamic>;

/// lcm of all entry conductors.
std::int64_t common_conductor(const CycloMatrix& m);
/// Every entry promoted to common_conductor(m).
CycloMatrix promoted(const CycloMatrix& m);
CycloMatrix conjugate_transpose(const CycloMatrix& m);

/// Matrix of roots of unity, embedded at the lcm of their orders.
template <typename Fn>
CycloMatrix matrix_of_roots(Eigen::Index rows, Eigen::Index cols, Fn&& entry) {
  std::vector<RootOfUnity> values;
  values.reserve(static_cast<std::size_t>(rows * cols));
  std::int64_t conductor = 1;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      values.push_back(entry(i, j));
      conductor = promote_conductor(conductor, values.back().order());
    }
  }
  CycloMatrix m(rows, cols);
  std::size_t at = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = embed(values[at++], conductor);
  }
  return m;
}

}  // namespace smatrix
