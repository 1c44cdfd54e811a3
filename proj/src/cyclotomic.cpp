#include <cstdlib>
#include <map>
#include <numeric>

#include "smatrix/cyclotomic.hpp"
#include "smatrix/exact_linalg.hpp"

namespace smatrix {

namespace {

using RatVec = std::vector<Rational>;

/// Reduce a polynomial with rational coefficients modulo the monic phi.
RatVec reduce_mod(RatVec c, const IntPoly& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = c.size(); i-- > deg;) {
    if (c[i] == 0) continue;
    const Rational t = c[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) c[i - deg + j] -= t * Rational(phi[j]);
    }
    c[i] = 0;
  }
  c.resize(deg);
  return c;
}

/// x * c mod phi, c already reduced.
RatVec shift_mod(const RatVec& c, const IntPoly& phi) {
  const std::size_t deg = c.size();
  RatVec out(deg);
  const Rational top = c[deg - 1];
  for (std::size_t j = deg - 1; j > 0; --j) out[j] = c[j - 1];
  out[0] = 0;
  if (top != 0) {
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) out[j] -= top * Rational(phi[j]);
    }
  }
  return out;
}

/// Quotient of a by the monic b; the division must be exact.
IntPoly exact_divide(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const BigInt t = a[i];
    q[i - db] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw Error(Errc::InternalInconsistency, "cyclotomic division left a remainder");
  }
  return q;
}

}  // namespace

std::int64_t max_conductor() {
  if (const char* env = std::getenv("SMATRIX_MAX_CONDUCTOR")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxConductor;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

IntPoly poly_multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPoly cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw Error(Errc::ParseError, "cyclotomic polynomial index must be positive");
  std::map<std::int64_t, IntPoly> phi;
  for (const std::int64_t d : divisors(n)) {
    IntPoly p(static_cast<std::size_t>(d) + 1);
    p[0] = -1;
    p[static_cast<std::size_t>(d)] = 1;
    for (const auto& [e, phi_e] : phi) {
      if (d % e == 0) p = exact_divide(std::move(p), phi_e);
    }
    phi.emplace(d, std::move(p));
  }
  return phi.at(n);
}

std::int64_t promote_conductor(std::int64_t a, std::int64_t b) {
  const std::int64_t l = std::lcm(a, b);
  if (l != a && l != b && l > max_conductor()) {
    throw Error(Errc::ConductorCapExceeded, "lcm(" + std::to_string(a) + ", " + std::to_string(b) + ") = " +
                                                std::to_string(l) + " exceeds the conductor cap " +
                                                std::to_string(max_conductor()));
  }
  return l;
}

CycloNumber CycloNumber::from_coefficients(std::int64_t conductor, std::vector<Rational> coeffs) {
  if (conductor < 1) throw Error(Errc::ConductorMismatch, "conductor must be positive");
  if (conductor > max_conductor()) {
    throw Error(Errc::ConductorCapExceeded, "conductor " + std::to_string(conductor) + " exceeds the cap");
  }
  if (static_cast<std::int64_t>(coeffs.size()) != euler_phi(conductor)) {
    throw Error(Errc::ShapeMismatch, "expected phi(" + std::to_string(conductor) + ") = " +
                                         std::to_string(euler_phi(conductor)) + " coefficients");
  }
  return CycloNumber(conductor, std::move(coeffs));
}

CycloNumber CycloNumber::root(const RootOfUnity& r) { return embed(r, r.order()); }

CycloNumber embed(const RootOfUnity& r, std::int64_t target) {
  if (target > max_conductor()) {
    throw Error(Errc::ConductorCapExceeded, "conductor " + std::to_string(target) + " exceeds the cap");
  }
  const std::int64_t k = r.exponent_in(target);
  const IntPoly phi = cyclotomic_polynomial(target);
  std::vector<Rational> c(static_cast<std::size_t>(std::max<std::int64_t>(k + 1, euler_phi(target))));
  c[static_cast<std::size_t>(k)] = 1;
  return CycloNumber::from_coefficients(target, reduce_mod(std::move(c), phi));
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

CycloNumber CycloNumber::promoted(std::int64_t target) const {
  if (target == conductor_) return *this;
  if (target < 1 || target % conductor_ != 0) {
    throw Error(Errc::ConductorMismatch, "cannot promote conductor " + std::to_string(conductor_) + " to " +
                                             std::to_string(target));
  }
  const auto deg = static_cast<std::size_t>(euler_phi(target));
  if (conductor_ == 1) {
    std::vector<Rational> c(deg);
    c[0] = coeffs_[0];
    return CycloNumber(target, std::move(c));
  }
  const auto step = static_cast<std::size_t>(target / conductor_);
  std::vector<Rational> c(std::max(deg, (coeffs_.size() - 1) * step + 1));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j * step] = coeffs_[j];
  return CycloNumber(target, reduce_mod(std::move(c), cyclotomic_polynomial(target)));
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
  const std::int64_t n = promote_conductor(a.conductor_, b.conductor_);
  CycloNumber out = a.promoted(n);
  const CycloNumber rhs = b.promoted(n);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
  return out;
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) { return a + (-b); }

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  if (a.conductor_ == 1 || b.conductor_ == 1) {
    const bool a_scalar = a.conductor_ == 1;
    const Rational s = a_scalar ? a.coeffs_[0] : b.coeffs_[0];
    CycloNumber out = a_scalar ? b : a;
    for (auto& c : out.coeffs_) c *= s;
    return out;
  }
  const std::int64_t n = promote_conductor(a.conductor_, b.conductor_);
  const CycloNumber x = a.promoted(n);
  const CycloNumber y = b.promoted(n);
  std::vector<Rational> prod(x.coeffs_.size() + y.coeffs_.size() - 1);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      if (y.coeffs_[j] != 0) prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return CycloNumber(n, reduce_mod(std::move(prod), cyclotomic_polynomial(n)));
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  if (a.conductor_ == 1 && a.coeffs_[0] == 0) return b.is_zero();
  if (b.conductor_ == 1 && b.coeffs_[0] == 0) return a.is_zero();
  const std::int64_t n = promote_conductor(a.conductor_, b.conductor_);
  return a.promoted(n).coeffs_ == b.promoted(n).coeffs_;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (conductor_ == 1) return CycloNumber(Rational(1) / coeffs_[0]);
  // Solve (multiplication-by-this) * x = 1 in the power basis.
  const IntPoly phi = cyclotomic_polynomial(conductor_);
  const auto deg = static_cast<Eigen::Index>(coeffs_.size());
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> mult(deg, deg);
  std::vector<Rational> column = coeffs_;
  for (Eigen::Index j = 0; j < deg; ++j) {
    for (Eigen::Index i = 0; i < deg; ++i) mult(i, j) = column[static_cast<std::size_t>(i)];
    if (j + 1 < deg) column = shift_mod(column, phi);
  }
  const auto inv = exact_inverse(mult);
  std::vector<Rational> out(coeffs_.size());
  for (Eigen::Index i = 0; i < deg; ++i) out[static_cast<std::size_t>(i)] = inv(i, 0);
  return CycloNumber(conductor_, std::move(out));
}

CycloNumber CycloNumber::conj() const {
  if (conductor_ <= 2) return *this;
  const auto n = static_cast<std::size_t>(conductor_);
  std::vector<Rational> c(n);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[(n - j) % n] += coeffs_[j];
  return CycloNumber(conductor_, reduce_mod(std::move(c), cyclotomic_polynomial(conductor_)));
}

CycloNumber CycloNumber::pow(std::int64_t e) const {
  CycloNumber base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  CycloNumber result(1);
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::optional<RootOfUnity> CycloNumber::as_root_of_unity() const {
  if (is_rational()) {
    if (coeffs_[0] == 1) return RootOfUnity::one();
    if (coeffs_[0] == -1) return RootOfUnity::minus_one();
    return std::nullopt;
  }
  const IntPoly phi = cyclotomic_polynomial(conductor_);
  std::vector<Rational> power(coeffs_.size());
  power[0] = 1;
  for (std::int64_t k = 0; k < conductor_; ++k) {
    if (power == coeffs_) return RootOfUnity(conductor_, k);
    bool negated = true;
    for (std::size_t i = 0; i < power.size() && negated; ++i) negated = (power[i] == -coeffs_[i]);
    if (negated) return RootOfUnity(2 * conductor_, 2 * k + conductor_);
    power = shift_mod(power, phi);
  }
  return std::nullopt;
}

std::string CycloNumber::to_string() const {
  if (auto r = as_root_of_unity()) return r->to_string();
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string term;
    if (j == 0) {
      term = mag.str();
    } else {
      const std::string root = "z" + std::to_string(conductor_) + "^" + std::to_string(j);
      term = mag == 1 ? root : mag.str() + "*" + root;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

std::int64_t common_conductor(const CycloMatrix& m) {
  std::int64_t n = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) n = promote_conductor(n, m(i, j).conductor());
  }
  return n;
}

CycloMatrix promoted(const CycloMatrix& m) {
  const std::int64_t n = common_conductor(m);
  return m.unaryExpr([n](const CycloNumber& x) { return x.promoted(n); });
}

CycloMatrix conjugate_transpose(const CycloMatrix& m) {
  CycloMatrix out(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(j, i) = m(i, j).conj();
  }
  return out;
}

}  // namespace smatrix
