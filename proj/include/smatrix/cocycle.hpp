#pragma once

// Abelian 3-cocycles (psi, omega) on a finite abelian group with root-of-unity
// values, quadratic forms, and the brute-force searches built on them.
//
// Scalar conventions, for all a, b, c, d:
//   pentagon  psi(b,c,d) psi(a,b+c,d) psi(a,b,c) = psi(a+b,c,d) psi(a,b,c+d)
//   H1        omega(a,b+c) = omega(a,b) omega(a,c) psi(a,b,c)^-1 psi(b,a,c) psi(b,c,a)^-1
//   H2        omega(a+b,c) = omega(a,c) omega(b,c) psi(a,b,c) psi(a,c,b)^-1 psi(c,a,b)
// trace_form() and standard_cocycle() assert the consequences of these
// conventions and throw ConventionError if they ever disagree.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smatrix/abelian_group.hpp"
#include "smatrix/cyclotomic.hpp"

namespace smatrix {

/// Outcome of an exhaustive identity check; the witness is the first violating tuple.
struct CheckResult {
  bool passed = true;
  std::string condition;
  std::vector<Element> witness;

  explicit operator bool() const noexcept { return passed; }
  std::string to_string() const;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string condition, std::vector<Element> witness) {
    return {false, std::move(condition), std::move(witness)};
  }
};

/// Dense tables indexed by element index: psi[(a*n + b)*n + c], omega[a*n + b].
class AbelianCocycle {
 public:
  /// The trivial cocycle.
  explicit AbelianCocycle(AbelianGroup group);
  AbelianCocycle(AbelianGroup group, std::vector<RootOfUnity> psi, std::vector<RootOfUnity> omega);

  const AbelianGroup& group() const noexcept { return group_; }
  const std::vector<RootOfUnity>& psi_table() const noexcept { return psi_; }
  const std::vector<RootOfUnity>& omega_table() const noexcept { return omega_; }

  const RootOfUnity& psi(std::size_t a, std::size_t b, std::size_t c) const { return psi_[(a * n_ + b) * n_ + c]; }
  const RootOfUnity& omega(std::size_t a, std::size_t b) const { return omega_[a * n_ + b]; }
  const RootOfUnity& psi(const Element& a, const Element& b, const Element& c) const;
  const RootOfUnity& omega(const Element& a, const Element& b) const;

  /// psi = 1 whenever an argument is 0, omega(a,0) = omega(0,a) = 1.
  bool normalized() const;

  friend bool operator==(const AbelianCocycle&, const AbelianCocycle&) = default;

 private:
  AbelianGroup group_;
  std::size_t n_ = 1;
  std::vector<RootOfUnity> psi_;
  std::vector<RootOfUnity> omega_;
};

/// A normalized map domain x domain -> C^x; table indexed by positions in domain.elements().
class TwoCochain {
 public:
  explicit TwoCochain(Subgroup domain);
  TwoCochain(Subgroup domain, std::vector<RootOfUnity> values);

  const Subgroup& domain() const noexcept { return domain_; }
  const std::vector<RootOfUnity>& values() const noexcept { return values_; }
  const RootOfUnity& at(std::size_t i, std::size_t j) const { return values_[i * domain_.order() + j]; }
  const RootOfUnity& operator()(const Element& a, const Element& b) const;
  bool normalized() const;

  friend bool operator==(const TwoCochain&, const TwoCochain&) = default;

 private:
  Subgroup domain_;
  std::vector<RootOfUnity> values_;
};

class QuadraticForm {
 public:
  /// q == 1.
  explicit QuadraticForm(AbelianGroup group);
  /// Values by element index; not validated here, see validate().
  QuadraticForm(AbelianGroup group, std::vector<RootOfUnity> values);

  const AbelianGroup& group() const noexcept { return group_; }
  const std::vector<RootOfUnity>& values() const noexcept { return values_; }
  const RootOfUnity& operator[](std::size_t index) const { return values_[index]; }
  const RootOfUnity& operator()(const Element& g) const { return values_[group_.index_of(g)]; }

  /// q(0) = 1, q(-g) = q(g), and the polarization is bimultiplicative.
  CheckResult validate() const;

  std::string to_string() const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  AbelianGroup group_;
  std::vector<RootOfUnity> values_;
};

/// Throws InvalidQuadraticForm naming the first violated condition.
void require_valid(const QuadraticForm& q);

/// q(sum a_i e_i) = prod_i q_i^{a_i^2} prod_{i<j} pairing(i,j)^{a_i a_j}; the result is validated.
QuadraticForm form_from_generators(const AbelianGroup& group, const std::vector<RootOfUnity>& generator_values,
                                   const std::vector<std::vector<RootOfUnity>>& pairings);

struct Bicharacter {
  AbelianGroup group;
  std::vector<RootOfUnity> values;  // values[a*n + b]

  const RootOfUnity& operator()(std::size_t a, std::size_t b) const { return values[a * group.order() + b]; }
  const RootOfUnity& operator()(const Element& a, const Element& b) const {
    return (*this)(group.index_of(a), group.index_of(b));
  }
};

CheckResult check_pentagon(const AbelianCocycle& c);
CheckResult check_hexagons(const AbelianCocycle& c);
/// Pentagon, then both hexagons.
CheckResult check_abelian_cocycle(const AbelianCocycle& c);
bool is_abelian_cocycle(const AbelianCocycle& c);

/// q(g) = omega(g,g).  Throws NotACocycle on invalid input, ConventionError if
/// the output fails the quadratic-form axioms.
QuadraticForm trace_form(const AbelianCocycle& c);

/// sigma(g,h) = q(g+h) q(g)^-1 q(h)^-1, checked symmetric and bimultiplicative.
Bicharacter polarization(const QuadraticForm& q);

/// psi'(a,b,c) = psi(a,b,c) phi(b,c) phi(a,b+c) phi(a+b,c)^-1 phi(a,b)^-1,
/// omega'(a,b) = omega(a,b) phi(b,a) phi(a,b)^-1.  With the hexagons above this
/// is the orientation that maps cocycles to cocycles.
AbelianCocycle apply_coboundary(const AbelianCocycle& c, const TwoCochain& phi);

/// Explicit cocycle with trace q, built per cyclic factor from tau_i = q(e_i)
/// and the cross pairings.  Throws NotRealizable / ConventionError.
AbelianCocycle standard_cocycle(const QuadraticForm& q);

inline constexpr std::size_t kClassifyMaxGroupOrder = 4;
inline constexpr std::int64_t kClassifyMaxValueOrder = 8;
inline constexpr std::size_t kFindMuMaxSubgroupOrder = 16;
inline constexpr std::int64_t kFindMuMaxValueOrder = 24;

struct CohomologyClass {
  AbelianCocycle representative;  // lexicographically first cocycle of the class
  QuadraticForm form;
  std::uint64_t cocycle_count = 0;
};

struct H3abClassification {
  AbelianGroup group;
  std::int64_t value_order = 1;
  std::vector<CohomologyClass> classes;  // sorted by the exponent table of the form
  std::uint64_t cocycle_count = 0;       // normalized cocycles with values in mu_N
  std::uint64_t coboundary_count = 0;    // size of every coboundary orbit
};

/// Enumerates every normalized abelian cocycle with values in mu_N and groups
/// them by coboundary orbit; asserts orbits coincide with trace-form fibers.
H3abClassification classify_h3ab(const AbelianGroup& g, std::int64_t value_order);

/// Lexicographically first normalized mu: H x H -> mu_N with
/// mu(b,c) mu(a,b+c) mu(a+b,c)^-1 mu(a,b)^-1 = psi(a,b,c) on H, if any.
std::optional<TwoCochain> find_mu(const AbelianCocycle& c, const Subgroup& h, std::int64_t value_order);

}  // namespace smatrix
