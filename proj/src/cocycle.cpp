#include <numeric>

#include "smatrix/cocycle.hpp"

namespace smatrix {

namespace {

/// Addition table by element index.
std::vector<std::size_t> sum_table(const AbelianGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> sum(n * n);
  const auto elems = elements(g);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sum[i * n + j] = g.index_of(g.add(elems[i], elems[j]));
  }
  return sum;
}

std::vector<Element> witness_of(const AbelianGroup& g, std::initializer_list<std::size_t> indices) {
  std::vector<Element> out;
  for (const std::size_t i : indices) out.push_back(g.element_at(i));
  return out;
}

}  // namespace

std::string CheckResult::to_string() const {
  if (passed) return "ok";
  std::string out = condition + " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) out += ", ";
    out += witness[i].to_string();
  }
  return out + ")";
}

AbelianCocycle::AbelianCocycle(AbelianGroup group)
    : group_(std::move(group)),
      n_(group_.order()),
      psi_(n_ * n_ * n_),
      omega_(n_ * n_) {}

AbelianCocycle::AbelianCocycle(AbelianGroup group, std::vector<RootOfUnity> psi, std::vector<RootOfUnity> omega)
    : group_(std::move(group)), n_(group_.order()), psi_(std::move(psi)), omega_(std::move(omega)) {
  if (psi_.size() != n_ * n_ * n_ || omega_.size() != n_ * n_) {
    throw Error(Errc::ShapeMismatch, "cocycle tables have the wrong size for " + group_.to_string());
  }
}

const RootOfUnity& AbelianCocycle::psi(const Element& a, const Element& b, const Element& c) const {
  return psi(group_.index_of(a), group_.index_of(b), group_.index_of(c));
}

const RootOfUnity& AbelianCocycle::omega(const Element& a, const Element& b) const {
  return omega(group_.index_of(a), group_.index_of(b));
}

bool AbelianCocycle::normalized() const {
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (!psi(0, a, b).is_one() || !psi(a, 0, b).is_one() || !psi(a, b, 0).is_one()) return false;
    }
    if (!omega(a, 0).is_one() || !omega(0, a).is_one()) return false;
  }
  return true;
}

TwoCochain::TwoCochain(Subgroup domain)
    : domain_(std::move(domain)), values_(domain_.order() * domain_.order()) {}

TwoCochain::TwoCochain(Subgroup domain, std::vector<RootOfUnity> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.order() * domain_.order()) {
    throw Error(Errc::ShapeMismatch, "2-cochain table has the wrong size");
  }
}

const RootOfUnity& TwoCochain::operator()(const Element& a, const Element& b) const {
  return at(domain_.position(a), domain_.position(b));
}

bool TwoCochain::normalized() const {
  // position 0 is the identity
  for (std::size_t a = 0; a < domain_.order(); ++a) {
    if (!at(a, 0).is_one() || !at(0, a).is_one()) return false;
  }
  return true;
}

QuadraticForm::QuadraticForm(AbelianGroup group) : group_(std::move(group)), values_(group_.order()) {}

QuadraticForm::QuadraticForm(AbelianGroup group, std::vector<RootOfUnity> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.order()) {
    throw Error(Errc::ShapeMismatch, "quadratic form table has the wrong size for " + group_.to_string());
  }
}

CheckResult QuadraticForm::validate() const {
  const std::size_t n = group_.order();
  if (!values_[0].is_one()) return CheckResult::fail("q(0) = 1", {group_.identity()});
  for (std::size_t g = 0; g < n; ++g) {
    const Element x = group_.element_at(g);
    if (values_[group_.index_of(group_.neg(x))] != values_[g]) return CheckResult::fail("q(-g) = q(g)", {x});
  }
  const auto sum = sum_table(group_);
  auto sigma = [&](std::size_t a, std::size_t b) {
    return values_[sum[a * n + b]] / (values_[a] * values_[b]);
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      for (std::size_t b = 0; b < n; ++b) {
        if (sigma(sum[a * n + a2], b) != sigma(a, b) * sigma(a2, b)) {
          return CheckResult::fail("sigma(g+g',h) = sigma(g,h) sigma(g',h)", witness_of(group_, {a, a2, b}));
        }
      }
    }
  }
  return CheckResult::pass();
}

std::string QuadraticForm::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += ", ";
    out += group_.element_at(i).to_string() + ": " + values_[i].to_string();
  }
  return out + "}";
}

void require_valid(const QuadraticForm& q) {
  if (const auto r = q.validate(); !r) throw Error(Errc::InvalidQuadraticForm, r.to_string());
}

QuadraticForm form_from_generators(const AbelianGroup& group, const std::vector<RootOfUnity>& generator_values,
                                   const std::vector<std::vector<RootOfUnity>>& pairings) {
  const std::size_t r = group.rank();
  if (generator_values.size() != r) {
    throw Error(Errc::ShapeMismatch, "need one generator value per cyclic factor of " + group.to_string());
  }
  auto pairing = [&](std::size_t i, std::size_t j) {
    return i < pairings.size() && j < pairings[i].size() ? pairings[i][j] : RootOfUnity::one();
  };
  std::vector<RootOfUnity> values;
  values.reserve(group.order());
  for (const auto& a : elements(group)) {
    RootOfUnity v;
    for (std::size_t i = 0; i < r; ++i) {
      v *= generator_values[i].pow(a.coords[i] * a.coords[i]);
      for (std::size_t j = i + 1; j < r; ++j) v *= pairing(i, j).pow(a.coords[i] * a.coords[j]);
    }
    values.push_back(v);
  }
  QuadraticForm q(group, std::move(values));
  require_valid(q);
  return q;
}

CheckResult check_pentagon(const AbelianCocycle& c) {
  const AbelianGroup& g = c.group();
  const std::size_t n = g.order();
  const auto sum = sum_table(g);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t d = 0; d < n; ++d) {
          const RootOfUnity lhs = c.psi(b, x, d) * c.psi(a, sum[b * n + x], d) * c.psi(a, b, x);
          const RootOfUnity rhs = c.psi(sum[a * n + b], x, d) * c.psi(a, b, sum[x * n + d]);
          if (lhs != rhs) return CheckResult::fail("pentagon", witness_of(g, {a, b, x, d}));
        }
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_hexagons(const AbelianCocycle& c) {
  const AbelianGroup& g = c.group();
  const std::size_t n = g.order();
  const auto sum = sum_table(g);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        const RootOfUnity rhs = c.omega(a, b) * c.omega(a, x) * c.psi(a, b, x).inverse() * c.psi(b, a, x) *
                                c.psi(b, x, a).inverse();
        if (c.omega(a, sum[b * n + x]) != rhs) return CheckResult::fail("hexagon H1", witness_of(g, {a, b, x}));
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        const RootOfUnity rhs =
            c.omega(a, x) * c.omega(b, x) * c.psi(a, b, x) * c.psi(a, x, b).inverse() * c.psi(x, a, b);
        if (c.omega(sum[a * n + b], x) != rhs) return CheckResult::fail("hexagon H2", witness_of(g, {a, b, x}));
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_abelian_cocycle(const AbelianCocycle& c) {
  if (auto r = check_pentagon(c); !r) return r;
  return check_hexagons(c);
}

bool is_abelian_cocycle(const AbelianCocycle& c) { return static_cast<bool>(check_abelian_cocycle(c)); }

QuadraticForm trace_form(const AbelianCocycle& c) {
  if (auto r = check_abelian_cocycle(c); !r) throw Error(Errc::NotACocycle, r.to_string());
  const std::size_t n = c.group().order();
  std::vector<RootOfUnity> q(n);
  for (std::size_t g = 0; g < n; ++g) q[g] = c.omega(g, g);
  QuadraticForm form(c.group(), std::move(q));
  if (auto r = form.validate(); !r) {
    throw Error(Errc::ConventionError, "trace of a valid cocycle is not a quadratic form: " + r.to_string());
  }
  return form;
}

Bicharacter polarization(const QuadraticForm& q) {
  const AbelianGroup& g = q.group();
  const std::size_t n = g.order();
  const auto sum = sum_table(g);
  Bicharacter sigma{g, std::vector<RootOfUnity>(n * n)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) sigma.values[a * n + b] = q[sum[a * n + b]] / (q[a] * q[b]);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (sigma(a, b) != sigma(b, a)) {
        throw Error(Errc::InvalidQuadraticForm, "polarization not symmetric at " + g.element_at(a).to_string() +
                                                    ", " + g.element_at(b).to_string());
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (sigma(sum[a * n + b], x) != sigma(a, x) * sigma(b, x)) {
          throw Error(Errc::InvalidQuadraticForm,
                      "polarization not bimultiplicative at " + g.element_at(a).to_string() + ", " +
                          g.element_at(b).to_string() + ", " + g.element_at(x).to_string());
        }
      }
    }
  }
  return sigma;
}

AbelianCocycle apply_coboundary(const AbelianCocycle& c, const TwoCochain& phi) {
  const AbelianGroup& g = c.group();
  if (!(phi.domain() == Subgroup::whole(g))) {
    throw Error(Errc::ShapeMismatch, "coboundary cochain must be defined on all of " + g.to_string());
  }
  if (!phi.normalized()) throw Error(Errc::NotACocycle, "2-cochain is not normalized");
  const std::size_t n = g.order();
  const auto sum = sum_table(g);
  std::vector<RootOfUnity> psi(n * n * n);
  std::vector<RootOfUnity> omega(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      omega[a * n + b] = c.omega(a, b) * phi.at(b, a) / phi.at(a, b);
      for (std::size_t x = 0; x < n; ++x) {
        psi[(a * n + b) * n + x] = c.psi(a, b, x) * phi.at(b, x) * phi.at(a, sum[b * n + x]) /
                                   (phi.at(sum[a * n + b], x) * phi.at(a, b));
      }
    }
  }
  AbelianCocycle out(g, std::move(psi), std::move(omega));
  if (auto r = check_abelian_cocycle(out); !r) {
    throw Error(Errc::NotACocycle, "coboundary action produced a non-cocycle: " + r.to_string());
  }
  return out;
}

AbelianCocycle standard_cocycle(const QuadraticForm& q) {
  require_valid(q);
  const AbelianGroup& g = q.group();
  const std::size_t r = g.rank();
  const auto& n = g.factors();
  const Bicharacter sigma = polarization(q);

  std::vector<Element> unit;
  for (std::size_t i = 0; i < r; ++i) {
    Element e = g.identity();
    e.coords[i] = 1 % n[i];
    unit.push_back(std::move(e));
  }
  std::vector<RootOfUnity> tau(r);
  std::vector<std::vector<RootOfUnity>> cross(r, std::vector<RootOfUnity>(r));
  for (std::size_t i = 0; i < r; ++i) {
    tau[i] = q(unit[i]);
    const std::int64_t bound = n[i] % 2 == 0 ? 2 * n[i] : n[i];
    if (bound % tau[i].order() != 0) {
      throw Error(Errc::NotRealizable, "q(e_" + std::to_string(i) + ") = " + tau[i].to_string() +
                                           " has order not dividing " + std::to_string(bound));
    }
    for (std::size_t j = i + 1; j < r; ++j) {
      cross[i][j] = sigma(unit[i], unit[j]);
      if (std::gcd(n[i], n[j]) % cross[i][j].order() != 0) {
        throw Error(Errc::NotRealizable, "pairing of e_" + std::to_string(i) + ", e_" + std::to_string(j) +
                                             " has order not dividing gcd of the factor orders");
      }
    }
  }

  const std::size_t order = g.order();
  const auto elems = elements(g);
  std::vector<RootOfUnity> psi(order * order * order);
  std::vector<RootOfUnity> omega(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    const auto& x = elems[a].coords;
    for (std::size_t b = 0; b < order; ++b) {
      const auto& y = elems[b].coords;
      RootOfUnity w;
      for (std::size_t i = 0; i < r; ++i) {
        w *= tau[i].pow(x[i] * y[i]);
        for (std::size_t j = i + 1; j < r; ++j) w *= cross[i][j].pow(x[i] * y[j]);
      }
      omega[a * order + b] = w;
      for (std::size_t c = 0; c < order; ++c) {
        const auto& z = elems[c].coords;
        RootOfUnity p;
        for (std::size_t i = 0; i < r; ++i) {
          const std::int64_t carry = (y[i] + z[i]) / n[i];
          if (carry != 0) p *= tau[i].pow(n[i] * x[i] * carry);
        }
        psi[(a * order + b) * order + c] = p;
      }
    }
  }
  AbelianCocycle out(g, std::move(psi), std::move(omega));
  if (auto check = check_abelian_cocycle(out); !check) {
    throw Error(Errc::ConventionError, "standard cocycle fails its own check: " + check.to_string());
  }
  if (!(trace_form(out) == q)) throw Error(Errc::ConventionError, "standard cocycle does not trace back to q");
  return out;
}

}  // namespace smatrix
