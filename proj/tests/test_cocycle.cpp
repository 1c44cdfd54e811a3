#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "smatrix/cocycle.hpp"

using namespace smatrix;

namespace {

const AbelianGroup kZ2({2});

/// Normalized cocycle on Z/2 with the given psi(1,1,1) and omega(1,1).
AbelianCocycle z2_cocycle(RootOfUnity psi111, RootOfUnity omega11) {
  std::vector<RootOfUnity> psi(8);
  std::vector<RootOfUnity> omega(4);
  psi[7] = psi111;
  omega[3] = omega11;
  return AbelianCocycle(kZ2, psi, omega);
}

QuadraticForm form(const AbelianGroup& g, std::vector<RootOfUnity> values) { return QuadraticForm(g, std::move(values)); }

/// Every normalized 2-cochain on G with values in mu_n, as an odometer.
template <typename Fn>
void for_each_cochain(const AbelianGroup& g, std::int64_t n, Fn&& fn) {
  const std::size_t m = g.order();
  std::vector<std::int64_t> digits((m - 1) * (m - 1), 0);
  for (;;) {
    std::vector<RootOfUnity> values(m * m);
    for (std::size_t a = 1; a < m; ++a) {
      for (std::size_t b = 1; b < m; ++b) values[a * m + b] = RootOfUnity(n, digits[(a - 1) * (m - 1) + (b - 1)]);
    }
    fn(TwoCochain(Subgroup::whole(g), values));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == n) digits[i++] = 0;
    if (i == digits.size()) return;
  }
}

/// delta(mu)(a,b,c) = mu(b,c) mu(a,b+c) mu(a+b,c)^-1 mu(a,b)^-1, written out.
bool trivializes(const AbelianCocycle& c, const TwoCochain& mu) {
  const auto& h = mu.domain();
  const AbelianGroup& g = h.parent();
  for (const auto& a : h.elements()) {
    for (const auto& b : h.elements()) {
      for (const auto& x : h.elements()) {
        const RootOfUnity d = mu(b, x) * mu(a, g.add(b, x)) * mu(g.add(a, b), x).inverse() * mu(a, b).inverse();
        if (d != c.psi(a, b, x)) return false;
      }
    }
  }
  return true;
}

/// q(e_i) = a primitive 2n_i-th (n_i even) or n_i-th (n_i odd) root, no cross pairings.
QuadraticForm nontrivial_form(const AbelianGroup& g) {
  std::vector<RootOfUnity> gens;
  for (auto n : g.factors()) gens.emplace_back(n % 2 == 0 ? 2 * n : n, 1);
  const std::vector<std::vector<RootOfUnity>> pairings(g.rank(), std::vector<RootOfUnity>(g.rank()));
  return form_from_generators(g, gens, pairings);
}

}  // namespace

TEST_CASE("pentagon examples", "[cocycle]") {
  CHECK(check_pentagon(AbelianCocycle(AbelianGroup::parse("Z2xZ3"))));
  CHECK(check_pentagon(z2_cocycle(RootOfUnity::minus_one(), RootOfUnity())));
  std::vector<RootOfUnity> psi(8);
  psi[6] = RootOfUnity::minus_one();  // psi(1,1,0)
  const CheckResult r = check_pentagon(AbelianCocycle(kZ2, psi, std::vector<RootOfUnity>(4)));
  CHECK_FALSE(r);
  CHECK(r.witness.size() == 4);
}

TEST_CASE("hexagon examples", "[cocycle]") {
  CHECK(check_hexagons(z2_cocycle(RootOfUnity::minus_one(), RootOfUnity(4, 1))));
  CHECK_FALSE(check_hexagons(z2_cocycle(RootOfUnity(), RootOfUnity(4, 1))));
  // psi == 1 and omega a bicharacter
  const AbelianGroup g = AbelianGroup::parse("Z3");
  std::vector<RootOfUnity> omega(9);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) omega[a * 3 + b] = RootOfUnity(3, static_cast<std::int64_t>(a * b));
  }
  CHECK(is_abelian_cocycle(AbelianCocycle(g, std::vector<RootOfUnity>(27), omega)));
}

TEST_CASE("normalized cocycles on Z/2 by brute force", "[cocycle][classify]") {
  // oracle: enumerate psi(1,1,1), omega(1,1) in mu_N and keep the valid pairs
  for (std::int64_t n : {2, 4, 8}) {
    std::set<RootOfUnity> traces;
    std::uint64_t valid = 0;
    for (std::int64_t p = 0; p < n; ++p) {
      for (std::int64_t w = 0; w < n; ++w) {
        const AbelianCocycle c = z2_cocycle(RootOfUnity(n, p), RootOfUnity(n, w));
        if (!is_abelian_cocycle(c)) continue;
        ++valid;
        traces.insert(c.omega(1, 1));
      }
    }
    const H3abClassification k = classify_h3ab(kZ2, n);
    INFO("N = " << n);
    CHECK(k.cocycle_count == valid);
    REQUIRE(k.classes.size() == traces.size());
    for (const auto& cls : k.classes) CHECK(traces.count(cls.form[1]) == 1);
  }
}

TEST_CASE("trace form and polarization", "[cocycle]") {
  CHECK(trace_form(z2_cocycle(RootOfUnity(), RootOfUnity::minus_one()))[1] == RootOfUnity::minus_one());
  CHECK(trace_form(z2_cocycle(RootOfUnity::minus_one(), RootOfUnity(4, 1)))[1] == RootOfUnity(4, 1));
  CHECK(trace_form(AbelianCocycle(kZ2))[1].is_one());
  CHECK_THROWS_AS(trace_form(z2_cocycle(RootOfUnity(), RootOfUnity(4, 1))), Error);

  CHECK(polarization(form(kZ2, {{}, RootOfUnity::minus_one()}))(1, 1).is_one());
  CHECK(polarization(form(kZ2, {{}, RootOfUnity(4, 1)}))(1, 1) == RootOfUnity::minus_one());
  const AbelianGroup z4({4});
  std::vector<RootOfUnity> q;
  for (std::int64_t a = 0; a < 4; ++a) q.emplace_back(8, a * a);
  const Bicharacter s = polarization(form(z4, q));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) CHECK(s(a, b) == RootOfUnity(4, static_cast<std::int64_t>(a * b)));
  }
}

TEST_CASE("quadratic form validation names the failing condition", "[cocycle][form]") {
  CHECK(form(kZ2, {{}, RootOfUnity(4, 1)}).validate());
  const CheckResult r = form(kZ2, {{}, RootOfUnity(8, 1)}).validate();
  CHECK_FALSE(r);
  CHECK(r.condition.find("sigma") != std::string::npos);
  CHECK_FALSE(form(kZ2, {RootOfUnity::minus_one(), {}}).validate());
  const AbelianGroup z3({3});
  CHECK_FALSE(form(z3, {{}, RootOfUnity(3, 1), RootOfUnity(3, 2)}).validate());
  CHECK_THROWS_AS(require_valid(form(kZ2, {{}, RootOfUnity(8, 1)})), Error);
  const QuadraticForm t = form_from_generators(AbelianGroup::parse("Z2xZ2"), {{}, {}}, {{{}, RootOfUnity(2, 1)}, {{}, {}}});
  CHECK(t.values() == std::vector<RootOfUnity>{{}, {}, {}, RootOfUnity::minus_one()});
}

TEST_CASE("coboundaries keep the trace form", "[cocycle][coboundary]") {
  const AbelianCocycle semion = z2_cocycle(RootOfUnity::minus_one(), RootOfUnity(4, 1));
  const TwoCochain one(Subgroup::whole(kZ2));
  CHECK(apply_coboundary(semion, one) == semion);

  std::vector<RootOfUnity> v(4);
  v[3] = RootOfUnity::minus_one();
  const AbelianCocycle moved = apply_coboundary(semion, TwoCochain(Subgroup::whole(kZ2), v));
  CHECK(trace_form(moved) == trace_form(semion));
  // on Z/2 every normalized coboundary is trivial
  CHECK(moved == semion);

  for (const char* literal : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
    const AbelianGroup g = AbelianGroup::parse(literal);
    for (const auto& q : {QuadraticForm(g), nontrivial_form(g)}) {
      const AbelianCocycle c = standard_cocycle(q);
      for (std::int64_t n : {2, 3, 4}) {
        if (g.order() == 4 && n > 2) continue;
        for_each_cochain(g, n, [&](const TwoCochain& phi) { CHECK(trace_form(apply_coboundary(c, phi)) == q); });
      }
    }
  }
}

TEST_CASE("coboundaries on random cochains at N = 4", "[cocycle][coboundary][property]") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::int64_t> digit(0, 3);
  for (const char* literal : {"Z4", "Z2xZ2"}) {
    const AbelianGroup g = AbelianGroup::parse(literal);
    const QuadraticForm q = nontrivial_form(g);
    const AbelianCocycle c = standard_cocycle(q);
    const std::size_t m = g.order();
    for (int trial = 0; trial < 150; ++trial) {
      std::vector<RootOfUnity> values(m * m);
      for (std::size_t a = 1; a < m; ++a) {
        for (std::size_t b = 1; b < m; ++b) values[a * m + b] = RootOfUnity(4, digit(rng));
      }
      CHECK(trace_form(apply_coboundary(c, TwoCochain(Subgroup::whole(g), values))) == q);
    }
  }
}

TEST_CASE("the opposite omega orientation breaks the hexagons", "[cocycle][coboundary]") {
  // omega'(a,b) = omega(a,b) phi(a,b) phi(b,a)^-1 with psi' = psi delta(phi)
  const AbelianGroup g({3});
  std::vector<RootOfUnity> phi(9);
  phi[1 * 3 + 2] = RootOfUnity(3, 1);
  const TwoCochain p(Subgroup::whole(g), phi);
  const AbelianCocycle good = apply_coboundary(AbelianCocycle(g), p);
  std::vector<RootOfUnity> flipped = good.omega_table();
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) flipped[a * 3 + b] = p.at(a, b) / p.at(b, a);
  }
  CHECK(is_abelian_cocycle(good));
  CHECK_FALSE(check_hexagons(AbelianCocycle(g, good.psi_table(), flipped)));
}

TEST_CASE("standard cocycle examples", "[cocycle][standard]") {
  const AbelianCocycle semion = standard_cocycle(form(kZ2, {{}, RootOfUnity(4, 1)}));
  CHECK(semion.omega(1, 1) == RootOfUnity(4, 1));
  CHECK(semion.psi(1, 1, 1) == RootOfUnity::minus_one());
  const AbelianCocycle svect = standard_cocycle(form(kZ2, {{}, RootOfUnity::minus_one()}));
  CHECK(svect.omega(1, 1) == RootOfUnity::minus_one());
  for (const auto& x : svect.psi_table()) CHECK(x.is_one());
  CHECK(standard_cocycle(QuadraticForm(AbelianGroup::parse("Z2xZ3"))) == AbelianCocycle(AbelianGroup::parse("Z2xZ3")));
  CHECK_THROWS_AS(standard_cocycle(form(kZ2, {{}, RootOfUnity(8, 1)})), Error);
}

TEST_CASE("classification bounds and small cases", "[cocycle][classify]") {
  const H3abClassification trivial = classify_h3ab(AbelianGroup(), 1);
  CHECK(trivial.classes.size() == 1);
  const H3abClassification z3 = classify_h3ab(AbelianGroup({3}), 3);
  REQUIRE(z3.classes.size() == 3);
  std::set<RootOfUnity> keys;
  for (const auto& c : z3.classes) keys.insert(c.form[1]);
  CHECK(keys == std::set<RootOfUnity>{RootOfUnity(), RootOfUnity(3, 1), RootOfUnity(3, 2)});
  for (const auto& c : z3.classes) {
    CHECK(is_abelian_cocycle(c.representative));
    CHECK(trace_form(c.representative) == c.form);
    CHECK(c.cocycle_count == z3.coboundary_count);
  }
  CHECK_THROWS_AS(classify_h3ab(AbelianGroup({8}), 2), Error);
  CHECK_THROWS_AS(classify_h3ab(AbelianGroup({2}), 9), Error);
}

TEST_CASE("find_mu", "[cocycle][mu]") {
  const AbelianCocycle semion = z2_cocycle(RootOfUnity::minus_one(), RootOfUnity(4, 1));
  const Subgroup whole = Subgroup::whole(kZ2);
  CHECK_FALSE(find_mu(semion, whole, 2));
  CHECK_FALSE(find_mu(semion, whole, 4));
  const auto trivial = find_mu(AbelianCocycle(kZ2), whole, 2);
  REQUIRE(trivial);
  for (const auto& x : trivial->values()) CHECK(x.is_one());

  // psi = delta(phi) is trivialized; the returned mu is checked by the oracle
  const AbelianGroup g = AbelianGroup::parse("Z2xZ2");
  std::vector<RootOfUnity> phi(16);
  phi[1 * 4 + 2] = RootOfUnity(4, 1);
  phi[3 * 4 + 1] = RootOfUnity(2, 1);
  const AbelianCocycle c = apply_coboundary(AbelianCocycle(g), TwoCochain(Subgroup::whole(g), phi));
  const auto mu = find_mu(c, Subgroup::whole(g), 4);
  REQUIRE(mu);
  CHECK(mu->normalized());
  CHECK(trivializes(c, *mu));
  CHECK_THROWS_AS(find_mu(c, Subgroup::whole(g), 25), Error);
}
