// Acceptance run: one PASS/FAIL line per criterion.  A criterion passes when
// its check holds exactly and it finishes inside its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "oracles.hpp"
#include "smatrix/battery.hpp"
#include "smatrix/braided_modules.hpp"
#include "smatrix/exact_linalg.hpp"

using namespace smatrix;

namespace {

struct Verdict {
  bool ok = false;
  std::string detail;
};

std::vector<QuadraticForm> battery_forms() {
  std::vector<QuadraticForm> out;
  for (const auto& c : default_roster()) out.push_back(c.form);
  return out;
}

PointedBFC category(const QuadraticForm& q) { return PointedBFC::with_standard_cocycle(q, q.to_string()); }

CycloMatrix signs(std::initializer_list<std::initializer_list<int>> rows) {
  CycloMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (int x : row) m(i, j++) = CycloNumber(x);
    ++i;
  }
  return m;
}

/// Transparent elements, scanned from the q table.
std::size_t center_size_by_scan(const QuadraticForm& q) {
  const AbelianGroup& g = q.group();
  std::size_t count = 0;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool transparent = true;
    for (std::size_t b = 0; b < g.order(); ++b) {
      const std::size_t c = g.index_of(g.add(g.element_at(a), g.element_at(b)));
      transparent = transparent && (q[c] * q[a].inverse() * q[b].inverse()).is_one();
    }
    count += transparent;
  }
  return count;
}

Verdict character_table_theorem() {
  std::size_t forms = 0;
  std::string counts;
  for (const char* literal : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
    const AbelianGroup g = AbelianGroup::parse(literal);
    const auto enumerated = enumerate_quadratic_forms(g);
    // independent count: every map G -> mu_{2 exp} that is a quadratic form
    std::size_t scanned = 0;
    const std::int64_t m = 2 * g.exponent();
    std::vector<std::int64_t> d(g.order() - 1, 0);
    for (bool more = true; more;) {
      std::vector<RootOfUnity> v{RootOfUnity()};
      for (auto x : d) v.emplace_back(m, x);
      scanned += static_cast<bool>(QuadraticForm(g, v).validate());
      std::size_t i = 0;
      while (i < d.size() && ++d[i] == m) d[i++] = 0;
      more = i < d.size();
    }
    if (scanned != enumerated.size()) {
      return {false, std::string(literal) + ": enumeration " + std::to_string(enumerated.size()) + " vs scan " +
                         std::to_string(scanned)};
    }
    counts += (counts.empty() ? "" : "+") + std::to_string(enumerated.size());
    for (const auto& q : enumerated) {
      if (!verify_character_table(category(q))) return {false, "mismatch at " + q.to_string()};
      ++forms;
    }
  }
  return {true, std::to_string(forms) + " forms (" + counts + ")"};
}

Verdict symmetric_case() {
  const CycloMatrix z2 = signs({{1, 1}, {1, -1}});
  const CycloMatrix klein = signs({{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}});
  if (smatrix2(PointedBFC::preset("vect:Z2")).matrix != z2) return {false, "Z2 table differs"};
  if (smatrix2(PointedBFC::preset("vect:Z2xZ2")).matrix != klein) return {false, "Z2xZ2 table differs"};
  return {true, "Z2 and Z2xZ2 with q = 1"};
}

Verdict pi0_bijection() {
  for (const auto& q : battery_forms()) {
    const Pi0Report r = pi0_report(category(q));
    if (!r.equal || r.pi0_omega != center_size_by_scan(q)) return {false, "counts differ at " + q.to_string()};
  }
  return {true, std::to_string(battery_forms().size()) + " forms"};
}

Verdict full_rank() {
  for (const auto& q : battery_forms()) {
    const SMatrix2 s = smatrix2(category(q));
    if (s.matrix.rows() != s.matrix.cols() || exact_determinant(s.matrix).is_zero()) {
      return {false, "singular at " + q.to_string()};
    }
  }
  return {true, std::to_string(battery_forms().size()) + " forms, det != 0"};
}

Verdict group_hom() {
  for (const auto& q : battery_forms()) {
    if (!verify_group_hom(category(q))) return {false, "fails at " + q.to_string()};
  }
  return {true, std::to_string(battery_forms().size()) + " forms"};
}

Verdict nondegeneracy_equivalence() {
  std::size_t nondegenerate = 0;
  for (const auto& q : battery_forms()) {
    const PointedBFC b = category(q);
    const bool full = exact_rank(smatrix1(b).matrix) == static_cast<Eigen::Index>(q.group().order());
    if (full != (center_size_by_scan(q) == 1) || full != is_nondegenerate(b)) {
      return {false, "criteria disagree at " + q.to_string()};
    }
    nondegenerate += full;
  }
  return {true, std::to_string(battery_forms().size()) + " forms, " + std::to_string(nondegenerate) + " nondegenerate"};
}

Verdict drinfeld_center() {
  for (const char* literal : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
    const PointedBFC d = drinfeld_double(AbelianGroup::parse(literal));
    if (!is_nondegenerate(d) || !detect_center(d).is_center) return {false, std::string("double of ") + literal};
  }
  // Lagrangians of the toric code by a scan of all subsets of Z2 x Z2
  const PointedBFC toric = PointedBFC::preset("toric");
  std::size_t scanned = 0;
  for (const auto& members : oracle::closed_subsets(toric.group())) {
    bool isotropic = true;
    for (auto i : members) isotropic = isotropic && toric.form()[i].is_one();
    scanned += isotropic && members.size() * members.size() == toric.group().order();
  }
  const std::size_t found = lagrangian_subgroups(toric).size();
  if (found != 2 || scanned != 2) return {false, "toric Lagrangians " + std::to_string(found)};
  return {true, "4 doubles, toric has 2 Lagrangians"};
}

Verdict braiding_existence() {
  const AbelianGroup z2({2});
  const Character trivial{z2, Element{{0}}};
  const PointedBFC semion = PointedBFC::preset("semion");
  try {
    build_module_cat(semion, Subgroup::whole(z2), trivial);
    return {false, "semion H = Z2 was accepted"};
  } catch (const Error& e) {
    if (e.code() != Errc::NotAdmissible) return {false, std::string("wrong error ") + e.what()};
  }
  for (std::int64_t n = 1; n <= 8; ++n) {
    if (find_mu(semion.cocycle(), Subgroup::whole(z2), n)) return {false, "mu found at N = " + std::to_string(n)};
  }
  build_module_cat(PointedBFC::preset("svect"), Subgroup::whole(z2), trivial);
  return {true, "semion refused, no mu for N <= 8, svect accepted"};
}

Verdict well_definedness() {
  std::size_t evaluations = 0;
  for (const auto& q : battery_forms()) {
    const PointedBFC b = category(q);
    const Subgroup z = mueger_center(b);
    for (const auto& h : admissible_subgroups(b)) {
      for (const auto& chi : characters(b.group())) {
        const BraidedModuleCat m = build_module_cat(b, h, chi);
        for (const auto& g : z.elements()) {
          if (smatrix2_entry(m, g) != CycloNumber::root(chi(g))) return {false, "entry differs from chi(g)"};
          ++evaluations;
        }
      }
    }
  }
  return {true, std::to_string(evaluations) + " evaluations"};
}

Verdict classification() {
  const AbelianGroup z2({2});
  const H3abClassification k = classify_h3ab(z2, 4);
  std::set<RootOfUnity> keys;
  for (const auto& c : k.classes) keys.insert(c.form[1]);
  const std::set<RootOfUnity> expected{RootOfUnity(), RootOfUnity(4, 1), RootOfUnity(2, 1), RootOfUnity(4, 3)};
  if (k.classes.size() != 4 || keys != expected) return {false, std::to_string(k.classes.size()) + " classes"};
  // brute force: all normalized (psi(1,1,1), omega(1,1)) in mu_4, fibered by the trace
  std::map<RootOfUnity, std::size_t> fibers;
  for (std::int64_t p = 0; p < 4; ++p) {
    for (std::int64_t w = 0; w < 4; ++w) {
      std::vector<RootOfUnity> psi(8);
      std::vector<RootOfUnity> omega(4);
      psi[7] = RootOfUnity(4, p);
      omega[3] = RootOfUnity(4, w);
      const AbelianCocycle c(z2, psi, omega);
      if (is_abelian_cocycle(c)) ++fibers[c.omega(1, 1)];
    }
  }
  for (const auto& c : k.classes) {
    if (fibers[c.form[1]] != c.cocycle_count || c.cocycle_count != k.coboundary_count) {
      return {false, "orbit and fiber sizes differ"};
    }
  }
  return {true, "4 classes keyed by q(1) in {1, i, -1, -i}"};
}

Verdict arithmetic_kernel() {
  for (std::int64_t n = 1; n <= 48; ++n) {
    IntPoly p{BigInt(1)};
    for (const auto d : divisors(n)) p = poly_multiply(p, cyclotomic_polynomial(d));
    IntPoly expected(static_cast<std::size_t>(n + 1), BigInt(0));
    expected.front() = -1;
    expected.back() = 1;
    if (p != expected || cyclotomic_polynomial(n) != oracle::cyclotomic_moebius(n)) {
      return {false, "Phi reconstruction fails at N = " + std::to_string(n)};
    }
  }
  std::size_t groups = 0;
  for (const char* literal : {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2"}) {
    const AbelianGroup g = AbelianGroup::parse(literal);
    const CycloMatrix t = character_table(g);
    const auto n = static_cast<Eigen::Index>(g.order());
    const CycloNumber det = exact_determinant(t);
    BigInt nn = 1;
    for (Eigen::Index i = 0; i < n; ++i) nn *= n;
    if (det * det.conj() != CycloNumber(Rational(nn))) return {false, std::string("|det|^2 wrong for ") + literal};
    if (CycloMatrix(t * conjugate_transpose(t)) != CycloMatrix(CycloMatrix::Identity(n, n) * CycloNumber(n))) {
      return {false, std::string("T T* != |G| Id for ") + literal};
    }
    ++groups;
  }
  return {true, "N <= 48, " + std::to_string(groups) + " groups of order <= 8"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "character-table theorem", 10, character_table_theorem},
      {2, "symmetric case", 1, symmetric_case},
      {3, "pi0 bijection", 5, pi0_bijection},
      {4, "full rank", 10, full_rank},
      {5, "group homomorphism", 5, group_hom},
      {6, "nondegeneracy equivalence", 5, nondegeneracy_equivalence},
      {7, "Drinfeld center", 5, drinfeld_center},
      {8, "braiding existence", 1, braiding_existence},
      {9, "well-definedness", 5, well_definedness},
      {10, "H3ab classification", 5, classification},
      {11, "arithmetic kernel", 5, arithmetic_kernel},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = s < c.limit_s;
    const bool ok = v.ok && in_time;
    failed += !ok;
    std::printf("%s %2d %-26s %7.3f s (limit %4.0f s)  tolerance exact  %s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, s,
                c.limit_s, v.detail.c_str(), in_time ? "" : "  [too slow]");
  }
  std::printf("%d of 11 criteria passed\n", 11 - failed);
  return failed == 0 ? 0 : 1;
}
