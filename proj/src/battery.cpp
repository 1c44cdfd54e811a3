#include "smatrix/battery.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "smatrix/braided_modules.hpp"
#include "smatrix/exact_linalg.hpp"
#include "smatrix/metric_category.hpp"

namespace smatrix {

namespace {

/// Runs `body`; a thrown Error becomes a failure with its message as witness.
CheckRecord run_check(const std::string& case_name, const std::string& check, const std::function<std::string()>& body) {
  try {
    std::string witness = body();
    return CheckRecord{case_name, check, witness.empty(), std::move(witness)};
  } catch (const Error& e) {
    return CheckRecord{case_name, check, false, e.what()};
  }
}

std::string case_name(const QuadraticForm& q) {
  std::string out = q.group().to_string() + " q=(";
  for (std::size_t i = 0; i < q.values().size(); ++i) {
    if (i > 0) out += ",";
    out += q.values()[i].to_string();
  }
  return out + ")";
}

/// Exponent vector over mu_m, one digit per slot, as an odometer.
bool advance(std::vector<std::int64_t>& digits, std::int64_t m) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < m) return true;
    digits[i] = 0;
  }
  return false;
}

void case_checks(const BatteryCase& c, BatterySummary& out) {
  const std::string& name = c.name;
  auto add = [&](const std::string& check, const std::function<std::string()>& body) {
    out.records.push_back(run_check(name, check, body));
  };

  if (const auto r = c.form.validate(); !r) {
    out.records.push_back(CheckRecord{name, "quadratic-form", false, r.to_string()});
    return;
  }
  out.records.push_back(CheckRecord{name, "quadratic-form", true, {}});

  const PointedBFC b = PointedBFC::with_standard_cocycle(c.form, name);

  add("standard-cocycle", [&]() -> std::string {
    return trace_form(b.cocycle()) == c.form ? "" : "trace of the standard cocycle differs from q";
  });
  add("character-table", [&]() -> std::string {
    return verify_character_table(b) ? "" : "2-categorical S-matrix differs from the center's character table";
  });
  add("pi0-bijection", [&]() -> std::string {
    const Pi0Report r = pi0_report(b);
    return r.equal ? "" : "pi0 = " + std::to_string(r.pi0) + ", pi0 Omega = " + std::to_string(r.pi0_omega);
  });
  add("full-rank", [&]() -> std::string {
    const SMatrix2 s = smatrix2(b);
    if (s.matrix.rows() != s.matrix.cols()) return "not square";
    return exact_determinant(s.matrix).is_zero() ? "determinant is zero" : "";
  });
  add("group-hom", [&]() -> std::string { return verify_group_hom(b) ? "" : "S(ab, g) != S(a, g) S(b, g)"; });
  add("nondegeneracy-equivalence", [&]() -> std::string {
    const bool full = exact_rank(smatrix1(b).matrix) == static_cast<Eigen::Index>(b.group().order());
    const bool trivial = mueger_center(b).order() == 1;
    if (full != trivial) return "rank criterion and Mueger center disagree";
    if (is_nondegenerate(b) != full) return "is_nondegenerate disagrees with the rank";
    if (c.nondegenerate && *c.nondegenerate != full) return "pinned nondegeneracy flag differs";
    if (c.symmetric && *c.symmetric != is_symmetric(b)) return "pinned symmetry flag differs";
    return "";
  });
  add("well-defined", [&]() -> std::string {
    // every admissible H, every character of G, every transparent g
    const Subgroup z = mueger_center(b);
    for (const auto& h : admissible_subgroups(b)) {
      for (const auto& chi : characters(b.group())) {
        const BraidedModuleCat m = build_module_cat(b, h, chi);
        for (const auto& g : z.elements()) smatrix2_entry(m, g);
        const BraidedModuleCat regular = build_module_cat(b, Subgroup::trivial(b.group()), chi);
        if (!(schur_class(m) == schur_class(regular))) {
          return "Schur class depends on H = " + h.to_string() + " for chi = " + chi.coords.to_string();
        }
      }
    }
    return "";
  });
}

std::string global_doubles() {
  for (const char* literal : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
    const PointedBFC d = drinfeld_double(AbelianGroup::parse(literal));
    if (!is_nondegenerate(d)) return std::string("double of ") + literal + " is degenerate";
    const CenterReport r = detect_center(d);
    if (!r.is_center) return std::string("double of ") + literal + " not detected as a center";
  }
  const auto toric = lagrangian_subgroups(PointedBFC::preset("toric"));
  if (toric.size() != 2) return "toric code has " + std::to_string(toric.size()) + " Lagrangian subgroups";
  return "";
}

std::string global_braiding_existence() {
  const PointedBFC semion = PointedBFC::preset("semion");
  const Subgroup whole = Subgroup::whole(semion.group());
  const Character trivial{semion.group(), semion.group().identity()};
  try {
    build_module_cat(semion, whole, trivial);
    return "semion accepted H = Z2";
  } catch (const Error& e) {
    if (e.code() != Errc::NotAdmissible) return std::string("semion H = Z2 raised ") + e.what();
  }
  for (std::int64_t n = 1; n <= 8; ++n) {
    if (find_mu(semion.cocycle(), whole, n)) return "find_mu found a mu on the semion at N = " + std::to_string(n);
  }
  const PointedBFC svect = PointedBFC::preset("svect");
  build_module_cat(svect, Subgroup::whole(svect.group()), Character{svect.group(), svect.group().identity()});
  return "";
}

std::string global_symmetric_case() {
  for (const char* literal : {"Z2", "Z2xZ2"}) {
    const AbelianGroup g = AbelianGroup::parse(literal);
    const SMatrix2 s = smatrix2(PointedBFC::preset(std::string("vect:") + literal));
    const CycloMatrix table = character_table(g);
    if (s.matrix.rows() != table.rows() || s.matrix.cols() != table.cols() || s.matrix != table) {
      return std::string("S-matrix of vect ") + literal + " is not the character table";
    }
  }
  return "";
}

std::string global_classification() {
  const H3abClassification c = classify_h3ab(AbelianGroup({2}), 4);
  std::set<RootOfUnity> keys;
  for (const auto& k : c.classes) keys.insert(k.form[1]);
  const std::set<RootOfUnity> expected{RootOfUnity(), RootOfUnity(4, 1), RootOfUnity(2, 1), RootOfUnity(4, 3)};
  if (c.classes.size() != 4 || keys != expected) return "classify(Z2, 4) has " + std::to_string(c.classes.size()) + " classes";
  return "";
}

std::string global_kernel() {
  for (std::int64_t n = 1; n <= 48; ++n) {
    IntPoly product{BigInt(1)};
    for (const std::int64_t d : divisors(n)) product = poly_multiply(product, cyclotomic_polynomial(d));
    IntPoly expected(static_cast<std::size_t>(n + 1), BigInt(0));
    expected[0] = -1;
    expected[static_cast<std::size_t>(n)] = 1;
    if (product != expected) return "product of Phi_d over d | " + std::to_string(n) + " is not x^n - 1";
  }
  for (const char* literal : {"Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2"}) {
    const AbelianGroup g = AbelianGroup::parse(literal);
    const CycloNumber det = exact_determinant(character_table(g));
    const auto n = static_cast<std::int64_t>(g.order());
    BigInt expected = 1;
    for (std::int64_t i = 0; i < n; ++i) expected *= n;
    if (!(det * det.conj() == CycloNumber(Rational(expected)))) {
      return std::string("|det|^2 of the character table of ") + literal + " is not |G|^|G|";
    }
  }
  return "";
}

}  // namespace

std::vector<QuadraticForm> enumerate_quadratic_forms(const AbelianGroup& g) {
  if (g.order() > kEnumerateMaxGroupOrder) {
    throw Error(Errc::GroupTooLarge, "form enumeration is limited to |G| <= " + std::to_string(kEnumerateMaxGroupOrder));
  }
  const std::int64_t m = 2 * g.exponent();
  const std::size_t r = g.rank();
  const std::size_t slots = r + r * (r - 1) / 2;
  const auto elems = elements(g);
  std::vector<QuadraticForm> out;
  std::set<std::vector<RootOfUnity>> seen;
  std::vector<std::int64_t> digits(slots, 0);
  do {
    std::vector<RootOfUnity> values;
    values.reserve(elems.size());
    for (const auto& a : elems) {
      std::int64_t k = 0;
      std::size_t slot = r;
      for (std::size_t i = 0; i < r; ++i) {
        k += digits[i] * a.coords[i] * a.coords[i];
        for (std::size_t j = i + 1; j < r; ++j) k += digits[slot++] * a.coords[i] * a.coords[j];
      }
      values.emplace_back(m, k % m);
    }
    QuadraticForm q(g, values);
    if (q.validate() && seen.insert(values).second) out.push_back(std::move(q));
  } while (advance(digits, m));
  return out;
}

std::vector<BatteryCase> default_roster() {
  std::vector<BatteryCase> roster;
  for (const char* literal : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
    for (auto& q : enumerate_quadratic_forms(AbelianGroup::parse(literal))) {
      std::string name = case_name(q);
      roster.push_back(BatteryCase{std::move(name), std::move(q), std::nullopt, std::nullopt});
    }
  }
  // pinned flags for the named examples
  for (auto& c : roster) {
    if (c.name == "Z2 q=(1,1)" || c.name == "Z2 q=(1,-1)") {
      c.symmetric = true;
      c.nondegenerate = false;
    } else if (c.name == "Z2 q=(1,z4^1)") {
      c.symmetric = false;
      c.nondegenerate = true;
    }
  }
  return roster;
}

bool BatterySummary::passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

Json BatterySummary::to_json() const {
  Json out = Json::array();
  for (const auto& r : records) {
    Json row{{"case", r.case_name}, {"check", r.check}, {"pass", r.pass}};
    if (!r.witness.empty()) row["witness"] = r.witness;
    out.push_back(std::move(row));
  }
  return out;
}

BatterySummary run_battery(const std::vector<BatteryCase>& roster) {
  BatterySummary out;
  if (roster.empty()) out.warnings.push_back("empty roster: nothing was checked");
  for (const auto& c : roster) case_checks(c, out);
  return out;
}

BatterySummary run_all() {
  BatterySummary out = run_battery(default_roster());
  out.records.push_back(run_check("global", "symmetric-case", global_symmetric_case));
  out.records.push_back(run_check("global", "drinfeld-center", global_doubles));
  out.records.push_back(run_check("global", "braiding-existence", global_braiding_existence));
  out.records.push_back(run_check("global", "h3ab-classification", global_classification));
  out.records.push_back(run_check("global", "arithmetic-kernel", global_kernel));
  return out;
}

}  // namespace smatrix
