// smatrix: command-line front end for the pointed S-matrix library.
//
// Exit codes: 0 ok, 1 battery failure, 2 validation error, 3 internal
// inconsistency, 4 bounds exceeded.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "smatrix/battery.hpp"
#include "smatrix/braided_modules.hpp"
#include "smatrix/exact_linalg.hpp"
#include "smatrix/io.hpp"
#include "smatrix/metric_category.hpp"

using namespace smatrix;

namespace {

struct Options {
  std::string cat;
  std::string positional;
  int level = 1;
  std::int64_t values = 0;
  bool json = false;
  std::string out;
  std::size_t max_group_order = kDefaultMaxGroupOrder;
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << v;
  return out.str();
}

/// Result of one subcommand: the machine-readable part, the human rendering,
/// and a canonical description of the inputs for the digest.
struct Outcome {
  Json results;
  std::string text;
  std::string inputs;
  int exit_code = 0;
};

std::string render(const CycloMatrix& m) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.rows()));
  std::size_t width = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      cells[static_cast<std::size_t>(i)].push_back(m(i, j).to_string());
      width = std::max(width, cells[static_cast<std::size_t>(i)].back().size());
    }
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    out << " ";
    for (const auto& c : row) out << " " << std::setw(static_cast<int>(width)) << c;
    out << "\n";
  }
  return out.str();
}

std::string join(const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].to_string();
  return out;
}

PointedBFC category(const Options& o) {
  const std::string& spec = o.cat.empty() ? o.positional : o.cat;
  if (spec.empty()) throw Error(Errc::ParseError, "no category given (use --cat <preset|file> or '-')");
  PointedBFC b = load_category(spec, std::cin);
  if (b.group().order() > o.max_group_order) {
    throw Error(Errc::GroupTooLarge, "|G| = " + std::to_string(b.group().order()) + " exceeds --max-group-order " +
                                         std::to_string(o.max_group_order));
  }
  return b;
}

Outcome cmd_smatrix(const Options& o) {
  const PointedBFC b = category(o);
  Outcome r;
  r.inputs = to_json(b).dump() + "|level=" + std::to_string(o.level);
  std::ostringstream text;
  text << "category: " << b.label() << " (" << b.group().to_string() << ")\n";
  if (o.level == 1) {
    const SMatrix1 s = smatrix1(b);
    const auto rank = exact_rank(s.matrix);
    const bool invertible = rank == s.matrix.rows();
    Json elems = Json::array();
    for (const auto& x : elements(b.group())) elems.push_back(x.to_string());
    r.results = Json{{"category", b.label()}, {"group", b.group().to_string()}, {"level", 1},
                     {"elements", elems},     {"matrix", to_json(s.matrix)},    {"rank", rank},
                     {"invertible", invertible}};
    text << "S (level 1), rows and columns " << join(elements(b.group())) << "\n"
         << render(s.matrix) << "rank: " << rank << "\ninvertible: " << (invertible ? "yes" : "no") << "\n";
  } else {
    const SMatrix2 s = smatrix2(b);
    const bool match = verify_character_table(b);
    Json classes = Json::array();
    for (const auto& c : s.rows) classes.push_back(c.restricted.coords.coords);
    const bool square = s.matrix.rows() == s.matrix.cols();
    const bool invertible = square && !exact_determinant(s.matrix).is_zero();
    r.results = Json{{"category", b.label()},
                     {"center", to_json(s.center)},
                     {"classes", classes},
                     {"matrix", to_json(s.matrix)},
                     {"square", square},
                     {"invertible", invertible},
                     {"character_table_match", match}};
    text << "S (level 2), rows are Schur classes, columns are transparent simples " << join(s.cols) << "\n"
         << render(s.matrix) << "square: " << (square ? "yes" : "no") << "\ninvertible: " << (invertible ? "yes" : "no")
         << "\ncharacter table match: " << (match ? "yes" : "no") << "\n";
  }
  r.text = text.str();
  return r;
}

Outcome cmd_tmatrix(const Options& o) {
  const PointedBFC b = category(o);
  const CycloMatrix t = tmatrix(b);
  Outcome r;
  r.inputs = to_json(b).dump();
  r.results = Json{{"category", b.label()}, {"group", b.group().to_string()}, {"matrix", to_json(t)}};
  r.text = "category: " + b.label() + " (" + b.group().to_string() + ")\nT\n" + render(t);
  return r;
}

Outcome cmd_center(const Options& o) {
  const PointedBFC b = category(o);
  const Subgroup z = mueger_center(b);
  const bool nondegenerate = is_nondegenerate(b);
  const bool symmetric = is_symmetric(b);
  Outcome r;
  r.inputs = to_json(b).dump();
  r.results = Json{{"category", b.label()}, {"group", b.group().to_string()}, {"center", to_json(z)},
                   {"order", z.order()},    {"nondegenerate", nondegenerate}, {"symmetric", symmetric}};
  r.text = "category: " + b.label() + " (" + b.group().to_string() + ")\nMueger center: " + z.to_string() +
           "\nnondegenerate: " + (nondegenerate ? "yes" : "no") + "\nsymmetric: " + (symmetric ? "yes" : "no") + "\n";
  return r;
}

Outcome cmd_lagrangian(const Options& o) {
  const PointedBFC b = category(o);
  const CenterReport c = detect_center(b, o.max_group_order);
  Json witnesses = Json::array();
  std::string listing;
  for (const auto& l : c.witnesses) {
    witnesses.push_back(to_json(l));
    listing += "  " + l.to_string() + "\n";
  }
  Outcome r;
  r.inputs = to_json(b).dump();
  r.results = Json{{"category", b.label()},
                   {"nondegenerate", c.nondegenerate},
                   {"lagrangian_count", c.lagrangian_count},
                   {"is_center", c.is_center},
                   {"degenerate_ambient", c.degenerate_ambient},
                   {"lagrangian_subgroups", witnesses}};
  r.text = "category: " + b.label() + " (" + b.group().to_string() + ")\nLagrangian subgroups: " +
           std::to_string(c.lagrangian_count) + "\n" + listing + "nondegenerate: " + (c.nondegenerate ? "yes" : "no") +
           "\nDrinfeld center: " + (c.is_center ? "yes" : "no") + "\n";
  if (c.degenerate_ambient) r.text += "warning: degenerate ambient category, Lagrangian subgroups are only formal\n";
  return r;
}

Outcome cmd_double(const Options& o) {
  if (o.positional.empty()) throw Error(Errc::ParseError, "double needs a group literal such as Z2xZ2");
  const AbelianGroup g = AbelianGroup::parse(o.positional);
  if (g.order() * g.order() > o.max_group_order) {
    throw Error(Errc::GroupTooLarge, "|G x G^| exceeds --max-group-order " + std::to_string(o.max_group_order));
  }
  const PointedBFC d = drinfeld_double(g);
  Outcome r;
  r.inputs = g.to_string();
  r.results = Json{{"category", to_json(d)}, {"nondegenerate", true}};
  // a bare category document so the output can be piped into another command
  r.text = to_json(d).dump(2) + "\n";
  return r;
}

Outcome cmd_classify(const Options& o) {
  if (o.positional.empty()) throw Error(Errc::ParseError, "classify needs a group literal");
  const AbelianGroup g = AbelianGroup::parse(o.positional);
  const std::int64_t n = o.values > 0 ? o.values : 2 * g.exponent();
  const H3abClassification c = classify_h3ab(g, n);
  Json classes = Json::array();
  std::ostringstream text;
  text << "H3ab(" << g.to_string() << ") with values in mu_" << n << ": " << c.classes.size() << " classes, "
       << c.cocycle_count << " normalized cocycles, coboundary orbits of size " << c.coboundary_count << "\n";
  for (const auto& k : c.classes) {
    classes.push_back(Json{{"q", to_json(k.form)}, {"cocycles", k.cocycle_count}, {"representative", to_json(k.representative)}});
    text << "  q = " << k.form.to_string() << "\n";
  }
  Outcome r;
  r.inputs = g.to_string() + "|N=" + std::to_string(n);
  r.results = Json{{"group", g.to_string()},          {"value_order", n},
                   {"cocycle_count", c.cocycle_count}, {"coboundary_count", c.coboundary_count},
                   {"class_count", c.classes.size()}, {"classes", classes}};
  r.text = text.str();
  return r;
}

Outcome cmd_modcats(const Options& o) {
  const PointedBFC b = category(o);
  const Subgroup z = mueger_center(b);
  const auto admissible = admissible_subgroups(b);
  const auto classes = schur_classes(b);
  const Pi0Report p = pi0_report(b);
  Json subs = Json::array();
  for (const auto& h : admissible) subs.push_back(to_json(h));
  Json cls = Json::array();
  std::ostringstream text;
  text << "category: " << b.label() << " (" << b.group().to_string() << ")\nMueger center: " << z.to_string()
       << "\nadmissible subgroups: " << admissible.size() << "\nSchur classes: " << classes.size() << "\n";
  for (const auto& c : classes) {
    cls.push_back(Json{{"restricted", c.cls.restricted.coords.coords}, {"lift", c.representative.chi.coords.coords}});
    text << "  restricted character " << c.cls.restricted.coords.to_string() << ", lift "
         << c.representative.chi.coords.to_string() << "\n";
  }
  text << "pi0: " << p.pi0 << "  pi0 Omega: " << p.pi0_omega << "  equal: " << (p.equal ? "yes" : "no") << "\n";
  Outcome r;
  r.inputs = to_json(b).dump();
  r.results = Json{{"category", b.label()},
                   {"center", to_json(z)},
                   {"admissible_subgroups", subs},
                   {"classes", cls},
                   {"pi0", Json{{"pi0", p.pi0}, {"pi0_omega", p.pi0_omega}, {"equal", p.equal}}}};
  r.text = text.str();
  return r;
}

Outcome cmd_cocycle_check(const Options& o) {
  const PointedBFC b = category(o);
  const AbelianCocycle& c = b.cocycle();
  const CheckResult pent = check_pentagon(c);
  const CheckResult hex = check_hexagons(c);
  Outcome r;
  r.inputs = to_json(b).dump();
  r.results = Json{{"category", b.label()}, {"pentagon", to_json(pent)}, {"hexagons", to_json(hex)},
                   {"trace_form", to_json(trace_form(c))}};
  r.text = "category: " + b.label() + " (" + b.group().to_string() + ")\npentagon: " + pent.to_string() +
           "\nhexagons: " + hex.to_string() + "\ntrace form: " + trace_form(c).to_string() + "\n";
  return r;
}

Outcome cmd_battery(const Options&) {
  const BatterySummary s = run_all();
  std::ostringstream text;
  std::size_t width = 0;
  for (const auto& rec : s.records) width = std::max(width, rec.case_name.size());
  for (const auto& rec : s.records) {
    text << (rec.pass ? "PASS " : "FAIL ") << std::left << std::setw(static_cast<int>(width)) << rec.case_name << "  "
         << rec.check;
    if (!rec.pass) text << "  (" << rec.witness << ")";
    text << "\n";
  }
  for (const auto& w : s.warnings) text << "warning: " << w << "\n";
  const auto failed = std::count_if(s.records.begin(), s.records.end(), [](const CheckRecord& x) { return !x.pass; });
  text << s.records.size() << " checks, " << failed << " failed\n";
  Outcome r;
  r.inputs = "battery";
  r.results = Json{{"passed", s.passed()}, {"checks", s.to_json()}};
  r.text = text.str();
  r.exit_code = s.passed() ? 0 : 1;
  return r;
}

int exit_code_for(const Error& e) {
  switch (error_class(e.code())) {
    case ErrorClass::Validation:
      return 2;
    case ErrorClass::Inconsistency:
      return 3;
    case ErrorClass::Bounds:
      return 4;
  }
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact S-matrices of pointed braided fusion categories"};
  app.set_version_flag("--version", std::string(SMATRIX_VERSION));
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print a JSON run report");
  app.add_option("--out", o.out, "Write output to PATH instead of stdout");
  app.add_option("--max-group-order", o.max_group_order, "Largest group order accepted")->capture_default_str();

  auto with_category = [&](CLI::App* sub) {
    sub->add_option("--cat", o.cat, "Preset name, JSON file, or - for stdin");
    sub->add_option("category", o.positional, "Preset name, JSON file, or - for stdin");
  };
  using Handler = Outcome (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto* smatrix = app.add_subcommand("smatrix", "S-matrix of level 1 (sigma) or level 2 (Schur classes)");
  with_category(smatrix);
  smatrix->add_option("--level", o.level, "1 or 2")->check(CLI::IsMember({1, 2}))->capture_default_str();
  commands.emplace_back(smatrix, cmd_smatrix);

  auto* tm = app.add_subcommand("tmatrix", "T-matrix diag(q)");
  with_category(tm);
  commands.emplace_back(tm, cmd_tmatrix);

  auto* center = app.add_subcommand("center", "Mueger center, nondegeneracy and symmetry");
  with_category(center);
  commands.emplace_back(center, cmd_center);

  auto* lag = app.add_subcommand("lagrangian", "Lagrangian subgroups and Drinfeld-center detection");
  with_category(lag);
  commands.emplace_back(lag, cmd_lagrangian);

  auto* dbl = app.add_subcommand("double", "Drinfeld double G x G^ as a category document");
  dbl->add_option("group", o.positional, "Group literal, e.g. Z2xZ2")->required();
  commands.emplace_back(dbl, cmd_double);

  auto* cls = app.add_subcommand("classify", "Brute-force H3ab(G, mu_N) classification");
  cls->add_option("group", o.positional, "Group literal")->required();
  cls->add_option("--values", o.values, "Value order N (default 2 exp(G))");
  commands.emplace_back(cls, cmd_classify);

  auto* mod = app.add_subcommand("modcats", "Braided module categories and Schur classes");
  with_category(mod);
  commands.emplace_back(mod, cmd_modcats);

  auto* cc = app.add_subcommand("cocycle-check", "Pentagon and hexagon check of a category's cocycle");
  with_category(cc);
  commands.emplace_back(cc, cmd_cocycle_check);

  auto* bat = app.add_subcommand("battery", "Run the verification battery");
  commands.emplace_back(bat, cmd_battery);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      const auto start = std::chrono::steady_clock::now();
      Outcome r = handler(o);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      std::string output = r.text;
      if (o.json) {
        const std::string echo = sub->get_name();
        Json report{{"command", echo},
                    {"inputs_digest", hex(fnv1a(echo + "|" + r.inputs))},
                    {"results", r.results},
                    {"timing_ms", ms},
                    {"version", SMATRIX_VERSION}};
        output = report.dump(2) + "\n";
      }
      if (o.out.empty()) {
        std::cout << output;
      } else {
        std::ofstream file(o.out);
        if (!file) throw Error(Errc::ParseError, "cannot write " + o.out);
        file << output;
      }
      return r.exit_code;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return exit_code_for(e);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 3;
    }
  }
  return 2;
}
