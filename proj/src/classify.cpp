// Brute-force searches over root-of-unity valued cochains.  Values in mu_N are
// handled as exponents mod N, so every identity becomes a linear congruence.

#include <algorithm>
#include <map>
#include <unordered_set>

#include "smatrix/cocycle.hpp"

namespace smatrix {

namespace {

struct Term {
  int var;
  int coeff;
};

/// sum coeff * x[var] == rhs (mod N)
struct Congruence {
  std::vector<Term> terms;
  int rhs = 0;
};

class CongruenceBuilder {
 public:
  explicit CongruenceBuilder(int modulus) : modulus_(modulus) {}

  /// var < 0 marks a normalized slot fixed to exponent 0.
  void add(int var, int coeff) {
    if (var >= 0) acc_[var] += coeff;
  }

  /// Returns false when the congruence has no variables left; `rhs` is then
  /// what must hold for the constant part.
  bool finish(int rhs, Congruence& out) {
    out = Congruence{};
    for (const auto& [var, coeff] : acc_) {
      const int c = ((coeff % modulus_) + modulus_) % modulus_;
      if (c != 0) out.terms.push_back({var, c});
    }
    out.rhs = ((rhs % modulus_) + modulus_) % modulus_;
    acc_.clear();
    return !out.terms.empty();
  }

 private:
  int modulus_;
  std::map<int, int> acc_;
};

/// Depth-first search over x in (Z/N)^vars, lexicographic, checking each
/// congruence as soon as its last variable is assigned.
class CongruenceSearch {
 public:
  CongruenceSearch(int vars, int modulus, std::vector<Congruence> system)
      : vars_(vars), modulus_(modulus), x_(static_cast<std::size_t>(vars), 0), by_last_(static_cast<std::size_t>(vars)) {
    for (auto& c : system) {
      int last = 0;
      for (const auto& t : c.terms) last = std::max(last, t.var);
      by_last_[static_cast<std::size_t>(last)].push_back(std::move(c));
    }
  }

  /// Calls visit(x) for every solution in lexicographic order until it returns false.
  template <typename Visit>
  void run(Visit&& visit) {
    if (vars_ == 0) {
      visit(x_);
      return;
    }
    descend(0, visit);
  }

 private:
  template <typename Visit>
  bool descend(int depth, Visit& visit) {
    const auto d = static_cast<std::size_t>(depth);
    for (int v = 0; v < modulus_; ++v) {
      x_[d] = static_cast<std::uint8_t>(v);
      if (!satisfied(d)) continue;
      if (depth + 1 == vars_) {
        if (!visit(x_)) return false;
      } else if (!descend(depth + 1, visit)) {
        return false;
      }
    }
    return true;
  }

  bool satisfied(std::size_t depth) const {
    for (const auto& c : by_last_[depth]) {
      int acc = 0;
      for (const auto& t : c.terms) acc += t.coeff * x_[static_cast<std::size_t>(t.var)];
      if (acc % modulus_ != c.rhs) return false;
    }
    return true;
  }

  int vars_;
  int modulus_;
  std::vector<std::uint8_t> x_;
  std::vector<std::vector<Congruence>> by_last_;
};

std::vector<std::size_t> sum_table(const AbelianGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> sum(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sum[i * n + j] = g.index_of(g.add(g.element_at(i), g.element_at(j)));
  }
  return sum;
}

std::string key_of(const std::vector<std::uint8_t>& x) { return std::string(x.begin(), x.end()); }

}  // namespace

H3abClassification classify_h3ab(const AbelianGroup& g, std::int64_t value_order) {
  if (g.order() > kClassifyMaxGroupOrder) {
    throw Error(Errc::GroupTooLarge, "classification is limited to |G| <= " + std::to_string(kClassifyMaxGroupOrder));
  }
  if (value_order < 1 || value_order > kClassifyMaxValueOrder) {
    throw Error(Errc::OrderTooLarge, "classification is limited to value orders 1.." +
                                         std::to_string(kClassifyMaxValueOrder));
  }
  const std::size_t n = g.order();
  const int modulus = static_cast<int>(value_order);
  const auto sum = sum_table(g);

  // psi(a,b,c) and omega(a,b) with all arguments nonzero are the free slots
  std::vector<int> psi_var(n * n * n, -1);
  std::vector<int> omega_var(n * n, -1);
  int vars = 0;
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = 1; b < n; ++b) {
      for (std::size_t c = 1; c < n; ++c) psi_var[(a * n + b) * n + c] = vars++;
    }
  }
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = 1; b < n; ++b) omega_var[a * n + b] = vars++;
  }
  auto psi = [&](std::size_t a, std::size_t b, std::size_t c) { return psi_var[(a * n + b) * n + c]; };
  auto omega = [&](std::size_t a, std::size_t b) { return omega_var[a * n + b]; };
  auto s = [&](std::size_t a, std::size_t b) { return sum[a * n + b]; };

  std::vector<Congruence> system;
  CongruenceBuilder builder(modulus);
  auto push = [&] {
    Congruence c;
    if (builder.finish(0, c)) system.push_back(std::move(c));
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          builder.add(psi(b, c, d), 1);
          builder.add(psi(a, s(b, c), d), 1);
          builder.add(psi(a, b, c), 1);
          builder.add(psi(s(a, b), c, d), -1);
          builder.add(psi(a, b, s(c, d)), -1);
          push();
        }
        builder.add(omega(a, s(b, c)), 1);
        builder.add(omega(a, b), -1);
        builder.add(omega(a, c), -1);
        builder.add(psi(a, b, c), 1);
        builder.add(psi(b, a, c), -1);
        builder.add(psi(b, c, a), 1);
        push();
        builder.add(omega(s(a, b), c), 1);
        builder.add(omega(a, c), -1);
        builder.add(omega(b, c), -1);
        builder.add(psi(a, b, c), -1);
        builder.add(psi(a, c, b), 1);
        builder.add(psi(c, a, b), -1);
        push();
      }
    }
  }

  auto satisfies_all = [&](const std::vector<std::uint8_t>& x) {
    return std::all_of(system.begin(), system.end(), [&](const Congruence& c) {
      int acc = 0;
      for (const auto& t : c.terms) acc += t.coeff * x[static_cast<std::size_t>(t.var)];
      return acc % modulus == c.rhs;
    });
  };

  // Coboundary subgroup, closed from the images of the elementary cochains.
  const auto width = static_cast<std::size_t>(vars);
  std::vector<std::vector<std::uint8_t>> generators;
  for (std::size_t p = 1; p < n; ++p) {
    for (std::size_t q = 1; q < n; ++q) {
      auto phi = [&](std::size_t a, std::size_t b) { return (a == p && b == q) ? 1 : 0; };
      std::vector<std::uint8_t> delta(width, 0);
      for (std::size_t a = 1; a < n; ++a) {
        for (std::size_t b = 1; b < n; ++b) {
          const int w = phi(b, a) - phi(a, b);
          delta[static_cast<std::size_t>(omega(a, b))] = static_cast<std::uint8_t>((w % modulus + modulus) % modulus);
          for (std::size_t c = 1; c < n; ++c) {
            const int v = phi(b, c) + phi(a, s(b, c)) - phi(s(a, b), c) - phi(a, b);
            delta[static_cast<std::size_t>(psi(a, b, c))] = static_cast<std::uint8_t>((v % modulus + modulus) % modulus);
          }
        }
      }
      if (!satisfies_all(delta)) throw Error(Errc::ConventionError, "a coboundary fails the cocycle conditions");
      generators.push_back(std::move(delta));
    }
  }
  std::unordered_set<std::string> coboundaries;
  std::vector<std::vector<std::uint8_t>> frontier{std::vector<std::uint8_t>(width, 0)};
  coboundaries.insert(key_of(frontier[0]));
  for (std::size_t at = 0; at < frontier.size(); ++at) {
    for (const auto& gen : generators) {
      auto next = frontier[at];
      for (std::size_t i = 0; i < width; ++i) next[i] = static_cast<std::uint8_t>((next[i] + gen[i]) % modulus);
      if (coboundaries.insert(key_of(next)).second) frontier.push_back(std::move(next));
    }
  }
  for (const auto& b : frontier) {
    for (std::size_t x = 1; x < n; ++x) {
      if (b[static_cast<std::size_t>(omega(x, x))] != 0) {
        throw Error(Errc::InternalInconsistency, "a coboundary changes the trace form");
      }
    }
  }
  frontier.clear();

  struct Fiber {
    std::vector<std::uint8_t> first;
    std::uint64_t count = 0;
  };
  std::map<std::vector<std::uint8_t>, Fiber> fibers;  // keyed by trace exponents
  std::uint64_t total = 0;
  CongruenceSearch search(vars, modulus, system);
  search.run([&](const std::vector<std::uint8_t>& x) {
    ++total;
    std::vector<std::uint8_t> trace(n, 0);
    for (std::size_t a = 1; a < n; ++a) trace[a] = x[static_cast<std::size_t>(omega(a, a))];
    auto [it, fresh] = fibers.try_emplace(trace);
    if (fresh) {
      it->second.first = x;
    } else {
      std::vector<std::uint8_t> diff(width);
      for (std::size_t i = 0; i < width; ++i) {
        diff[i] = static_cast<std::uint8_t>((x[i] + modulus - it->second.first[i]) % modulus);
      }
      if (!coboundaries.count(key_of(diff))) {
        throw Error(Errc::InternalInconsistency, "two cocycles with equal trace form are not cohomologous");
      }
    }
    ++it->second.count;
    return true;
  });

  H3abClassification out{g, value_order, {}, total, coboundaries.size()};
  for (const auto& [trace, fiber] : fibers) {
    if (fiber.count != coboundaries.size()) {
      throw Error(Errc::InternalInconsistency, "coboundary orbit and trace-form fiber sizes differ");
    }
    std::vector<RootOfUnity> psi_table(n * n * n);
    std::vector<RootOfUnity> omega_table(n * n);
    for (std::size_t i = 0; i < psi_table.size(); ++i) {
      if (psi_var[i] >= 0) psi_table[i] = RootOfUnity(value_order, fiber.first[static_cast<std::size_t>(psi_var[i])]);
    }
    for (std::size_t i = 0; i < omega_table.size(); ++i) {
      if (omega_var[i] >= 0) {
        omega_table[i] = RootOfUnity(value_order, fiber.first[static_cast<std::size_t>(omega_var[i])]);
      }
    }
    AbelianCocycle rep(g, std::move(psi_table), std::move(omega_table));
    // independent re-check through the RootOfUnity implementation of the identities
    if (!is_abelian_cocycle(rep)) throw Error(Errc::ConventionError, "enumerated cocycle fails check_abelian_cocycle");
    QuadraticForm form = trace_form(rep);
    out.classes.push_back(CohomologyClass{std::move(rep), std::move(form), fiber.count});
  }
  return out;
}

std::optional<TwoCochain> find_mu(const AbelianCocycle& c, const Subgroup& h, std::int64_t value_order) {
  if (!(h.parent() == c.group())) throw Error(Errc::ShapeMismatch, "subgroup and cocycle live on different groups");
  if (h.order() > kFindMuMaxSubgroupOrder || value_order < 1 || value_order > kFindMuMaxValueOrder) {
    throw Error(Errc::BoundsExceeded, "find_mu is limited to |H| <= " + std::to_string(kFindMuMaxSubgroupOrder) +
                                          " and value orders 1.." + std::to_string(kFindMuMaxValueOrder));
  }
  const AbelianGroup& g = c.group();
  const std::size_t m = h.order();
  const int modulus = static_cast<int>(value_order);
  std::vector<std::size_t> index(m);
  for (std::size_t i = 0; i < m; ++i) index[i] = g.index_of(h.elements()[i]);
  std::vector<std::size_t> sum(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) sum[i * m + j] = h.position(g.add(h.elements()[i], h.elements()[j]));
  }

  std::vector<int> var(m * m, -1);
  int vars = 0;
  for (std::size_t a = 1; a < m; ++a) {
    for (std::size_t b = 1; b < m; ++b) var[a * m + b] = vars++;
  }

  std::vector<Congruence> system;
  CongruenceBuilder builder(modulus);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t x = 0; x < m; ++x) {
        const RootOfUnity& target = c.psi(index[a], index[b], index[x]);
        if (value_order % target.order() != 0) return std::nullopt;  // delta mu only takes values in mu_N
        builder.add(var[b * m + x], 1);
        builder.add(var[a * m + sum[b * m + x]], 1);
        builder.add(var[sum[a * m + b] * m + x], -1);
        builder.add(var[a * m + b], -1);
        Congruence cong;
        const int rhs = static_cast<int>(target.exponent_in(value_order));
        if (builder.finish(rhs, cong)) {
          system.push_back(std::move(cong));
        } else if (cong.rhs != 0) {
          return std::nullopt;  // 1 = psi(a,b,c) forced and false
        }
      }
    }
  }

  std::optional<std::vector<std::uint8_t>> solution;
  CongruenceSearch search(vars, modulus, std::move(system));
  search.run([&](const std::vector<std::uint8_t>& x) {
    solution = x;
    return false;
  });
  if (!solution) return std::nullopt;

  std::vector<RootOfUnity> values(m * m);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (var[i] >= 0) values[i] = RootOfUnity(value_order, (*solution)[static_cast<std::size_t>(var[i])]);
  }
  return TwoCochain(h, std::move(values));
}

}  // namespace smatrix
