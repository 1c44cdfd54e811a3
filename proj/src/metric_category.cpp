#include "smatrix/metric_category.hpp"

#include <algorithm>
#include <cmath>

#include "smatrix/exact_linalg.hpp"

namespace smatrix {

namespace {

std::shared_ptr<const AbelianCocycle> cocycle_if_small(const QuadraticForm& q) {
  if (q.group().order() > kCocycleTableMaxOrder) return nullptr;
  return std::make_shared<const AbelianCocycle>(standard_cocycle(q));
}

QuadraticForm single_generator(std::int64_t order, RootOfUnity value) {
  return form_from_generators(AbelianGroup({order}), {value}, {{RootOfUnity()}});
}

}  // namespace

PointedBFC PointedBFC::from_form(QuadraticForm q, std::string label) {
  require_valid(q);
  return PointedBFC(std::move(q), nullptr, std::move(label));
}

PointedBFC PointedBFC::with_standard_cocycle(QuadraticForm q, std::string label) {
  require_valid(q);
  auto c = std::make_shared<const AbelianCocycle>(standard_cocycle(q));
  return PointedBFC(std::move(q), std::move(c), std::move(label));
}

PointedBFC PointedBFC::from_cocycle(AbelianCocycle c, std::string label) {
  QuadraticForm q = trace_form(c);
  return PointedBFC(std::move(q), std::make_shared<const AbelianCocycle>(std::move(c)), std::move(label));
}

PointedBFC PointedBFC::preset(std::string_view name) {
  const std::string label(name);
  auto build = [&](QuadraticForm q) {
    require_valid(q);
    auto c = cocycle_if_small(q);
    return PointedBFC(std::move(q), std::move(c), label);
  };
  if (name == "trivial") return build(QuadraticForm(AbelianGroup()));
  if (name == "svect") return build(single_generator(2, RootOfUnity(2, 1)));
  if (name == "semion") return build(single_generator(2, RootOfUnity(4, 1)));
  if (name == "semion-bar") return build(single_generator(2, RootOfUnity(4, 3)));
  if (name == "toric") return drinfeld_double(AbelianGroup({2})).relabeled(label);
  if (name.starts_with("double:")) return drinfeld_double(AbelianGroup::parse(name.substr(7))).relabeled(label);
  if (name.starts_with("vect:")) return build(QuadraticForm(AbelianGroup::parse(name.substr(5))));
  throw Error(Errc::ParseError, "unknown preset '" + label +
                                    "' (trivial, svect, semion, semion-bar, toric, double:<G>, vect:<G>)");
}

const AbelianCocycle& PointedBFC::cocycle() const {
  if (!cocycle_) throw Error(Errc::NotACocycle, "category '" + label_ + "' carries no explicit cocycle");
  return *cocycle_;
}

PointedBFC PointedBFC::relabeled(std::string label) const { return PointedBFC(form_, cocycle_, std::move(label)); }

bool operator==(const PointedBFC& a, const PointedBFC& b) {
  if (a.label_ != b.label_ || !(a.form_ == b.form_) || a.has_cocycle() != b.has_cocycle()) return false;
  return !a.has_cocycle() || a.cocycle_ == b.cocycle_ || *a.cocycle_ == *b.cocycle_;
}

SMatrix1 smatrix1(const PointedBFC& b) {
  const AbelianGroup& g = b.group();
  const std::size_t n = g.order();
  const Bicharacter sigma = polarization(b.form());
  if (b.has_cocycle()) {
    const AbelianCocycle& c = b.cocycle();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (c.omega(i, j) * c.omega(j, i) != sigma(i, j)) {
          throw Error(Errc::InternalInconsistency, "double braiding differs from the polarization at (" +
                                                       g.element_at(i).to_string() + ", " +
                                                       g.element_at(j).to_string() + ")");
        }
      }
    }
  }
  CycloMatrix s = matrix_of_roots(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n),
                                  [&](Eigen::Index i, Eigen::Index j) {
                                    return sigma(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                                  });
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    if (s(0, i) != CycloNumber(1) || s(i, 0) != CycloNumber(1)) {
      throw Error(Errc::InternalInconsistency, "S-matrix unit row is not trivial");
    }
    for (Eigen::Index j = 0; j < i; ++j) {
      if (s(i, j) != s(j, i)) throw Error(Errc::InternalInconsistency, "S-matrix is not symmetric");
    }
  }
  return SMatrix1{b, std::move(s)};
}

CycloMatrix tmatrix(const PointedBFC& b) {
  const auto n = static_cast<Eigen::Index>(b.group().order());
  CycloMatrix t = CycloMatrix::Constant(n, n, CycloNumber(0));
  for (Eigen::Index i = 0; i < n; ++i) t(i, i) = CycloNumber::root(b.form()[static_cast<std::size_t>(i)]);
  return t;
}

Subgroup mueger_center(const PointedBFC& b) {
  const AbelianGroup& g = b.group();
  const std::size_t n = g.order();
  const Bicharacter sigma = polarization(b.form());
  const RootOfUnity one;
  std::vector<Element> members;
  for (std::size_t i = 0; i < n; ++i) {
    bool transparent = true;
    for (std::size_t j = 0; j < n && transparent; ++j) transparent = sigma(i, j) == one;
    if (transparent) members.push_back(g.element_at(i));
  }
  // from_elements re-checks closure
  return Subgroup::from_elements(g, std::move(members));
}

bool is_nondegenerate(const PointedBFC& b) {
  const SMatrix1 s = smatrix1(b);
  const bool full_rank = exact_rank(s.matrix) == static_cast<Eigen::Index>(b.group().order());
  const bool trivial_center = mueger_center(b).order() == 1;
  if (full_rank != trivial_center) {
    throw Error(Errc::InternalInconsistency, "rank criterion and Mueger center disagree for '" + b.label() + "'");
  }
  return full_rank;
}

bool is_symmetric(const PointedBFC& b) {
  const Bicharacter sigma = polarization(b.form());
  const RootOfUnity one;
  const bool trivial = std::all_of(sigma.values.begin(), sigma.values.end(), [&](const RootOfUnity& x) { return x == one; });
  const bool whole = mueger_center(b).order() == b.group().order();
  if (trivial != whole) {
    throw Error(Errc::InternalInconsistency, "symmetry and Mueger center disagree for '" + b.label() + "'");
  }
  return trivial;
}

PointedBFC drinfeld_double(const AbelianGroup& g) {
  const std::string label = "double:" + g.to_string();
  if (g.is_trivial()) {
    QuadraticForm q(AbelianGroup{});
    return PointedBFC(q, std::make_shared<const AbelianCocycle>(standard_cocycle(q)), label);
  }
  std::vector<std::int64_t> factors = g.factors();
  factors.insert(factors.end(), g.factors().begin(), g.factors().end());
  const AbelianGroup d(factors);
  const std::size_t r = g.rank();
  std::vector<RootOfUnity> values;
  values.reserve(d.order());
  for (std::size_t i = 0; i < d.order(); ++i) {
    const Element x = d.element_at(i);
    RootOfUnity v;
    for (std::size_t k = 0; k < r; ++k) v = v * RootOfUnity(g.factors()[k], x.coords[k] * x.coords[r + k]);
    values.push_back(v);
  }
  QuadraticForm q(d, std::move(values));
  require_valid(q);
  auto c = cocycle_if_small(q);
  PointedBFC out(std::move(q), std::move(c), label);
  if (!is_nondegenerate(out)) throw Error(Errc::InternalInconsistency, "Drinfeld double of " + g.to_string() + " is degenerate");
  return out;
}

std::vector<Subgroup> isotropic_subgroups(const PointedBFC& b, std::size_t max_order) {
  const QuadraticForm& q = b.form();
  const RootOfUnity one;
  const Bicharacter sigma = polarization(q);
  std::vector<Subgroup> out;
  for (auto& l : all_subgroups(b.group(), max_order)) {
    const auto& el = l.elements();
    if (!std::all_of(el.begin(), el.end(), [&](const Element& x) { return q(x) == one; })) continue;
    for (const auto& x : el) {
      for (const auto& y : el) {
        if (sigma(x, y) != one) {
          throw Error(Errc::InternalInconsistency, "isotropic subgroup " + l.to_string() + " pairs nontrivially");
        }
      }
    }
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<Subgroup> lagrangian_subgroups(const PointedBFC& b, std::size_t max_order) {
  const std::size_t n = b.group().order();
  const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (root * root != n) {
    if (n > max_order) throw Error(Errc::GroupTooLarge, "|G| exceeds the enumeration bound");
    return {};
  }
  std::vector<Subgroup> out;
  for (auto& l : isotropic_subgroups(b, max_order)) {
    if (l.order() == root) out.push_back(std::move(l));
  }
  return out;
}

CenterReport detect_center(const PointedBFC& b, std::size_t max_order) {
  CenterReport r;
  r.nondegenerate = is_nondegenerate(b);
  r.witnesses = lagrangian_subgroups(b, max_order);
  r.lagrangian_count = r.witnesses.size();
  r.is_center = r.nondegenerate && r.lagrangian_count >= 1;
  r.degenerate_ambient = !r.nondegenerate;
  return r;
}

}  // namespace smatrix
