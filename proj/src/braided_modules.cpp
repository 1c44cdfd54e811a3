#include "smatrix/braided_modules.hpp"

#include <algorithm>

#include "smatrix/exact_linalg.hpp"

namespace smatrix {

namespace {

PointedBFC ensure_cocycle(const PointedBFC& b) {
  if (b.has_cocycle()) return b;
  return PointedBFC::with_standard_cocycle(b.form(), b.label());
}

RootOfUnity braiding_root(const BraidedModuleCat& m, const Element& k, const Element& g) {
  const AbelianCocycle& c = m.base.cocycle();
  return c.omega(k, g) * c.omega(g, k) * m.chi(g);
}

bool mu_trivializes(const AbelianCocycle& c, const TwoCochain& mu) {
  const Subgroup& h = mu.domain();
  const AbelianGroup& g = h.parent();
  for (const auto& a : h.elements()) {
    for (const auto& b : h.elements()) {
      for (const auto& x : h.elements()) {
        const RootOfUnity lhs = mu(b, x) * mu(a, g.add(b, x)) / mu(g.add(a, b), x) / mu(a, b);
        if (lhs != c.psi(a, b, x)) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Subgroup> admissible_subgroups(const PointedBFC& b) {
  const Subgroup z = mueger_center(b);
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(b.group())) {
    if (h.is_subgroup_of(z)) out.push_back(std::move(h));
  }
  return out;
}

BraidedModuleCat build_module_cat(const PointedBFC& b, const Subgroup& h, const Character& chi) {
  if (!(h.parent() == b.group())) throw Error(Errc::ShapeMismatch, "H is not a subgroup of " + b.group().to_string());
  if (!(chi.group == b.group())) throw Error(Errc::ShapeMismatch, "chi is not a character of " + b.group().to_string());
  if (!h.is_subgroup_of(mueger_center(b))) {
    throw Error(Errc::NotAdmissible, "H = " + h.to_string() + " is not contained in the Mueger center of '" +
                                         b.label() + "'");
  }
  PointedBFC base = ensure_cocycle(b);
  const std::int64_t e = h.exponent();
  bool tried = false;
  for (const std::int64_t n : {e, 2 * e, 4 * e}) {
    if (n > kFindMuMaxValueOrder) continue;
    tried = true;
    auto mu = find_mu(base.cocycle(), h, n);
    if (!mu) continue;
    if (!mu_trivializes(base.cocycle(), *mu)) {
      throw Error(Errc::InternalInconsistency, "mu returned by the search does not trivialize psi on H");
    }
    Quotient simples = quotient(b.group(), h);
    return BraidedModuleCat{std::move(base), h, std::move(*mu), n, chi, std::move(simples)};
  }
  if (!tried) throw Error(Errc::BoundsExceeded, "exp(H) too large for the mu search");
  throw Error(Errc::NoMuFound, "no mu with values in mu_" + std::to_string(4 * e) + " trivializes psi on H = " +
                                   h.to_string());
}

CycloNumber module_braiding(const BraidedModuleCat& m, const Element& k, const Element& g) {
  return CycloNumber::root(braiding_root(m, k, g));
}

namespace {

RootOfUnity entry_root(const BraidedModuleCat& m, const Element& g, const Subgroup& center) {
  if (!center.contains(g)) throw Error(Errc::NotInCenter, g.to_string() + " is not transparent");
  const auto& reps = m.simples.representatives;
  const RootOfUnity first = braiding_root(m, reps.front(), g);
  for (const auto& k : reps) {
    const RootOfUnity v = braiding_root(m, k, g);
    if (v != first) {
      throw Error(Errc::WellDefinednessViolation, "S-entry at g = " + g.to_string() + " is " + first.to_string() +
                                                      " for k = " + reps.front().to_string() + " but " +
                                                      v.to_string() + " for k = " + k.to_string());
    }
  }
  return first;
}

}  // namespace

CycloNumber smatrix2_entry(const BraidedModuleCat& m, const Element& g) {
  return CycloNumber::root(entry_root(m, g, mueger_center(m.base)));
}

SchurClass schur_class(const BraidedModuleCat& m) {
  const SubgroupPresentation z = present(mueger_center(m.base));
  return SchurClass{m.base, restrict(m.chi, z)};
}

std::vector<SchurClassEntry> schur_classes(const PointedBFC& b) {
  const SubgroupPresentation z = present(mueger_center(b));
  const auto lifts = characters(b.group());
  const Subgroup trivial = Subgroup::trivial(b.group());
  std::vector<SchurClassEntry> out;
  for (const auto& psi : characters(z.group)) {
    const auto it =
        std::find_if(lifts.begin(), lifts.end(), [&](const Character& chi) { return restrict(chi, z) == psi; });
    if (it == lifts.end()) throw Error(Errc::LiftNotFound, "character " + psi.coords.to_string() + " has no lift");
    BraidedModuleCat rep = build_module_cat(b, trivial, *it);
    out.push_back(SchurClassEntry{SchurClass{rep.base, psi}, std::move(rep)});
  }
  return out;
}

SMatrix2 smatrix2(const PointedBFC& b) {
  const Subgroup center = mueger_center(b);
  const auto classes = schur_classes(b);
  const auto& cols = center.elements();
  const auto rows = static_cast<Eigen::Index>(classes.size());
  const auto width = static_cast<Eigen::Index>(cols.size());
  CycloMatrix s = matrix_of_roots(rows, width, [&](Eigen::Index i, Eigen::Index j) {
    return entry_root(classes[static_cast<std::size_t>(i)].representative, cols[static_cast<std::size_t>(j)], center);
  });
  if (rows != width) {
    throw Error(Errc::InternalInconsistency, std::to_string(rows) + " Schur classes but " + std::to_string(width) +
                                                 " transparent simples");
  }
  if (exact_rank(s) != rows) throw Error(Errc::InternalInconsistency, "2-categorical S-matrix is singular");
  std::vector<SchurClass> labels;
  for (const auto& c : classes) labels.push_back(c.cls);
  return SMatrix2{ensure_cocycle(b), center, std::move(labels), cols, std::move(s)};
}

bool verify_character_table(const PointedBFC& b) {
  const SMatrix2 s = smatrix2(b);
  const SubgroupPresentation z = present(s.center);
  const auto chars = characters(z.group);
  const CycloMatrix table = character_table(z.group);
  if (table.rows() != s.matrix.rows() || table.cols() != s.matrix.cols()) return false;
  for (Eigen::Index i = 0; i < table.rows(); ++i) {
    if (!(s.rows[static_cast<std::size_t>(i)].restricted == chars[static_cast<std::size_t>(i)])) return false;
    for (Eigen::Index j = 0; j < table.cols(); ++j) {
      const auto col = static_cast<Eigen::Index>(z.group.index_of(z.to_group(s.cols[static_cast<std::size_t>(j)])));
      if (s.matrix(i, j) != table(i, col)) return false;
    }
  }
  return true;
}

Pi0Report pi0_report(const PointedBFC& b) {
  Pi0Report r;
  r.pi0 = schur_classes(b).size();
  r.pi0_omega = mueger_center(b).order();
  r.equal = r.pi0 == r.pi0_omega;
  return r;
}

SchurClass class_product(const SchurClass& a, const SchurClass& b) {
  if (!(a.base.form() == b.base.form()) || !(a.restricted.group == b.restricted.group)) {
    throw Error(Errc::BaseMismatch, "Schur classes over different categories");
  }
  return SchurClass{a.base, a.restricted * b.restricted};
}

bool verify_group_hom(const PointedBFC& b) {
  const SMatrix2 s = smatrix2(b);
  const auto n = s.rows.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const SchurClass p = class_product(s.rows[x], s.rows[y]);
      const auto it = std::find(s.rows.begin(), s.rows.end(), p);
      if (it == s.rows.end()) return false;
      const auto row = static_cast<Eigen::Index>(it - s.rows.begin());
      for (Eigen::Index g = 0; g < s.matrix.cols(); ++g) {
        const auto i = static_cast<Eigen::Index>(x);
        const auto j = static_cast<Eigen::Index>(y);
        if (s.matrix(row, g) != s.matrix(i, g) * s.matrix(j, g)) return false;
      }
    }
  }
  return true;
}

}  // namespace smatrix
