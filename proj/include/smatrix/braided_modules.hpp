#pragma once

// Braided module categories (M_{H,mu}, sigma_chi) over a pointed braided fusion
// category, their Schur classes, and the S-matrix pairing classes with the
// transparent simples.  In the pointed case this pairing is the character table
// of the Mueger center.

#include <optional>
#include <vector>

#include "smatrix/abelian_group.hpp"
#include "smatrix/cocycle.hpp"
#include "smatrix/metric_category.hpp"

namespace smatrix {

struct BraidedModuleCat {
  PointedBFC base;  // always carries a cocycle
  Subgroup h;
  TwoCochain mu;  // delta(mu) = psi on H
  std::int64_t mu_value_order = 1;
  Character chi;  // a character of G
  Quotient simples;  // simple objects M_k, [k] in G/H
};

/// Every subgroup of the Mueger center, sorted by (order, elements).
std::vector<Subgroup> admissible_subgroups(const PointedBFC& b);

/// Throws NotAdmissible if H is not inside the Mueger center, NoMuFound if the
/// mu search fails at value orders exp(H), 2 exp(H) and 4 exp(H).
BraidedModuleCat build_module_cat(const PointedBFC& b, const Subgroup& h, const Character& chi);

/// Omega(k,g) Omega(g,k) chi(g).
CycloNumber module_braiding(const BraidedModuleCat& m, const Element& k, const Element& g);

/// module_braiding(m, k, g) for every coset representative k; all values must
/// agree (WellDefinednessViolation otherwise).  g must be transparent.
CycloNumber smatrix2_entry(const BraidedModuleCat& m, const Element& g);

struct SchurClass {
  PointedBFC base;
  Character restricted;  // character of the Mueger center in cyclic-factor form

  /// Classes over the same form compare by restricted character.
  friend bool operator==(const SchurClass& a, const SchurClass& b) {
    return a.base.form() == b.base.form() && a.restricted == b.restricted;
  }
};

SchurClass schur_class(const BraidedModuleCat& m);

struct SchurClassEntry {
  SchurClass cls;
  BraidedModuleCat representative;  // regular module, H trivial
};

/// One class per character of the Mueger center, in characters() order.
/// Throws LiftNotFound if a character does not extend to G.
std::vector<SchurClassEntry> schur_classes(const PointedBFC& b);

struct SMatrix2 {
  PointedBFC base;
  Subgroup center;
  std::vector<SchurClass> rows;
  std::vector<Element> cols;  // center elements, group order
  CycloMatrix matrix;
};

/// Asserts square and invertible (InternalInconsistency otherwise).
SMatrix2 smatrix2(const PointedBFC& b);

/// smatrix2(b) equals character_table of the Mueger center in its presentation.
bool verify_character_table(const PointedBFC& b);

struct Pi0Report {
  std::size_t pi0 = 0;
  std::size_t pi0_omega = 0;
  bool equal = false;
};

Pi0Report pi0_report(const PointedBFC& b);

/// Pointwise product of restricted characters; BaseMismatch across bases.
SchurClass class_product(const SchurClass& a, const SchurClass& b);

/// S(ab, g) = S(a, g) S(b, g) for all classes a, b and transparent g.
bool verify_group_hom(const PointedBFC& b);

}  // namespace smatrix
