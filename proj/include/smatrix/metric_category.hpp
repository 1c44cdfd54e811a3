#pragma once

// Pointed braided fusion categories Vect_G^{(psi, omega)} modelled by the metric
// group (G, q).  All simples are invertible with quantum dimension 1, so the
// S-matrix entry of (g, h) is the double-braiding scalar sigma(g, h).

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "smatrix/abelian_group.hpp"
#include "smatrix/cocycle.hpp"

namespace smatrix {

/// Presets and doubles only attach an explicit cocycle table up to this order
/// (the associator table has |G|^3 entries).
inline constexpr std::size_t kCocycleTableMaxOrder = 64;

class PointedBFC {
 public:
  /// Validates q; no cocycle attached.
  static PointedBFC from_form(QuadraticForm q, std::string label);
  /// Validates q and attaches standard_cocycle(q).
  static PointedBFC with_standard_cocycle(QuadraticForm q, std::string label);
  /// Validates c; the form is trace_form(c).
  static PointedBFC from_cocycle(AbelianCocycle c, std::string label);
  /// "trivial", "svect", "semion", "semion-bar", "toric", "double:<group>", "vect:<group>".
  static PointedBFC preset(std::string_view name);

  const AbelianGroup& group() const noexcept { return form_.group(); }
  const QuadraticForm& form() const noexcept { return form_; }
  const std::string& label() const noexcept { return label_; }
  bool has_cocycle() const noexcept { return cocycle_ != nullptr; }
  /// Throws NotACocycle if absent.
  const AbelianCocycle& cocycle() const;

  PointedBFC relabeled(std::string label) const;

  friend bool operator==(const PointedBFC& a, const PointedBFC& b);
  friend PointedBFC drinfeld_double(const AbelianGroup& g);

 private:
  PointedBFC(QuadraticForm q, std::shared_ptr<const AbelianCocycle> c, std::string label)
      : form_(std::move(q)), cocycle_(std::move(c)), label_(std::move(label)) {}

  QuadraticForm form_;
  std::shared_ptr<const AbelianCocycle> cocycle_;
  std::string label_;
};

struct SMatrix1 {
  PointedBFC category;
  CycloMatrix matrix;  // rows and columns in elements(G) order
};

SMatrix1 smatrix1(const PointedBFC& b);
/// diag(q(g)) in elements(G) order.
CycloMatrix tmatrix(const PointedBFC& b);

/// {g : sigma(g, h) = 1 for all h}.
Subgroup mueger_center(const PointedBFC& b);

/// rank(S) = |G|, cross-checked against a trivial Mueger center
/// (InternalInconsistency if the two disagree).
bool is_nondegenerate(const PointedBFC& b);
/// sigma == 1, cross-checked against Mueger center = G.
bool is_symmetric(const PointedBFC& b);

/// G x G^ with q(g, chi) = chi(g); the dual uses the same factor list as G.
PointedBFC drinfeld_double(const AbelianGroup& g);

/// Subgroups L with q|_L == 1.
std::vector<Subgroup> isotropic_subgroups(const PointedBFC& b, std::size_t max_order = kDefaultMaxGroupOrder);
/// Isotropic subgroups with |L|^2 = |G|.
std::vector<Subgroup> lagrangian_subgroups(const PointedBFC& b, std::size_t max_order = kDefaultMaxGroupOrder);

struct CenterReport {
  bool nondegenerate = false;
  std::size_t lagrangian_count = 0;
  bool is_center = false;
  /// Set when b is degenerate: Lagrangian subgroups are then only formal.
  bool degenerate_ambient = false;
  std::vector<Subgroup> witnesses;
};

/// A nondegenerate pointed category with a Lagrangian subgroup is a Drinfeld center.
CenterReport detect_center(const PointedBFC& b, std::size_t max_order = kDefaultMaxGroupOrder);

}  // namespace smatrix
