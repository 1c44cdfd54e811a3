#pragma once

// Finite abelian groups Z/n_1 x ... x Z/n_r, their subgroups, quotients and
// one-dimensional characters.  Elements are enumerated lexicographically by
// coordinates (first factor most significant); every enumeration in this module
// follows that order so matrices built from it are reproducible.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "smatrix/cyclotomic.hpp"

namespace smatrix {

inline constexpr std::size_t kDefaultMaxGroupOrder = 256;

struct Element {
  std::vector<std::int64_t> coords;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

  /// "(a,b,...)" for several factors, "a" for one.
  std::string to_string() const;
};

class AbelianGroup {
 public:
  /// The trivial group is {1}.
  AbelianGroup() : factors_{1} {}
  explicit AbelianGroup(std::vector<std::int64_t> factors);

  /// "Z2", "Z4xZ2", case-insensitive.
  static AbelianGroup parse(std::string_view literal);

  const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  std::size_t order() const noexcept { return order_; }
  std::int64_t exponent() const;
  bool is_trivial() const noexcept { return order_ == 1; }

  Element identity() const { return Element{std::vector<std::int64_t>(factors_.size(), 0)}; }
  Element element_at(std::size_t index) const;
  std::size_t index_of(const Element& g) const;
  /// Right shape and every coordinate reduced.
  bool contains(const Element& g) const;

  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element scale(const Element& a, std::int64_t k) const;
  /// Smallest k > 0 with k*a = 0.
  std::int64_t element_order(const Element& a) const;

  std::string to_string() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.factors_ == b.factors_; }

 private:
  void check_shape(const Element& g) const;

  std::vector<std::int64_t> factors_;
  std::size_t order_ = 1;
};

std::vector<Element> elements(const AbelianGroup& g);

/// Extensional subgroup: equality is by the sorted element list.
class Subgroup {
 public:
  static Subgroup trivial(const AbelianGroup& parent);
  static Subgroup whole(const AbelianGroup& parent);
  /// Closure of `gens` under the group law.
  static Subgroup generated(const AbelianGroup& parent, std::vector<Element> gens);
  /// Throws NotSubgroup unless `elems` is closed and contains the identity.
  static Subgroup from_elements(const AbelianGroup& parent, std::vector<Element> elems);

  const AbelianGroup& parent() const noexcept { return parent_; }
  /// Sorted lexicographically.
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::int64_t exponent() const;

  bool contains(const Element& g) const;
  /// Position of g in elements(); throws NotSubgroup if absent.
  std::size_t position(const Element& g) const;
  bool is_subgroup_of(const Subgroup& other) const;

  std::string to_string() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  Subgroup(AbelianGroup parent, std::vector<Element> elems, std::vector<Element> gens)
      : parent_(std::move(parent)), elements_(std::move(elems)), generators_(std::move(gens)) {}

  AbelianGroup parent_;
  std::vector<Element> elements_;
  std::vector<Element> generators_;
};

Subgroup subgroup_generated(const AbelianGroup& g, std::vector<Element> gens);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

/// Every subgroup once, sorted by (order, element list).  Throws GroupTooLarge
/// when |G| exceeds max_order.
std::vector<Subgroup> all_subgroups(const AbelianGroup& g, std::size_t max_order = kDefaultMaxGroupOrder);

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// left * a * right = diag, diagonal entries non-negative with d_i | d_{i+1}.
struct SmithForm {
  IntMatrix left;
  IntMatrix right;
  IntMatrix diagonal;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Z^k modulo the row lattice of `relations`, which must have finite index.
/// `project` sends x in Z^k to its coordinates in cyclic-factor form.
struct FinitePresentation {
  AbelianGroup group;
  IntMatrix transform;                     // k x k, columns used by project
  std::vector<Eigen::Index> kept_columns;  // columns with invariant factor > 1

  Element project(const std::vector<std::int64_t>& x) const;
};

FinitePresentation present(const IntMatrix& relations);

/// H in cyclic-factor form together with the isomorphism H -> group.
struct SubgroupPresentation {
  Subgroup subgroup;
  AbelianGroup group;
  std::vector<Element> coordinates;  // indexed by position in subgroup.elements()
  std::vector<Element> basis;        // preimage in H of each unit vector of group

  const Element& to_group(const Element& h) const { return coordinates[subgroup.position(h)]; }
};

SubgroupPresentation present(const Subgroup& h);

struct Quotient {
  AbelianGroup group;                   // isomorphic to G/H, via Smith normal form
  std::vector<Element> representatives;  // lexicographically minimal coset members, in order
  std::vector<std::size_t> coset_of;     // by element index of G
  std::vector<Element> image;            // by element index of G, coordinates in `group`
};

/// Throws NotSubgroup if h's parent is not g.
Quotient quotient(const AbelianGroup& g, const Subgroup& h);

/// chi(g) = prod_i zeta_{n_i}^{coords_i * g_i}.
struct Character {
  AbelianGroup group;
  Element coords;

  RootOfUnity operator()(const Element& g) const;
  friend Character operator*(const Character& a, const Character& b);
  bool is_trivial() const;

  friend bool operator==(const Character&, const Character&) = default;
};

/// All |G| characters, lexicographic in coords.
std::vector<Character> characters(const AbelianGroup& g);
RootOfUnity character_eval(const Character& chi, const Element& g);
/// The character of h.group that agrees with chi on every element of H.
Character restrict(const Character& chi, const SubgroupPresentation& h);

/// Rows in characters(G) order, columns in elements(G) order.
CycloMatrix character_table(const AbelianGroup& g);

}  // namespace smatrix
