#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "smatrix/abelian_group.hpp"

namespace smatrix {

namespace {

/// Lexicographic sort equals index order, so sort indices and map back.
std::vector<Element> to_elements(const AbelianGroup& g, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  std::vector<Element> out;
  out.reserve(indices.size());
  for (const std::size_t i : indices) out.push_back(g.element_at(i));
  return out;
}

std::vector<std::size_t> closure_indices(const AbelianGroup& g, const std::vector<Element>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::size_t> members{g.index_of(g.identity())};
  seen[members[0]] = 1;
  for (std::size_t at = 0; at < members.size(); ++at) {
    const Element x = g.element_at(members[at]);
    for (const auto& s : gens) {
      const std::size_t y = g.index_of(g.add(x, s));
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  }
  return members;
}

/// Greedy lexicographic generating set for a closed element list.
std::vector<Element> greedy_generators(const AbelianGroup& g, const std::vector<Element>& elems) {
  std::vector<Element> gens;
  std::vector<char> span(g.order(), 0);
  span[g.index_of(g.identity())] = 1;
  for (const auto& x : elems) {
    if (span[g.index_of(x)]) continue;
    gens.push_back(x);
    for (const std::size_t i : closure_indices(g, gens)) span[i] = 1;
  }
  return gens;
}

}  // namespace

Subgroup Subgroup::trivial(const AbelianGroup& parent) { return Subgroup(parent, {parent.identity()}, {}); }

Subgroup Subgroup::whole(const AbelianGroup& parent) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < parent.rank(); ++i) {
    if (parent.factors()[i] == 1) continue;
    Element e = parent.identity();
    e.coords[i] = 1;
    gens.push_back(std::move(e));
  }
  return Subgroup(parent, smatrix::elements(parent), std::move(gens));
}

Subgroup Subgroup::generated(const AbelianGroup& parent, std::vector<Element> gens) {
  for (const auto& s : gens) {
    if (!parent.contains(s)) {
      throw Error(Errc::ShapeMismatch, "generator " + s.to_string() + " is not an element of " + parent.to_string());
    }
  }
  auto elems = to_elements(parent, closure_indices(parent, gens));
  return Subgroup(parent, std::move(elems), std::move(gens));
}

Subgroup Subgroup::from_elements(const AbelianGroup& parent, std::vector<Element> elems) {
  std::vector<std::size_t> indices;
  indices.reserve(elems.size());
  for (const auto& x : elems) {
    if (!parent.contains(x)) {
      throw Error(Errc::NotSubgroup, x.to_string() + " is not an element of " + parent.to_string());
    }
    indices.push_back(parent.index_of(x));
  }
  auto sorted = to_elements(parent, std::move(indices));
  if (sorted.empty() || sorted.front() != parent.identity()) {
    throw Error(Errc::NotSubgroup, "element set does not contain the identity");
  }
  for (const auto& a : sorted) {
    for (const auto& b : sorted) {
      const Element c = parent.add(a, b);
      if (!std::binary_search(sorted.begin(), sorted.end(), c)) {
        throw Error(Errc::NotSubgroup, "not closed: " + a.to_string() + " + " + b.to_string() + " = " + c.to_string());
      }
    }
  }
  auto gens = greedy_generators(parent, sorted);
  return Subgroup(parent, std::move(sorted), std::move(gens));
}

std::int64_t Subgroup::exponent() const {
  std::int64_t e = 1;
  for (const auto& x : elements_) e = std::lcm(e, parent_.element_order(x));
  return e;
}

bool Subgroup::contains(const Element& g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

std::size_t Subgroup::position(const Element& g) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) {
    throw Error(Errc::NotSubgroup, g.to_string() + " is not in subgroup " + to_string());
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (!(parent_ == other.parent_)) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](const Element& x) { return other.contains(x); });
}

std::string Subgroup::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ", ";
    out += elements_[i].to_string();
  }
  return out + "}";
}

Subgroup subgroup_generated(const AbelianGroup& g, std::vector<Element> gens) {
  return Subgroup::generated(g, std::move(gens));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  if (!(a.parent() == b.parent())) throw Error(Errc::ShapeMismatch, "subgroups of different groups");
  std::vector<Element> common;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));
  return Subgroup::from_elements(a.parent(), std::move(common));
}

std::vector<Subgroup> all_subgroups(const AbelianGroup& g, std::size_t max_order) {
  if (g.order() > max_order) {
    throw Error(Errc::GroupTooLarge, "|" + g.to_string() + "| = " + std::to_string(g.order()) +
                                         " exceeds the enumeration bound " + std::to_string(max_order));
  }
  const std::size_t n = g.order();
  std::vector<std::size_t> sum(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element a = g.element_at(i);
    for (std::size_t j = 0; j < n; ++j) sum[i * n + j] = g.index_of(g.add(a, g.element_at(j)));
  }

  struct Node {
    std::vector<std::size_t> members;  // sorted
    std::vector<std::size_t> gens;
  };
  std::set<std::vector<std::size_t>> seen;
  std::vector<Node> found;
  found.push_back(Node{{0}, {}});
  seen.insert({0});

  // Every subgroup is reached by adjoining one element at a time.
  for (std::size_t at = 0; at < found.size(); ++at) {
    std::vector<char> in(n, 0);
    for (const std::size_t x : found[at].members) in[x] = 1;
    for (std::size_t x = 0; x < n; ++x) {
      if (in[x]) continue;
      std::vector<std::size_t> grown = found[at].members;
      for (std::size_t m = x; !in[m]; m = sum[m * n + x]) {
        for (const std::size_t s : found[at].members) grown.push_back(sum[s * n + m]);
      }
      std::sort(grown.begin(), grown.end());
      if (seen.insert(grown).second) {
        auto gens = found[at].gens;
        gens.push_back(x);
        found.push_back(Node{std::move(grown), std::move(gens)});
      }
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& node : found) {
    std::vector<Element> gens;
    for (const std::size_t x : node.gens) gens.push_back(g.element_at(x));
    auto sub = Subgroup::generated(g, std::move(gens));
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

SubgroupPresentation present(const Subgroup& h) {
  const AbelianGroup& g = h.parent();
  std::vector<Element> gens;
  for (const auto& s : h.generators()) {
    if (s != g.identity()) gens.push_back(s);
  }
  if (gens.empty()) {
    if (h.order() != 1) throw Error(Errc::InternalInconsistency, "nontrivial subgroup without generators");
    AbelianGroup trivial;
    return SubgroupPresentation{h, trivial, {trivial.identity()}, {}};
  }
  if (h.order() == g.order()) {
    // G itself keeps its own factors and coordinates
    std::vector<Element> basis;
    for (std::size_t i = 0; i < g.rank(); ++i) {
      Element e = g.identity();
      if (g.factors()[i] > 1) e.coords[i] = 1;
      basis.push_back(std::move(e));
    }
    return SubgroupPresentation{h, g, h.elements(), std::move(basis)};
  }

  // Spanning tree of the Cayley graph; every non-tree edge is a relation.
  const std::size_t s = gens.size();
  std::map<Element, std::vector<std::int64_t>> coeff;
  std::vector<std::vector<std::int64_t>> relations;
  std::deque<Element> queue{g.identity()};
  coeff.emplace(g.identity(), std::vector<std::int64_t>(s, 0));
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < s; ++j) {
      const Element y = g.add(x, gens[j]);
      auto c = coeff.at(x);
      ++c[j];
      const auto it = coeff.find(y);
      if (it == coeff.end()) {
        coeff.emplace(y, std::move(c));
        queue.push_back(y);
      } else {
        for (std::size_t i = 0; i < s; ++i) c[i] -= it->second[i];
        if (std::any_of(c.begin(), c.end(), [](std::int64_t v) { return v != 0; })) relations.push_back(std::move(c));
      }
    }
  }

  IntMatrix rel(static_cast<Eigen::Index>(relations.size()), static_cast<Eigen::Index>(s));
  for (std::size_t r = 0; r < relations.size(); ++r) {
    for (std::size_t j = 0; j < s; ++j) rel(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = relations[r][j];
  }
  const FinitePresentation fp = present(rel);

  std::vector<Element> coordinates;
  coordinates.reserve(h.order());
  for (const auto& x : h.elements()) coordinates.push_back(fp.project(coeff.at(x)));
  if (fp.group.order() != h.order() || std::set<Element>(coordinates.begin(), coordinates.end()).size() != h.order()) {
    throw Error(Errc::InternalInconsistency, "subgroup presentation is not a bijection for " + h.to_string());
  }

  std::vector<Element> basis;
  for (std::size_t j = 0; j < fp.kept_columns.size(); ++j) {
    Element unit = fp.group.identity();
    unit.coords[j] = 1;
    const auto it = std::find(coordinates.begin(), coordinates.end(), unit);
    basis.push_back(h.elements()[static_cast<std::size_t>(it - coordinates.begin())]);
  }
  return SubgroupPresentation{h, fp.group, std::move(coordinates), std::move(basis)};
}

Quotient quotient(const AbelianGroup& g, const Subgroup& h) {
  if (!(h.parent() == g)) {
    throw Error(Errc::NotSubgroup, "subgroup of " + h.parent().to_string() + " is not a subgroup of " + g.to_string());
  }
  const auto r = static_cast<Eigen::Index>(g.rank());
  IntMatrix rel = IntMatrix::Zero(r + static_cast<Eigen::Index>(h.generators().size()), r);
  for (Eigen::Index i = 0; i < r; ++i) rel(i, i) = g.factors()[static_cast<std::size_t>(i)];
  for (std::size_t k = 0; k < h.generators().size(); ++k) {
    for (Eigen::Index i = 0; i < r; ++i) rel(r + static_cast<Eigen::Index>(k), i) = h.generators()[k].coords[static_cast<std::size_t>(i)];
  }
  const FinitePresentation fp = present(rel);

  Quotient q{fp.group, {}, std::vector<std::size_t>(g.order()), std::vector<Element>(g.order())};
  std::map<Element, std::size_t> coset_index;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Element x = g.element_at(i);
    q.image[i] = fp.project(x.coords);
    const auto [it, fresh] = coset_index.emplace(q.image[i], q.representatives.size());
    if (fresh) q.representatives.push_back(x);
    q.coset_of[i] = it->second;
  }
  if (q.representatives.size() != g.order() / h.order() || q.group.order() != q.representatives.size()) {
    throw Error(Errc::InternalInconsistency, "quotient " + g.to_string() + "/" + h.to_string() + " has wrong order");
  }
  return q;
}

}  // namespace smatrix
