#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "smatrix/abelian_group.hpp"

using namespace smatrix;

namespace {

const char* const kGroups[] = {"Z1", "Z2", "Z3", "Z4", "Z6", "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2", "Z3xZ3", "Z4xZ4", "Z2xZ6"};

std::vector<std::size_t> indices_of(const Subgroup& h) {
  std::vector<std::size_t> out;
  for (const auto& x : h.elements()) out.push_back(h.parent().index_of(x));
  return out;
}

}  // namespace

TEST_CASE("group literals", "[group]") {
  const AbelianGroup g = AbelianGroup::parse("z2xZ4");
  CHECK(g.factors() == std::vector<std::int64_t>{2, 4});
  CHECK(g.order() == 8);
  CHECK(g.exponent() == 4);
  CHECK(g.to_string() == "Z2xZ4");
  CHECK(AbelianGroup().is_trivial());
  CHECK_THROWS_AS(AbelianGroup::parse("Z0"), Error);
  CHECK_THROWS_AS(AbelianGroup::parse("Z2x"), Error);
  CHECK_THROWS_AS(AbelianGroup::parse("S3"), Error);
}

TEST_CASE("elements are enumerated lexicographically", "[group]") {
  const AbelianGroup g = AbelianGroup::parse("Z2xZ3");
  const auto el = elements(g);
  REQUIRE(el.size() == 6);
  CHECK(el[1] == Element{{0, 1}});
  CHECK(el[3] == Element{{1, 0}});
  CHECK(std::is_sorted(el.begin(), el.end()));
  for (std::size_t i = 0; i < el.size(); ++i) CHECK(g.index_of(el[i]) == i);
  CHECK(g.add(Element{{1, 2}}, Element{{1, 2}}) == Element{{0, 1}});
  CHECK(g.neg(Element{{1, 1}}) == Element{{1, 2}});
  CHECK(g.element_order(Element{{1, 1}}) == 6);
  CHECK_THROWS_AS(g.index_of(Element{{2, 0}}), Error);
}

TEST_CASE("subgroup enumeration matches a scan of all subsets", "[group][subgroup]") {
  for (const char* literal : kGroups) {
    const AbelianGroup g = AbelianGroup::parse(literal);
    if (g.order() > 16) continue;
    INFO(literal);
    const auto subs = all_subgroups(g);
    std::set<std::vector<std::size_t>> found;
    for (const auto& h : subs) found.insert(indices_of(h));
    CHECK(found.size() == subs.size());
    CHECK(found == oracle::closed_subsets(g));
  }
  CHECK(all_subgroups(AbelianGroup::parse("Z2xZ2")).size() == 5);
  CHECK(all_subgroups(AbelianGroup::parse("Z2xZ2xZ2")).size() == 16);
  CHECK(all_subgroups(AbelianGroup::parse("Z4xZ4")).size() == 15);
  CHECK_THROWS_AS(all_subgroups(AbelianGroup::parse("Z16xZ32")), Error);
}

TEST_CASE("subgroups are extensional", "[group][subgroup]") {
  const AbelianGroup g = AbelianGroup::parse("Z4");
  const Subgroup a = Subgroup::generated(g, {Element{{2}}});
  const Subgroup b = Subgroup::from_elements(g, {Element{{2}}, Element{{0}}});
  CHECK(a == b);
  CHECK(a.order() == 2);
  CHECK(a.is_subgroup_of(Subgroup::whole(g)));
  CHECK_THROWS_AS(Subgroup::from_elements(g, {Element{{0}}, Element{{1}}}), Error);
  CHECK(intersection(Subgroup::generated(g, {Element{{1}}}), a) == a);
}

TEST_CASE("Smith normal form", "[group][smith]") {
  IntMatrix a(3, 3);
  a << 2, 4, 4, -6, 6, 12, 10, -4, -16;
  const SmithForm s = smith_normal_form(a);
  CHECK(IntMatrix(s.left * a * s.right) == s.diagonal);
  CHECK(s.diagonal(0, 0) == 2);
  CHECK(s.diagonal(1, 1) == 6);
  CHECK(s.diagonal(2, 2) == 12);
}

TEST_CASE("subgroup presentations are isomorphisms", "[group][subgroup]") {
  for (const char* literal : kGroups) {
    const AbelianGroup g = AbelianGroup::parse(literal);
    if (g.order() > 16) continue;
    for (const auto& h : all_subgroups(g)) {
      const SubgroupPresentation p = present(h);
      INFO(literal << " H = " << h.to_string());
      REQUIRE(p.group.order() == h.order());
      for (const auto& x : h.elements()) {
        for (const auto& y : h.elements()) {
          CHECK(p.to_group(g.add(x, y)) == p.group.add(p.to_group(x), p.to_group(y)));
        }
      }
    }
  }
}

TEST_CASE("quotients match brute-force cosets", "[group][quotient]") {
  for (const char* literal : kGroups) {
    const AbelianGroup g = AbelianGroup::parse(literal);
    if (g.order() > 16) continue;
    for (const auto& h : all_subgroups(g)) {
      const Quotient q = quotient(g, h);
      INFO(literal << " / " << h.to_string());
      // oracle: x ~ y iff x - y in H
      for (std::size_t i = 0; i < g.order(); ++i) {
        for (std::size_t j = 0; j < g.order(); ++j) {
          const bool same = h.contains(g.add(g.element_at(i), g.neg(g.element_at(j))));
          CHECK((q.coset_of[i] == q.coset_of[j]) == same);
        }
      }
      CHECK(q.representatives.size() * h.order() == g.order());
      for (std::size_t c = 0; c < q.representatives.size(); ++c) {
        // representative is the smallest member of its coset
        for (std::size_t i = 0; i < g.order(); ++i) {
          if (q.coset_of[i] == c) CHECK(!(g.element_at(i) < q.representatives[c]));
        }
      }
    }
  }
}

TEST_CASE("characters are orthogonal and restrict correctly", "[group][character]") {
  for (const char* literal : {"Z2", "Z3", "Z4", "Z2xZ2", "Z2xZ4", "Z3xZ3"}) {
    const AbelianGroup g = AbelianGroup::parse(literal);
    const CycloMatrix t = character_table(g);
    const auto n = static_cast<Eigen::Index>(g.order());
    CHECK(CycloMatrix(t * conjugate_transpose(t)) == CycloMatrix(CycloMatrix::Identity(n, n) * CycloNumber(n)));
    const auto chars = characters(g);
    for (const auto& a : chars) {
      for (const auto& b : chars) {
        for (const auto& x : elements(g)) CHECK((a * b)(x) == a(x) * b(x));
      }
    }
    for (const auto& h : all_subgroups(g)) {
      const SubgroupPresentation p = present(h);
      for (const auto& chi : chars) {
        const Character r = restrict(chi, p);
        for (const auto& x : h.elements()) CHECK(r(p.to_group(x)) == chi(x));
      }
    }
  }
}
