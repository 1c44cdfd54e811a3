#include <cctype>
#include <charconv>
#include <numeric>

#include "smatrix/abelian_group.hpp"

namespace smatrix {

namespace {

// Orders beyond this are rejected outright; enumeration caps are much lower.
constexpr std::size_t kOrderCeiling = std::size_t{1} << 31;

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::string Element::to_string() const {
  if (coords.size() == 1) return std::to_string(coords[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

AbelianGroup::AbelianGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(Errc::ShapeMismatch, "a group needs at least one cyclic factor");
  order_ = 1;
  for (const std::int64_t n : factors_) {
    if (n < 1) throw Error(Errc::ParseError, "cyclic factor orders must be >= 1");
    if (order_ > kOrderCeiling / static_cast<std::size_t>(n)) {
      throw Error(Errc::GroupTooLarge, "group order overflows");
    }
    order_ *= static_cast<std::size_t>(n);
  }
}

AbelianGroup AbelianGroup::parse(std::string_view literal) {
  std::vector<std::int64_t> factors;
  std::size_t pos = 0;
  const std::string text(literal);
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find_first_of("xX", pos), text.size());
    std::string_view token(text.data() + pos, end - pos);
    if (token.size() < 2 || std::tolower(static_cast<unsigned char>(token[0])) != 'z') {
      throw Error(Errc::ParseError, "bad group literal '" + text + "' (expected e.g. Z2xZ4)");
    }
    std::int64_t n = 0;
    auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), n);
    if (ec != std::errc() || ptr != token.data() + token.size() || n < 1) {
      throw Error(Errc::ParseError, "bad cyclic factor '" + std::string(token) + "' in '" + text + "'");
    }
    factors.push_back(n);
    pos = end + 1;
  }
  return AbelianGroup(std::move(factors));
}

std::int64_t AbelianGroup::exponent() const {
  std::int64_t e = 1;
  for (const std::int64_t n : factors_) e = std::lcm(e, n);
  return e;
}

Element AbelianGroup::element_at(std::size_t index) const {
  if (index >= order_) throw Error(Errc::ShapeMismatch, "element index out of range");
  Element g{std::vector<std::int64_t>(factors_.size())};
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto n = static_cast<std::size_t>(factors_[i]);
    g.coords[i] = static_cast<std::int64_t>(index % n);
    index /= n;
  }
  return g;
}

std::size_t AbelianGroup::index_of(const Element& g) const {
  check_shape(g);
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    index = index * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(g.coords[i]);
  }
  return index;
}

bool AbelianGroup::contains(const Element& g) const {
  if (g.coords.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (g.coords[i] < 0 || g.coords[i] >= factors_[i]) return false;
  }
  return true;
}

void AbelianGroup::check_shape(const Element& g) const {
  if (!contains(g)) {
    throw Error(Errc::ShapeMismatch, "element " + g.to_string() + " is not a reduced element of " + to_string());
  }
}

Element AbelianGroup::add(const Element& a, const Element& b) const {
  check_shape(a);
  check_shape(b);
  Element out = a;
  for (std::size_t i = 0; i < factors_.size(); ++i) out.coords[i] = (a.coords[i] + b.coords[i]) % factors_[i];
  return out;
}

Element AbelianGroup::neg(const Element& a) const { return scale(a, -1); }

Element AbelianGroup::scale(const Element& a, std::int64_t k) const {
  check_shape(a);
  Element out = a;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out.coords[i] = mod(mod(k, factors_[i]) * a.coords[i], factors_[i]);
  }
  return out;
}

std::int64_t AbelianGroup::element_order(const Element& a) const {
  check_shape(a);
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    ord = std::lcm(ord, factors_[i] / std::gcd(a.coords[i], factors_[i]));
  }
  return ord;
}

std::string AbelianGroup::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += "x";
    out += "Z" + std::to_string(factors_[i]);
  }
  return out;
}

std::vector<Element> elements(const AbelianGroup& g) {
  std::vector<Element> out;
  out.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) out.push_back(g.element_at(i));
  return out;
}

std::vector<Character> characters(const AbelianGroup& g) {
  std::vector<Character> out;
  out.reserve(g.order());
  for (auto& coords : elements(g)) out.push_back(Character{g, std::move(coords)});
  return out;
}

RootOfUnity Character::operator()(const Element& g) const {
  if (!group.contains(g)) {
    throw Error(Errc::ShapeMismatch, "character of " + group.to_string() + " evaluated at " + g.to_string());
  }
  const std::int64_t n = group.exponent();
  std::int64_t k = 0;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    const std::int64_t ni = group.factors()[i];
    k = (k + (coords.coords[i] * g.coords[i]) % ni * (n / ni)) % n;
  }
  return {n, k};
}

Character operator*(const Character& a, const Character& b) {
  if (!(a.group == b.group)) throw Error(Errc::ShapeMismatch, "characters of different groups");
  return Character{a.group, a.group.add(a.coords, b.coords)};
}

bool Character::is_trivial() const { return coords == group.identity(); }

RootOfUnity character_eval(const Character& chi, const Element& g) { return chi(g); }

Character restrict(const Character& chi, const SubgroupPresentation& h) {
  if (!(chi.group == h.subgroup.parent())) {
    throw Error(Errc::ShapeMismatch, "restricting a character of " + chi.group.to_string() + " to a subgroup of " +
                                         h.subgroup.parent().to_string());
  }
  Element coords = h.group.identity();
  for (std::size_t j = 0; j < h.basis.size(); ++j) {
    // chi(basis_j) has order dividing d_j; read off its exponent in mu_{d_j}
    coords.coords[j] = chi(h.basis[j]).exponent_in(h.group.factors()[j]);
  }
  return Character{h.group, std::move(coords)};
}

CycloMatrix character_table(const AbelianGroup& g) {
  const auto chars = characters(g);
  const auto elems = elements(g);
  const auto n = static_cast<Eigen::Index>(g.order());
  return matrix_of_roots(n, n, [&](Eigen::Index i, Eigen::Index j) {
    return chars[static_cast<std::size_t>(i)](elems[static_cast<std::size_t>(j)]);
  });
}

}  // namespace smatrix
