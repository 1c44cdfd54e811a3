#include <charconv>
#include <numeric>

#include "smatrix/cyclotomic.hpp"

namespace smatrix {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(Errc::ParseError, "bad root-of-unity literal '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

RootOfUnity::RootOfUnity(std::int64_t order, std::int64_t exponent) {
  if (order < 1) throw Error(Errc::ParseError, "root of unity order must be positive");
  const std::int64_t k = mod(exponent, order);
  if (k == 0) return;
  const std::int64_t g = std::gcd(k, order);
  order_ = order / g;
  exponent_ = k / g;
}

RootOfUnity RootOfUnity::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "1") return one();
  if (text == "-1") return minus_one();
  if (text.size() < 2 || (text[0] != 'z' && text[0] != 'Z')) {
    throw Error(Errc::ParseError, "bad root-of-unity literal '" + std::string(text) + "'");
  }
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    // "zN" is read as zN^1
    return {parse_int(text.substr(1), text), 1};
  }
  const std::int64_t n = parse_int(text.substr(1, caret - 1), text);
  const std::int64_t k = parse_int(text.substr(caret + 1), text);
  if (n < 1) throw Error(Errc::ParseError, "root-of-unity order must be positive in '" + std::string(text) + "'");
  return {n, k};
}

std::int64_t RootOfUnity::exponent_in(std::int64_t n) const {
  if (n < 1 || n % order_ != 0) {
    throw Error(Errc::ConductorMismatch,
                "root " + to_string() + " does not live in mu_" + std::to_string(n));
  }
  return exponent_ * (n / order_);
}

RootOfUnity RootOfUnity::pow(std::int64_t e) const {
  // exponent_ * e can overflow for huge e; reduce e first
  return {order_, exponent_ * mod(e, order_)};
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  const std::int64_t n = std::lcm(a.order_, b.order_);
  return {n, a.exponent_ * (n / a.order_) + b.exponent_ * (n / b.order_)};
}

std::string RootOfUnity::to_string() const {
  if (order_ == 1) return "1";
  if (order_ == 2) return "-1";
  return "z" + std::to_string(order_) + "^" + std::to_string(exponent_);
}

}  // namespace smatrix
