#include "surgeon/slope.hpp"

#include <cctype>

#include "surgeon/error.hpp"

namespace surgeon {

Slope::Slope(Integer p, Integer q) : filled_(true) {
  if (p == 0 && q == 0) throw PreconditionError("0/0 is not a slope");
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  Integer g = gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

const Integer& Slope::p() const {
  if (!filled_) throw PreconditionError("unfilled slope has no numerator");
  return p_;
}

const Integer& Slope::q() const {
  if (!filled_) throw PreconditionError("unfilled slope has no denominator");
  return q_;
}

std::string Slope::to_string() const {
  if (!filled_) return "*";
  return p_.get_str() + "/" + q_.get_str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::size_t offset) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw ParseError("expected an integer", offset);
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw ParseError("unexpected character in integer", offset + j);
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits);
}

}  // namespace

Slope parse_slope(std::string_view text) {
  std::string_view s = trim(text);
  std::size_t lead = static_cast<std::size_t>(s.data() - text.data());
  if (s == "*") return Slope::unfilled();
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Slope(parse_integer(s, lead), 1);
  Integer p = parse_integer(trim(s.substr(0, slash)), lead);
  Integer q = parse_integer(trim(s.substr(slash + 1)), lead + slash + 1);
  if (p == 0 && q == 0) throw ParseError("0/0 is not a slope", lead);
  return Slope(p, q);
}

Cable make_cable(const Integer& a, const Integer& b) {
  if (abs(a) < 2) throw PreconditionError("cable winding |a| must be at least 2");
  if (gcd(a, b) != 1) throw PreconditionError("cable parameters must be coprime");
  return Cable{a, b};
}

Cable parse_cable(std::string_view text) {
  std::string_view s = trim(text);
  auto comma = s.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected \"a,b\"", 0);
  return make_cable(parse_integer(trim(s.substr(0, comma)), 0), parse_integer(trim(s.substr(comma + 1)), comma + 1));
}

Slope cable_surgery_reduction(const Slope& s, const Cable& c) {
  if (s.is_unfilled()) throw PreconditionError("cable reduction needs a filled slope");
  Integer dist = abs(s.p() - s.q() * c.a * c.b);
  if (dist != 1)
    throw PreconditionError("slope " + s.to_string() + " is at distance " + dist.get_str() +
                            " from the fiber slope, not 1");
  return Slope(s.p(), s.q() * c.a * c.a);
}

}  // namespace surgeon
