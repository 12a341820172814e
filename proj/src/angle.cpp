#include "creutz/angle.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "creutz/errors.hpp"
#include "creutz/types.hpp"

namespace creutz {

namespace {

bool parse_number(std::string_view s, double& out) {
  if (s.empty()) return false;
  // from_chars rejects a leading '+'.
  if (s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end && std::isfinite(out);
}

}  // namespace

double parse_angle(std::string_view text, const std::string& field) {
  const auto fail = [&]() -> double {
    throw InvalidParameter(field, "cannot parse angle '" + std::string(text) + "'");
  };

  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) return fail();

  const auto pos = s.find("pi");
  if (pos == std::string::npos) {
    double value = 0.0;
    if (!parse_number(s, value)) return fail();
    return value;
  }

  // [sign][coefficient][*]pi[/denominator]
  std::string_view head(s.data(), pos);
  std::string_view tail(s.data() + pos + 2, s.size() - pos - 2);

  double sign = 1.0;
  if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
    sign = head.front() == '-' ? -1.0 : 1.0;
    head.remove_prefix(1);
  }
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  double coefficient = 1.0;
  if (!head.empty() && (head.front() == '-' || head.front() == '+' || !parse_number(head, coefficient)))
    return fail();

  double denominator = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') return fail();
    tail.remove_prefix(1);
    if (!parse_number(tail, denominator) || denominator == 0.0) return fail();
  }
  return sign * coefficient * pi / denominator;
}

}  // namespace creutz
