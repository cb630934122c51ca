#include "gradedlie/rational.hpp"

#include <cctype>

namespace gradedlie {

namespace {

bool valid_integer(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!valid_integer(num))
    throw parse_error("invalid rational literal \"" + text + "\"");
  if (slash == std::string::npos) return Rational(BigInt(num));

  const std::string den = text.substr(slash + 1);
  if (!valid_integer(den) || den[0] == '-' || den.find('/') != std::string::npos)
    throw parse_error("invalid rational literal \"" + text + "\"");
  BigInt d(den);
  if (d == 0) throw parse_error("zero denominator in rational literal \"" + text + "\"");
  return Rational(BigInt(num), d);
}

}  // namespace gradedlie
