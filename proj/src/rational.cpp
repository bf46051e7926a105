#include "onelight/rational.hpp"

#include <stdexcept>

namespace onelight {

Charge ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Charge c(num, den);
  c.canonicalize();
  return c;
}

std::string format_charge(const Charge& c) {
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Charge parse_charge(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto digits = [](const std::string& s, bool allow_sign) {
    std::size_t i = allow_sign && !s.empty() && s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!digits(num, true) || !digits(den, false)) throw std::invalid_argument("malformed charge: " + text);
  Charge c{mpz_class(num), mpz_class(den)};
  if (c.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  c.canonicalize();
  return c;
}

}  // namespace onelight
