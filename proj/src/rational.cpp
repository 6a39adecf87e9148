#include "skel/rational.hpp"

#include "skel/errors.hpp"

#include <sstream>

namespace skel {

namespace {

bool is_decimal_integer(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rat make_rat(const Int& p, const Int& q) {
  if (q == 0) throw Error(Errc::SyntaxError, "zero denominator");
  // Division normalizes sign and reduces to lowest terms.
  return Rat(p) / Rat(q);
}

std::string rat_to_string(const Rat& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_decimal_integer(text, true))
      throw Error(Errc::SyntaxError, "malformed rational '" + std::string(text) + "'");
    return Rat(Int(std::string(text)));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!is_decimal_integer(num, true) || !is_decimal_integer(den, false))
    throw Error(Errc::SyntaxError, "malformed rational '" + std::string(text) + "'");
  return make_rat(Int(std::string(num)), Int(std::string(den)));
}

}  // namespace skel
