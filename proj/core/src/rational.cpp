#include "nfl/rational.hpp"

#include "nfl/errors.hpp"

namespace nfl {

std::string rational_to_string(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::schema, "empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(text));
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty())
      throw Error(ErrorKind::schema, "malformed rational literal '" + text + "'");
    BigInt d(den);
    if (d == 0) throw Error(ErrorKind::schema, "zero denominator in '" + text + "'");
    return Rat(BigInt(num), d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::schema, "malformed rational literal '" + text + "'");
  }
}

double rational_to_double(const Rat& value) { return value.convert_to<double>(); }

} // namespace nfl
