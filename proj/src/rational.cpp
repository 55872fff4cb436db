#include "thinpl/rational.hpp"

#include <cctype>
#include <sstream>

#include "thinpl/errors.hpp"

namespace thinpl {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  const std::size_t slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = all_digits(text, start, text.size());
  } else {
    ok = all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
  }
  if (!ok) {
    throw DomainError(ErrorKind::ParseError,
                      "not a rational string (expected [-]digits[/digits]): \"" + text + "\"");
  }
  Rational value;
  if (mpq_set_str(value.get_mpq_t(), text.c_str(), 10) != 0) {
    throw DomainError(ErrorKind::ParseError, "unparsable rational: \"" + text + "\"");
  }
  if (value.get_den() == 0) {
    throw DomainError(ErrorKind::ParseError, "zero denominator: \"" + text + "\"");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool Point::operator<(const Point& other) const {
  const std::size_t n = std::min(coords.size(), other.coords.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(coords[i], other.coords[i]);
    if (c != 0) return c < 0;
  }
  return coords.size() < other.coords.size();
}

std::vector<double> Point::to_doubles() const {
  std::vector<double> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(to_double(c));
  return out;
}

std::string Point::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ", ";
    os << coords[i].get_str();
  }
  os << ')';
  return os.str();
}

Point make_point(std::initializer_list<const char*> coords) {
  std::vector<Rational> c;
  c.reserve(coords.size());
  for (const char* s : coords) c.push_back(parse_rational(s));
  return Point(std::move(c));
}

}  // namespace thinpl
