#include "permct/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "permct/errors.hpp"

namespace permct
{

namespace
{

constexpr std::string_view kMiddleDot = "\xC2\xB7";

class Cursor
{
public:
  explicit Cursor(std::string_view text)
  : text_(text)
  {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool starts_with(std::string_view s) const
  {
    return text_.substr(pos_).starts_with(s);
  }

  void advance(std::size_t k = 1)
  {
    for (std::size_t i = 0; i < k && !done(); ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  // Returns whether any whitespace was consumed.
  bool skip_ws()
  {
    bool any = false;
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) {
      advance();
      any = true;
    }
    return any;
  }

  [[noreturn]] void fail(std::string const &message) const
  {
    throw ParseError(message, line_, column_);
  }

  void expect(char c)
  {
    if (peek() != c)
      fail(std::string("expected '") + c + "'" + found());
    advance();
  }

  std::string found() const
  {
    if (done())
      return ", found end of input";
    return std::string(", found '") + peek() + "'";
  }

  std::uint64_t integer(std::uint64_t max = std::uint64_t{1} << 32)
  {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number" + found());
    auto line = line_, column = column_;
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > max)
        throw ParseError("number too large", line, column);
      advance();
    }
    return value;
  }

  Point point(PermutationText &out)
  {
    auto line = line_, column = column_;
    auto value = integer();
    if (value < 1 || value > kMaxDegree)
      throw ParseError("point " + std::to_string(value) + " is outside [1, " +
                         std::to_string(kMaxDegree) + "]",
                       line, column);
    out.max_point = std::max<std::size_t>(out.max_point, value);
    return static_cast<Point>(value);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// Parses "INT { sep INT }" up to (not including) the closing character.
std::vector<Point> point_list(Cursor &cur, PermutationText &out, char close)
{
  std::vector<Point> points;
  cur.skip_ws();
  if (cur.peek() == close)
    return points;
  points.push_back(cur.point(out));
  for (;;) {
    bool ws = cur.skip_ws();
    if (cur.peek() == close)
      return points;
    if (cur.peek() == ',') {
      cur.advance();
      cur.skip_ws();
    } else if (!ws) {
      cur.fail(std::string("expected ',', whitespace or '") + close + "'" +
               cur.found());
    }
    points.push_back(cur.point(out));
  }
}

} // namespace

std::optional<std::size_t> PermutationText::implied_degree() const
{
  if (declared_degree)
    return declared_degree;
  if (images)
    return images->size();
  if (max_point > 0)
    return max_point;
  return std::nullopt;
}

Permutation PermutationText::resolve(std::size_t degree) const
{
  if (declared_degree && *declared_degree != degree)
    throw InvalidInput("declared degree " + std::to_string(*declared_degree) +
                       " conflicts with requested degree " +
                       std::to_string(degree));
  if (max_point > degree)
    throw InvalidInput("point " + std::to_string(max_point) +
                       " exceeds the degree " + std::to_string(degree));

  if (images) {
    if (images->size() == degree)
      return Permutation::from_images(*images);
    // pointwise form on a prefix, extended by fixpoints
    auto padded = *images;
    for (std::size_t a = padded.size() + 1; a <= degree; ++a)
      padded.push_back(static_cast<Point>(a));
    return Permutation::from_images(padded);
  }
  return Permutation::from_cycles(cycles, degree);
}

PermutationText parse_permutation_text(std::string_view text)
{
  PermutationText out;
  Cursor cur(text);
  cur.skip_ws();

  if (cur.starts_with("deg")) {
    cur.advance(3);
    cur.skip_ws();
    cur.expect('=');
    cur.skip_ws();
    auto value = cur.integer();
    if (value < 1 || value > kMaxDegree)
      cur.fail("degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
    out.declared_degree = value;
    cur.skip_ws();
  }

  if (cur.peek() == '[') {
    cur.advance();
    auto images = point_list(cur, out, ']');
    if (images.empty())
      cur.fail("pointwise form must not be empty");
    cur.expect(']');
    out.images = std::move(images);
    cur.skip_ws();
  } else {
    while (cur.peek() == '(') {
      cur.advance();
      auto cycle = point_list(cur, out, ')');
      cur.expect(')');
      if (!cycle.empty())
        out.cycles.push_back(std::move(cycle));
      cur.skip_ws();
    }
  }

  if (!cur.done())
    cur.fail(std::string("unexpected '") + cur.peek() + "'");
  if (!out.implied_degree() && !out.cycles.empty())
    cur.fail("cannot determine the degree");
  return out;
}

Permutation parse_permutation(std::string_view text,
                              std::optional<std::size_t> degree)
{
  auto parsed = parse_permutation_text(text);
  if (!degree)
    degree = parsed.implied_degree();
  if (!degree)
    throw ParseError("cannot determine the degree of an identity without a "
                     "degree header",
                     1, 1);
  return parsed.resolve(*degree);
}

std::string format_permutation(Permutation const &pi, bool explicit_fixpoints)
{
  std::string body;
  std::size_t max_printed = 0;
  for (auto const &cycle : to_cycles(pi).cycles) {
    if (cycle.size() == 1 && !explicit_fixpoints)
      continue;
    body += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0)
        body += ' ';
      body += std::to_string(cycle[k]);
      max_printed = std::max<std::size_t>(max_printed, cycle[k]);
    }
    body += ')';
  }
  if (body.empty())
    body = "()";
  if (max_printed != pi.degree())
    return "deg=" + std::to_string(pi.degree()) + " " + body;
  return body;
}

std::string format_factored(PrimeExponentVector const &u)
{
  std::string s;
  for (std::size_t i = 0; i < u.exponents().size(); ++i) {
    auto e = u.exponent(i);
    if (e == 0)
      continue;
    if (!s.empty())
      s += kMiddleDot;
    s += std::to_string(u.basis()[i]);
    if (e > 1)
      s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

BigInt parse_exponent(std::string_view text)
{
  Cursor cur(text);
  cur.skip_ws();
  if (cur.done())
    cur.fail("expected an exponent");

  auto number = [&]() {
    if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
      cur.fail("expected a number" + cur.found());
    BigInt value = 0;
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      value = value * 10 + (cur.peek() - '0');
      cur.advance();
    }
    return value;
  };

  BigInt result = 1;
  for (;;) {
    BigInt factor = number();
    if (cur.peek() == '^') {
      cur.advance();
      auto e = number();
      if (e > 1'000'000)
        cur.fail("exponent too large");
      factor = boost::multiprecision::pow(factor, e.convert_to<unsigned>());
    }
    result *= factor;
    cur.skip_ws();
    if (cur.done())
      return result;
    if (cur.peek() == '*') {
      cur.advance();
    } else if (cur.starts_with(kMiddleDot)) {
      cur.advance(kMiddleDot.size());
    } else {
      cur.fail(std::string("unexpected '") + cur.peek() + "'");
    }
    cur.skip_ws();
  }
}

} // namespace permct
