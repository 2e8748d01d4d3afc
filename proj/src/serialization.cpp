#include "permct/serialization.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "permct/errors.hpp"
#include "permct/text_format.hpp"

namespace permct
{

namespace
{

Json const &field(Json const &j, char const *key)
{
  if (!j.is_object())
    throw InvalidInput(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end())
    throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t as_uint(Json const &j, char const *what)
{
  if (!j.is_number_unsigned())
    throw InvalidInput(std::string(what) + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

std::uint64_t as_decimal(Json const &j, char const *what)
{
  if (!j.is_string())
    throw InvalidInput(std::string(what) + " must be a decimal string");
  auto const &s = j.get_ref<std::string const &>();
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidInput(std::string(what) + " is not a decimal string: \"" + s +
                       "\"");
  return value;
}

Json const &as_array(Json const &j, char const *what)
{
  if (!j.is_array())
    throw InvalidInput(std::string(what) + " must be an array");
  return j;
}

std::vector<std::uint64_t> uint_array(Json const &j, char const *what)
{
  std::vector<std::uint64_t> out;
  for (auto const &e : as_array(j, what))
    out.push_back(as_uint(e, what));
  return out;
}

std::vector<std::uint64_t> decimal_array(Json const &j, char const *what)
{
  std::vector<std::uint64_t> out;
  for (auto const &e : as_array(j, what))
    out.push_back(as_decimal(e, what));
  return out;
}

Json decimal_strings(std::vector<std::uint64_t> const &values)
{
  Json out = Json::array();
  for (auto v : values)
    out.push_back(std::to_string(v));
  return out;
}

Json pointwise(Permutation const &pi)
{
  Json out = Json::array();
  for (Point b : pi.zero_based())
    out.push_back(b + 1);
  return out;
}

Permutation permutation_from(Json const &j, char const *what)
{
  std::vector<Point> images;
  for (auto const &e : as_array(j, what)) {
    auto v = as_uint(e, what);
    if (v > kMaxDegree)
      throw InvalidInput(std::string(what) + ": point out of range");
    images.push_back(static_cast<Point>(v));
  }
  return Permutation::from_images(images);
}

Json components_json(std::vector<Component> const &components)
{
  Json out = Json::array();
  for (auto const &c : components)
    out.push_back({{"label", c.label}, {"degree", c.degree}, {"offset", c.offset}});
  return out;
}

std::vector<Component> components_from(Json const &j)
{
  std::vector<Component> out;
  for (auto const &c : as_array(j, "components")) {
    auto const &label = field(c, "label");
    if (!label.is_string())
      throw InvalidInput("component label must be a string");
    out.push_back({label.get<std::string>(),
                   as_uint(field(c, "degree"), "component degree"),
                   as_uint(field(c, "offset"), "component offset")});
  }
  return out;
}

void expect_type(Json const &j, std::string const &type)
{
  auto const &t = field(j, "type");
  if (!t.is_string() || t.get<std::string>() != type)
    throw InvalidInput("expected \"type\": \"" + type + "\"");
}

X3hsInstance x3hs_from(Json const &j)
{
  expect_type(j, "x3hs");
  auto n = as_uint(field(j, "n"), "n");
  std::vector<Block> blocks;
  for (auto const &b : as_array(field(j, "blocks"), "blocks")) {
    auto elems = uint_array(b, "block");
    if (elems.size() != 3)
      throw InvalidInput("every block must have exactly 3 elements");
    Block block;
    for (std::size_t k = 0; k < 3; ++k) {
      if (elems[k] > kMaxDegree)
        throw InvalidInput("block element out of range");
      block[k] = static_cast<Point>(elems[k]);
    }
    blocks.push_back(block);
  }
  return X3hsInstance(n, std::move(blocks));
}

Cnf3Instance cnf3_from(Json const &j)
{
  expect_type(j, "cnf3");
  auto n = as_uint(field(j, "n"), "n");
  std::vector<Clause> clauses;
  for (auto const &c : as_array(field(j, "clauses"), "clauses")) {
    if (!c.is_array() || c.size() != 3)
      throw InvalidInput("every clause must have exactly 3 literals");
    Clause clause;
    for (std::size_t k = 0; k < 3; ++k) {
      auto var = as_uint(field(c[k], "var"), "literal var");
      auto const &neg = field(c[k], "neg");
      if (!neg.is_boolean())
        throw InvalidInput("literal neg must be a boolean");
      if (var > kMaxDegree)
        throw InvalidInput("literal variable out of range");
      clause[k] = {static_cast<Point>(var), neg.get<bool>()};
    }
    clauses.push_back(clause);
  }
  return Cnf3Instance(n, std::move(clauses));
}

bool coset_from(Json const &j)
{
  auto const &c = field(j, "coset");
  if (!c.is_boolean())
    throw InvalidInput("coset must be a boolean");
  return c.get<bool>();
}

ReducedCycleTypeInstance reduced_x3hs_from(Json const &j)
{
  auto source = x3hs_from(field(j, "source"));
  auto const &l = field(j, "layout");

  X3hsLayout layout;
  layout.components = components_from(field(l, "components"));
  layout.primes_p = uint_array(field(l, "primes_p"), "primes_p");
  layout.primes_q = uint_array(field(l, "primes_q"), "primes_q");
  for (auto const &b : as_array(field(l, "blocks"), "blocks")) {
    X3hsBlockConstants c;
    c.r = as_decimal(field(b, "r"), "r");
    auto s = decimal_array(field(b, "s"), "s");
    if (s.size() != 6)
      throw InvalidInput("every block needs six s constants");
    std::copy(s.begin(), s.end(), c.s.begin());
    c.t = as_decimal(field(b, "t"), "t");
    layout.blocks.push_back(c);
  }
  layout.degree = as_uint(field(j, "N"), "N");

  ReducedCycleTypeInstance inst{std::move(source),
                                permutation_from(field(j, "rho"), "rho"),
                                permutation_from(field(j, "pi1"), "pi1"),
                                permutation_from(field(j, "pi2"), "pi2"),
                                std::move(layout),
                                coset_from(j)};
  check_instance(inst);
  return inst;
}

ReducedFpfInstance reduced_cnf3_from(Json const &j)
{
  auto source = cnf3_from(field(j, "source"));
  auto const &l = field(j, "layout");

  Cnf3Layout layout;
  layout.components = components_from(field(l, "components"));
  layout.primes_p = uint_array(field(l, "primes_p"), "primes_p");
  layout.primes_pbar = uint_array(field(l, "primes_pbar"), "primes_pbar");
  layout.clause_moduli = decimal_array(field(l, "clause_moduli"), "clause_moduli");
  for (auto const &t : as_array(field(l, "residues"), "residues"))
    layout.residues.push_back(decimal_array(t, "residues"));
  layout.degree = as_uint(field(j, "N"), "N");

  ReducedFpfInstance inst{std::move(source),
                          permutation_from(field(j, "pi1"), "pi1"),
                          permutation_from(field(j, "pi2"), "pi2"),
                          std::move(layout),
                          coset_from(j)};
  check_instance(inst);
  return inst;
}

BigInt exponent_from(Json const &j, char const *what)
{
  if (j.is_number_unsigned())
    return j.get<std::uint64_t>();
  if (!j.is_string())
    throw InvalidInput(std::string(what) + " must be a decimal or factored string");
  try {
    return parse_exponent(j.get<std::string>());
  } catch (ParseError const &e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

} // namespace

Json parse_json(std::string_view text)
{
  try {
    return Json::parse(text.begin(), text.end());
  } catch (nlohmann::json::parse_error const &e) {
    // byte is the 1-based offset of the offending character
    std::size_t line = 1, column = 1;
    std::size_t limit = e.byte == 0 ? 0 : std::min(e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    auto pos = message.find("syntax error");
    throw ParseError(pos == std::string::npos ? message : message.substr(pos),
                     line, column);
  }
}

Json to_json(X3hsInstance const &inst)
{
  Json blocks = Json::array();
  for (auto const &b : inst.blocks())
    blocks.push_back({b[0], b[1], b[2]});
  return {{"type", "x3hs"}, {"n", inst.n()}, {"blocks", std::move(blocks)}};
}

Json to_json(Cnf3Instance const &inst)
{
  Json clauses = Json::array();
  for (auto const &c : inst.clauses()) {
    Json lits = Json::array();
    for (auto lit : c)
      lits.push_back({{"var", lit.var}, {"neg", lit.negated}});
    clauses.push_back(std::move(lits));
  }
  return {{"type", "cnf3"}, {"n", inst.n()}, {"clauses", std::move(clauses)}};
}

Json to_json(ReducedCycleTypeInstance const &inst)
{
  Json blocks = Json::array();
  for (auto const &c : inst.layout.blocks) {
    blocks.push_back({{"r", std::to_string(c.r)},
                      {"s", decimal_strings({c.s.begin(), c.s.end()})},
                      {"t", std::to_string(c.t)}});
  }

  Json layout = {{"primes_p", inst.layout.primes_p},
                 {"primes_q", inst.layout.primes_q},
                 {"components", components_json(inst.layout.components)},
                 {"blocks", std::move(blocks)}};

  return {{"type", "reduced-x3hs"},
          {"coset", inst.coset},
          {"source", to_json(inst.source)},
          {"N", inst.layout.degree},
          {"layout", std::move(layout)},
          {"rho", pointwise(inst.rho)},
          {"pi1", pointwise(inst.pi1)},
          {"pi2", pointwise(inst.pi2)}};
}

Json to_json(ReducedFpfInstance const &inst)
{
  Json residues = Json::array();
  for (auto const &table : inst.layout.residues)
    residues.push_back(decimal_strings(table));

  Json layout = {{"primes_p", inst.layout.primes_p},
                 {"primes_pbar", inst.layout.primes_pbar},
                 {"components", components_json(inst.layout.components)},
                 {"clause_moduli", decimal_strings(inst.layout.clause_moduli)},
                 {"residues", std::move(residues)}};

  return {{"type", "reduced-cnf3"},
          {"coset", inst.coset},
          {"source", to_json(inst.source)},
          {"N", inst.layout.degree},
          {"layout", std::move(layout)},
          {"pi1", pointwise(inst.pi1)},
          {"pi2", pointwise(inst.pi2)}};
}

Json to_json(WitnessExponents const &w)
{
  return {{"x1", w.x1.str()}, {"x2", w.x2.str()}};
}

SourceInstance source_instance_from_json(Json const &j)
{
  auto const &t = field(j, "type");
  if (t == "x3hs")
    return x3hs_from(j);
  if (t == "cnf3")
    return cnf3_from(j);
  throw InvalidInput("unknown instance type; expected \"x3hs\" or \"cnf3\"");
}

ReducedInstance reduced_instance_from_json(Json const &j)
{
  auto const &t = field(j, "type");
  if (t == "reduced-x3hs")
    return reduced_x3hs_from(j);
  if (t == "reduced-cnf3")
    return reduced_cnf3_from(j);
  throw InvalidInput(
    "unknown reduced instance type; expected \"reduced-x3hs\" or \"reduced-cnf3\"");
}

WitnessExponents witness_from_json(Json const &j)
{
  return {exponent_from(field(j, "x1"), "x1"), exponent_from(field(j, "x2"), "x2")};
}

Cnf3Instance parse_dimacs(std::string_view text)
{
  std::optional<std::uint64_t> num_vars, num_clauses;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;
  std::size_t clause_line = 0, clause_column = 0;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    auto line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    std::size_t pos = 0;
    auto skip_ws = [&]() {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
        ++pos;
    };
    auto fail = [&](std::string const &message) {
      throw ParseError(message, line_no, pos + 1);
    };

    skip_ws();
    if (pos == line.size() || line[pos] == 'c')
      continue;
    if (line[pos] == '%')
      break;

    if (line[pos] == 'p') {
      if (num_vars)
        fail("duplicate problem line");
      ++pos;
      skip_ws();
      if (line.substr(pos, 3) != "cnf")
        fail("expected 'p cnf <variables> <clauses>'");
      pos += 3;
      std::uint64_t values[2];
      for (auto &v : values) {
        skip_ws();
        auto [ptr, ec] = std::from_chars(line.data() + pos,
                                         line.data() + line.size(), v);
        if (ec != std::errc())
          fail("expected a count in the problem line");
        pos = static_cast<std::size_t>(ptr - line.data());
      }
      skip_ws();
      if (pos != line.size())
        fail("trailing characters after the problem line");
      num_vars = values[0];
      num_clauses = values[1];
      continue;
    }

    if (!num_vars)
      fail("clause before the 'p cnf' problem line");

    while (true) {
      skip_ws();
      if (pos == line.size())
        break;
      if (pending.empty()) {
        clause_line = line_no;
        clause_column = pos + 1;
      }
      std::int64_t lit = 0;
      auto [ptr, ec] = std::from_chars(line.data() + pos,
                                       line.data() + line.size(), lit);
      if (ec != std::errc())
        fail("expected an integer literal");
      pos = static_cast<std::size_t>(ptr - line.data());
      if (lit == 0) {
        if (pending.size() != 3)
          throw ParseError("clause has " + std::to_string(pending.size()) +
                             " literals; exactly 3 required",
                           clause_line, clause_column);
        clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      auto var = static_cast<std::uint64_t>(lit < 0 ? -lit : lit);
      if (var > *num_vars)
        fail("variable " + std::to_string(var) + " exceeds the declared " +
             std::to_string(*num_vars));
      pending.push_back({static_cast<Point>(var), lit < 0});
    }
  }

  if (!num_vars)
    throw ParseError("missing 'p cnf' problem line", line_no, 1);
  if (!pending.empty())
    throw ParseError("last clause is not terminated by 0", clause_line,
                     clause_column);
  if (clauses.size() != *num_clauses)
    throw ParseError("problem line declares " + std::to_string(*num_clauses) +
                       " clauses but " + std::to_string(clauses.size()) +
                       " were given",
                     line_no, 1);
  return Cnf3Instance(*num_vars, std::move(clauses));
}

} // namespace permct
