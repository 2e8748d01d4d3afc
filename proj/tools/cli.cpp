#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "permct/cyclic_decider.hpp"
#include "permct/errors.hpp"
#include "permct/permutation.hpp"
#include "permct/reductions.hpp"
#include "permct/serialization.hpp"
#include "permct/solvers.hpp"
#include "permct/text_format.hpp"

namespace permct::cli
{

namespace
{

constexpr char const *kBudgetEnv = "PERMCT_BUDGET";

struct Options
{
  std::string format = "text";
  std::optional<std::size_t> degree;
  bool explicit_fixpoints = false;

  std::vector<std::string> perms;
  std::string perm;
  std::string exponent;

  std::string reduce_kind;
  std::string file;
  std::string output;
  bool dimacs = false;
  std::size_t degree_cap = kMaxDegree;

  std::string witness_file;
  bool coset = false;
  bool fpf = false;
  std::optional<std::uint64_t> budget;
  double time_limit = 60.0;
};

std::string read_file(std::string const &path)
{
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InvalidInput("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

// Resolves all permutation arguments to one common degree: --deg if given,
// otherwise the largest degree any of them implies.
std::vector<Permutation> parse_perms(std::vector<std::string> const &texts,
                                     std::optional<std::size_t> degree)
{
  std::vector<PermutationText> parsed;
  for (auto const &t : texts)
    parsed.push_back(parse_permutation_text(t));

  if (!degree) {
    for (auto const &p : parsed) {
      if (auto d = p.implied_degree())
        degree = std::max(degree.value_or(0), *d);
    }
  }
  if (!degree)
    throw InvalidInput("cannot determine the degree; pass --deg");

  std::vector<Permutation> perms;
  for (auto const &p : parsed)
    perms.push_back(p.resolve(*degree));
  return perms;
}

std::string decimal_or_factored(PrimeExponentVector const &u)
{
  auto value = u.to_integer();
  if (boost::multiprecision::msb(value) < 128)
    return value.str();
  return format_factored(u);
}

Json cycle_type_json(CycleType const &ct)
{
  Json entries = Json::array();
  for (auto const &[len, mult] : ct.entries())
    entries.push_back({len, mult});
  return entries;
}

Json witness_json(std::optional<WitnessExponents> const &w)
{
  return w ? to_json(*w) : Json(nullptr);
}

SearchBudget budget_from(Options const &o)
{
  SearchBudget b;
  if (o.budget) {
    b.max_pairs = *o.budget;
  } else if (char const *env = std::getenv(kBudgetEnv)) {
    try {
      b.max_pairs = std::stoull(env);
    } catch (std::exception const &) {
      throw InvalidInput(std::string(kBudgetEnv) + " is not a number");
    }
  }
  b.time_limit = std::chrono::duration<double>(o.time_limit);
  return b;
}

int cmd_ct(Options const &o, std::ostream &out)
{
  auto pi = parse_perms(o.perms, o.degree)[0];
  auto ct = cycle_type(pi);
  if (o.format == "json")
    out << Json{{"degree", pi.degree()}, {"cycle_type", cycle_type_json(ct)}}.dump()
        << '\n';
  else
    out << ct.to_string() << '\n';
  return kYes;
}

int cmd_order(Options const &o, std::ostream &out)
{
  auto pi = parse_perms(o.perms, o.degree)[0];
  auto ord = order_pe(pi, primes_upto(pi.degree()));
  auto value = ord.to_integer();
  bool fits = boost::multiprecision::msb(value) < 128;

  if (o.format == "json") {
    Json j{{"pe", format_factored(ord)}};
    j["order"] = fits ? Json(value.str()) : Json(nullptr);
    out << j.dump() << '\n';
  } else {
    if (fits)
      out << "ord=" << value.str() << ' ';
    out << "pe=" << format_factored(ord) << '\n';
  }
  return kYes;
}

int cmd_pow(Options const &o, std::ostream &out)
{
  auto pi = parse_perms(o.perms, o.degree)[0];
  BigInt x;
  try {
    x = parse_exponent(o.exponent);
  } catch (ParseError const &e) {
    throw InvalidInput(std::string("exponent: ") + e.what());
  }
  auto result = power(pi, x);
  if (o.format == "json")
    out << Json{{"images", result.images()}}.dump() << '\n';
  else
    out << format_permutation(result, o.explicit_fixpoints) << '\n';
  return kYes;
}

int cmd_decide_cyclic(Options const &o, std::ostream &out)
{
  auto perms = parse_perms(o.perms, o.degree);
  auto decision = decide_cycletype_cyclic(perms[0], perms[1]);

  if (o.format == "json") {
    Json j{{"answer", decision.answer}, {"reason", to_string(decision.reason)}};
    j["d"] = decision.witness_d ? Json(decimal_or_factored(*decision.witness_d))
                                : Json(nullptr);
    out << j.dump() << '\n';
  } else if (decision.answer) {
    out << "YES d=" << decimal_or_factored(*decision.witness_d) << '\n';
  } else {
    out << "NO " << to_string(decision.reason) << '\n';
  }
  return decision.answer ? kYes : kNo;
}

int report(SolveResult const &r, Options const &o, std::ostream &out)
{
  if (o.format == "json") {
    out << Json{{"status", to_string(r.status)},
                {"witness", witness_json(r.witness)},
                {"pairs_tried", r.pairs_tried}}.dump()
        << '\n';
  } else {
    switch (r.status) {
    case SolveStatus::FoundWitness:
      out << "FOUND x1=" << r.witness->x1.str() << " x2=" << r.witness->x2.str()
          << " pairs=" << r.pairs_tried << '\n';
      break;
    case SolveStatus::ExhaustedNoWitness:
      out << "NONE pairs=" << r.pairs_tried << '\n';
      break;
    case SolveStatus::BudgetExceeded:
      out << "BUDGET pairs=" << r.pairs_tried << '\n';
      break;
    }
  }
  switch (r.status) {
  case SolveStatus::FoundWitness:
    return kYes;
  case SolveStatus::ExhaustedNoWitness:
    return kNo;
  case SolveStatus::BudgetExceeded:
    break;
  }
  return kBudget;
}

int cmd_solve_ab2(Options const &o, std::ostream &out, std::ostream &err)
{
  if (o.fpf == (o.perms.size() == 3)) {
    err << "error: solve ab2 takes PI1 PI2 RHO, or PI1 PI2 with --fpf\n";
    return kUsage;
  }
  auto perms = parse_perms(o.perms, o.degree);
  auto budget = budget_from(o);

  SolveResult r;
  if (o.fpf)
    r = o.coset ? solve_fpf_coset(perms[0], perms[1], budget)
                : solve_fpf_ab2(perms[0], perms[1], budget);
  else
    r = o.coset ? solve_cycletype_coset(perms[0], perms[1], perms[2], budget)
                : solve_cycletype_ab2(perms[0], perms[1], perms[2], budget);
  return report(r, o, out);
}

int cmd_solve_cyclic(Options const &o, std::ostream &out)
{
  auto perms = parse_perms(o.perms, o.degree);
  auto max_order = budget_from(o).max_pairs;

  std::optional<std::uint64_t> q;
  try {
    q = brute_cyclic(perms[0], perms[1], max_order);
  } catch (BudgetExceeded const &) {
    out << (o.format == "json" ? R"({"status":"budget-exceeded","q":null})"
                               : "BUDGET")
        << '\n';
    return kBudget;
  }

  if (o.format == "json") {
    Json j{{"status", q ? "found-witness" : "exhausted-no-witness"}};
    j["q"] = q ? Json(*q) : Json(nullptr);
    out << j.dump() << '\n';
  } else if (q) {
    out << "FOUND q=" << *q << '\n';
  } else {
    out << "NONE\n";
  }
  return q ? kYes : kNo;
}

int cmd_reduce(Options const &o, std::ostream &out)
{
  auto text = read_file(o.file);
  ReductionOptions ropts{o.degree_cap};
  Json result;

  if (o.reduce_kind == "x3hs") {
    if (o.dimacs)
      throw InvalidInput("--dimacs applies to 3sat only");
    auto source = source_instance_from_json(parse_json(text));
    auto const *inst = std::get_if<X3hsInstance>(&source);
    if (!inst)
      throw InvalidInput("expected an x3hs instance");
    auto reduced = reduce_x3hs(*inst, ropts);
    result = to_json(o.coset ? coset_restrict(std::move(reduced)) : reduced);
  } else {
    std::optional<Cnf3Instance> inst;
    if (o.dimacs) {
      inst = parse_dimacs(text);
    } else {
      auto source = source_instance_from_json(parse_json(text));
      if (auto const *c = std::get_if<Cnf3Instance>(&source))
        inst = *c;
      else
        throw InvalidInput("expected a cnf3 instance");
    }
    auto reduced = reduce_3sat(*inst, ropts);
    result = to_json(o.coset ? coset_restrict(std::move(reduced)) : reduced);
  }

  auto dumped = result.dump() + '\n';
  if (o.output.empty()) {
    out << dumped;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file || !(file << dumped))
      throw InvalidInput("cannot write " + o.output);
  }
  return kYes;
}

ReducedInstance load_reduced(Options const &o, WitnessExponents &w)
{
  auto reduced = reduced_instance_from_json(parse_json(read_file(o.file)));
  w = witness_from_json(parse_json(read_file(o.witness_file)));
  if (o.coset)
    std::visit([](auto &inst) { inst.coset = true; }, reduced);
  return reduced;
}

int cmd_verify(Options const &o, std::ostream &out)
{
  WitnessExponents w;
  auto reduced = load_reduced(o, w);
  bool ok = std::visit(
    [&](auto const &inst) {
      using T = std::decay_t<decltype(inst)>;
      if constexpr (std::is_same_v<T, ReducedCycleTypeInstance>)
        return verify_witness_cycletype(inst, w);
      else
        return verify_witness_fpf(inst, w);
    },
    reduced);

  if (o.format == "json")
    out << Json{{"verified", ok}}.dump() << '\n';
  else
    out << (ok ? "VERIFIED" : "REFUTED") << '\n';
  return ok ? kYes : kNo;
}

int cmd_extract(Options const &o, std::ostream &out, std::ostream &err)
{
  WitnessExponents w;
  auto reduced = load_reduced(o, w);

  if (auto const *inst = std::get_if<ReducedCycleTypeInstance>(&reduced)) {
    if (!verify_witness_cycletype(*inst, w)) {
      err << "error: witness does not verify\n";
      return kNo;
    }
    auto t = extract_hitting_set(*inst, w);
    if (o.format == "json") {
      out << Json{{"hitting_set", t}}.dump() << '\n';
    } else {
      out << "T={";
      for (std::size_t k = 0; k < t.size(); ++k)
        out << (k ? "," : "") << t[k];
      out << "}\n";
    }
    return kYes;
  }

  auto const &inst = std::get<ReducedFpfInstance>(reduced);
  if (!verify_witness_fpf(inst, w)) {
    err << "error: witness does not verify\n";
    return kNo;
  }
  auto sigma = extract_assignment(inst, w);
  if (o.format == "json") {
    Json values = Json::array();
    for (bool b : sigma)
      values.push_back(b);
    out << Json{{"assignment", values}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < sigma.size(); ++i)
      out << (i ? " " : "") << 'x' << i + 1 << '=' << (sigma[i] ? 1 : 0);
    out << '\n';
  }
  return kYes;
}

void add_format(CLI::App *cmd, Options &o)
{
  cmd->add_option("--format", o.format, "Output format")
    ->check(CLI::IsMember({"text", "json"}));
}

void add_degree(CLI::App *cmd, Options &o)
{
  cmd->add_option("--deg", o.degree, "Degree n of Sym(n)")
    ->check(CLI::Range(std::size_t{1}, kMaxDegree));
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out,
        std::ostream &err)
{
  Options o;
  CLI::App app{"Cycle types and fixpoint-freeness in permutation groups",
               "permct"};
  app.require_subcommand(1);

  auto *ct = app.add_subcommand("ct", "Print the cycle type of a permutation");
  ct->add_option("perm", o.perm, "Permutation")->required();
  add_degree(ct, o);
  add_format(ct, o);

  auto *ord = app.add_subcommand("order", "Print the order of a permutation");
  ord->add_option("perm", o.perm, "Permutation")->required();
  add_degree(ord, o);
  add_format(ord, o);

  auto *pow = app.add_subcommand("pow", "Print a power of a permutation");
  pow->add_option("perm", o.perm, "Permutation")->required();
  pow->add_option("exponent", o.exponent, "Decimal or factored exponent")
    ->required();
  pow->add_flag("--explicit-fixpoints", o.explicit_fixpoints,
                "Print fixed points as 1-cycles");
  add_degree(pow, o);
  add_format(pow, o);

  auto *decide = app.add_subcommand(
    "decide-cyclic", "Does some power of PI have the cycle type of RHO?");
  decide->add_option("perms", o.perms, "PI RHO")->required()->expected(2);
  add_degree(decide, o);
  add_format(decide, o);

  auto *reduce = app.add_subcommand("reduce", "Build a reduced instance");
  reduce->add_option("kind", o.reduce_kind, "x3hs or 3sat")
    ->required()
    ->check(CLI::IsMember({"x3hs", "3sat"}));
  reduce->add_option("file", o.file, "Instance file ('-' for stdin)")->required();
  reduce->add_flag("--dimacs", o.dimacs, "Read 3sat input as DIMACS CNF");
  reduce->add_flag("--coset", o.coset, "Mark the instance as a coset problem");
  reduce->add_option("-o,--output", o.output, "Write JSON here instead of stdout");
  reduce->add_option("--degree-cap", o.degree_cap, "Maximum degree N")
    ->check(CLI::Range(std::size_t{1}, kMaxDegree));

  auto *solve = app.add_subcommand("solve", "Brute-force search");
  solve->require_subcommand(1);
  auto *ab2 = solve->add_subcommand(
    "ab2", "Search <PI1, PI2> (commuting) for RHO's cycle type or a derangement");
  ab2->add_option("perms", o.perms, "PI1 PI2 [RHO]")->required()->expected(2, 3);
  ab2->add_flag("--fpf", o.fpf, "Search for a fixpoint-free element");
  ab2->add_flag("--coset", o.coset, "Search PI1 <PI2> only");
  ab2->add_option("--budget", o.budget, "Maximum exponent pairs to try")
    ->check(CLI::PositiveNumber);
  ab2->add_option("--time-limit", o.time_limit, "Seconds")
    ->check(CLI::PositiveNumber);
  add_degree(ab2, o);
  add_format(ab2, o);

  auto *cyclic = solve->add_subcommand(
    "cyclic", "Smallest q with ct(PI^q) = ct(RHO), by enumeration");
  cyclic->add_option("perms", o.perms, "PI RHO")->required()->expected(2);
  cyclic->add_option("--budget", o.budget, "Maximum order to enumerate")
    ->check(CLI::PositiveNumber);
  add_degree(cyclic, o);
  add_format(cyclic, o);

  auto *verify = app.add_subcommand("verify", "Check a witness");
  verify->add_option("file", o.file, "Reduced instance JSON")->required();
  verify->add_option("--witness", o.witness_file, "Witness JSON")->required();
  verify->add_flag("--coset", o.coset, "Require the first exponent to be 1");
  add_format(verify, o);

  auto *extract = app.add_subcommand(
    "extract", "Recover a hitting set or assignment from a witness");
  extract->add_option("file", o.file, "Reduced instance JSON")->required();
  extract->add_option("--witness", o.witness_file, "Witness JSON")->required();
  extract->add_flag("--coset", o.coset, "Require the first exponent to be 1");
  add_format(extract, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const &e) {
    app.exit(e, out, err);
    return kYes;
  } catch (CLI::CallForAllHelp const &e) {
    app.exit(e, out, err);
    return kYes;
  } catch (CLI::ParseError const &e) {
    app.exit(e, out, err);
    return kUsage;
  }

  if (!o.perm.empty())
    o.perms.push_back(o.perm);

  try {
    if (ct->parsed())
      return cmd_ct(o, out);
    if (ord->parsed())
      return cmd_order(o, out);
    if (pow->parsed())
      return cmd_pow(o, out);
    if (decide->parsed())
      return cmd_decide_cyclic(o, out);
    if (reduce->parsed())
      return cmd_reduce(o, out);
    if (ab2->parsed())
      return cmd_solve_ab2(o, out, err);
    if (cyclic->parsed())
      return cmd_solve_cyclic(o, out);
    if (verify->parsed())
      return cmd_verify(o, out);
    if (extract->parsed())
      return cmd_extract(o, out, err);
  } catch (ParseError const &e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (InvalidInput const &e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (BudgetExceeded const &e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  }
  return kUsage;
}

} // namespace permct::cli
