#include "permct/solvers.hpp"

#include <deque>
#include <functional>
#include <string>
#include <unordered_set>

#include "permct/errors.hpp"

namespace permct
{

namespace
{

using Clock = std::chrono::steady_clock;

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const
  {
    std::size_t h = p.degree();
    for (Point b : p.zero_based())
      h = h * 1000003u ^ b;
    return h;
  }
};

void check_generators(Permutation const &pi1, Permutation const &pi2)
{
  if (pi1.degree() != pi2.degree())
    throw InvalidInput("generators have different degrees");
  if (!commute(pi1, pi2))
    throw InvalidInput("generators do not commute");
}

void check_budget(SearchBudget const &budget)
{
  if (budget.max_pairs == 0 || budget.time_limit.count() <= 0)
    throw InvalidInput("search budget must be positive");
}

// Scans x1 in x1_range, x2 in [0, ord(pi2)) lexicographically.
SolveResult scan(Permutation const &pi1, Permutation const &pi2,
                 BigInt const &x1_first, BigInt const &x1_end,
                 std::function<bool(Permutation const &)> const &accept,
                 SearchBudget const &budget)
{
  check_budget(budget);
  auto deadline = Clock::now() +
    std::chrono::duration_cast<Clock::duration>(budget.time_limit);

  BigInt ord2 = order(pi2);
  std::uint64_t tried = 0;

  auto row = power(pi1, x1_first);
  for (BigInt x1 = x1_first; x1 < x1_end; ++x1) {
    auto current = row;
    for (BigInt x2 = 0; x2 < ord2; ++x2) {
      if (tried == budget.max_pairs ||
          ((tried & 0xffu) == 0 && Clock::now() > deadline))
        return {SolveStatus::BudgetExceeded, std::nullopt, tried};
      ++tried;
      if (accept(current))
        return {SolveStatus::FoundWitness, WitnessExponents{x1, x2}, tried};
      current = compose(current, pi2);
    }
    row = compose(row, pi1);
  }
  return {SolveStatus::ExhaustedNoWitness, std::nullopt, tried};
}

} // namespace

char const *to_string(SolveStatus status)
{
  switch (status) {
  case SolveStatus::FoundWitness:
    return "found-witness";
  case SolveStatus::ExhaustedNoWitness:
    return "exhausted-no-witness";
  case SolveStatus::BudgetExceeded:
    return "budget-exceeded";
  }
  return "?";
}

SolveResult solve_cycletype_ab2(Permutation const &pi1, Permutation const &pi2,
                                Permutation const &rho,
                                SearchBudget const &budget)
{
  check_generators(pi1, pi2);
  if (rho.degree() != pi1.degree())
    throw InvalidInput("rho has a different degree than the generators");
  auto target = cycle_type(rho);
  return scan(pi1, pi2, 0, order(pi1),
              [&](Permutation const &p) { return cycle_type(p) == target; },
              budget);
}

SolveResult solve_fpf_ab2(Permutation const &pi1, Permutation const &pi2,
                          SearchBudget const &budget)
{
  check_generators(pi1, pi2);
  return scan(pi1, pi2, 0, order(pi1), is_fixpoint_free, budget);
}

SolveResult solve_cycletype_coset(Permutation const &pi1,
                                  Permutation const &pi2,
                                  Permutation const &rho,
                                  SearchBudget const &budget)
{
  check_generators(pi1, pi2);
  if (rho.degree() != pi1.degree())
    throw InvalidInput("rho has a different degree than the generators");
  auto target = cycle_type(rho);
  return scan(pi1, pi2, 1, 2,
              [&](Permutation const &p) { return cycle_type(p) == target; },
              budget);
}

SolveResult solve_fpf_coset(Permutation const &pi1, Permutation const &pi2,
                            SearchBudget const &budget)
{
  check_generators(pi1, pi2);
  return scan(pi1, pi2, 1, 2, is_fixpoint_free, budget);
}

std::optional<std::uint64_t> brute_cyclic(Permutation const &pi,
                                          Permutation const &rho,
                                          std::uint64_t max_order)
{
  if (pi.degree() != rho.degree())
    throw InvalidInput("degree mismatch");

  if (order(pi) > max_order)
    throw BudgetExceeded("order of pi exceeds " + std::to_string(max_order));

  auto target = cycle_type(rho);
  auto current = Permutation::identity(pi.degree());
  for (std::uint64_t q = 0;; ++q) {
    if (q > 0 && current.is_identity())
      return std::nullopt; // q == ord(pi)
    if (cycle_type(current) == target)
      return q;
    current = compose(current, pi);
  }
}

Permutation evaluate(Permutation const &pi1, BigInt const &x1,
                     Permutation const &pi2, BigInt const &x2)
{
  return compose(power(pi1, x1), power(pi2, x2));
}

bool verify_witness_cycletype(ReducedCycleTypeInstance const &inst,
                              WitnessExponents const &w)
{
  if (w.x1 < 0 || w.x2 < 0)
    return false;
  if (inst.coset && w.x1 != 1)
    return false;
  return cycle_type(evaluate(inst.pi1, w.x1, inst.pi2, w.x2)) ==
         cycle_type(inst.rho);
}

bool verify_witness_fpf(ReducedFpfInstance const &inst,
                        WitnessExponents const &w)
{
  if (w.x1 < 0 || w.x2 < 0)
    return false;
  if (inst.coset && w.x1 != 1)
    return false;
  return is_fixpoint_free(evaluate(inst.pi1, w.x1, inst.pi2, w.x2));
}

std::vector<Permutation> enumerate_group(std::span<const Permutation> gens,
                                         std::size_t cap)
{
  if (gens.empty())
    throw InvalidInput("at least one generator required");
  for (auto const &g : gens) {
    if (g.degree() != gens[0].degree())
      throw InvalidInput("generators have different degrees");
  }

  std::vector<Permutation> elements{Permutation::identity(gens[0].degree())};
  std::unordered_set<Permutation, PermutationHash> seen(elements.begin(),
                                                        elements.end());
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (auto const &g : gens) {
      auto p = compose(elements[next], g);
      if (seen.insert(p).second) {
        if (elements.size() == cap)
          throw BudgetExceeded("group has more than " + std::to_string(cap) +
                               " elements");
        elements.push_back(std::move(p));
      }
    }
  }
  return elements;
}

} // namespace permct
