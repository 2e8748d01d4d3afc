#ifndef PERMCT_SOLVERS_HPP
#define PERMCT_SOLVERS_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "permct/permutation.hpp"
#include "permct/reductions.hpp"

/**
 * @file solvers.hpp
 * @brief Exhaustive search oracles and witness verification.
 *
 * For commuting generators every element of <pi1, pi2> is pi1^x1 pi2^x2 with
 * x1 in [0, ord(pi1)) and x2 in [0, ord(pi2)). The ab2 solvers scan that box
 * in lexicographic order and report the first hit, so a FoundWitness result
 * is always the lexicographically smallest witness. Coset variants pin x1 to
 * 1 and scan x2 only.
 */

namespace permct
{

struct SearchBudget
{
  std::uint64_t max_pairs = 1'000'000;
  std::chrono::duration<double> time_limit{60.0};
};

enum class SolveStatus
{
  FoundWitness,
  ExhaustedNoWitness, // the whole exponent range was covered
  BudgetExceeded
};

char const *to_string(SolveStatus status);

struct SolveResult
{
  SolveStatus status;
  std::optional<WitnessExponents> witness; // present iff FoundWitness
  std::uint64_t pairs_tried;
};

SolveResult solve_cycletype_ab2(Permutation const &pi1, Permutation const &pi2,
                                Permutation const &rho,
                                SearchBudget const &budget = {});

SolveResult solve_fpf_ab2(Permutation const &pi1, Permutation const &pi2,
                          SearchBudget const &budget = {});

SolveResult solve_cycletype_coset(Permutation const &pi1,
                                  Permutation const &pi2,
                                  Permutation const &rho,
                                  SearchBudget const &budget = {});

SolveResult solve_fpf_coset(Permutation const &pi1, Permutation const &pi2,
                            SearchBudget const &budget = {});

/// Smallest q in [0, ord(pi)) with ct(pi^q) == ct(rho), found by stepping
/// through the powers of pi one composition at a time. Throws BudgetExceeded
/// if ord(pi) > max_order.
std::optional<std::uint64_t> brute_cyclic(Permutation const &pi,
                                          Permutation const &rho,
                                          std::uint64_t max_order = 10'000'000);

/// ct(pi1^x1 pi2^x2) == ct(rho); in coset mode additionally x1 == 1.
bool verify_witness_cycletype(ReducedCycleTypeInstance const &inst,
                              WitnessExponents const &w);

/// pi1^z1 pi2^z2 is fixpoint-free; in coset mode additionally z1 == 1.
bool verify_witness_fpf(ReducedFpfInstance const &inst,
                        WitnessExponents const &w);

/// pi1^x1 pi2^x2 by per-cycle powering.
Permutation evaluate(Permutation const &pi1, BigInt const &x1,
                     Permutation const &pi2, BigInt const &x2);

/// All elements of <gens> by breadth-first closure, identity first. Throws
/// BudgetExceeded if the group has more than cap elements.
std::vector<Permutation> enumerate_group(std::span<const Permutation> gens,
                                         std::size_t cap = 1'000'000);

} // namespace permct

#endif // PERMCT_SOLVERS_HPP
