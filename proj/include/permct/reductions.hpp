#ifndef PERMCT_REDUCTIONS_HPP
#define PERMCT_REDUCTIONS_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "permct/permutation.hpp"
#include "permct/prime_arith.hpp"

/**
 * @file reductions.hpp
 * @brief Instance generators for cycle-type and fixpoint-freeness problems
 * in groups generated by two commuting permutations.
 *
 * reduce_x3hs maps an exact 3-hitting-set instance to (rho, pi1, pi2) such
 * that some pi1^x1 pi2^x2 has the cycle type of rho iff the instance has an
 * exact hitting set. reduce_3sat maps a 3-CNF formula to (pi1, pi2) such
 * that some pi1^z1 pi2^z2 is fixpoint-free iff the formula is satisfiable.
 * In both cases the first exponent can be pinned to 1 (coset mode) without
 * changing the answer.
 *
 * Every factor of the direct product is a power of the standard cycle
 * (1, 2, ..., d) on its own block of d points. Factors are laid out in a
 * fixed order: element/variable blocks ascending, then set/clause blocks
 * ascending, each in its sub-block order. Set blocks of the hitting-set
 * construction use exactly r_j points per factor.
 */

namespace permct
{

using Block = std::array<Point, 3>;

/// Ground set [n] and blocks of exactly three distinct elements.
class X3hsInstance
{
public:
  /// Sorts every block ascending. Throws InvalidInput on repeated or
  /// out-of-range elements.
  X3hsInstance(std::size_t n, std::vector<Block> blocks);

  std::size_t n() const { return n_; }
  std::vector<Block> const &blocks() const { return blocks_; }

  friend bool operator==(X3hsInstance const &, X3hsInstance const &) = default;

private:
  std::size_t n_;
  std::vector<Block> blocks_;
};

struct Literal
{
  Point var;
  bool negated;

  friend auto operator<=>(Literal const &, Literal const &) = default;
};

using Clause = std::array<Literal, 3>;

/// Variables x_1..x_n and clauses of three literals over distinct variables.
class Cnf3Instance
{
public:
  /// Sorts every clause by variable. Throws InvalidInput on repeated
  /// variables within a clause or out-of-range variables.
  Cnf3Instance(std::size_t n, std::vector<Clause> clauses);

  std::size_t n() const { return n_; }
  std::vector<Clause> const &clauses() const { return clauses_; }

  friend bool operator==(Cnf3Instance const &, Cnf3Instance const &) = default;

private:
  std::size_t n_;
  std::vector<Clause> clauses_;
};

using HittingSet = std::vector<Point>; // ascending elements of [n]
using Assignment = std::vector<bool>;  // value of x_i at index i - 1

bool is_exact_hitting_set(X3hsInstance const &inst, HittingSet const &t);
bool satisfies(Cnf3Instance const &inst, Assignment const &sigma);

struct Component
{
  std::string label;
  std::size_t degree;
  std::size_t offset; // 0-based first point

  friend bool operator==(Component const &, Component const &) = default;
};

struct X3hsBlockConstants
{
  std::uint64_t r;                // q_j * p_i1 * p_i2 * p_i3
  std::array<std::uint64_t, 6> s; // exponents of the six pi1 factors
  std::uint64_t t;                // exponent of every pi2 factor

  friend bool operator==(X3hsBlockConstants const &,
                         X3hsBlockConstants const &) = default;
};

struct X3hsLayout
{
  std::vector<Component> components;
  std::vector<std::uint64_t> primes_p; // 2n primes, all > 3
  std::vector<std::uint64_t> primes_q; // one per block, above primes_p
  std::vector<X3hsBlockConstants> blocks;
  std::size_t degree;

  friend bool operator==(X3hsLayout const &, X3hsLayout const &) = default;
};

struct Cnf3Layout
{
  std::vector<Component> components;
  std::vector<std::uint64_t> primes_p;    // positive literal primes
  std::vector<std::uint64_t> primes_pbar; // negative literal primes
  std::vector<std::uint64_t> clause_moduli;
  // residues[i - 1][(l - 1) * (pbar_i - 1) + (k - 1)] is the unique value in
  // [1, p_i pbar_i - 1] congruent to l mod p_i and k mod pbar_i.
  std::vector<std::vector<std::uint64_t>> residues;
  std::size_t degree;

  friend bool operator==(Cnf3Layout const &, Cnf3Layout const &) = default;
};

struct WitnessExponents
{
  BigInt x1;
  BigInt x2;

  friend bool operator==(WitnessExponents const &,
                         WitnessExponents const &) = default;
};

struct ReducedCycleTypeInstance
{
  X3hsInstance source;
  Permutation rho;
  Permutation pi1;
  Permutation pi2;
  X3hsLayout layout;
  bool coset = false; // witnesses must have x1 == 1

  friend bool operator==(ReducedCycleTypeInstance const &,
                         ReducedCycleTypeInstance const &) = default;
};

struct ReducedFpfInstance
{
  Cnf3Instance source;
  Permutation pi1;
  Permutation pi2;
  Cnf3Layout layout;
  bool coset = false;

  friend bool operator==(ReducedFpfInstance const &,
                         ReducedFpfInstance const &) = default;
};

struct ReductionOptions
{
  std::size_t degree_cap = kMaxDegree;
};

/// Total degree reduce_x3hs would produce, without building anything.
std::size_t x3hs_reduced_degree(X3hsInstance const &inst);
std::size_t cnf3_reduced_degree(Cnf3Instance const &inst);

ReducedCycleTypeInstance reduce_x3hs(X3hsInstance const &inst,
                                     ReductionOptions const &options = {});

/// (1, x2) with x2 = 1 mod p_i for i in T and 0 mod p_i otherwise.
WitnessExponents witness_from_hitting_set(ReducedCycleTypeInstance const &inst,
                                          HittingSet const &t);

/// {i : x2 != 0 mod p_i}. Throws InvalidInput if w does not verify.
HittingSet extract_hitting_set(ReducedCycleTypeInstance const &inst,
                               WitnessExponents const &w);

/// Variable i gets p_i = the (2i-1)-th prime and pbar_i = the 2i-th prime.
ReducedFpfInstance reduce_3sat(Cnf3Instance const &inst,
                               ReductionOptions const &options = {});

/// (1, z2) with z2 = sigma(x_i) mod p_i and 1 - sigma(x_i) mod pbar_i.
WitnessExponents witness_from_assignment(ReducedFpfInstance const &inst,
                                         Assignment const &sigma);

/// sigma(x_i) = [z2 != 0 mod p_i]. Throws InvalidInput if w does not verify.
Assignment extract_assignment(ReducedFpfInstance const &inst,
                              WitnessExponents const &w);

ReducedCycleTypeInstance coset_restrict(ReducedCycleTypeInstance inst);
ReducedFpfInstance coset_restrict(ReducedFpfInstance inst);

// Full structural re-check: layout offsets and total degree, every stored
// constant against its congruences and range, the permutations against a
// rebuild from the layout, and commutation. Throws InvalidInput naming the
// first violated invariant.
void check_instance(ReducedCycleTypeInstance const &inst);
void check_instance(ReducedFpfInstance const &inst);

} // namespace permct

#endif // PERMCT_REDUCTIONS_HPP
