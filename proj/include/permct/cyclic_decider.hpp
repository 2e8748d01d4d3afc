#ifndef PERMCT_CYCLIC_DECIDER_HPP
#define PERMCT_CYCLIC_DECIDER_HPP

#include <optional>

#include "permct/permutation.hpp"
#include "permct/prime_arith.hpp"

/**
 * @file cyclic_decider.hpp
 * @brief Deciding whether a cyclic group <pi> contains an element of the
 * same cycle type as rho.
 *
 * Only one power needs testing: the answer is YES exactly when
 * ord(rho) | ord(pi) and ct(pi^d) == ct(rho) for d = ord(pi) / ord(rho).
 */

namespace permct
{

enum class DecisionReason
{
  OrderNotDividing,
  TypeMismatchAtD,
  Match
};

char const *to_string(DecisionReason reason);

struct CyclicDecision
{
  bool answer;
  std::optional<PrimeExponentVector> witness_d; // present iff answer
  DecisionReason reason;
};

/// ord(rho) | ord(pi). The degrees may differ.
bool order_divides(Permutation const &rho, Permutation const &pi);

/// pe(ord(pi) / ord(rho)); requires order_divides(rho, pi).
PrimeExponentVector quotient_exponent(Permutation const &pi,
                                      Permutation const &rho);

/// pi^d with d = ord(pi) / ord(rho).
Permutation power_quotient(Permutation const &pi, Permutation const &rho);

/// Requires equal degrees.
CyclicDecision decide_cycletype_cyclic(Permutation const &pi,
                                       Permutation const &rho);

} // namespace permct

#endif // PERMCT_CYCLIC_DECIDER_HPP
