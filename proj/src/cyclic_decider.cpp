#include "permct/cyclic_decider.hpp"

#include <algorithm>
#include <string>

#include "permct/errors.hpp"

namespace permct
{

namespace
{

PrimeBasis common_basis(Permutation const &a, Permutation const &b)
{
  return primes_upto(std::max(a.degree(), b.degree()));
}

} // namespace

char const *to_string(DecisionReason reason)
{
  switch (reason) {
  case DecisionReason::OrderNotDividing:
    return "order-not-dividing";
  case DecisionReason::TypeMismatchAtD:
    return "type-mismatch-at-d";
  case DecisionReason::Match:
    return "match";
  }
  return "?";
}

bool order_divides(Permutation const &rho, Permutation const &pi)
{
  auto basis = common_basis(rho, pi);
  return pe_divides(order_pe(rho, basis), order_pe(pi, basis));
}

PrimeExponentVector quotient_exponent(Permutation const &pi,
                                      Permutation const &rho)
{
  auto basis = common_basis(rho, pi);
  auto ord_pi = order_pe(pi, basis);
  auto ord_rho = order_pe(rho, basis);
  if (!pe_divides(ord_rho, ord_pi))
    throw InvalidInput("ord(rho) does not divide ord(pi)");
  return pe_quotient(ord_pi, ord_rho);
}

Permutation power_quotient(Permutation const &pi, Permutation const &rho)
{
  return power(pi, quotient_exponent(pi, rho));
}

CyclicDecision decide_cycletype_cyclic(Permutation const &pi,
                                       Permutation const &rho)
{
  if (pi.degree() != rho.degree())
    throw InvalidInput("degree mismatch: " + std::to_string(pi.degree()) +
                       " vs " + std::to_string(rho.degree()));

  if (!order_divides(rho, pi))
    return {false, std::nullopt, DecisionReason::OrderNotDividing};

  auto d = quotient_exponent(pi, rho);
  if (cycle_type(power(pi, d)) != cycle_type(rho))
    return {false, std::nullopt, DecisionReason::TypeMismatchAtD};

  return {true, std::move(d), DecisionReason::Match};
}

} // namespace permct
