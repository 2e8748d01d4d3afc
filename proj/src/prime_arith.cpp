#include "permct/prime_arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "permct/errors.hpp"

namespace permct
{

namespace
{

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1u)
      result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1u;
  }
  return result;
}

// Inverse of a modulo m, gcd(a, m) == 1 assumed.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m)
{
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0)
    t += m;
  return static_cast<std::uint64_t>(t);
}

void check_same_basis(PrimeExponentVector const &u, PrimeExponentVector const &v)
{
  if (!(u.basis() == v.basis()))
    throw InvalidInput("prime exponent vectors over different bases");
}

} // namespace

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0)
      return n == p;
  }

  // deterministic Miller-Rabin for 64-bit inputs
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

PrimeBasis::PrimeBasis()
: primes_(std::make_shared<const std::vector<std::uint64_t>>())
{}

PrimeBasis::PrimeBasis(std::vector<std::uint64_t> primes)
{
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i]))
      throw InvalidInput("prime basis entry " + std::to_string(primes[i]) +
                         " is not prime");
    if (i > 0 && primes[i] <= primes[i - 1])
      throw InvalidInput("prime basis must be strictly increasing");
  }
  primes_ = std::make_shared<const std::vector<std::uint64_t>>(std::move(primes));
}

std::optional<std::size_t> PrimeBasis::index_of(std::uint64_t p) const
{
  auto it = std::lower_bound(primes_->begin(), primes_->end(), p);
  if (it == primes_->end() || *it != p)
    return std::nullopt;
  return static_cast<std::size_t>(it - primes_->begin());
}

PrimeExponentVector::PrimeExponentVector(PrimeBasis basis,
                                         std::vector<std::uint32_t> exponents)
: basis_(std::move(basis)),
  exps_(std::move(exponents))
{
  if (exps_.size() != basis_.size())
    throw InvalidInput("exponent vector length does not match prime basis");
}

PrimeExponentVector PrimeExponentVector::one(PrimeBasis basis)
{
  auto r = basis.size();
  return PrimeExponentVector(std::move(basis), std::vector<std::uint32_t>(r, 0));
}

bool PrimeExponentVector::is_one() const
{
  return std::all_of(exps_.begin(), exps_.end(),
                     [](std::uint32_t e) { return e == 0; });
}

BigInt PrimeExponentVector::to_integer() const
{
  BigInt result = 1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i])
      result *= boost::multiprecision::pow(BigInt(basis_[i]), exps_[i]);
  }
  return result;
}

CongruenceSystem &CongruenceSystem::add(std::int64_t residue,
                                        std::uint64_t modulus)
{
  if (modulus == 0)
    throw InvalidInput("congruence modulus must be positive");
  for (auto const &c : pairs_) {
    if (std::gcd(c.modulus, modulus) != 1)
      throw InvalidInput("congruence moduli " + std::to_string(c.modulus) +
                         " and " + std::to_string(modulus) +
                         " are not coprime");
  }

  std::uint64_t reduced;
  if (residue >= 0) {
    reduced = static_cast<std::uint64_t>(residue) % modulus;
  } else {
    // -(residue) computed without overflow for INT64_MIN
    std::uint64_t mag = static_cast<std::uint64_t>(-(residue + 1)) + 1u;
    reduced = (modulus - mag % modulus) % modulus;
  }
  pairs_.push_back({reduced, modulus});
  return *this;
}

BigInt CongruenceSystem::modulus_product() const
{
  BigInt product = 1;
  for (auto const &c : pairs_)
    product *= c.modulus;
  return product;
}

bool CongruenceSystem::satisfied_by(BigInt const &x) const
{
  return std::all_of(pairs_.begin(), pairs_.end(), [&](Congruence const &c) {
    return mod_of(x, c.modulus) == c.residue;
  });
}

PrimeBasis primes_upto(std::uint64_t n)
{
  std::vector<std::uint64_t> primes;
  if (n >= 2) {
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
      if (composite[i])
        continue;
      primes.push_back(i);
      for (std::uint64_t j = i * i; j <= n; j += i)
        composite[j] = true;
    }
  }
  return PrimeBasis(std::move(primes));
}

std::vector<std::uint64_t> first_k_primes_above(std::uint64_t bound,
                                                std::size_t k)
{
  std::vector<std::uint64_t> primes;
  primes.reserve(k);
  for (std::uint64_t c = bound + 1; primes.size() < k; ++c) {
    if (is_prime(c))
      primes.push_back(c);
  }
  return primes;
}

PrimeExponentVector pe(std::uint64_t a, PrimeBasis const &basis)
{
  if (a == 0)
    throw InvalidInput("pe: argument must be positive");

  std::vector<std::uint32_t> exps(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size() && a > 1; ++i) {
    while (a % basis[i] == 0) {
      a /= basis[i];
      ++exps[i];
    }
  }
  if (a != 1)
    throw InvalidInput("pe: argument has a prime factor outside the basis");
  return PrimeExponentVector(basis, std::move(exps));
}

PrimeExponentVector pe_lcm(PrimeExponentVector const &u,
                           PrimeExponentVector const &v)
{
  check_same_basis(u, v);
  std::vector<std::uint32_t> exps(u.exponents().size());
  for (std::size_t i = 0; i < exps.size(); ++i)
    exps[i] = std::max(u.exponent(i), v.exponent(i));
  return PrimeExponentVector(u.basis(), std::move(exps));
}

bool pe_divides(PrimeExponentVector const &u, PrimeExponentVector const &v)
{
  check_same_basis(u, v);
  for (std::size_t i = 0; i < u.exponents().size(); ++i) {
    if (u.exponent(i) > v.exponent(i))
      return false;
  }
  return true;
}

PrimeExponentVector pe_quotient(PrimeExponentVector const &u,
                                PrimeExponentVector const &v)
{
  if (!pe_divides(v, u))
    throw InvalidInput("pe_quotient: divisor does not divide dividend");
  std::vector<std::uint32_t> exps(u.exponents().size());
  for (std::size_t i = 0; i < exps.size(); ++i)
    exps[i] = u.exponent(i) - v.exponent(i);
  return PrimeExponentVector(u.basis(), std::move(exps));
}

std::uint64_t mod_of_pe(PrimeExponentVector const &u, std::uint64_t modulus)
{
  if (modulus == 0)
    throw InvalidInput("mod_of_pe: modulus must be positive");

  std::uint64_t result = 1 % modulus;
  for (std::size_t i = 0; i < u.exponents().size(); ++i) {
    if (u.exponent(i))
      result = mul_mod(result, pow_mod(u.basis()[i], u.exponent(i), modulus),
                       modulus);
  }
  return result;
}

BigInt crt_smallest(CongruenceSystem const &system)
{
  // Garner-style incremental combination: x is the solution modulo the
  // product of the moduli processed so far.
  BigInt x = 0;
  BigInt product = 1;
  for (auto const &c : system.congruences()) {
    std::uint64_t x_mod = mod_of(x, c.modulus);
    std::uint64_t product_mod = mod_of(product, c.modulus);
    std::uint64_t diff = (c.residue + c.modulus - x_mod) % c.modulus;
    std::uint64_t k = mul_mod(diff, inverse_mod(product_mod, c.modulus),
                              c.modulus);
    x += product * k;
    product *= c.modulus;
  }
  return x == 0 ? product : x;
}

std::uint64_t mod_of(BigInt const &x, std::uint64_t modulus)
{
  if (modulus == 0)
    throw InvalidInput("modulus must be positive");
  BigInt r = x % modulus;
  if (r < 0)
    r += modulus;
  return r.convert_to<std::uint64_t>();
}

} // namespace permct
