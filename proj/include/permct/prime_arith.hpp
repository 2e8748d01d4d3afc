#ifndef PERMCT_PRIME_ARITH_HPP
#define PERMCT_PRIME_ARITH_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

/**
 * @file prime_arith.hpp
 * @brief Prime bases, integers in factored form and CRT solving.
 *
 * Orders of permutations and the exponents produced by the reductions are
 * kept as prime exponent vectors over a fixed ascending prime basis. Such a
 * vector can be reduced modulo a small integer without ever forming the
 * (potentially huge) integer it stands for.
 */

namespace permct
{

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n);

/// Strictly increasing list of primes. Copies share storage.
class PrimeBasis
{
public:
  PrimeBasis();
  explicit PrimeBasis(std::vector<std::uint64_t> primes);

  std::span<const std::uint64_t> primes() const { return *primes_; }
  std::size_t size() const { return primes_->size(); }
  std::uint64_t operator[](std::size_t i) const { return (*primes_)[i]; }

  std::optional<std::size_t> index_of(std::uint64_t p) const;

  friend bool operator==(PrimeBasis const &lhs, PrimeBasis const &rhs)
  {
    return lhs.primes_ == rhs.primes_ || *lhs.primes_ == *rhs.primes_;
  }

private:
  std::shared_ptr<const std::vector<std::uint64_t>> primes_;
};

/// The integer prod p_i^{e_i} over a prime basis.
class PrimeExponentVector
{
public:
  PrimeExponentVector(PrimeBasis basis, std::vector<std::uint32_t> exponents);

  /// The vector representing 1.
  static PrimeExponentVector one(PrimeBasis basis);

  PrimeBasis const &basis() const { return basis_; }
  std::span<const std::uint32_t> exponents() const { return exps_; }
  std::uint32_t exponent(std::size_t i) const { return exps_[i]; }

  bool is_one() const;
  BigInt to_integer() const;

  friend bool operator==(PrimeExponentVector const &,
                         PrimeExponentVector const &) = default;

private:
  PrimeBasis basis_;
  std::vector<std::uint32_t> exps_;
};

struct Congruence
{
  std::uint64_t residue;
  std::uint64_t modulus;

  friend bool operator==(Congruence const &, Congruence const &) = default;
};

/// x = r_i mod m_i with pairwise coprime moduli; residues stored reduced.
class CongruenceSystem
{
public:
  CongruenceSystem() = default;

  /// Adds x = residue mod modulus. Negative residues are reduced into
  /// [0, modulus). Throws InvalidInput if modulus is 0 or shares a factor
  /// with a modulus already present.
  CongruenceSystem &add(std::int64_t residue, std::uint64_t modulus);

  std::span<const Congruence> congruences() const { return pairs_; }
  BigInt modulus_product() const;

  /// True iff x satisfies every congruence.
  bool satisfied_by(BigInt const &x) const;

private:
  std::vector<Congruence> pairs_;
};

PrimeBasis primes_upto(std::uint64_t n);

/// The k smallest primes strictly greater than bound, ascending.
std::vector<std::uint64_t> first_k_primes_above(std::uint64_t bound,
                                                std::size_t k);

/// Factorization of a over basis. Throws InvalidInput if a == 0 or a has a
/// prime factor outside the basis.
PrimeExponentVector pe(std::uint64_t a, PrimeBasis const &basis);

PrimeExponentVector pe_lcm(PrimeExponentVector const &u,
                           PrimeExponentVector const &v);

/// Whether u divides v.
bool pe_divides(PrimeExponentVector const &u, PrimeExponentVector const &v);

/// u / v; requires v | u.
PrimeExponentVector pe_quotient(PrimeExponentVector const &u,
                                PrimeExponentVector const &v);

/// (value of u) mod modulus by modular multiplication only.
std::uint64_t mod_of_pe(PrimeExponentVector const &u, std::uint64_t modulus);

/// Smallest positive solution. When the solution class is 0 this is the
/// product of the moduli, not 0.
BigInt crt_smallest(CongruenceSystem const &system);

std::uint64_t mod_of(BigInt const &x, std::uint64_t modulus);

} // namespace permct

#endif // PERMCT_PRIME_ARITH_HPP
