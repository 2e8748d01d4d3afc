#include "permct/reductions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "permct/errors.hpp"
#include "permct/solvers.hpp"

namespace permct
{

namespace
{

// Residues of s_{j,d} modulo p_{i1}, p_{i2}, p_{i3}; every s_{j,d} is 1 mod q_j.
constexpr int kBlockResidues[6][3] = {
  {-1, 0, 0}, {0, -1, 0}, {0, 0, -1},
  {-1, -2, -3}, {-3, -1, -2}, {-2, -3, -1}
};

std::size_t checked_degree(BigInt const &n)
{
  if (n > BigInt(std::numeric_limits<std::size_t>::max()))
    return std::numeric_limits<std::size_t>::max();
  return n.convert_to<std::size_t>();
}

void check_cap(std::size_t degree, ReductionOptions const &options)
{
  auto cap = std::min(options.degree_cap, kMaxDegree);
  if (degree > cap)
    throw DegreeCapExceeded("reduced instance needs " + std::to_string(degree) +
                            " points, above the degree cap of " +
                            std::to_string(cap));
}

// Appends ([degree])^exponent acting on the next `degree` points.
void append_cycle_power(std::vector<Point> &images, std::size_t degree,
                        std::uint64_t exponent)
{
  auto offset = static_cast<Point>(images.size());
  std::uint64_t shift = exponent % degree;
  for (std::uint64_t a = 0; a < degree; ++a)
    images.push_back(offset + static_cast<Point>((a + shift) % degree));
}

std::uint64_t to_u64(BigInt const &x)
{
  return x.convert_to<std::uint64_t>();
}

// --- exact 3-hitting set ---------------------------------------------------

struct X3hsPrimes
{
  std::vector<std::uint64_t> p;
  std::vector<std::uint64_t> q;
};

X3hsPrimes x3hs_primes(X3hsInstance const &inst)
{
  X3hsPrimes primes;
  primes.p = first_k_primes_above(3, 2 * inst.n());
  primes.q = first_k_primes_above(primes.p.back(), inst.blocks().size());
  return primes;
}

std::array<std::uint64_t, 3> block_primes(X3hsInstance const &inst,
                                          std::vector<std::uint64_t> const &p,
                                          std::size_t j)
{
  auto const &block = inst.blocks()[j];
  return {p[block[0] - 1], p[block[1] - 1], p[block[2] - 1]};
}

CongruenceSystem s_system(std::array<std::uint64_t, 3> const &bp,
                          std::uint64_t q, std::size_t d)
{
  CongruenceSystem sys;
  for (std::size_t c = 0; c < 3; ++c)
    sys.add(kBlockResidues[d][c], bp[c]);
  sys.add(1, q);
  return sys;
}

CongruenceSystem t_system(std::array<std::uint64_t, 3> const &bp,
                          std::uint64_t q)
{
  CongruenceSystem sys;
  for (auto p : bp)
    sys.add(1, p);
  sys.add(0, q);
  return sys;
}

X3hsLayout x3hs_layout(X3hsInstance const &inst)
{
  auto primes = x3hs_primes(inst);
  X3hsLayout layout;
  std::size_t offset = 0;

  auto push = [&](std::string label, std::size_t degree) {
    layout.components.push_back({std::move(label), degree, offset});
    offset += degree;
  };

  auto n = inst.n();
  for (std::size_t i = 0; i < n; ++i)
    push("elem[" + std::to_string(i + 1) + "]", primes.p[i] * primes.p[n + i]);

  for (std::size_t j = 0; j < inst.blocks().size(); ++j) {
    auto bp = block_primes(inst, primes.p, j);
    auto q = primes.q[j];

    X3hsBlockConstants c;
    c.r = q * bp[0] * bp[1] * bp[2];
    for (std::size_t d = 0; d < 6; ++d)
      c.s[d] = to_u64(crt_smallest(s_system(bp, q, d)));
    c.t = to_u64(crt_smallest(t_system(bp, q)));
    layout.blocks.push_back(c);

    for (std::size_t d = 0; d < 6; ++d)
      push("block[" + std::to_string(j + 1) + "]." + std::to_string(d + 1), c.r);
  }

  layout.primes_p = std::move(primes.p);
  layout.primes_q = std::move(primes.q);
  layout.degree = offset;
  return layout;
}

struct X3hsPermutations
{
  std::vector<Point> rho, pi1, pi2;
};

X3hsPermutations x3hs_permutations(X3hsInstance const &inst,
                                   X3hsLayout const &layout)
{
  X3hsPermutations out;
  for (auto *v : {&out.rho, &out.pi1, &out.pi2})
    v->reserve(layout.degree);

  auto n = inst.n();
  for (std::size_t i = 0; i < n; ++i) {
    auto deg = layout.components[i].degree;
    append_cycle_power(out.rho, deg, 1);
    append_cycle_power(out.pi1, deg, 1);
    append_cycle_power(out.pi2, deg, 0);
  }

  for (std::size_t j = 0; j < inst.blocks().size(); ++j) {
    auto const &c = layout.blocks[j];
    auto bp = block_primes(inst, layout.primes_p, j);
    std::array<std::uint64_t, 6> rho_exps = {
      bp[0] * bp[1] * bp[2], bp[0], bp[1], bp[2], 1, 1};
    for (std::size_t d = 0; d < 6; ++d) {
      append_cycle_power(out.rho, c.r, rho_exps[d]);
      append_cycle_power(out.pi1, c.r, c.s[d]);
      append_cycle_power(out.pi2, c.r, c.t);
    }
  }
  return out;
}

// --- 3-SAT -----------------------------------------------------------------

std::uint64_t literal_prime(Cnf3Layout const &layout, Literal lit)
{
  return lit.negated ? layout.primes_pbar[lit.var - 1]
                     : layout.primes_p[lit.var - 1];
}

std::uint64_t residue_of(std::uint64_t l, std::uint64_t k, std::uint64_t p,
                         std::uint64_t pbar)
{
  CongruenceSystem sys;
  sys.add(static_cast<std::int64_t>(l), p);
  sys.add(static_cast<std::int64_t>(k), pbar);
  return to_u64(crt_smallest(sys));
}

Cnf3Layout cnf3_layout(Cnf3Instance const &inst)
{
  Cnf3Layout layout;
  auto primes = first_k_primes_above(1, 2 * inst.n());
  for (std::size_t i = 0; i < inst.n(); ++i) {
    layout.primes_p.push_back(primes[2 * i]);
    layout.primes_pbar.push_back(primes[2 * i + 1]);
  }

  std::size_t offset = 0;
  auto push = [&](std::string label, std::size_t degree) {
    layout.components.push_back({std::move(label), degree, offset});
    offset += degree;
  };

  for (std::size_t i = 0; i < inst.n(); ++i) {
    auto p = layout.primes_p[i];
    auto pbar = layout.primes_pbar[i];
    auto var = "var[" + std::to_string(i + 1) + "]";

    push(var + ".pos", p);
    push(var + ".neg", pbar);
    push(var + ".both", p * pbar);

    std::vector<std::uint64_t> table;
    table.reserve((p - 1) * (pbar - 1));
    for (std::uint64_t l = 1; l < p; ++l) {
      for (std::uint64_t k = 1; k < pbar; ++k) {
        table.push_back(residue_of(l, k, p, pbar));
        push(var + ".s[" + std::to_string(l) + "," + std::to_string(k) + "]",
             p * pbar);
      }
    }
    layout.residues.push_back(std::move(table));
  }

  for (std::size_t j = 0; j < inst.clauses().size(); ++j) {
    std::uint64_t r = 1;
    for (auto lit : inst.clauses()[j])
      r *= literal_prime(layout, lit);
    layout.clause_moduli.push_back(r);
    push("clause[" + std::to_string(j + 1) + "]", r);
  }

  layout.degree = offset;
  return layout;
}

std::pair<std::vector<Point>, std::vector<Point>>
cnf3_permutations(Cnf3Instance const &inst, Cnf3Layout const &layout)
{
  std::vector<Point> pi1, pi2;
  pi1.reserve(layout.degree);
  pi2.reserve(layout.degree);

  for (std::size_t i = 0; i < inst.n(); ++i) {
    auto p = layout.primes_p[i];
    auto pbar = layout.primes_pbar[i];

    append_cycle_power(pi1, p, 1);
    append_cycle_power(pi2, p, 0);
    append_cycle_power(pi1, pbar, 1);
    append_cycle_power(pi2, pbar, 0);
    append_cycle_power(pi1, p * pbar, 0);
    append_cycle_power(pi2, p * pbar, 1);
    for (auto s : layout.residues[i]) {
      append_cycle_power(pi1, p * pbar, s);
      append_cycle_power(pi2, p * pbar, 1);
    }
  }

  for (auto r : layout.clause_moduli) {
    append_cycle_power(pi1, r, 0);
    append_cycle_power(pi2, r, 1);
  }
  return {std::move(pi1), std::move(pi2)};
}

void check_components(std::vector<Component> const &components,
                      std::vector<Component> const &expected,
                      std::size_t degree)
{
  std::size_t offset = 0;
  for (auto const &c : components) {
    if (c.offset != offset)
      throw InvalidInput("layout: offset of component " + c.label +
                         " is not the prefix sum of the preceding degrees");
    offset += c.degree;
  }
  if (offset != degree)
    throw InvalidInput("layout: component degrees do not sum to N");
  if (components != expected)
    throw InvalidInput("layout: components differ from the construction");
}

void check_stored(bool ok, std::string const &what)
{
  if (!ok)
    throw InvalidInput(what);
}

} // namespace

X3hsInstance::X3hsInstance(std::size_t n, std::vector<Block> blocks)
: n_(n),
  blocks_(std::move(blocks))
{
  if (n_ < 1)
    throw InvalidInput("X3HS ground set must be nonempty");
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    auto &b = blocks_[j];
    std::sort(b.begin(), b.end());
    auto name = "block " + std::to_string(j + 1);
    if (b[0] < 1 || b[2] > n_)
      throw InvalidInput(name + " has an element outside [1, " +
                         std::to_string(n_) + "]");
    if (b[0] == b[1] || b[1] == b[2])
      throw InvalidInput(name + " does not have three distinct elements");
  }
}

Cnf3Instance::Cnf3Instance(std::size_t n, std::vector<Clause> clauses)
: n_(n),
  clauses_(std::move(clauses))
{
  if (n_ < 1)
    throw InvalidInput("formula must have at least one variable");
  for (std::size_t j = 0; j < clauses_.size(); ++j) {
    auto &c = clauses_[j];
    std::sort(c.begin(), c.end());
    auto name = "clause " + std::to_string(j + 1);
    if (c[0].var < 1 || c[2].var > n_)
      throw InvalidInput(name + " mentions a variable outside [1, " +
                         std::to_string(n_) + "]");
    if (c[0].var == c[1].var || c[1].var == c[2].var)
      throw InvalidInput(name + " repeats a variable");
  }
}

bool is_exact_hitting_set(X3hsInstance const &inst, HittingSet const &t)
{
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] < 1 || t[k] > inst.n() || (k > 0 && t[k] <= t[k - 1]))
      return false;
  }
  for (auto const &block : inst.blocks()) {
    auto hits = std::count_if(block.begin(), block.end(), [&](Point e) {
      return std::binary_search(t.begin(), t.end(), e);
    });
    if (hits != 1)
      return false;
  }
  return true;
}

bool satisfies(Cnf3Instance const &inst, Assignment const &sigma)
{
  if (sigma.size() != inst.n())
    return false;
  return std::all_of(inst.clauses().begin(), inst.clauses().end(),
                     [&](Clause const &c) {
                       return std::any_of(c.begin(), c.end(), [&](Literal l) {
                         return sigma[l.var - 1] != l.negated;
                       });
                     });
}

std::size_t x3hs_reduced_degree(X3hsInstance const &inst)
{
  auto primes = x3hs_primes(inst);
  BigInt n = 0;
  for (std::size_t i = 0; i < inst.n(); ++i)
    n += BigInt(primes.p[i]) * primes.p[inst.n() + i];
  for (std::size_t j = 0; j < inst.blocks().size(); ++j) {
    auto bp = block_primes(inst, primes.p, j);
    n += 6 * BigInt(primes.q[j]) * bp[0] * bp[1] * bp[2];
  }
  return checked_degree(n);
}

std::size_t cnf3_reduced_degree(Cnf3Instance const &inst)
{
  auto primes = first_k_primes_above(1, 2 * inst.n());
  BigInt n = 0;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    BigInt p = primes[2 * i], pbar = primes[2 * i + 1];
    n += p + pbar + p * pbar * ((p - 1) * (pbar - 1) + 1);
  }
  for (auto const &c : inst.clauses()) {
    BigInt r = 1;
    for (auto lit : c)
      r *= primes[2 * (lit.var - 1) + (lit.negated ? 1 : 0)];
    n += r;
  }
  return checked_degree(n);
}

ReducedCycleTypeInstance reduce_x3hs(X3hsInstance const &inst,
                                     ReductionOptions const &options)
{
  check_cap(x3hs_reduced_degree(inst), options);

  auto layout = x3hs_layout(inst);
  auto perms = x3hs_permutations(inst, layout);
  return {inst,
          Permutation::from_zero_based(std::move(perms.rho)),
          Permutation::from_zero_based(std::move(perms.pi1)),
          Permutation::from_zero_based(std::move(perms.pi2)),
          std::move(layout),
          false};
}

WitnessExponents witness_from_hitting_set(ReducedCycleTypeInstance const &inst,
                                          HittingSet const &t)
{
  if (!is_exact_hitting_set(inst.source, t))
    throw InvalidInput("not an exact hitting set of the instance");

  CongruenceSystem sys;
  for (std::size_t i = 0; i < inst.source.n(); ++i) {
    bool in_t = std::binary_search(t.begin(), t.end(), static_cast<Point>(i + 1));
    sys.add(in_t ? 1 : 0, inst.layout.primes_p[i]);
  }
  return {1, crt_smallest(sys)};
}

HittingSet extract_hitting_set(ReducedCycleTypeInstance const &inst,
                               WitnessExponents const &w)
{
  if (!verify_witness_cycletype(inst, w))
    throw InvalidInput("witness does not verify: ct(pi1^x1 pi2^x2) != ct(rho)");

  HittingSet t;
  for (std::size_t i = 0; i < inst.source.n(); ++i) {
    if (mod_of(w.x2, inst.layout.primes_p[i]) != 0)
      t.push_back(static_cast<Point>(i + 1));
  }
  return t;
}

ReducedFpfInstance reduce_3sat(Cnf3Instance const &inst,
                               ReductionOptions const &options)
{
  check_cap(cnf3_reduced_degree(inst), options);

  auto layout = cnf3_layout(inst);
  auto [pi1, pi2] = cnf3_permutations(inst, layout);
  return {inst,
          Permutation::from_zero_based(std::move(pi1)),
          Permutation::from_zero_based(std::move(pi2)),
          std::move(layout),
          false};
}

WitnessExponents witness_from_assignment(ReducedFpfInstance const &inst,
                                         Assignment const &sigma)
{
  if (!satisfies(inst.source, sigma))
    throw InvalidInput("assignment does not satisfy the formula");

  CongruenceSystem sys;
  for (std::size_t i = 0; i < inst.source.n(); ++i) {
    sys.add(sigma[i] ? 1 : 0, inst.layout.primes_p[i]);
    sys.add(sigma[i] ? 0 : 1, inst.layout.primes_pbar[i]);
  }
  return {1, crt_smallest(sys)};
}

Assignment extract_assignment(ReducedFpfInstance const &inst,
                              WitnessExponents const &w)
{
  if (!verify_witness_fpf(inst, w))
    throw InvalidInput("witness does not verify: pi1^z1 pi2^z2 has a fixpoint");

  Assignment sigma(inst.source.n());
  for (std::size_t i = 0; i < inst.source.n(); ++i)
    sigma[i] = mod_of(w.x2, inst.layout.primes_p[i]) != 0;
  return sigma;
}

ReducedCycleTypeInstance coset_restrict(ReducedCycleTypeInstance inst)
{
  inst.coset = true;
  return inst;
}

ReducedFpfInstance coset_restrict(ReducedFpfInstance inst)
{
  inst.coset = true;
  return inst;
}

void check_instance(ReducedCycleTypeInstance const &inst)
{
  auto const &src = inst.source;
  auto const &layout = inst.layout;
  auto expected = x3hs_layout(src);

  check_stored(layout.primes_p == expected.primes_p,
               "layout: primes p are not the first 2n primes above 3");
  check_stored(layout.primes_q == expected.primes_q,
               "layout: primes q are not the next m primes");
  check_components(layout.components, expected.components, layout.degree);
  check_stored(layout.blocks.size() == src.blocks().size(),
               "layout: one constant set per block required");

  for (std::size_t j = 0; j < src.blocks().size(); ++j) {
    auto const &c = layout.blocks[j];
    auto bp = block_primes(src, layout.primes_p, j);
    auto q = layout.primes_q[j];
    auto name = "block " + std::to_string(j + 1);

    check_stored(c.r == q * bp[0] * bp[1] * bp[2],
                 name + ": r is not q * p_i1 * p_i2 * p_i3");
    for (std::size_t d = 0; d < 6; ++d) {
      check_stored(c.s[d] >= 1 && c.s[d] < c.r &&
                     s_system(bp, q, d).satisfied_by(c.s[d]),
                   name + ": s_" + std::to_string(d + 1) +
                     " violates its congruences or range");
    }
    check_stored(c.t >= 1 && c.t < c.r && t_system(bp, q).satisfied_by(c.t),
                 name + ": t violates its congruences or range");
  }
  check_stored(layout == expected, "layout: constants differ from the construction");

  auto perms = x3hs_permutations(src, layout);
  check_stored(inst.rho.zero_based().size() == layout.degree &&
                 std::ranges::equal(inst.rho.zero_based(), perms.rho),
               "rho differs from the construction");
  check_stored(std::ranges::equal(inst.pi1.zero_based(), perms.pi1),
               "pi1 differs from the construction");
  check_stored(std::ranges::equal(inst.pi2.zero_based(), perms.pi2),
               "pi2 differs from the construction");
  check_stored(commute(inst.pi1, inst.pi2), "pi1 and pi2 do not commute");
}

void check_instance(ReducedFpfInstance const &inst)
{
  auto const &src = inst.source;
  auto const &layout = inst.layout;
  auto expected = cnf3_layout(src);

  check_stored(layout.primes_p == expected.primes_p &&
                 layout.primes_pbar == expected.primes_pbar,
               "layout: literal primes are not the interleaved first 2n primes");
  check_components(layout.components, expected.components, layout.degree);
  check_stored(layout.residues.size() == src.n(),
               "layout: one residue table per variable required");

  for (std::size_t i = 0; i < src.n(); ++i) {
    auto p = layout.primes_p[i];
    auto pbar = layout.primes_pbar[i];
    auto const &table = layout.residues[i];
    auto name = "variable " + std::to_string(i + 1);
    check_stored(table.size() == (p - 1) * (pbar - 1),
                 name + ": residue table has the wrong size");
    for (std::uint64_t l = 1; l < p; ++l) {
      for (std::uint64_t k = 1; k < pbar; ++k) {
        auto s = table[(l - 1) * (pbar - 1) + (k - 1)];
        check_stored(s >= 1 && s < p * pbar && s % p == l && s % pbar == k,
                     name + ": residue s[" + std::to_string(l) + "," +
                       std::to_string(k) + "] violates its congruences");
      }
    }
  }

  check_stored(layout.clause_moduli.size() == src.clauses().size(),
               "layout: one modulus per clause required");
  for (std::size_t j = 0; j < src.clauses().size(); ++j) {
    std::uint64_t r = 1;
    for (auto lit : src.clauses()[j])
      r *= literal_prime(layout, lit);
    check_stored(layout.clause_moduli[j] == r,
                 "clause " + std::to_string(j + 1) +
                   ": r is not the product of its literal primes");
  }
  check_stored(layout == expected, "layout: constants differ from the construction");

  auto [pi1, pi2] = cnf3_permutations(src, layout);
  check_stored(inst.pi1.zero_based().size() == layout.degree &&
                 std::ranges::equal(inst.pi1.zero_based(), pi1),
               "pi1 differs from the construction");
  check_stored(std::ranges::equal(inst.pi2.zero_based(), pi2),
               "pi2 differs from the construction");
  check_stored(commute(inst.pi1, inst.pi2), "pi1 and pi2 do not commute");
}

} // namespace permct
