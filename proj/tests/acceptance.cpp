// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Independent checks come from oracles.hpp and the helpers below.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "permct/cyclic_decider.hpp"
#include "permct/errors.hpp"
#include "permct/reductions.hpp"
#include "permct/solvers.hpp"

using namespace permct;
using oracle::Images;

namespace
{

using Clock = std::chrono::steady_clock;

struct Tally
{
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  double seconds = 0;
  std::string first_failure;

  void expect(bool ok, std::string const &what)
  {
    ++checks;
    if (!ok && failures++ == 0)
      first_failure = what;
  }
};

// Adds the wall time of its lifetime to a tally.
class Timed
{
public:
  explicit Timed(Tally &t) : tally_(t), start_(Clock::now()) {}
  ~Timed()
  {
    tally_.seconds +=
        std::chrono::duration<double>(Clock::now() - start_).count();
  }

private:
  Tally &tally_;
  Clock::time_point start_;
};

template<typename F>
auto timed(Tally &t, F f)
{
  Timed timer(t);
  return f();
}

int g_failed = 0;

void report(char const *id, Tally const &t, double limit_s, std::string extra)
{
  bool over = limit_s > 0 && t.seconds > limit_s;
  bool pass = t.failures == 0 && t.checks > 0 && !over;
  if (!pass)
    ++g_failed;
  std::printf("%s %s checks=%llu failures=%llu time=%.2fs", id,
              pass ? "PASS" : "FAIL",
              static_cast<unsigned long long>(t.checks),
              static_cast<unsigned long long>(t.failures), t.seconds);
  if (limit_s > 0)
    std::printf(" limit=%.0fs", limit_s);
  if (!extra.empty())
    std::printf(" %s", extra.c_str());
  if (t.failures)
    std::printf(" first-failure: %s", t.first_failure.c_str());
  if (over)
    std::printf(" over time limit");
  std::printf("\n");
  std::fflush(stdout);
}

std::uint64_t mod_big(BigInt const &x, std::uint64_t m)
{
  return static_cast<std::uint64_t>(x % m);
}

// pi^x computed by walking each cycle of pi and shifting by x mod length.
Images power_by_cycles(Images const &p, BigInt const &x)
{
  Images r(p.size());
  std::vector<bool> seen(p.size(), false);
  std::vector<Point> cyc;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (seen[a])
      continue;
    cyc.clear();
    for (Point b = static_cast<Point>(a); !seen[b]; b = p[b]) {
      seen[b] = true;
      cyc.push_back(b);
    }
    std::uint64_t s = mod_big(x, cyc.size());
    for (std::size_t k = 0; k < cyc.size(); ++k)
      r[cyc[k]] = cyc[(k + s) % cyc.size()];
  }
  return r;
}

Images element(Permutation const &pi1, BigInt const &x1,
               Permutation const &pi2, BigInt const &x2)
{
  return oracle::mul(power_by_cycles(oracle::images_of(pi1), x1),
                     power_by_cycles(oracle::images_of(pi2), x2));
}

BigInt random_below(BigInt const &bound, std::mt19937_64 &rng)
{
  BigInt x = 0;
  for (int k = 0; k < 4; ++k)
    x = (x << 64) + rng();
  return x % bound;
}

std::uint64_t smod(std::int64_t v, std::uint64_t m)
{
  auto r = v % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

std::string describe(X3hsInstance const &inst)
{
  std::ostringstream s;
  s << "x3hs n=" << inst.n() << " blocks=";
  for (auto const &b : inst.blocks())
    s << "{" << b[0] << "," << b[1] << "," << b[2] << "}";
  return s.str();
}

std::string describe(Cnf3Instance const &inst)
{
  std::ostringstream s;
  s << "cnf3 n=" << inst.n() << " m=" << inst.clauses().size();
  return s.str();
}

// ---------------------------------------------------------------------------

void ac1()
{
  Tally t;
  {
    Timed timer(t);
    for (std::uint64_t ell = 1; ell <= 200; ++ell) {
      auto gamma = oracle::std_cycle_power(ell, 1);
      for (std::uint64_t x = 0; x <= 1000; ++x) {
        std::uint64_t g = std::gcd(x, ell);
        auto expect = CycleType::from_lengths(std::vector<std::uint64_t>(g, ell / g));
        t.expect(cycle_type(power(gamma, x)) == expect,
                 "l=" + std::to_string(ell) + " x=" + std::to_string(x));
      }
    }
  }
  report("AC1", t, 10, "cycle powers l<=200 x<=1000");
}

void decider_pair(Tally &t, Images const &pi, Images const &rho)
{
  auto p = Permutation::from_zero_based(pi);
  auto r = Permutation::from_zero_based(rho);
  auto got = decide_cycletype_cyclic(p, r);
  auto want = oracle::q_enumeration(pi, rho);
  std::string tag = "n=" + std::to_string(p.degree());
  t.expect(got.answer == want.has_value(), "answer mismatch " + tag);
  t.expect(got.witness_d.has_value() == got.answer, "witness presence " + tag);
  if (got.witness_d) {
    auto d = static_cast<std::uint64_t>(got.witness_d->to_integer());
    t.expect(oracle::length_multiset(oracle::naive_power(pi, d)) ==
                 oracle::length_multiset(rho),
             "witness d does not re-verify " + tag);
  }
}

Images inverse_images(Images const &p)
{
  Images inv(p.size());
  for (std::size_t a = 0; a < p.size(); ++a)
    inv[p[a]] = static_cast<Point>(a);
  return inv;
}

void ac2()
{
  Tally t;
  {
    Timed timer(t);
    for (std::size_t n : {3u, 4u, 5u}) {
      auto all = oracle::all_permutations(n);
      for (auto const &pi : all)
        for (auto const &rho : all)
          decider_pair(t, pi, rho);
    }
    std::mt19937_64 rng(2002);
    for (std::size_t n = 6; n <= 12; ++n) {
      for (int it = 0; it < 1000; ++it) {
        auto pi = oracle::random_images(n, rng);
        Images rho;
        if (it % 2) {
          rho = oracle::random_images(n, rng);
        } else {
          // a conjugate of a power of pi, so YES answers are common
          auto sigma = oracle::random_images(n, rng);
          rho = oracle::mul(oracle::mul(inverse_images(sigma),
                                        oracle::naive_power(pi, rng() % 60)),
                            sigma);
        }
        decider_pair(t, pi, rho);
      }
    }
  }
  report("AC2", t, 60, "exhaustive n=3..5, 1000 random pairs each n=6..12");
}

void ac3()
{
  Tally t;
  {
    Timed timer(t);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (auto const &img : oracle::all_permutations(n)) {
        auto pi = Permutation::from_zero_based(img);
        auto ord = order(pi);
        auto ct = cycle_type(pi);
        for (std::uint64_t i = 0; i < ord; ++i) {
          auto pw = power(pi, i);
          bool same_order = order(pw) == ord;
          bool same_type = cycle_type(pw) == ct;
          t.expect(same_order == same_type,
                   "n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
      }
    }
  }
  report("AC3", t, 0, "all pi in Sym(1..6), all i < ord(pi)");
}

// Shared between the reduction criteria.
Tally t4, t5, t6, t7, t8;
std::size_t x3hs_sat = 0, x3hs_unsat = 0, cnf_sat = 0, cnf_unsat = 0;
std::size_t max_degree_x3hs = 0, max_degree_cnf = 0;

constexpr std::size_t kX3hsDegreeLimit = 1'200'000;

void check_constants(X3hsInstance const &inst, ReducedCycleTypeInstance const &red)
{
  std::string tag = describe(inst);
  Timed timer(t7);
  t7.expect(commute(red.pi1, red.pi2), "pi1 pi2 do not commute: " + tag);
  auto i1 = oracle::images_of(red.pi1), i2 = oracle::images_of(red.pi2);
  t7.expect(oracle::mul(i1, i2) == oracle::mul(i2, i1),
            "pointwise commutation fails: " + tag);
  bool structural = true;
  try {
    check_instance(red);
  } catch (InvalidInput const &) {
    structural = false;
  }
  t7.expect(structural, "check_instance rejects: " + tag);

  auto const &L = red.layout;
  std::size_t n = inst.n(), m = inst.blocks().size();
  auto p = oracle::trial_primes_above(3, 2 * n);
  t7.expect(L.primes_p == p, "primes_p: " + tag);
  t7.expect(L.primes_q == oracle::trial_primes_above(p.back(), m),
            "primes_q: " + tag);
  if (L.blocks.size() != m) {
    t7.expect(false, "block count: " + tag);
    return;
  }
  int const table[6][3] = {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1},
                           {-1, -2, -3}, {-3, -1, -2}, {-2, -3, -1}};
  for (std::size_t j = 0; j < m; ++j) {
    auto const &b = inst.blocks()[j];
    auto const &c = L.blocks[j];
    std::uint64_t a[3] = {p[b[0] - 1], p[b[1] - 1], p[b[2] - 1]};
    std::uint64_t q = L.primes_q[j];
    std::string bt = tag + " block " + std::to_string(j + 1);
    t7.expect(c.r == q * a[0] * a[1] * a[2], "r: " + bt);
    bool t_ok = c.t < c.r && c.t % q == 0;
    for (auto ak : a)
      t_ok = t_ok && c.t % ak == 1;
    t7.expect(t_ok, "t congruences: " + bt);
    for (int d = 0; d < 6; ++d) {
      bool s_ok = c.s[d] < c.r && c.s[d] % q == 1;
      for (int k = 0; k < 3; ++k)
        s_ok = s_ok && c.s[d] % a[k] == smod(table[d][k], a[k]);
      t7.expect(s_ok, "s congruences: " + bt + " factor " + std::to_string(d + 1));
    }
  }
}

void check_constants(Cnf3Instance const &inst, ReducedFpfInstance const &red)
{
  std::string tag = describe(inst);
  Timed timer(t7);
  t7.expect(commute(red.pi1, red.pi2), "pi1 pi2 do not commute: " + tag);
  auto i1 = oracle::images_of(red.pi1), i2 = oracle::images_of(red.pi2);
  t7.expect(oracle::mul(i1, i2) == oracle::mul(i2, i1),
            "pointwise commutation fails: " + tag);
  bool structural = true;
  try {
    check_instance(red);
  } catch (InvalidInput const &) {
    structural = false;
  }
  t7.expect(structural, "check_instance rejects: " + tag);

  auto const &L = red.layout;
  auto primes = oracle::trial_primes_above(0, 2 * inst.n());
  bool primes_ok = L.primes_p.size() == inst.n() && L.primes_pbar.size() == inst.n();
  for (std::size_t i = 0; primes_ok && i < inst.n(); ++i)
    primes_ok = L.primes_p[i] == primes[2 * i] && L.primes_pbar[i] == primes[2 * i + 1];
  t7.expect(primes_ok, "literal primes: " + tag);
  if (!primes_ok || L.residues.size() != inst.n()) {
    t7.expect(false, "residue table shape: " + tag);
    return;
  }
  for (std::size_t i = 0; i < inst.n(); ++i) {
    std::uint64_t p = primes[2 * i], pb = primes[2 * i + 1];
    auto const &res = L.residues[i];
    bool ok = res.size() == (p - 1) * (pb - 1);
    for (std::uint64_t l = 1; ok && l < p; ++l) {
      for (std::uint64_t k = 1; ok && k < pb; ++k) {
        auto v = res[(l - 1) * (pb - 1) + (k - 1)];
        ok = v >= 1 && v < p * pb && v % p == l && v % pb == k;
      }
    }
    t7.expect(ok, "residues of variable " + std::to_string(i + 1) + ": " + tag);
  }
  bool moduli_ok = L.clause_moduli.size() == inst.clauses().size();
  for (std::size_t j = 0; moduli_ok && j < inst.clauses().size(); ++j) {
    std::uint64_t r = 1;
    for (auto const &lit : inst.clauses()[j])
      r *= primes[2 * (lit.var - 1) + (lit.negated ? 1 : 0)];
    moduli_ok = L.clause_moduli[j] == r;
  }
  t7.expect(moduli_ok, "clause moduli: " + tag);
}

// For a verified witness, the six factors of each block must split exactly
// into the itemized cycle counts.
void check_block_counts(X3hsInstance const &inst, ReducedCycleTypeInstance const &red,
                        Images const &cand, std::string const &tag)
{
  auto const &L = red.layout;
  std::size_t n = inst.n();
  for (std::size_t j = 0; j < inst.blocks().size(); ++j) {
    auto const &b = inst.blocks()[j];
    std::uint64_t a1 = L.primes_p[b[0] - 1], a2 = L.primes_p[b[1] - 1],
                  a3 = L.primes_p[b[2] - 1], q = L.primes_q[j];
    std::uint64_t r = q * a1 * a2 * a3;
    std::vector<std::uint64_t> want;
    want.insert(want.end(), a1 * a2 * a3, q);
    want.insert(want.end(), a1, a2 * a3 * q);
    want.insert(want.end(), a2, a1 * a3 * q);
    want.insert(want.end(), a3, a1 * a2 * q);
    want.insert(want.end(), 2, r);
    std::sort(want.begin(), want.end());

    std::size_t off = L.components[n + 6 * j].offset;
    Images part(6 * r);
    bool inside = true;
    for (std::size_t a = 0; a < 6 * r; ++a) {
      Point img = cand[off + a];
      inside = inside && img >= off && img < off + 6 * r;
      part[a] = static_cast<Point>(img - off);
    }
    t4.expect(inside && oracle::length_multiset(part) == want,
              "block counts " + std::to_string(j + 1) + ": " + tag);
  }
}

void ac4()
{
  std::mt19937_64 rng(4004);
  std::size_t attempts = 0;
  while (x3hs_sat < 24 && attempts++ < 10000) {
    std::size_t n = 3 + x3hs_sat % 4;
    std::size_t m = 1 + rng() % 5;
    auto inst = oracle::planted_x3hs(n, m, rng);
    std::size_t deg = x3hs_reduced_degree(inst);
    if (deg > kX3hsDegreeLimit)
      continue;
    ++x3hs_sat;
    max_degree_x3hs = std::max(max_degree_x3hs, deg);
    std::string tag = describe(inst);

    auto sets = timed(t4, [&] { return oracle::exact_hitting_sets(inst); });
    t4.expect(!sets.empty(), "planted instance has no exact hitting set: " + tag);
    auto red = timed(t4, [&] { return reduce_x3hs(inst); });
    check_constants(inst, red);
    auto coset = coset_restrict(red);
    auto target = oracle::length_multiset(red.rho);
    for (auto const &T : sets) {
      WitnessExponents w;
      {
        Timed timer(t4);
        w = witness_from_hitting_set(red, T);
        t4.expect(w.x1 == 1, "x1 != 1: " + tag);
        t4.expect(verify_witness_cycletype(red, w), "witness rejected: " + tag);
        auto cand = element(red.pi1, w.x1, red.pi2, w.x2);
        t4.expect(oracle::length_multiset(cand) == target,
                  "oracle cycle type differs: " + tag);
        check_block_counts(inst, red, cand, tag);
        bool same = false;
        try {
          same = extract_hitting_set(red, w) == T;
        } catch (InvalidInput const &) {
        }
        t4.expect(same, "extract_hitting_set does not return T: " + tag);
      }
      Timed timer(t8);
      t8.expect(verify_witness_cycletype(coset, {1, w.x2}),
                "coset rejects (1, x2): " + tag);
      t8.expect(!verify_witness_cycletype(coset, {0, w.x2}),
                "coset accepts (0, x2): " + tag);
    }
  }
  report("AC4", t4, 120,
         "instances=" + std::to_string(x3hs_sat) +
             " max-degree=" + std::to_string(max_degree_x3hs));
}

void ac5()
{
  std::mt19937_64 rng(5005);
  std::vector<X3hsInstance> pool{X3hsInstance(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})};
  std::size_t attempts = 0;
  while (pool.size() < 8 && attempts++ < 10000) {
    std::size_t n = 3 + rng() % 4;
    auto inst = oracle::random_x3hs(n, 2 + rng() % 4, rng);
    if (x3hs_reduced_degree(inst) <= kX3hsDegreeLimit &&
        oracle::exact_hitting_sets(inst).empty())
      pool.push_back(inst);
  }
  for (auto const &inst : pool) {
    ++x3hs_unsat;
    auto red = timed(t5, [&] { return reduce_x3hs(inst); });
    check_constants(inst, red);
    Timed timer(t5);
    BigInt o1 = order(red.pi1), o2 = order(red.pi2);
    for (int k = 0; k < 100; ++k) {
      WitnessExponents w{random_below(o1, rng), random_below(o2, rng)};
      t5.expect(!verify_witness_cycletype(red, w),
                "random pair verified on unsatisfiable " + describe(inst));
    }
  }
  report("AC5", t5, 0, "instances=" + std::to_string(x3hs_unsat) + " pairs=100 each");
}

// Runs the fpf round trip for one satisfying assignment.
void cnf_witness(ReducedFpfInstance const &red, ReducedFpfInstance const &coset,
                 Assignment const &sigma, std::string const &tag)
{
  WitnessExponents w;
  {
    Timed timer(t6);
    w = witness_from_assignment(red, sigma);
    t6.expect(w.x1 == 1, "z1 != 1: " + tag);
    t6.expect(verify_witness_fpf(red, w), "witness rejected: " + tag);
    t6.expect(!oracle::has_fixpoint(element(red.pi1, w.x1, red.pi2, w.x2)),
              "oracle finds a fixpoint: " + tag);
    bool same = false;
    try {
      same = extract_assignment(red, w) == sigma;
    } catch (InvalidInput const &) {
    }
    t6.expect(same, "extract_assignment does not round-trip: " + tag);
  }
  Timed timer(t8);
  t8.expect(verify_witness_fpf(coset, {1, w.x2}), "coset rejects (1, z2): " + tag);
  t8.expect(!verify_witness_fpf(coset, {0, w.x2}), "coset accepts (0, z2): " + tag);
}

void ac6()
{
  std::mt19937_64 rng(6006);
  std::size_t assignments = 0;
  for (std::size_t k = 0; k < 24; ++k) {
    std::size_t n = 3 + k % 6;
    auto inst = oracle::planted_cnf3(n, 1 + rng() % 10, rng);
    ++cnf_sat;
    max_degree_cnf = std::max(max_degree_cnf, cnf3_reduced_degree(inst));
    std::string tag = describe(inst);
    auto sats = timed(t6, [&] { return oracle::satisfying_assignments(inst); });
    t6.expect(!sats.empty(), "planted formula unsatisfiable: " + tag);
    auto red = timed(t6, [&] { return reduce_3sat(inst); });
    check_constants(inst, red);
    auto coset = coset_restrict(red);
    // Every satisfying assignment for small formulas, an even spread of
    // eight otherwise.
    std::size_t step =
        red.layout.degree <= 500'000 ? 1 : std::max<std::size_t>(1, sats.size() / 8);
    for (std::size_t i = 0; i < sats.size(); i += step) {
      cnf_witness(red, coset, sats[i], tag);
      ++assignments;
    }
  }

  // Unsatisfiable formulas: every sign pattern on three variables, plus
  // random dense ones.
  std::vector<Cnf3Instance> pool;
  {
    std::vector<Clause> all;
    for (int mask = 0; mask < 8; ++mask)
      all.push_back({Literal{1, bool(mask & 1)}, Literal{2, bool(mask & 2)},
                     Literal{3, bool(mask & 4)}});
    pool.emplace_back(3, all);
  }
  std::size_t attempts = 0;
  while (pool.size() < 6 && attempts++ < 100000) {
    auto inst = oracle::random_cnf3(3 + rng() % 2, 8 + rng() % 3, rng);
    if (oracle::satisfying_assignments(inst).empty())
      pool.push_back(inst);
  }
  for (auto const &inst : pool) {
    ++cnf_unsat;
    auto red = timed(t6, [&] { return reduce_3sat(inst); });
    check_constants(inst, red);
    Timed timer(t6);
    BigInt o1 = order(red.pi1), o2 = order(red.pi2);
    for (int k = 0; k < 100; ++k) {
      WitnessExponents w{random_below(o1, rng), random_below(o2, rng)};
      t6.expect(!verify_witness_fpf(red, w),
                "random pair verified on unsatisfiable " + describe(inst));
    }
  }
  report("AC6", t6, 120,
         "satisfiable=" + std::to_string(cnf_sat) +
             " assignments=" + std::to_string(assignments) +
             " unsatisfiable=" + std::to_string(cnf_unsat) +
             " max-degree=" + std::to_string(max_degree_cnf));
}

void ac7()
{
  report("AC7", t7, 0,
         "instances=" + std::to_string(x3hs_sat + x3hs_unsat + cnf_sat + cnf_unsat));
}

void ac8()
{
  report("AC8", t8, 0,
         "satisfiable instances=" + std::to_string(x3hs_sat + cnf_sat));
}

void ac9()
{
  Tally t;
  std::size_t pairs = 0;
  {
    Timed timer(t);
    for (std::size_t n = 1; n <= 6; ++n) {
      auto all = oracle::all_permutations(n);
      // one target per cycle type
      std::map<std::vector<std::uint64_t>, Permutation> targets;
      for (auto const &img : all)
        targets.emplace(oracle::length_multiset(img), Permutation::from_zero_based(img));

      for (auto const &a : all) {
        for (auto const &b : all) {
          if (oracle::mul(a, b) != oracle::mul(b, a))
            continue;
          ++pairs;
          auto group = oracle::closure({a, b}, n);
          std::set<std::vector<std::uint64_t>> types;
          bool has_fpf = false;
          for (auto const &g : group) {
            types.insert(oracle::length_multiset(g));
            has_fpf = has_fpf || !oracle::has_fixpoint(g);
          }
          auto pi1 = Permutation::from_zero_based(a);
          auto pi2 = Permutation::from_zero_based(b);
          std::string tag = "n=" + std::to_string(n) + " pair " + std::to_string(pairs);

          for (auto const &[lens, rho] : targets) {
            auto res = solve_cycletype_ab2(pi1, pi2, rho);
            bool want = types.count(lens) > 0;
            t.expect(res.status == (want ? SolveStatus::FoundWitness
                                         : SolveStatus::ExhaustedNoWitness),
                     "cycle type answer: " + tag);
            if (res.witness) {
              auto g = element(pi1, res.witness->x1, pi2, res.witness->x2);
              t.expect(group.count(g) && oracle::length_multiset(g) == lens,
                       "cycle type witness: " + tag);
            }
          }
          auto res = solve_fpf_ab2(pi1, pi2);
          t.expect(res.status == (has_fpf ? SolveStatus::FoundWitness
                                          : SolveStatus::ExhaustedNoWitness),
                   "fpf answer: " + tag);
          if (res.witness) {
            auto g = element(pi1, res.witness->x1, pi2, res.witness->x2);
            t.expect(group.count(g) && !oracle::has_fixpoint(g), "fpf witness: " + tag);
          }
        }
      }
    }
  }
  report("AC9", t, 60, "commuting pairs=" + std::to_string(pairs));
}

struct Golden
{
  std::vector<std::string> args;
  std::string out;
  int code;
  std::string err = "-"; // "-" means stderr is not compared
};

std::string slurp(std::filesystem::path const &p)
{
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

void ac10()
{
  Tally t;
  std::string data = PERMCT_TEST_DATA;
  auto dir = std::filesystem::temp_directory_path() / "permct_acceptance";
  std::filesystem::create_directories(dir);
  std::string reduced = (dir / "x3hs_small.reduced.json").string();
  std::string cnf_golden = data + "/cnf3_n1.reduced.json";

  std::vector<Golden> corpus{
      {{"ct", "(1 2)(3 4 5)", "--deg", "6"}, "1^1 2^1 3^1\n", 0},
      {{"ct", "[2,1,3]"}, "1^1 2^1\n", 0},
      {{"ct", "(1 2)", "--format", "json"}, "{\"degree\":2,\"cycle_type\":[[2,1]]}\n", 0},
      {{"order", "(1 2 3 4)(5 6 7 8 9 10)"}, "ord=12 pe=2^2·3\n", 0},
      {{"order", "deg=3 ()"}, "ord=1 pe=1\n", 0},
      {{"pow", "(1 2 3 4 5 6)", "4"}, "(1 5 3)(2 6 4)\n", 0},
      {{"pow", "(1 2 3 4 5 6)", "2^100"}, "(1 5 3)(2 6 4)\n", 0},
      {{"pow", "(1 2)", "2", "--deg", "3", "--explicit-fixpoints"}, "(1)(2)(3)\n", 0},
      {{"decide-cyclic", "(1 2 3 4 5 6)", "(1 2)(3 4)(5 6)"}, "YES d=3\n", 0},
      {{"decide-cyclic", "(1 2 3 4 5 6)", "(1 2)(3 4)"}, "NO type-mismatch-at-d\n", 1},
      {{"decide-cyclic", "(1 2 3 4 5 6)", "(1 2 3 4)"}, "NO order-not-dividing\n", 1},
      {{"solve", "ab2", "(1 2)", "(3 4)", "(1 2)(3 4)"}, "FOUND x1=1 x2=1 pairs=4\n", 0},
      {{"solve", "ab2", "(1 2)", "(3 4)", "deg=4 (1 2 3)"}, "NONE pairs=4\n", 1},
      {{"solve", "ab2", "(1 2 3 4 5 6 7)", "(8 9 10 11 12)", "(1 2)", "--budget", "3"},
       "BUDGET pairs=3\n", 2},
      {{"solve", "cyclic", "(1 2 3 4 5 6)", "(1 2)(3 4)(5 6)"}, "FOUND q=3\n", 0},
      {{"reduce", "3sat", data + "/cnf3_n1.json"}, slurp(cnf_golden), 0},
      {{"reduce", "x3hs", data + "/x3hs_small.json", "-o", reduced}, "", 0},
      {{"verify", reduced, "--witness", data + "/witness_t1.json"}, "VERIFIED\n", 0},
      {{"verify", reduced, "--witness", data + "/witness_bad.json"}, "REFUTED\n", 1},
      {{"extract", reduced, "--witness", data + "/witness_t1.json"}, "T={1}\n", 0},
      {{"verify", cnf_golden, "--witness", data + "/witness_z_true.json"}, "VERIFIED\n", 0},
      {{"extract", cnf_golden, "--witness", data + "/witness_z_false.json"}, "x1=0\n", 0},
      {{"bogus"}, "", 64},
      {{"ct", "(1 2"}, "", 65,
       "error: 1:5: expected ',', whitespace or ')', found end of input\n"},
      {{"reduce", "3sat", "--dimacs", data + "/short_clause.cnf"}, "", 65,
       "error: 2:1: clause has 2 literals; exactly 3 required\n"},
  };
  {
    Timed timer(t);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      auto const &g = corpus[k];
      std::ostringstream out, err;
      int code = cli::run(g.args, out, err);
      std::string tag = "invocation " + std::to_string(k + 1) + " (" + g.args[0] + ")";
      t.expect(code == g.code, tag + " exit " + std::to_string(code));
      t.expect(out.str() == g.out, tag + " stdout");
      if (g.err != "-")
        t.expect(err.str() == g.err, tag + " stderr");
    }
  }
  report("AC10", t, 0, "invocations=" + std::to_string(corpus.size()));
}

} // namespace

int main()
{
  ac1();
  ac2();
  ac3();
  ac4();
  ac5();
  ac6();
  ac7();
  ac8();
  ac9();
  ac10();
  return g_failed ? 1 : 0;
}
