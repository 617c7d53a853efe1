#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace refcone {

using u64 = std::uint64_t;

bool is_prime(u64 n);
// Smallest prime p with p ≡ residue (mod modulus); gcd(residue, modulus) = 1
// guarantees existence (Dirichlet, assumed not re-proved).
u64 smallest_prime_in_class(u64 residue, u64 modulus);

// Congruence condition on primes. A prime p satisfies the condition when:
//   p in include        -> yes
//   p in exclude        -> no
//   p divides modulus   -> no (ramified primes are opt-in via include)
//   otherwise           -> (p mod modulus) in residues
// modulus 1 with residues {0} accepts every prime. All residue sets used by
// the builtin catalog are the splitting conditions of abelian character
// fields, hence subgroups of the unit group, but that is not required here.
struct PrimeCondition {
  u64 modulus = 1;
  std::vector<u64> residues;  // sorted, unique, in [0, modulus), coprime to modulus
  std::vector<u64> include;   // sorted primes
  std::vector<u64> exclude;   // sorted primes, disjoint from include

  bool holds(u64 p) const;
  bool accepts_all() const;
  void canonicalize();
  // Residue test only: does the full class "r mod modulus" pass? Requires
  // gcd(r, modulus) = 1 after reduction.
  bool residue_test(u64 r) const;

  static PrimeCondition all_primes();
  static PrimeCondition residue_class(u64 modulus, std::vector<u64> residues);
  static PrimeCondition only(std::vector<u64> primes);

  bool operator==(const PrimeCondition&) const = default;
  std::string str() const;
};

struct CoverResult {
  bool covered = false;
  u64 modulus = 1;                       // lcm of all moduli
  std::optional<u64> uncovered_class;    // a unit class mod `modulus` no condition covers
  std::optional<u64> uncovered_prime;    // a special prime no condition accepts
};

// Exact CRT check that the conditions jointly cover all primes: every unit
// class mod the lcm passes some residue test, and every special prime
// (divisors of the lcm plus all listed include/exclude primes) satisfies some
// condition directly.
CoverResult covers(const std::vector<PrimeCondition>& conditions);

// One prime per unit class mod the lcm of the moduli (the smallest in each
// class) plus every prime dividing the lcm; deduplicated, sorted. Intended
// for small moduli sets; cost grows with phi(lcm).
std::vector<u64> class_representatives(const std::vector<PrimeCondition>& conditions);

// The conjunction "p satisfies every condition", again as a PrimeCondition.
// Exact: residues are enumerated mod the lcm and special primes are folded
// into include/exclude lists.
PrimeCondition conjunction(const std::vector<PrimeCondition>& conditions);

// Exact implication: every prime p ≡ r (mod m) satisfies c. Requires the
// class to contain primes (gcd(r, m) = 1) or to be the class of a single
// prime dividing m.
bool class_implies(u64 r, u64 m, const PrimeCondition& c);

}  // namespace refcone
