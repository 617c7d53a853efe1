#include "refcone/primes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace refcone {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> ps;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // deterministic Miller-Rabin for 64-bit with the standard 12-base set
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 smallest_prime_in_class(u64 residue, u64 modulus) {
  if (modulus == 0) throw std::invalid_argument("zero modulus");
  residue %= modulus;
  if (modulus == 1) return 2;
  if (std::gcd(residue, modulus) != 1) {
    if (is_prime(residue)) return residue;  // e.g. the class of p mod p*k
    throw std::invalid_argument("class contains no prime");
  }
  for (u64 p = residue == 0 ? modulus : residue;; p += modulus)
    if (p > 1 && is_prime(p)) return p;
}

bool PrimeCondition::holds(u64 p) const {
  if (std::binary_search(include.begin(), include.end(), p)) return true;
  if (std::binary_search(exclude.begin(), exclude.end(), p)) return false;
  if (modulus > 1 && modulus % p == 0) return false;
  return std::binary_search(residues.begin(), residues.end(), p % modulus);
}

bool PrimeCondition::residue_test(u64 r) const {
  return std::binary_search(residues.begin(), residues.end(), r % modulus);
}

bool PrimeCondition::accepts_all() const {
  return modulus == 1 && residue_test(0) && exclude.empty();
}

void PrimeCondition::canonicalize() {
  auto fix = [](std::vector<u64>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  for (u64& r : residues) r %= modulus;
  fix(residues);
  fix(include);
  fix(exclude);
  for (u64 r : residues)
    if (modulus > 1 && std::gcd(r, modulus) != 1)
      throw std::invalid_argument("residue not a unit mod conductor");
  for (u64 p : include)
    if (std::binary_search(exclude.begin(), exclude.end(), p))
      throw std::invalid_argument("include and exclude lists overlap");
}

PrimeCondition PrimeCondition::all_primes() {
  PrimeCondition c;
  c.modulus = 1;
  c.residues = {0};
  return c;
}

PrimeCondition PrimeCondition::residue_class(u64 modulus, std::vector<u64> residues) {
  PrimeCondition c;
  c.modulus = modulus;
  c.residues = std::move(residues);
  c.canonicalize();
  return c;
}

PrimeCondition PrimeCondition::only(std::vector<u64> primes) {
  PrimeCondition c;
  c.modulus = 1;
  c.include = std::move(primes);
  c.canonicalize();
  return c;
}

std::string PrimeCondition::str() const {
  if (accepts_all()) return "all primes";
  std::string out;
  if (!residues.empty() && modulus > 1) {
    out = "p = ";
    for (std::size_t i = 0; i < residues.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(residues[i]);
    }
    out += " (mod " + std::to_string(modulus) + ")";
  }
  auto list = [](const std::vector<u64>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  if (!include.empty()) {
    if (!out.empty()) out += " or ";
    out += "p in {" + list(include) + "}";
  }
  if (!exclude.empty()) out += " excluding {" + list(exclude) + "}";
  if (out.empty()) out = "no primes";
  return out;
}

namespace {

u64 lcm_of_moduli(const std::vector<PrimeCondition>& conditions) {
  u64 L = 1;
  for (const auto& c : conditions) {
    u64 g = std::gcd(L, c.modulus);
    u64 next = L / g;
    if (c.modulus > 0 && next > (u64(1) << 62) / c.modulus)
      throw std::overflow_error("conductor lcm too large");
    L = next * c.modulus;
  }
  return L;
}

std::vector<u64> special_primes(const std::vector<PrimeCondition>& conditions, u64 L) {
  std::vector<u64> ps = prime_divisors(L);
  for (const auto& c : conditions) {
    ps.insert(ps.end(), c.include.begin(), c.include.end());
    ps.insert(ps.end(), c.exclude.begin(), c.exclude.end());
  }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

}  // namespace

CoverResult covers(const std::vector<PrimeCondition>& conditions) {
  if (conditions.empty()) throw std::invalid_argument("covers: empty condition list");
  CoverResult res;
  res.modulus = lcm_of_moduli(conditions);
  u64 L = res.modulus;
  for (u64 r = L == 1 ? 0 : 1; r < std::max<u64>(L, 1); ++r) {
    if (L > 1 && std::gcd(r, L) != 1) continue;
    bool hit = false;
    for (const auto& c : conditions)
      if (c.residue_test(r)) {
        hit = true;
        break;
      }
    if (!hit) {
      res.uncovered_class = r;
      return res;
    }
    if (L == 1) break;
  }
  for (u64 p : special_primes(conditions, L)) {
    bool hit = false;
    for (const auto& c : conditions)
      if (c.holds(p)) {
        hit = true;
        break;
      }
    if (!hit) {
      res.uncovered_prime = p;
      return res;
    }
  }
  res.covered = true;
  return res;
}

std::vector<u64> class_representatives(const std::vector<PrimeCondition>& conditions) {
  u64 L = lcm_of_moduli(conditions);
  std::vector<u64> reps;
  if (L == 1) {
    reps.push_back(2);
    return reps;
  }
  for (u64 r = 1; r < L; ++r) {
    if (std::gcd(r, L) != 1) continue;
    reps.push_back(smallest_prime_in_class(r, L));
  }
  for (u64 p : prime_divisors(L)) reps.push_back(p);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

PrimeCondition conjunction(const std::vector<PrimeCondition>& conditions) {
  if (conditions.empty()) return PrimeCondition::all_primes();
  PrimeCondition out;
  u64 L = lcm_of_moduli(conditions);
  out.modulus = L;
  if (L == 1) {
    bool all = std::all_of(conditions.begin(), conditions.end(),
                           [](const PrimeCondition& c) { return c.residue_test(0); });
    if (all) out.residues = {0};
  } else {
    for (u64 r = 1; r < L; ++r) {
      if (std::gcd(r, L) != 1) continue;
      bool all = std::all_of(conditions.begin(), conditions.end(),
                             [&](const PrimeCondition& c) { return c.residue_test(r); });
      if (all) out.residues.push_back(r);
    }
  }
  // Special primes are decided pointwise and pinned via include/exclude.
  for (u64 p : special_primes(conditions, L)) {
    bool all = std::all_of(conditions.begin(), conditions.end(),
                           [&](const PrimeCondition& c) { return c.holds(p); });
    bool by_residue = (L == 1 || p % L != 0) && L % p != 0 && std::gcd(p % L, L) == 1 &&
                      out.residue_test(p % L);
    if (all && !by_residue)
      out.include.push_back(p);
    else if (!all && by_residue)
      out.exclude.push_back(p);
  }
  out.canonicalize();
  return out;
}

bool class_implies(u64 r, u64 m, const PrimeCondition& c) {
  if (m == 0) throw std::invalid_argument("zero modulus");
  r %= m;
  if (std::gcd(r, m) != 1) {
    // class of a ramified prime: only meaningful when it pins a single prime
    if (is_prime(r) && m % r == 0) return c.holds(r);
    throw std::invalid_argument("class_implies: class without primes");
  }
  u64 g = std::gcd(m, c.modulus);
  u64 L = m / g * c.modulus;
  for (u64 s = r % L;; s += m) {
    // walk the refinements of r mod m inside mod L
    if (std::gcd(s % L, L) == 1 && !c.residue_test(s % L)) return false;
    if (s + m >= L + (r % m)) break;
  }
  // classes coprime to L contain infinitely many primes; excluded primes in
  // the class break the implication
  for (u64 p : c.exclude)
    if (p % m == r) return false;
  return true;
}

}  // namespace refcone
