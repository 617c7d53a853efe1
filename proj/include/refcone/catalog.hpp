#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "refcone/degrees.hpp"
#include "refcone/primes.hpp"
#include "refcone/rational.hpp"

namespace refcone {

enum class WeylSeries { A, B, D, E6, E7, E8, F4, G2 };

// Identity of a simple reflection group. Weyl covers the rational (compact
// Lie) cases with B and C identified; Imprimitive is the monomial family
// G(m,e,n); Cyclic the rank-one family Z/m; Sporadic the exceptional
// complex groups in Shephard-Todd numbering. Indices 28/35/36/37 are the
// rational exceptionals and live under their Weyl ids instead.
struct Family {
  struct Weyl {
    WeylSeries series;
    int n;  // rank
    bool operator==(const Weyl&) const = default;
  };
  struct Imprimitive {
    int m, e, n;
    bool operator==(const Imprimitive&) const = default;
  };
  struct Cyclic {
    int m;
    bool operator==(const Cyclic&) const = default;
  };
  struct Sporadic {
    int index;
    bool operator==(const Sporadic&) const = default;
  };
  std::variant<Weyl, Imprimitive, Cyclic, Sporadic> v;

  bool operator==(const Family&) const = default;
};

// Throw std::invalid_argument ("invalid family: ...") on parameter sets that
// are out of range or duplicate another entry (e.g. G(4,4,2) = W(B2)).
void validate_family(const Family& f);

DegreeMultiset degrees_of(const Family& f);
int rank_of(const Family& f);
Int order_of(const Family& f);  // closed form / transcribed, not the degree product
std::string id_of(const Family& f);
PrimeCondition condition_of(const Family& f);
bool is_rational(const Family& f);

struct GroupEntry {
  std::string id;
  Family family;
  int rank = 0;
  DegreeMultiset degrees;
  PrimeCondition primes;
  Int order;
  std::string source;

  bool rational() const { return primes.accepts_all(); }
};

GroupEntry make_entry(const Family& f, std::string source);
bool admissible_at(const GroupEntry& e, u64 p);

struct Catalog {
  std::vector<GroupEntry> entries;  // explicit entries, sorted by (rank, id)
  bool implicit_families = false;   // synthesize Weyl/G(m,e,n)/Z_m on enumerate
  std::string source;

  const GroupEntry* find(const std::string& id) const;
  void sort_and_index();  // sorts entries, rejects duplicate ids

 private:
  mutable std::unordered_map<std::string, std::size_t> index_;
};

// The shipped classification data: all sporadic entries plus the three
// families generated on demand.
const Catalog& builtin_catalog();

struct EnumFilter {
  enum class Mode { All, Rational, AtPrime, OnClass };
  std::optional<int> max_rank;
  std::optional<int> max_degree;
  Mode mode = Mode::All;
  u64 prime = 0;         // for AtPrime
  u64 class_residue = 0; // for OnClass: all primes = class_residue (mod class_modulus)
  u64 class_modulus = 1;
  bool nonrational_only = false;
};

// Deterministic (rank, id)-sorted slice of the catalog under the filter.
// Throws std::domain_error("unbounded enumeration") when the filter cannot
// bound the infinite families.
std::vector<GroupEntry> enumerate(const Catalog& catalog, const EnumFilter& filter);

struct CatalogError : std::runtime_error {
  long line;  // 1-based record index, 0 when global
  CatalogError(long line_, const std::string& msg)
      : std::runtime_error("record " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// JSON Lines, one entry per line:
// {"id":..., "family":{"tag":...}, "rank":..., "degrees":[...],
//  "order":"<decimal>", "primes":{"mod":...,"residues":[...],
//  "include":[...],"exclude":[...]}, "source":...}
// Validates every entry invariant and rejects on the first failure.
Catalog load_catalog(std::istream& in, const std::string& source_name);
Catalog load_catalog_file(const std::string& path);

std::string entry_to_json_line(const GroupEntry& e);
void dump_catalog(const Catalog& catalog, const EnumFilter& filter, std::ostream& out);

u64 fnv1a64(const std::string& s);
u64 catalog_hash(const Catalog& catalog, int max_degree);

}  // namespace refcone
