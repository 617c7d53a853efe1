#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace refcone {

// A finite multiset of integer degrees >= 2, kept in canonical sorted form.
// The text form is the exponent notation used throughout the CLI and data
// files: "2^8,3^2,4^8,...,30" with strictly increasing degrees.
class DegreeMultiset {
 public:
  DegreeMultiset() = default;
  explicit DegreeMultiset(std::initializer_list<int> degrees);

  static DegreeMultiset parse(const std::string& text);
  std::string str() const;

  void add(int degree, long multiplicity = 1);

  long rank() const;
  long long dimension() const;  // sum of (2d - 1) over all degrees
  bool empty() const { return counts_.empty(); }
  int max_degree() const;  // 0 when empty
  long multiplicity(int degree) const;
  bool contains(const DegreeMultiset& sub) const;
  bool all_even() const;

  DegreeMultiset plus(const DegreeMultiset& other) const;
  // Defined iff other is a submultiset; then (a - b).plus(b) == a.
  std::optional<DegreeMultiset> minus(const DegreeMultiset& other) const;

  const std::map<int, long>& counts() const { return counts_; }

  bool operator==(const DegreeMultiset&) const = default;
  // (rank, degree string) order; gives the deterministic report ordering.
  bool before(const DegreeMultiset& other) const;

 private:
  std::map<int, long> counts_;  // degree -> multiplicity, no zero entries
};

// The coordinate view: entry i (1-based degree i) counts degrees equal to i,
// truncated at a stated bound.
struct DegreeVector {
  int bound = 0;
  std::vector<long long> x;  // x[i-1] = multiplicity of degree i
};

// Throws std::domain_error when some degree exceeds the bound.
DegreeVector to_vector(const DegreeMultiset& ms, int bound);
DegreeMultiset from_vector(const DegreeVector& v);

// Integer functional against a degree vector; the shorter side is zero-padded.
long long inner_product(const std::vector<long long>& w, const DegreeVector& v);

struct ClarkResult {
  bool pass = false;
  std::vector<int> missing;  // the violating degrees m, ascending
};

// With h the maximal degree, every m in [2, h] with gcd(m-1, h) = 1 must be
// present. Throws std::domain_error on the empty multiset.
ClarkResult clark_check(const DegreeMultiset& ms);

}  // namespace refcone
