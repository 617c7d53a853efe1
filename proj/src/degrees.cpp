#include "refcone/degrees.hpp"

#include <numeric>
#include <stdexcept>

namespace refcone {

DegreeMultiset::DegreeMultiset(std::initializer_list<int> degrees) {
  for (int d : degrees) add(d);
}

void DegreeMultiset::add(int degree, long multiplicity) {
  if (degree < 2) throw std::invalid_argument("degree must be >= 2");
  if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
  if (multiplicity == 0) return;
  counts_[degree] += multiplicity;
}

DegreeMultiset DegreeMultiset::parse(const std::string& text) {
  DegreeMultiset ms;
  if (text.empty()) return ms;
  std::size_t pos = 0;
  int last_degree = 0;
  auto read_number = [&](const char* what) -> long {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument(std::string("expected ") + what +
                                                  " at position " + std::to_string(start) +
                                                  " in degree string");
    return std::stol(text.substr(start, pos - start));
  };
  while (true) {
    long d = read_number("degree");
    long k = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      k = read_number("multiplicity");
      if (k < 1) throw std::invalid_argument("multiplicity must be >= 1");
    }
    if (d <= last_degree)
      throw std::invalid_argument("degrees must be strictly increasing in degree string");
    if (d < 2) throw std::invalid_argument("degree must be >= 2");
    last_degree = static_cast<int>(d);
    ms.add(static_cast<int>(d), k);
    if (pos == text.size()) break;
    if (text[pos] != ',')
      throw std::invalid_argument("expected ',' at position " + std::to_string(pos) +
                                  " in degree string");
    ++pos;
  }
  return ms;
}

std::string DegreeMultiset::str() const {
  std::string out;
  for (const auto& [d, k] : counts_) {
    if (!out.empty()) out += ',';
    out += std::to_string(d);
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

long DegreeMultiset::rank() const {
  long r = 0;
  for (const auto& [d, k] : counts_) r += k;
  return r;
}

long long DegreeMultiset::dimension() const {
  long long dim = 0;
  for (const auto& [d, k] : counts_) dim += static_cast<long long>(2 * d - 1) * k;
  return dim;
}

int DegreeMultiset::max_degree() const {
  return counts_.empty() ? 0 : counts_.rbegin()->first;
}

long DegreeMultiset::multiplicity(int degree) const {
  auto it = counts_.find(degree);
  return it == counts_.end() ? 0 : it->second;
}

bool DegreeMultiset::contains(const DegreeMultiset& sub) const {
  for (const auto& [d, k] : sub.counts_)
    if (multiplicity(d) < k) return false;
  return true;
}

bool DegreeMultiset::all_even() const {
  for (const auto& [d, k] : counts_)
    if (d % 2) return false;
  return true;
}

DegreeMultiset DegreeMultiset::plus(const DegreeMultiset& other) const {
  DegreeMultiset out = *this;
  for (const auto& [d, k] : other.counts_) out.counts_[d] += k;
  return out;
}

std::optional<DegreeMultiset> DegreeMultiset::minus(const DegreeMultiset& other) const {
  if (!contains(other)) return std::nullopt;
  DegreeMultiset out = *this;
  for (const auto& [d, k] : other.counts_) {
    long left = out.counts_[d] - k;
    if (left == 0)
      out.counts_.erase(d);
    else
      out.counts_[d] = left;
  }
  return out;
}

bool DegreeMultiset::before(const DegreeMultiset& other) const {
  long ra = rank(), rb = other.rank();
  if (ra != rb) return ra < rb;
  return str() < other.str();
}

DegreeVector to_vector(const DegreeMultiset& ms, int bound) {
  if (ms.max_degree() > bound)
    throw std::domain_error("degree " + std::to_string(ms.max_degree()) +
                            " exceeds vector bound " + std::to_string(bound));
  DegreeVector v;
  v.bound = bound;
  v.x.assign(static_cast<std::size_t>(bound), 0);
  for (const auto& [d, k] : ms.counts()) v.x[static_cast<std::size_t>(d - 1)] = k;
  return v;
}

DegreeMultiset from_vector(const DegreeVector& v) {
  DegreeMultiset ms;
  for (std::size_t i = 0; i < v.x.size(); ++i)
    if (v.x[i] > 0) ms.add(static_cast<int>(i + 1), v.x[i]);
  return ms;
}

long long inner_product(const std::vector<long long>& w, const DegreeVector& v) {
  long long s = 0;
  std::size_t n = std::min(w.size(), v.x.size());
  for (std::size_t i = 0; i < n; ++i) s += w[i] * v.x[i];
  return s;
}

ClarkResult clark_check(const DegreeMultiset& ms) {
  if (ms.empty()) throw std::domain_error("clark_check on empty multiset");
  ClarkResult res;
  int h = ms.max_degree();
  for (int m = 2; m <= h; ++m)
    if (std::gcd(m - 1, h) == 1 && ms.multiplicity(m) == 0) res.missing.push_back(m);
  res.pass = res.missing.empty();
  return res;
}

}  // namespace refcone
