#include "refcone/rational.hpp"

#include <algorithm>
#include <cstddef>

namespace refcone {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto ok_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!ok_int(num) || !ok_int(den))
    throw std::invalid_argument("bad rational literal: " + s);
  Int n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rat q;
  q = Rat(n) / Rat(d);
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string int_to_string(const Int& z) { return z.get_str(); }

std::string vec_to_string(const RatVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += rat_to_string(v[i]);
  }
  return out;
}

std::string vec_to_string(const IntVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].get_str();
  }
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

IntVec primitive(const RatVec& v) {
  Int lcm_den = 1;
  for (const Rat& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  IntVec w(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
  }
  if (g > 1)
    for (Int& x : w) x /= g;
  return w;
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  IntVec w = v;
  if (g > 1)
    for (Int& x : w) x /= g;
  return w;
}

IntVec primitive_signed(const RatVec& v) {
  IntVec w = primitive(v);
  for (const Int& x : w) {
    if (x > 0) break;
    if (x < 0) {
      for (Int& y : w) y = -y;
      break;
    }
  }
  return w;
}

RatVec to_rat_vec(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

std::size_t rref(std::vector<RatVec>& m) {
  std::size_t cols = 0;
  for (const auto& r : m) cols = std::max(cols, r.size());
  for (auto& r : m) r.resize(cols, Rat(0));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    Rat p = m[rank][col];
    for (std::size_t j = col; j < cols; ++j) m[rank][j] /= p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_of(std::vector<RatVec> m) { return rref(m); }

std::size_t rank_of_int(const std::vector<IntVec>& rows) {
  std::vector<RatVec> m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_rat_vec(r));
  return rref(m);
}

std::vector<RatVec> nullspace_basis(std::vector<RatVec> m, std::size_t cols) {
  for (auto& r : m) r.resize(cols, Rat(0));
  std::size_t rank = rref(m);
  std::vector<long> pivot_of_col(cols, -1);
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t col = 0;
    while (col < cols && m[i][col] == 0) ++col;
    pivot_of_col[col] = static_cast<long>(i);
    pivots.push_back(col);
  }
  std::vector<RatVec> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    RatVec v(cols, Rat(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < rank; ++i) v[pivots[i]] = -m[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace refcone
