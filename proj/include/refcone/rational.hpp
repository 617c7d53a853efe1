#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace refcone {

// Exact arithmetic everywhere: mpz/mpq never round, and mpq_class keeps
// fractions reduced with positive denominator, which is the canonical form
// assumed by all text output.
using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// Parses "p", "-p" or "p/q" (q > 0 after reduction). Throws std::invalid_argument.
Rat rat_from_string(const std::string& s);

// Canonical rendering: reduced, "p/q" with q > 0, plain "p" when q == 1.
std::string rat_to_string(const Rat& q);
std::string int_to_string(const Int& z);

std::string vec_to_string(const RatVec& v);   // comma separated
std::string vec_to_string(const IntVec& v);

// Dot product; the shorter vector is zero-padded.
Rat dot(const RatVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);

bool is_zero(const RatVec& v);

// Clears denominators and divides by the gcd. Only positive scaling, so the
// direction of an inequality/ray is preserved. Zero vector maps to itself.
IntVec primitive(const RatVec& v);
IntVec primitive(const IntVec& v);
// Same, but additionally flips sign so the first nonzero entry is positive
// (for sign-free rows such as equalities).
IntVec primitive_signed(const RatVec& v);

RatVec to_rat_vec(const IntVec& v);

// --- exact dense linear algebra over Q ---

// In-place reduced row echelon form; returns the rank. Zero rows sink to the
// bottom. Column count is taken from the longest row.
std::size_t rref(std::vector<RatVec>& m);

std::size_t rank_of(std::vector<RatVec> m);
std::size_t rank_of_int(const std::vector<IntVec>& rows);

// Canonical basis (from RREF back-substitution) of {x : m x = 0} in Q^cols.
std::vector<RatVec> nullspace_basis(std::vector<RatVec> m, std::size_t cols);

}  // namespace refcone
