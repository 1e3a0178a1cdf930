/* Complete enumeration of simple supersingular isogeny classes over F_q
 * (q = p^n, n odd) by scanning Weil numbers sqrt(q) * zeta_L^k over all
 * admissible root-of-unity orders L, deduplicating Galois orbits, and keeping
 * the classes of the requested dimension; plus a cross-q family report. */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssw/hondatate.hpp"
#include "ssw/numtheory.hpp"

namespace ssw {

struct EnumerationResult {
  PrimePower q;
  unsigned g = 0;
  std::vector<IsogenyClass> classes;     // sorted by P coefficient lists
  std::vector<unsigned> scanned_orders;  // the L values examined
};

/* All L >= 1 with euler_phi(L) <= 4g, ascending.  The bound is safe because
 * phi(L) <= [Q(pi, sqrt q) : Q] <= 2 deg h <= 4g for any simple class. */
std::vector<unsigned> candidate_orders(unsigned g);

/* The full list of dimension-g simple supersingular classes over F_q. */
EnumerationResult enumerate_simple_ss(const PrimePower& q, unsigned g);

/* One coefficient family a_i = u_i * q^{floor(i/2)} * sqrt(pq)^{i mod 2},
 * observed across a (p, n) grid.  Sign-conjugate pairs (odd-index entries
 * flipped) are grouped into one family with sign_pair = true. */
struct FamilyPattern {
  unsigned g = 0;
  std::vector<long> u;    // normalized: first nonzero odd-index entry > 0
  bool sign_pair = false; // classes occur in +- pairs at each q
  bool regular = true;    // false: coefficients did not fit the pattern
  std::string raw;        // irregular classes: serialized P at first sighting
  std::vector<std::pair<std::uint64_t, unsigned>> occurrences;  // (p, n)
};

/* Runs enumerate_simple_ss for every (p, n) in the grid and groups the
 * resulting classes by coefficient pattern; requires all n odd. */
std::vector<FamilyPattern> family_scan(const std::vector<std::uint64_t>& primes,
                                       const std::vector<unsigned>& n_values,
                                       unsigned g);

}  // namespace ssw
