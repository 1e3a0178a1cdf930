/* Honda-Tate bookkeeping for a Weil number pi with stabilizer H inside
 * G = (Z/M)^*: the decomposition subgroup at p, local degrees and place
 * counts over p, denominators of the local invariants, and the resulting
 * endomorphism-algebra index e and abelian-variety dimension g. */
#pragma once

#include <cstdint>
#include <vector>

#include "ssw/intpoly.hpp"
#include "ssw/numtheory.hpp"
#include "ssw/weil.hpp"

namespace ssw {

/* Subgroup of (Z/M)^* fixing the places over p of Q(zeta_M): the full
 * preimage of <p mod M'> where M' is the prime-to-p part of M (the preimage
 * includes inertia when p | M).  Sorted ascending; cached per (M, p). */
const std::vector<std::uint32_t>& decomposition_subgroup(unsigned M,
                                                         std::uint64_t p);

struct LocalSplitting {
  unsigned d = 0;  // local degree [D : D cap H] at each place of Q(pi) over p
  unsigned r = 0;  // number of places of Q(pi) over p: [G : D*H]
};

/* Splitting data of p in the fixed field Q(pi) of H; d * r = [G : H]. */
LocalSplitting local_degree(unsigned M, std::uint64_t p,
                            const std::vector<std::uint32_t>& H);

struct InvariantInfo {
  bool real_place = false;  // Q(pi) real, i.e. pi = +-sqrt(q) (L <= 2)
  unsigned inv_order = 1;   // order of the local invariant d/2 mod 1 at p
  unsigned e = 1;           // least common denominator of all invariants
};

/* e = 2 exactly when some invariant has order 2: the p-adic ones when d is
 * odd, or the real-place invariant 1/2 when pi = +-sqrt(q). */
InvariantInfo invariant_and_e(unsigned d, unsigned L);

/* A complete isogeny-class record for a simple supersingular variety. */
struct IsogenyClass {
  IntPoly h;       // minimal polynomial of pi
  unsigned e = 1;  // P = h^e
  unsigned g = 0;  // dimension, e * deg(h) / 2
  IntPoly P;       // characteristic polynomial of Frobenius
  unsigned L = 1;  // order of the root of unity pi / sqrt(q)
  unsigned k = 0;  // exponent: pi = sqrt(q) * zeta_L^k
  unsigned M = 1;  // working conductor
  LocalSplitting local;
  bool real_place = false;
  unsigned inv_order = 1;
};

/* Assemble the class record: computes the splitting data, e, the dimension
 * g = e * deg(h) / 2, and P = h^e; checks d*r = deg h and q-palindromy of P. */
IsogenyClass dimension(const WeilNumber& w, const std::vector<std::uint32_t>& H,
                       const IntPoly& h);

}  // namespace ssw
