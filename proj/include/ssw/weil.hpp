/* Weil q-numbers pi = sqrt(q) * zeta_L^k inside cyclotomic rings: the working
 * conductor, Galois stabilizers (a direct ring scan and an equivalent
 * character-congruence form), minimal polynomials by exact coset-product
 * expansion, and the numeric root-modulus safety check. */
#pragma once

#include <cstdint>
#include <vector>

#include "ssw/cycring.hpp"
#include "ssw/intpoly.hpp"
#include "ssw/numtheory.hpp"

namespace ssw {

/* Working conductor M = lcm(L, sqrt_p_conductor(p)): the smallest cyclotomic
 * ring presentation containing sqrt(q) * zeta_L. */
unsigned conductor(const PrimePower& q, unsigned L);

/* pi = sqrt(q) * zeta_L^k as an exact element of Z[zeta_M]. */
struct WeilNumber {
  PrimePower q;
  unsigned L;
  unsigned k;
  unsigned M;
  CycElem value;
};

/* Requires gcd(k, L) = 1 (k = 0 only for L = 1). */
WeilNumber make_weil_number(const PrimePower& q, unsigned L, unsigned k);

/* Quadratic character chi_p(a) = sign with sigma_a(sqrt p) = chi_p(a) sqrt p,
 * computed once per p by applying every sigma_a to the Gauss sum at conductor
 * sqrt_p_conductor(p).  Returned table is indexed by a mod that conductor:
 * +1/-1 on units, 0 elsewhere. */
const std::vector<int>& quad_character(std::uint64_t p);

/* Stabilizer H = { a in (Z/M)^* : sigma_a(pi) = pi } by direct ring scan. */
std::vector<std::uint32_t> stabilizer(const WeilNumber& w);

/* The same subgroup computed arithmetically: sigma_a(pi) = pi iff
 * chi_p(a) * zeta_L^{k(a-1)} = 1.  Cross-checked against stabilizer() on
 * every emitted class and across the unit-test battery. */
std::vector<std::uint32_t> stabilizer_by_character(const PrimePower& q,
                                                   unsigned L, unsigned k);

/* Minimal polynomial of pi: product of (X - sigma_a(pi)) over coset
 * representatives of H, expanded exactly in the ring; every coefficient must
 * reduce to a rational integer and h(pi) must vanish, else throws. */
IntPoly min_poly(const WeilNumber& w, const std::vector<std::uint32_t>& H);

/* Numeric-plus-exact Weil check on monic even-degree P: exact q-palindromy
 * and all complex roots of modulus sqrt(q) within 1e-9 relative tolerance
 * (roots of the exact squarefree part, Durand-Kerner iteration).  Returns
 * false (never throws) on polynomials violating the preconditions. */
bool weil_root_check(const IntPoly& P, const PrimePower& q);

}  // namespace ssw
