/* The built-in classification tables for dimensions 1-7: coefficient
 * families a_i = u_i * q^{floor(i/2)} * sqrt(pq)^{i mod 2} with per-prime
 * applicability gates, instantiation at concrete q, and the comparison of
 * those tables against a fresh enumeration. */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssw/enumerate.hpp"
#include "ssw/intpoly.hpp"
#include "ssw/numtheory.hpp"

namespace ssw {

struct FamilyTemplate {
  unsigned g = 0;
  enum class Gate { kAny, kPrimeEq, kPrimeNeq } gate = Gate::kAny;
  std::uint64_t gate_p = 0;  // the prime in kPrimeEq / kPrimeNeq gates
  /* u_1..u_g with a_i = u_i q^{floor(i/2)} s^{i mod 2}, s = sqrt(p*q); when
   * some odd-index u_i is nonzero the family is a sign-conjugate pair and
   * instantiation also emits the variant with all odd-index signs flipped. */
  std::vector<long> u;
  unsigned e = 1;     // exponent P = h^e of the class (2 only for (X^2-q)^2)
  std::string label;  // neutral row label, e.g. "dim4.2"
};

/* The table for dimension g (1 <= g <= 7); dimension 7 is empty. */
const std::vector<FamilyTemplate>& family_tables(unsigned g);

/* All characteristic polynomials this template contributes over F_q: empty
 * if the prime gate excludes q, one polynomial for sign-free families, two
 * (both odd-sign variants) otherwise. */
std::vector<IntPoly> instantiate(const FamilyTemplate& t, const PrimePower& q);

struct DiscrepancyReport {
  std::vector<IntPoly> missing;     // in the tables, not enumerated
  std::vector<IntPoly> unexpected;  // enumerated, not in the tables
  std::size_t matched = 0;
  bool clean() const { return missing.empty() && unexpected.empty(); }
};

/* Compare the built-in table for dimension g against enumerate_simple_ss(q, g)
 * as full polynomial multisets (extras are never silently dropped). */
DiscrepancyReport verify_family_tables(const PrimePower& q, unsigned g);

}  // namespace ssw
