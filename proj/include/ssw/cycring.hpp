/* Exact arithmetic in the cyclotomic integer ring Z[zeta_M] = Z[x]/(Phi_M):
 * ring operations on the power basis 1, x, ..., x^{phi(M)-1}, the Galois
 * action x -> x^a, embeddings into larger conductors, and explicit square
 * roots of primes via Gauss sums. */
#pragma once

#include <cstdint>
#include <vector>

#include "ssw/intpoly.hpp"
#include "ssw/numtheory.hpp"

namespace ssw {

/* An element of Z[zeta_M] in coordinates over the power basis mod Phi_M. */
class CycElem {
 public:
  /* The zero element of conductor M. */
  explicit CycElem(unsigned M);
  /* zeta_M^e (e arbitrary, reduced mod M then mod Phi_M). */
  static CycElem zeta_power(unsigned M, long long e);
  static CycElem from_integer(unsigned M, BigInt v);

  unsigned conductor() const { return M_; }
  const std::vector<BigInt>& coords() const { return c_; }

  CycElem operator+(const CycElem& o) const;
  CycElem operator-(const CycElem& o) const;
  CycElem operator-() const;
  CycElem operator*(const BigInt& s) const;
  bool operator==(const CycElem& o) const;

  bool is_zero() const;
  bool is_rational() const;          // all basis coords above 1 vanish
  const BigInt& rational_value() const;  // requires is_rational()

 private:
  friend CycElem cyc_mul(const CycElem&, const CycElem&);
  friend CycElem galois_apply(std::uint64_t, const CycElem&);
  friend CycElem embed_up(const CycElem&, unsigned);
  unsigned M_;
  std::vector<BigInt> c_;  // length phi(M)
};

/* Product in Z[zeta_M]; errors on conductor mismatch rather than implicitly
 * embedding either operand. */
CycElem cyc_mul(const CycElem& a, const CycElem& b);

/* The Galois automorphism sigma_a: zeta_M -> zeta_M^a; requires gcd(a,M)=1. */
CycElem galois_apply(std::uint64_t a, const CycElem& z);

/* Rewrite z in the ring of conductor M2 (requires conductor(z) | M2). */
CycElem embed_up(const CycElem& z, unsigned M2);

/* Smallest cyclotomic conductor containing sqrt(p): 8 for p = 2, p for
 * p = 1 mod 4, 4p for p = 3 mod 4. */
unsigned sqrt_p_conductor(std::uint64_t p);

/* sqrt(p) as an explicit Gauss sum, embedded into conductor M (requires
 * sqrt_p_conductor(p) | M).  Self-verifying: squares to p at construction. */
CycElem sqrt_p_embed(std::uint64_t p, unsigned M);

}  // namespace ssw
