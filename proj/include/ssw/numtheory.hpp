/* Elementary exact number theory: prime powers q = p^n with n odd, Euler's
 * totient and its inverse image, multiplicative orders, Kronecker symbols. */
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ssw {

using BigInt = mpz_class;

/* Deterministic trial-division primality test; scope is p <= ~10^6. */
bool is_prime(std::uint64_t n);

/* Prime factorization by trial division, (prime, exponent) pairs ascending. */
std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n);

/* A prime power q = p^n restricted to odd exponents n >= 1 (the only field
 * sizes this project works over).  Construction validates p and n. */
class PrimePower {
 public:
  PrimePower(std::uint64_t p, unsigned n);

  std::uint64_t p() const { return p_; }
  unsigned n() const { return n_; }
  const BigInt& q() const { return q_; }
  BigInt q_pow(unsigned k) const;

  /* p^{(n+1)/2}, the exact square root of p*q (integral since n is odd). */
  BigInt sqrt_pq() const;
  /* p^{(n-1)/2}, the integral scalar in sqrt(q) = p^{(n-1)/2} * sqrt(p). */
  BigInt sqrtq_scalar() const;

  bool operator==(const PrimePower& o) const {
    return p_ == o.p_ && n_ == o.n_;
  }

 private:
  std::uint64_t p_;
  unsigned n_;
  BigInt q_;
};

/* Euler's totient; euler_phi(1) = 1. */
std::uint64_t euler_phi(std::uint64_t m);

/* All m with euler_phi(m) = k, ascending.  Exhaustive: phi(m) >= sqrt(m/2)
 * bounds the search to m <= 2k^2 + 1.  Empty for odd k > 1. */
std::vector<std::uint64_t> phi_inverse(std::uint64_t k);

/* Multiplicative order of a modulo m; requires gcd(a, m) = 1. */
std::uint64_t mult_order(std::uint64_t a, std::uint64_t m);

/* Kronecker symbol (D|a), the standard extension of the Jacobi symbol. */
int kronecker(const BigInt& D, const BigInt& a);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/* The unit group (Z/m)^*, listed ascending; units_mod(1) = {0}. */
std::vector<std::uint32_t> units_mod(std::uint32_t m);

/* a^e mod m for word-sized m (m < 2^32 in scope). */
std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace ssw
