/* Dense univariate polynomials over Z with exact bignum coefficients, plus the
 * cyclotomic toolbox: Phi_m, cyclotomic-product decomposition, q-palindromy,
 * exact k-th roots, primitive-PRS gcd, and a coefficient-list serialization. */
#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ssw/numtheory.hpp"

namespace ssw {

class IntPoly {
 public:
  /* Degree reported for the zero polynomial: a dedicated sentinel, never -1. */
  enum Degree : int { kZeroPolyDegree = std::numeric_limits<int>::min() };

  IntPoly() = default;  // the zero polynomial
  explicit IntPoly(std::vector<BigInt> coeffs);  // ascending order
  IntPoly(std::initializer_list<long> coeffs);   // ascending order

  static IntPoly constant(BigInt c);
  static IntPoly monomial(unsigned deg, BigInt lead = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const {
    return c_.empty() ? kZeroPolyDegree : static_cast<int>(c_.size()) - 1;
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  /* Coefficient of X^i; zero beyond the degree. */
  const BigInt& coeff(std::size_t i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const BigInt& s) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly pow(unsigned e) const;
  BigInt eval(const BigInt& x) const;
  IntPoly derivative() const;

  /* Substitute X -> X^k (k >= 1). */
  IntPoly compose_xk(unsigned k) const;
  /* Substitute X -> c*X. */
  IntPoly scale_arg(const BigInt& c) const;

  /* Exact division a / b for monic or constant b; nullopt if not exact. */
  static std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

  /* Gcd over Z via the primitive polynomial remainder sequence; result is
   * primitive with positive leading coefficient (gcd(0,0) = 0). */
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  BigInt content() const;  // gcd of coefficients, nonnegative
  IntPoly primitive_part() const;
  /* Product of the distinct irreducible factors: f / gcd(f, f'). */
  IntPoly squarefree_part() const;

  /* Serialization: ascending comma-separated decimal coefficients, the on-disk
   * and CLI convention everywhere in this project ("-1,0,1" = X^2 - 1). */
  std::string to_coeff_string() const;
  static IntPoly parse_coeff_string(const std::string& s);

 private:
  void canonicalize();
  std::vector<BigInt> c_;  // ascending; no trailing zeros; empty = zero poly
};

/* The m-th cyclotomic polynomial Phi_m, by exact division of X^m - 1 by the
 * Phi_d for proper divisors d (memoized, thread-safe). */
const IntPoly& cyclotomic(unsigned m);

/* Write monic f as a product of cyclotomics by greedy trial division in
 * ascending m; returns the multiset of indices, or nullopt if a nontrivial
 * non-cyclotomic factor remains. */
std::optional<std::vector<unsigned>> cyclotomic_decompose(const IntPoly& f);

/* True iff P is monic of even degree 2g with c_{2g-i} = q^{g-i} c_i for all i
 * (the Weil q-palindromy).  Throws std::invalid_argument when P is not monic
 * of even degree. */
bool is_weil_palindromic(const IntPoly& P, const PrimePower& q);

/* Exact k-th root of a monic F with k | deg F, coefficients recovered
 * top-down from leading terms; nullopt when F is not a perfect k-th power. */
std::optional<IntPoly> poly_kth_root(const IntPoly& F, unsigned k);

}  // namespace ssw
