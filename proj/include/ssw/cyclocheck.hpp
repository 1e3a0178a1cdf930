/* The exact supersingularity certificate for a monic even-degree P over F_q:
 * split P(X) = A(X^2) + X B(X^2) and form the integer polynomial
 * Hs(t) = P(sqrt(q) t) P(-sqrt(q) t) = A(qt^2)^2 - q t^2 B(qt^2)^2
 *       = q^{2g} * prod (t^2 - root^2/q),
 * which is q^{2g} times a product of cyclotomic polynomials exactly when all
 * roots of P are sqrt(q) times roots of unity. */
#pragma once

#include <optional>
#include <vector>

#include "ssw/intpoly.hpp"
#include "ssw/numtheory.hpp"

namespace ssw {

/* The scaled polynomial Hs(t) above (monic times q^{2g}, degree 4g).
 * Requires P monic of even degree. */
IntPoly build_H_scaled(const IntPoly& P, const PrimePower& q);

/* The multiset of cyclotomic indices m with Hs/q^{2g} = prod Phi_m, or
 * nullopt when the division is inexact or a non-cyclotomic factor remains. */
std::optional<std::vector<unsigned>> h_cyclotomic_factors(const IntPoly& P,
                                                          const PrimePower& q);

/* True iff Hs(t) / q^{2g} is an integer polynomial that factors completely
 * into cyclotomics - the exact decision procedure for supersingularity of a
 * q-Weil polynomial. */
bool h_cyclotomic_check(const IntPoly& P, const PrimePower& q);

}  // namespace ssw
