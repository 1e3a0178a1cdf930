#include "ssw/cyclocheck.hpp"

#include <stdexcept>

namespace ssw {

IntPoly build_H_scaled(const IntPoly& P, const PrimePower& q) {
  if (P.is_zero() || !P.is_monic() || P.degree() % 2 != 0 || P.degree() == 0)
    throw std::invalid_argument(
        "build_H_scaled: P must be monic of positive even degree");
  const unsigned g = static_cast<unsigned>(P.degree()) / 2;

  // P(X) = A(X^2) + X * B(X^2).
  std::vector<BigInt> ac(g + 1), bc(g);
  for (unsigned i = 0; i <= 2 * g; ++i) {
    if (i % 2 == 0)
      ac[i / 2] = P.coeff(i);
    else
      bc[i / 2] = P.coeff(i);
  }
  const IntPoly A{std::move(ac)};
  const IntPoly B{std::move(bc)};

  // Substitute Y = q t^2 and assemble A(qt^2)^2 - q t^2 B(qt^2)^2.
  const IntPoly Aq = A.scale_arg(q.q()).compose_xk(2);
  const IntPoly Bq = B.scale_arg(q.q()).compose_xk(2);
  const IntPoly t2q = IntPoly::monomial(2, q.q());
  return Aq * Aq - t2q * (Bq * Bq);
}

std::optional<std::vector<unsigned>> h_cyclotomic_factors(const IntPoly& P,
                                                          const PrimePower& q) {
  const IntPoly Hs = build_H_scaled(P, q);
  const unsigned g = static_cast<unsigned>(P.degree()) / 2;
  auto H = IntPoly::divide_exact(Hs, IntPoly::constant(q.q_pow(2 * g)));
  if (!H) return std::nullopt;
  if (H->is_zero() || !H->is_monic()) return std::nullopt;
  return cyclotomic_decompose(*H);
}

bool h_cyclotomic_check(const IntPoly& P, const PrimePower& q) {
  return h_cyclotomic_factors(P, q).has_value();
}

}  // namespace ssw
