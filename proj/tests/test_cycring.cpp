/* Unit tests for exact cyclotomic-ring arithmetic: power-basis reduction,
 * Galois action, conductor embeddings, and Gauss-sum square roots. */
#include <doctest.h>

#include <stdexcept>

#include "ssw/cycring.hpp"

using namespace ssw;

TEST_SUITE("cycring") {

TEST_CASE("zeta powers reduce modulo Phi_M") {
  CHECK(CycElem::zeta_power(8, 8) == CycElem::from_integer(8, 1));
  CHECK(CycElem::zeta_power(8, 9) == CycElem::zeta_power(8, 1));
  CHECK(CycElem::zeta_power(8, -1) == CycElem::zeta_power(8, 7));
  // zeta_8^4 = -1.
  CHECK(CycElem::zeta_power(8, 4) == CycElem::from_integer(8, -1));
  // In conductor 12, x^4 = x^2 - 1 (Phi_12 = x^4 - x^2 + 1).
  CHECK(CycElem::zeta_power(12, 4) ==
        CycElem::zeta_power(12, 2) - CycElem::from_integer(12, 1));
  CHECK(CycElem(8).is_zero());
}

TEST_CASE("ring operations and rationality") {
  const unsigned M = 5;
  CycElem one = CycElem::from_integer(M, 1);
  CycElem z = CycElem::zeta_power(M, 1);
  // (1 + z)(1 - z) = 1 - z^2.
  CHECK(cyc_mul(one + z, one - z) == one - CycElem::zeta_power(M, 2));
  // 1 + z + z^2 + z^3 + z^4 = 0 in Z[zeta_5].
  CycElem s(M);
  for (long long e = 0; e < 5; ++e) s = s + CycElem::zeta_power(M, e);
  CHECK(s.is_zero());
  CHECK(CycElem::from_integer(M, -7).is_rational());
  CHECK(CycElem::from_integer(M, -7).rational_value() == -7);
  CHECK_FALSE(z.is_rational());
  CHECK((z * BigInt(3)) == z + z + z);
}

TEST_CASE("conductor mismatch is an error") {
  CHECK_THROWS(cyc_mul(CycElem::zeta_power(8, 1), CycElem::zeta_power(12, 1)));
}

TEST_CASE("galois action") {
  CycElem z = CycElem::zeta_power(8, 1);
  CHECK(galois_apply(3, z) == CycElem::zeta_power(8, 3));
  // sigma_a sigma_b = sigma_{ab mod M}.
  CycElem w = CycElem::from_integer(24, 2) + CycElem::zeta_power(24, 5) +
              CycElem::zeta_power(24, 10);
  CHECK(galois_apply(5, galois_apply(7, w)) == galois_apply(35 % 24, w));
  // sigma_1 is the identity.
  CHECK(galois_apply(1, w) == w);
  // Non-units are rejected.
  CHECK_THROWS(galois_apply(2, z));
}

TEST_CASE("embed_up rewrites into a larger conductor") {
  CHECK(embed_up(CycElem::zeta_power(4, 1), 8) == CycElem::zeta_power(8, 2));
  CHECK(embed_up(CycElem::from_integer(3, 5), 12) ==
        CycElem::from_integer(12, 5));
  CycElem a = CycElem::zeta_power(8, 1) + CycElem::from_integer(8, 3);
  CHECK(embed_up(a, 24) ==
        CycElem::zeta_power(24, 3) + CycElem::from_integer(24, 3));
  CHECK_THROWS(embed_up(CycElem::zeta_power(8, 1), 12));  // 8 does not divide 12
}

TEST_CASE("sqrt_p_conductor") {
  CHECK(sqrt_p_conductor(2) == 8);
  CHECK(sqrt_p_conductor(5) == 5);
  CHECK(sqrt_p_conductor(13) == 13);
  CHECK(sqrt_p_conductor(17) == 17);
  CHECK(sqrt_p_conductor(3) == 12);
  CHECK(sqrt_p_conductor(7) == 28);
  CHECK(sqrt_p_conductor(11) == 44);
  CHECK(sqrt_p_conductor(47) == 188);
}

TEST_CASE("sqrt_p_embed squares to p") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull}) {
    unsigned c = sqrt_p_conductor(p);
    CycElem s = sqrt_p_embed(p, c);
    CHECK(cyc_mul(s, s) == CycElem::from_integer(c, BigInt(p)));
    // The same holds after embedding into a multiple of the conductor.
    unsigned M = c * 3;
    CycElem s2 = sqrt_p_embed(p, M);
    CHECK(cyc_mul(s2, s2) == CycElem::from_integer(M, BigInt(p)));
    CHECK(s2 == embed_up(s, M));
  }
  CHECK_THROWS(sqrt_p_embed(5, 8));  // 5 does not divide 8
}

}  // TEST_SUITE
