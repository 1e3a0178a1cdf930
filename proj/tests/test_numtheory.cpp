/* Unit tests for the elementary number-theory layer: primality, factoring,
 * prime powers, totient and its inverse, orders, Kronecker symbols, units. */
#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "ssw/numtheory.hpp"

using namespace ssw;

TEST_SUITE("numtheory") {

TEST_CASE("is_prime on small values") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(47));
  CHECK(is_prime(999983));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(91));       // 7 * 13
  CHECK_FALSE(is_prime(1000000));
}

TEST_CASE("factor returns ascending prime-exponent pairs") {
  CHECK(factor(1).empty());
  CHECK(factor(12) ==
        std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 1}});
  CHECK(factor(8460) == std::vector<std::pair<std::uint64_t, unsigned>>{
                            {2, 2}, {3, 2}, {5, 1}, {47, 1}});
  CHECK(factor(999983) ==
        std::vector<std::pair<std::uint64_t, unsigned>>{{999983, 1}});
}

TEST_CASE("PrimePower construction and derived quantities") {
  PrimePower q(2, 3);
  CHECK(q.p() == 2);
  CHECK(q.n() == 3);
  CHECK(q.q() == 8);
  CHECK(q.q_pow(2) == 64);
  CHECK(q.q_pow(0) == 1);
  CHECK(q.sqrt_pq() == 4);       // sqrt(2 * 8)
  CHECK(q.sqrtq_scalar() == 2);  // sqrt(8) = 2 * sqrt(2)

  PrimePower q11(11, 1);
  CHECK(q11.sqrt_pq() == 11);
  CHECK(q11.sqrtq_scalar() == 1);

  CHECK(PrimePower(3, 3) == PrimePower(3, 3));
  CHECK_FALSE(PrimePower(3, 3) == PrimePower(3, 1));

  CHECK_THROWS_AS(PrimePower(4, 1), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(PrimePower(2, 2), std::invalid_argument);   // even n
  CHECK_THROWS_AS(PrimePower(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(PrimePower(1, 1), std::invalid_argument);
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(36) == 12);
  CHECK(euler_phi(44) == 20);
  CHECK(euler_phi(8460) == 2208);
}

TEST_CASE("phi_inverse lists all preimages ascending") {
  CHECK(phi_inverse(1) == std::vector<std::uint64_t>{1, 2});
  CHECK(phi_inverse(4) == std::vector<std::uint64_t>{5, 8, 10, 12});
  CHECK(phi_inverse(12) ==
        std::vector<std::uint64_t>{13, 21, 26, 28, 36, 42});
  CHECK(phi_inverse(20) == std::vector<std::uint64_t>{25, 33, 44, 50, 66});
  CHECK(phi_inverse(7).empty());  // odd k > 1 has no preimage
  for (std::uint64_t k : {2ull, 4ull, 6ull, 8ull, 10ull, 12ull})
    for (std::uint64_t m : phi_inverse(k)) CHECK(euler_phi(m) == k);
}

TEST_CASE("mult_order") {
  CHECK(mult_order(2, 15) == 4);
  CHECK(mult_order(7, 8) == 2);
  CHECK(mult_order(3, 7) == 6);
  CHECK(mult_order(1, 12) == 1);
  for (std::uint64_t m : {5ull, 8ull, 12ull, 36ull, 44ull})
    for (std::uint32_t a : units_mod(static_cast<std::uint32_t>(m))) {
      if (m == 1) break;
      std::uint64_t d = mult_order(a, m);
      CHECK(pow_mod_u64(a, d, m) == 1 % m);
      for (std::uint64_t k = 1; k < d; ++k)
        CHECK(pow_mod_u64(a, k, m) != 1);
    }
}

TEST_CASE("kronecker symbol examples and multiplicativity") {
  CHECK(kronecker(8, 7) == 1);
  CHECK(kronecker(12, 5) == -1);
  CHECK(kronecker(5, 1) == 1);
  CHECK(kronecker(-7, 1) == 1);
  CHECK(kronecker(2, 7) == 1);    // 7 = +-1 mod 8
  CHECK(kronecker(2, 5) == -1);   // 5 = +-3 mod 8
  CHECK(kronecker(3, 13) == 1);   // 3 = 4^2 mod 13
  CHECK(kronecker(2, 13) == -1);
  for (long D = -10; D <= 10; ++D)
    for (long a = 1; a <= 12; ++a)
      for (long b = 1; b <= 12; ++b)
        CHECK(kronecker(D, a * b) == kronecker(D, a) * kronecker(D, b));
}

TEST_CASE("gcd, lcm") {
  CHECK(gcd_u64(12, 18) == 6);
  CHECK(gcd_u64(0, 5) == 5);
  CHECK(lcm_u64(4, 6) == 12);
  CHECK(lcm_u64(90, 188) == 8460);
  CHECK(lcm_u64(1, 7) == 7);
}

TEST_CASE("units_mod") {
  CHECK(units_mod(1) == std::vector<std::uint32_t>{0});
  CHECK(units_mod(8) == std::vector<std::uint32_t>{1, 3, 5, 7});
  CHECK(units_mod(12) == std::vector<std::uint32_t>{1, 5, 7, 11});
  for (std::uint32_t m = 2; m <= 60; ++m)
    CHECK(units_mod(m).size() == euler_phi(m));
}

TEST_CASE("pow_mod_u64") {
  CHECK(pow_mod_u64(2, 10, 1000) == 24);
  CHECK(pow_mod_u64(5, 0, 7) == 1);
  CHECK(pow_mod_u64(0, 5, 7) == 0);
  CHECK(pow_mod_u64(3, 2208, 8461) == pow_mod_u64(pow_mod_u64(3, 46, 8461),
                                                  48, 8461));
}

}  // TEST_SUITE
