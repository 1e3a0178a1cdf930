/* Unit tests for the Honda-Tate bookkeeping: decomposition subgroups, local
 * splitting data, invariant denominators, and assembled class records. */
#include <doctest.h>

#include <algorithm>

#include "ssw/enumerate.hpp"
#include "ssw/hondatate.hpp"

using namespace ssw;

TEST_SUITE("hondatate") {

TEST_CASE("decomposition_subgroup") {
  // M = 8, p = 2: the prime-to-p part is 1, so D is the full unit group.
  CHECK(decomposition_subgroup(8, 2) ==
        std::vector<std::uint32_t>{1, 3, 5, 7});
  // M = 5, p = 2: 2 generates (Z/5)^*.
  CHECK(decomposition_subgroup(5, 2) == std::vector<std::uint32_t>{1, 2, 3, 4});
  // M = 12, p = 7: <7 mod 12> = {1, 7}.
  CHECK(decomposition_subgroup(12, 7) == std::vector<std::uint32_t>{1, 7});
  // M = 44, p = 11: prime-to-p part 4, <11 mod 4> = {1, 3} pulls back to all.
  CHECK(decomposition_subgroup(44, 11).size() == 20);
  // Closure under multiplication (subgroup property) on a battery.
  for (unsigned M : {8u, 12u, 20u, 24u, 44u})
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
      const std::vector<std::uint32_t>& D = decomposition_subgroup(M, p);
      CHECK(std::is_sorted(D.begin(), D.end()));
      for (std::uint32_t a : D)
        for (std::uint32_t b : D) {
          std::uint32_t ab = static_cast<std::uint32_t>(
              (static_cast<std::uint64_t>(a) * b) % M);
          CHECK(std::binary_search(D.begin(), D.end(), ab));
        }
    }
}

TEST_CASE("local_degree on the real dimension-1 class at q = 2") {
  // pi = sqrt(2): H = {1, 7} in (Z/8)^*, D = all units.
  std::vector<std::uint32_t> H{1, 7};
  LocalSplitting ls = local_degree(8, 2, H);
  CHECK(ls.d == 2);
  CHECK(ls.r == 1);
}

TEST_CASE("invariant_and_e") {
  // Odd local degree: the p-adic invariants have denominator 2.
  InvariantInfo odd = invariant_and_e(1, 4);
  CHECK(odd.e == 2);
  CHECK(odd.inv_order == 2);
  CHECK_FALSE(odd.real_place);
  // Even local degree, complex field: everything integral.
  InvariantInfo even = invariant_and_e(2, 8);
  CHECK(even.e == 1);
  CHECK(even.inv_order == 1);
  // Real field (L <= 2) forces e = 2 regardless of d.
  InvariantInfo real1 = invariant_and_e(2, 1);
  CHECK(real1.real_place);
  CHECK(real1.e == 2);
  InvariantInfo real2 = invariant_and_e(2, 2);
  CHECK(real2.real_place);
  CHECK(real2.e == 2);
  CHECK(invariant_and_e(4, 3).e == 1);
}

TEST_CASE("dimension assembles the full class record") {
  // pi = sqrt(2) * zeta_8: the dimension-1 class X^2 - 2X + 2.
  WeilNumber w = make_weil_number(PrimePower(2, 1), 8, 1);
  std::vector<std::uint32_t> H = stabilizer(w);
  IntPoly h = min_poly(w, H);
  IsogenyClass c = dimension(w, H, h);
  CHECK(c.g == 1);
  CHECK(c.e == 1);
  CHECK(c.h == IntPoly{2, -2, 1});
  CHECK(c.P == c.h);
  CHECK(c.L == 8);
  CHECK(c.local.d == 2);
  CHECK(c.local.r == 1);
  CHECK_FALSE(c.real_place);

  // pi = sqrt(2): the (X^2 - q)^2 class of dimension 2.
  WeilNumber wr = make_weil_number(PrimePower(2, 1), 1, 0);
  std::vector<std::uint32_t> Hr = stabilizer(wr);
  IsogenyClass cr = dimension(wr, Hr, min_poly(wr, Hr));
  CHECK(cr.g == 2);
  CHECK(cr.e == 2);
  CHECK(cr.h == IntPoly{-2, 0, 1});
  CHECK(cr.P == IntPoly{4, 0, -4, 0, 1});
  CHECK(cr.real_place);
  // d = 2 is even, so the p-adic invariants are integral; e = 2 comes from
  // the real place alone.
  CHECK(cr.inv_order == 1);
}

TEST_CASE("structural identities across enumerated classes") {
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    PrimePower q(p, 1);
    for (unsigned g = 1; g <= 4; ++g) {
      for (const IsogenyClass& c : enumerate_simple_ss(q, g).classes) {
        CHECK(c.e * static_cast<unsigned>(c.h.degree()) == 2 * g);
        CHECK(c.local.r * c.local.d == static_cast<unsigned>(c.h.degree()));
        CHECK((c.inv_order == 1 || c.inv_order == 2));
        CHECK(c.P == c.h.pow(c.e));
        CHECK(is_weil_palindromic(c.P, q));
        CHECK(c.real_place == (c.L <= 2));
      }
    }
  }
}

}  // TEST_SUITE
