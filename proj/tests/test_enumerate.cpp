/* Unit tests for the full enumeration of simple supersingular classes:
 * candidate root-of-unity orders, frozen class lists for small q, structural
 * invariants across a (p, n) battery, and the cross-q family scan. */
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssw/enumerate.hpp"

using namespace ssw;

namespace {

std::vector<std::string> coeffs_of(const IntPoly& P) {
  std::vector<std::string> out;
  for (int i = 0; i <= P.degree(); ++i)
    out.push_back(P.coeff(static_cast<std::size_t>(i)).get_str());
  return out;
}

// Ascending-degree decimal coefficient lists of every class polynomial.
std::set<std::vector<std::string>> class_polys(const EnumerationResult& r) {
  std::set<std::vector<std::string>> out;
  for (const IsogenyClass& c : r.classes) out.insert(coeffs_of(c.P));
  return out;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("candidate_orders") {
  // g = 1: all L with phi(L) <= 4.
  CHECK(candidate_orders(1) ==
        std::vector<unsigned>{1, 2, 3, 4, 5, 6, 8, 10, 12});
  // The list is exactly characterized by the phi bound, and ascending.
  for (unsigned g = 1; g <= 7; ++g) {
    std::vector<unsigned> got = candidate_orders(g);
    CHECK(std::is_sorted(got.begin(), got.end()));
    std::vector<unsigned> expect;
    // phi(L) >= sqrt(L/2), so L <= 2*(4g)^2 + 1 bounds the search.
    for (unsigned L = 1; L <= 2 * (4 * g) * (4 * g) + 1; ++L)
      if (euler_phi(L) <= 4 * g) expect.push_back(L);
    CHECK(got == expect);
  }
  CHECK_THROWS_AS(candidate_orders(0), std::invalid_argument);
}

TEST_CASE("dimension 1 over F_2: the three classes") {
  EnumerationResult r = enumerate_simple_ss(PrimePower(2, 1), 1);
  CHECK(r.g == 1);
  CHECK(r.q == PrimePower(2, 1));
  CHECK(r.classes.size() == 3);
  std::set<std::vector<std::string>> expect{
      {"2", "-2", "1"},  // X^2 - 2X + 2
      {"2", "0", "1"},   // X^2 + 2
      {"2", "2", "1"},   // X^2 + 2X + 2
  };
  CHECK(class_polys(r) == expect);
}

TEST_CASE("dimension 1 over F_3, F_5, F_7") {
  EnumerationResult r3 = enumerate_simple_ss(PrimePower(3, 1), 1);
  std::set<std::vector<std::string>> expect3{
      {"3", "-3", "1"},  // X^2 - 3X + 3
      {"3", "0", "1"},   // X^2 + 3
      {"3", "3", "1"},   // X^2 + 3X + 3
  };
  CHECK(class_polys(r3) == expect3);
  // p >= 5: only X^2 + q remains in dimension 1.
  EnumerationResult r5 = enumerate_simple_ss(PrimePower(5, 1), 1);
  CHECK(class_polys(r5) ==
        std::set<std::vector<std::string>>{{"5", "0", "1"}});
  EnumerationResult r7 = enumerate_simple_ss(PrimePower(7, 1), 1);
  CHECK(class_polys(r7) ==
        std::set<std::vector<std::string>>{{"7", "0", "1"}});
}

TEST_CASE("dimension 1 over F_8 keeps the sqrt(2q) classes") {
  EnumerationResult r = enumerate_simple_ss(PrimePower(2, 3), 1);
  std::set<std::vector<std::string>> expect{
      {"8", "-4", "1"},  // X^2 - 4X + 8
      {"8", "0", "1"},   // X^2 + 8
      {"8", "4", "1"},   // X^2 + 4X + 8
  };
  CHECK(class_polys(r) == expect);
}

TEST_CASE("dimension 2 over F_7: four classes") {
  EnumerationResult r = enumerate_simple_ss(PrimePower(7, 1), 2);
  CHECK(r.classes.size() == 4);
  std::set<std::vector<std::string>> expect{
      {"49", "0", "-7", "0", "1"},   // X^4 - 7X^2 + 49
      {"49", "0", "0", "0", "1"},    // X^4 + 49
      {"49", "0", "7", "0", "1"},    // X^4 + 7X^2 + 49
      {"49", "0", "-14", "0", "1"},  // (X^2 - 7)^2, the e = 2 class
  };
  CHECK(class_polys(r) == expect);
  // The e = 2 class is the only one with a real place.
  unsigned real_count = 0;
  for (const IsogenyClass& c : r.classes)
    if (c.real_place) {
      ++real_count;
      CHECK(c.e == 2);
      CHECK(coeffs_of(c.h) == std::vector<std::string>{"-7", "0", "1"});
    }
  CHECK(real_count == 1);
}

TEST_CASE("dimension 5 over F_11: exactly one sign pair") {
  EnumerationResult r = enumerate_simple_ss(PrimePower(11, 1), 5);
  CHECK(r.classes.size() == 2);
  std::set<std::vector<std::string>> expect{
      {"161051", "161051", "73205", "14641", "-1331", "-1331", "-121", "121",
       "55", "11", "1"},
      {"161051", "-161051", "73205", "-14641", "-1331", "1331", "-121", "-121",
       "55", "-11", "1"},
  };
  CHECK(class_polys(r) == expect);
}

TEST_CASE("dimension 7 is empty") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    CHECK(enumerate_simple_ss(PrimePower(p, 1), 7).classes.empty());
    CHECK(enumerate_simple_ss(PrimePower(p, 3), 7).classes.empty());
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(enumerate_simple_ss(PrimePower(2, 1), 0),
                  std::invalid_argument);
  // Even exponents are rejected at the PrimePower boundary already.
  CHECK_THROWS_AS(PrimePower(7, 2), std::invalid_argument);
}

TEST_CASE("classes carry consistent invariants and are deduplicated") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    for (unsigned n : {1u, 3u}) {
      PrimePower q(p, n);
      for (unsigned g = 1; g <= 4; ++g) {
        EnumerationResult r = enumerate_simple_ss(q, g);
        CHECK(r.q == q);
        CHECK(r.scanned_orders == candidate_orders(g));
        std::vector<std::vector<std::string>> listed;
        for (const IsogenyClass& c : r.classes) {
          CHECK(c.g == g);
          CHECK(c.P.degree() == 2 * static_cast<int>(g));
          CHECK(c.P.is_monic());
          CHECK(weil_root_check(c.P, q));
          listed.push_back(coeffs_of(c.P));
        }
        std::set<std::vector<std::string>> dedup(listed.begin(), listed.end());
        CHECK(dedup.size() == listed.size());
      }
    }
  }
}

TEST_CASE("base-change invariance of the count for p = 5, 7") {
  // Dimension-2 class counts agree between F_p and F_{p^3}: the family gates
  // depend only on p, and no class appears or disappears with n here.
  for (std::uint64_t p : {5ull, 7ull}) {
    EnumerationResult a = enumerate_simple_ss(PrimePower(p, 1), 2);
    EnumerationResult b = enumerate_simple_ss(PrimePower(p, 3), 2);
    CHECK(a.classes.size() == b.classes.size());
  }
}

TEST_CASE("family_scan groups dimension-1 classes into two patterns") {
  // The sqrt(2q) and sqrt(3q) classes are a single pattern u = {1} in the
  // a_i = u_i q^{floor(i/2)} sqrt(pq)^{i mod 2} parameterization; X^2 + q is
  // the everywhere pattern u = {0}.
  std::vector<FamilyPattern> fams =
      family_scan({2, 3, 5, 7, 11, 13}, {1, 3}, 1);
  REQUIRE(fams.size() == 2);
  for (const FamilyPattern& f : fams) {
    CHECK(f.g == 1);
    CHECK(f.regular);
    CHECK(f.u.size() == 1);
  }
  for (const FamilyPattern& f : fams) {
    if (f.u == std::vector<long>{0}) {
      CHECK_FALSE(f.sign_pair);
      CHECK(f.occurrences.size() == 12);  // every (p, n) in the grid
    } else {
      CHECK(f.u == std::vector<long>{1});
      CHECK(f.sign_pair);
      using Occ = std::pair<std::uint64_t, unsigned>;
      CHECK(f.occurrences ==
            std::vector<Occ>{{2, 1}, {2, 3}, {3, 1}, {3, 3}});
    }
  }
}

TEST_CASE("family_scan rejects even n") {
  CHECK_THROWS_AS(family_scan({2, 3}, {1, 2}, 1), std::invalid_argument);
}

}  // TEST_SUITE
