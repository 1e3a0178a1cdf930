/* Unit tests for the integer-root elimination machinery: mod-3/mod-5 test
 * with exact residue combos, the Eisenstein criterion, the eliminated-
 * polynomial inventory, and the bounded brute-force root scan that backs the
 * inventory's soundness claim. */
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssw/noroot.hpp"

using namespace ssw;

namespace {

ZQPoly zq(const std::string& text) { return to_zq_poly(parse_poly_expr(text)); }

}  // namespace

TEST_SUITE("noroot") {

TEST_CASE("to_zq_poly") {
  ZQPoly f = zq("z^2-2*q");
  CHECK(f.degree_z() == 2);
  CHECK(f.monic_in_z());
  CHECK(f.coeff(0) == IntPoly{0, -2});  // -2q
  CHECK(f.coeff(1) == IntPoly());
  CHECK(f.coeff(2) == IntPoly::constant(1));
  // q-only and z-only expressions work; other variables are rejected.
  CHECK(zq("q^3-1").degree_z() == 0);
  CHECK(zq("z^3").degree_z() == 3);
  CHECK_THROWS_AS(zq("x^2-2*q"), std::invalid_argument);
  CHECK_THROWS_AS(zq("z^2-a"), std::invalid_argument);
}

TEST_CASE("zq_instantiate") {
  ZQPoly f = zq("z^2-2*q");
  CHECK(zq_instantiate(f, BigInt(3)) == IntPoly{-6, 0, 1});
  CHECK(zq_instantiate(f, BigInt(0)) == IntPoly{0, 0, 1});
  // Cancellation collapses the degree in z when the leading z-coefficient
  // itself depends on q only through lower terms -- not possible for monic f,
  // but a q-only polynomial can vanish entirely.
  CHECK(zq_instantiate(zq("q^2-4"), BigInt(2)).is_zero());
}

TEST_CASE("mod35: proven case lists four rootless combos") {
  // z^4 - 4qz^2 + 2q^2: rootless in all four residue combinations (checked
  // by hand: the substituted polynomials take only the values {2} / {1, 2} /
  // {2, 4} on each residue class).
  Mod35Result r = mod35_no_integer_root(zq("z^4-4*q*z^2+2*q^2"));
  CHECK(r.status == Mod35Status::kProvenNoRoot);
  REQUIRE(r.combos.size() == 4);
  const unsigned expect_m[] = {3, 3, 5, 5};
  const unsigned expect_q[] = {1, 2, 1, 4};
  for (int i = 0; i < 4; ++i) {
    CHECK(r.combos[i].modulus == expect_m[i]);
    CHECK(r.combos[i].q_residue == expect_q[i]);
    CHECK(r.combos[i].roots.empty());
  }
}

TEST_CASE("mod35: one bad residue branch defeats the test") {
  // z^2 - 2q is rootless in three branches, but at q = 2 (mod 3) it becomes
  // z^2 - 4 = (z - 1)(z + 1) mod 3; one root-bearing branch means
  // inconclusive even though z^2 - 2q has no integer roots for any prime
  // power q (z^2 = 2q forces p = 2 and an odd power of 2 on the right).
  Mod35Result r = mod35_no_integer_root(zq("z^2-2*q"));
  CHECK(r.status == Mod35Status::kInconclusive);
  REQUIRE(r.combos.size() == 4);
  CHECK(r.combos[0].roots.empty());
  CHECK(r.combos[1].roots == std::vector<unsigned>{1, 2});
  CHECK(r.combos[2].roots.empty());
  CHECK(r.combos[3].roots.empty());
}

TEST_CASE("mod35: the dim3-a elimination is proven") {
  Mod35Result r =
      mod35_no_integer_root(zq("z^6-19*q*z^4+83*q^2*z^2-q^3"));
  CHECK(r.status == Mod35Status::kProvenNoRoot);
  for (const Mod35Combo& c : r.combos) CHECK(c.roots.empty());
}

TEST_CASE("mod35: the dim3-b case is inconclusive with exact roots") {
  Mod35Result r = mod35_no_integer_root(zq("z^6-6*q*z^4-9*q^2*z^2-q^3"));
  CHECK(r.status == Mod35Status::kInconclusive);
  REQUIRE(r.combos.size() == 4);
  // Residue roots computed by hand: f == z^6 + 2 mod 3 at q = 1, rootless
  // mod 3 at q = 2, and has roots {1, 4} / {2, 3} for the two mod-5 residues.
  CHECK(r.combos[0].roots == std::vector<unsigned>{1, 2});
  CHECK(r.combos[1].roots.empty());
  CHECK(r.combos[2].roots == std::vector<unsigned>{1, 4});
  CHECK(r.combos[3].roots == std::vector<unsigned>{2, 3});
}

TEST_CASE("mod35 requires f monic in z") {
  CHECK_THROWS_AS(mod35_no_integer_root(zq("2*z^2-q")),
                  std::invalid_argument);
  CHECK_THROWS_AS(mod35_no_integer_root(zq("q*z^2-1")),
                  std::invalid_argument);
  CHECK_THROWS_AS(mod35_no_integer_root(zq("q^2-1")), std::invalid_argument);
}

TEST_CASE("eisenstein_irreducible") {
  CHECK(eisenstein_irreducible(IntPoly{2, -4, 1}, 2));    // z^2 - 4z + 2
  CHECK_FALSE(eisenstein_irreducible(IntPoly{-1, 0, 1}, 2));  // z^2 - 1
  CHECK(eisenstein_irreducible(IntPoly{-30, 0, 1}, 2));   // z^2 - 30
  CHECK_FALSE(eisenstein_irreducible(IntPoly{-4, 0, 1}, 2));  // 4 | constant
  // p dividing the leading coefficient fails the criterion.
  CHECK_FALSE(eisenstein_irreducible(IntPoly{2, 2, 2}, 2));
  CHECK_THROWS_AS(eisenstein_irreducible(IntPoly::constant(5), 2),
                  std::invalid_argument);
}

TEST_CASE("inventory loads and re-verifies") {
  std::vector<InventoryEntry> inv = load_inventory(default_inventory_path());
  CHECK(inv.size() == 22);

  std::size_t proven = 0, inconclusive = 0, eisenstein = 0;
  std::set<std::string> labels;
  for (const InventoryEntry& e : inv) {
    labels.insert(e.label);
    if (e.method == "mod35") {
      Mod35Result r = mod35_no_integer_root(e.poly);
      if (e.expected == "proven") {
        ++proven;
        CHECK(r.status == Mod35Status::kProvenNoRoot);
      } else {
        ++inconclusive;
        CHECK(e.label == "dim3-b");
        CHECK(r.status == Mod35Status::kInconclusive);
      }
    } else {
      ++eisenstein;
      CHECK(e.method == "eisenstein");
      CHECK(e.expected == "irreducible");
      IntPoly f = zq_instantiate(e.poly, e.eis_qsub);
      CHECK(eisenstein_irreducible(f, e.eis_prime));
    }
  }
  CHECK(labels.size() == inv.size());
  CHECK(proven == 16);
  CHECK(inconclusive == 1);
  CHECK(eisenstein == 5);
}

TEST_CASE("inventory soundness: no integer roots for the standard q sweep") {
  std::vector<InventoryEntry> inv = load_inventory(default_inventory_path());
  const long qs[] = {2, 3, 5, 7, 8, 11, 13, 27, 32};
  for (const InventoryEntry& e : inv) {
    for (long q : qs) {
      IntPoly f = zq_instantiate(e.poly, BigInt(q));
      CHECK(integer_roots_in_range(f, 100000).empty());
    }
  }
}

TEST_CASE("load_inventory rejects malformed files") {
  CHECK_THROWS_AS(load_inventory("/nonexistent/inventory.txt"),
                  std::runtime_error);
}

TEST_CASE("integer_roots_in_range positive controls") {
  // (z - 3)(z + 5)(z - 999983), roots straddling the sieve's wraparound path.
  IntPoly f = IntPoly{-3, 1} * IntPoly{5, 1} * IntPoly{-999983, 1};
  CHECK(integer_roots_in_range(f, 1000000) ==
        std::vector<long>{-5, 3, 999983});
  // Even polynomial branch: (z^2 - 4)(z^2 - 9).
  IntPoly g = IntPoly{-4, 0, 1} * IntPoly{-9, 0, 1};
  CHECK(integer_roots_in_range(g, 100) == std::vector<long>{-3, -2, 2, 3});
  // Roots outside the bound are not reported.
  CHECK(integer_roots_in_range(f, 100) == std::vector<long>{-5, 3});
  CHECK_THROWS_AS(integer_roots_in_range(IntPoly(), 10),
                  std::invalid_argument);
}

}  // TEST_SUITE
