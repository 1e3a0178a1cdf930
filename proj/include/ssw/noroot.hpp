/*
 * Integer-root elimination tests for polynomials f(z, q): the mod-3/mod-5
 * no-root test, the Eisenstein irreducibility criterion, and the regression
 * inventory of eliminated polynomials loaded from the data directory.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssw/expr.hpp"
#include "ssw/intpoly.hpp"

namespace ssw {

// Polynomial in z whose coefficients are integer polynomials in q.
// zc[i] is the coefficient of z^i, itself an IntPoly in q.
struct ZQPoly {
  std::vector<IntPoly> zc;

  int degree_z() const { return static_cast<int>(zc.size()) - 1; }
  const IntPoly& coeff(std::size_t i) const { return zc.at(i); }
  bool monic_in_z() const;
};

// Builds a ZQPoly from a parsed expression; only variables z and q are
// accepted. Throws std::invalid_argument for other variables.
ZQPoly to_zq_poly(const PolyExpr& e);

// Substitutes a concrete integer q, yielding a univariate IntPoly in z.
IntPoly zq_instantiate(const ZQPoly& f, const BigInt& q);

enum class Mod35Status { kProvenNoRoot, kInconclusive };

struct Mod35Combo {
  unsigned modulus;     // 3 or 5
  unsigned q_residue;   // representative residue substituted for q
  std::vector<unsigned> roots;  // roots of f mod modulus (empty = rootless)
};

struct Mod35Result {
  Mod35Status status;
  std::vector<Mod35Combo> combos;  // all four (modulus, residue) combinations
};

// The mod-3/mod-5 test: ProvenNoRoot iff f mod 3 has no root in Z/3 for
// q ∈ {1, 2} and f mod 5 has no root in Z/5 for q ∈ {1, 4}. (q is an odd
// power of a prime, so q mod 3 ∈ {1, 2} when 3 ∤ q and q mod 5 ∈ {1, 4}
// when 5 ∤ q and q is not a QR obstruction; the four listed combinations
// are exactly the hypothesis of the test.)
Mod35Result mod35_no_integer_root(const ZQPoly& f);

// Eisenstein criterion at prime p for an integer polynomial (normalized by
// its content first is NOT done: f itself must satisfy p | every non-leading
// coefficient and p² ∤ constant term, with p ∤ leading coefficient).
bool eisenstein_irreducible(const IntPoly& f, const BigInt& p);

struct InventoryEntry {
  std::string label;
  std::string method;    // "mod35" or "eisenstein"
  std::string expected;  // "proven" | "inconclusive" | "irreducible"
  BigInt eis_prime;      // method == "eisenstein" only
  BigInt eis_qsub;       // method == "eisenstein" only
  std::string expr_text;
  ZQPoly poly;
};

// Loads the eliminated-polynomial inventory from a data file; throws
// std::runtime_error on malformed lines.
std::vector<InventoryEntry> load_inventory(const std::string& path);

// Default inventory location (compiled-in data directory).
std::string default_inventory_path();

// Searches f(z, q0) for integer roots with |z| ≤ bound by sieving candidates
// with 64-bit wraparound Horner evaluation and confirming hits exactly.
// Returns all roots found (empty = none).
std::vector<long> integer_roots_in_range(const IntPoly& f, long bound);

}  // namespace ssw
