/*
 * Artin-Schreier curves y² + y = f(x) over binary fields F_{2^w}: exhaustive
 * point counting with trace-by-squaring, Frobenius characteristic polynomial
 * recovery via Newton's identities, and the genus-4 q=32 table matcher that
 * scans (modulus, generator) models until every row is reproduced.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssw/intpoly.hpp"

namespace ssw {

// Thrown when a point count would exceed the desk-scale cap w·i ≤ 24.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// F_2[t]/(modulus), elements encoded as bit vectors (bit j = coeff of t^j).
class BinaryField {
 public:
  // Validates 1 ≤ w ≤ 24 and irreducibility of the degree-w modulus by
  // exhaustive divisor scan; throws std::invalid_argument otherwise.
  BinaryField(unsigned w, std::uint32_t modulus);

  // The field with the numerically least irreducible modulus of degree w.
  static BinaryField lex_least(unsigned w);

  unsigned w() const { return w_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint64_t size() const { return 1ull << w_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Absolute trace Tr_{F_{2^w}/F_2}, value 0 or 1.
  unsigned trace(std::uint32_t a) const;
  std::uint32_t trace_mask() const { return trace_mask_; }
  // Multiplicative order of a ≠ 0.
  std::uint64_t element_order(std::uint32_t a) const;
  bool is_generator(std::uint32_t a) const;

 private:
  unsigned w_;
  std::uint32_t modulus_;
  std::uint32_t trace_mask_;
};

// True iff the bit-encoded polynomial of the given degree is irreducible
// over F_2 (exhaustive scan over candidate divisors of degree ≤ deg/2).
bool poly2_irreducible(std::uint32_t bits, unsigned deg);

// All irreducible monic polynomials of the given degree, ascending encoding.
std::vector<std::uint32_t> irreducible_polys2(unsigned deg);

// y² + y = f(x) with f over the base field; deg f must be odd (the model has
// one smooth point at infinity and genus (deg f − 1)/2).
struct CurveAS {
  BinaryField base;
  std::vector<std::uint32_t> f;  // ascending coefficients, in the base field

  CurveAS(BinaryField base_field, std::vector<std::uint32_t> f_coeffs);
  unsigned genus() const { return (static_cast<unsigned>(f.size()) - 2) / 2; }
  int deg_f() const { return static_cast<int>(f.size()) - 1; }
};

// N_i = #C(F_{q^i}) = 1 + Σ_x [Tr(f(x)) = 0]·2 over x ∈ F_{q^i}.
// Throws CapExceeded when w·i > 24. threads ≥ 1 splits the x-range.
std::uint64_t count_points(const CurveAS& c, unsigned i, unsigned threads = 1);

// Newton recovery: S_i = q^i + 1 − N_i, i·a_i = −(S_i + Σ_{k<i} S_k·a_{i−k});
// the upper half is filled by the functional equation. Throws
// std::runtime_error if a division is inexact or a Weil bound |S_i| ≤ 2g·q^{i/2}
// fails (counts not consistent with an abelian variety of dimension g).
IntPoly charpoly_from_counts(const BigInt& q, unsigned g,
                             const std::vector<BigInt>& counts);

// Inverse direction: power sums from P by Newton's identities, extended by
// the linear recurrence beyond deg P; returns N_1..N_depth. Throws
// std::invalid_argument unless P is monic of even degree and q-palindromic.
std::vector<BigInt> roundtrip_counts(const IntPoly& P, const BigInt& q,
                                     unsigned depth);

// ---- Genus-4 table over F_32 ----------------------------------------------

// A concrete model of (F_32, α): modulus bits and the generator element.
struct TableModel {
  std::uint32_t modulus;
  std::uint32_t alpha;
};

struct TableRow {
  std::string curve;           // human-readable curve equation
  std::vector<unsigned> f_exp; // exponent spec, see genus4_curve()
  IntPoly expected;            // target characteristic polynomial
};

// The four target rows at q = 32 (curves x^9 + α^a x^5 + α^b x^3 with the
// convention that exponent 0 means coefficient 1).
std::vector<TableRow> genus4_rows();

// Builds the row's curve in the given model.
CurveAS genus4_curve(const TableModel& m, const TableRow& row);

// Scans irreducible quintic moduli × generators until one model reproduces
// every row's characteristic polynomial; nullopt if none does.
std::optional<TableModel> find_genus4_model(unsigned threads = 1);

// Render a modulus as MSB-first bit string, e.g. 100101 for t^5+t^2+1.
std::string modulus_bits_string(std::uint32_t modulus, unsigned deg);

}  // namespace ssw
