#include "ssw/curves.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace ssw {

namespace {

// Remainder of the bit-encoded polynomial a by b (deg b = db).
std::uint64_t poly2_mod(std::uint64_t a, std::uint64_t b, unsigned db) {
  while (true) {
    int da = 63 - std::countl_zero(a | 1ull);
    if (a == 0 || da < static_cast<int>(db)) return a;
    a ^= b << (da - db);
  }
}

}  // namespace

bool poly2_irreducible(std::uint32_t bits, unsigned deg) {
  if (deg == 0) return false;
  if ((bits & 1u) == 0) return deg == 1 && bits == 2;  // divisible by t
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    for (std::uint32_t cand = (1u << d); cand < (2u << d); ++cand) {
      if (poly2_mod(bits, cand, d) == 0) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> irreducible_polys2(unsigned deg) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = (1u << deg); m < (2u << deg); ++m)
    if (poly2_irreducible(m, deg)) out.push_back(m);
  return out;
}

BinaryField::BinaryField(unsigned w, std::uint32_t modulus)
    : w_(w), modulus_(modulus), trace_mask_(0) {
  if (w < 1 || w > 24) throw std::invalid_argument("BinaryField: need 1 <= w <= 24");
  if (modulus >> w != 1u)
    throw std::invalid_argument("BinaryField: modulus must have degree exactly w");
  if (!poly2_irreducible(modulus, w))
    throw std::invalid_argument("BinaryField: modulus is reducible");
  // Build the trace mask: bit j = Tr(t^j), each trace by repeated squaring.
  for (unsigned j = 0; j < w_; ++j) {
    std::uint32_t acc = 0;
    std::uint32_t cur = 1u << j;  // t^j as element
    for (unsigned s = 0; s < w_; ++s) {
      acc ^= cur;
      cur = mul(cur, cur);
    }
    if (acc > 1u) throw std::logic_error("BinaryField: trace left F_2");
    trace_mask_ |= acc << j;
  }
}

BinaryField BinaryField::lex_least(unsigned w) {
  for (std::uint32_t m = (1u << w); m < (2u << w); ++m)
    if (poly2_irreducible(m, w)) return BinaryField(w, m);
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::uint32_t BinaryField::mul(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t acc = 0;
  std::uint64_t aa = a;
  while (b) {
    if (b & 1u) acc ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  for (int d = 2 * static_cast<int>(w_) - 2; d >= static_cast<int>(w_); --d)
    if ((acc >> d) & 1ull) acc ^= static_cast<std::uint64_t>(modulus_) << (d - w_);
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t BinaryField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1, base = a;
  while (e) {
    if (e & 1ull) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

unsigned BinaryField::trace(std::uint32_t a) const {
  return std::popcount(a & trace_mask_) & 1u;
}

std::uint64_t BinaryField::element_order(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("element_order: zero element");
  std::uint64_t n = size() - 1;
  std::uint64_t ord = n;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    for (std::uint64_t e : {d, n / d})
      if (e < ord && pow(a, e) == 1u) ord = e;
  }
  return ord;
}

bool BinaryField::is_generator(std::uint32_t a) const {
  return a != 0 && element_order(a) == size() - 1;
}

CurveAS::CurveAS(BinaryField base_field, std::vector<std::uint32_t> f_coeffs)
    : base(base_field), f(std::move(f_coeffs)) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() < 2 || f.size() % 2 != 0)
    throw std::invalid_argument("CurveAS: deg f must be odd and >= 1");
  for (std::uint32_t c : f)
    if (c >= base.size()) throw std::invalid_argument("CurveAS: coefficient outside field");
}

std::uint64_t count_points(const CurveAS& c, unsigned i, unsigned threads) {
  const unsigned w = c.base.w();
  if (i < 1) throw std::invalid_argument("count_points: extension index must be >= 1");
  if (w * i > 24)
    throw CapExceeded("count_points: field F_2^" + std::to_string(w * i) +
                      " exceeds the cap w*i <= 24");
  // Extension field and embedded curve coefficients.
  BinaryField big = (i == 1) ? c.base : BinaryField::lex_least(w * i);
  std::vector<std::uint32_t> fc(c.f.size());
  if (i == 1) {
    fc = c.f;
  } else {
    // Least root of the base modulus inside big realizes the embedding.
    std::uint32_t root = 0;
    bool found = false;
    for (std::uint64_t e = 0; e < big.size(); ++e) {
      std::uint32_t acc = 0;
      for (int d = static_cast<int>(w); d >= 0; --d) {
        acc = big.mul(acc, static_cast<std::uint32_t>(e));
        acc ^= (c.base.modulus() >> d) & 1u;
      }
      if (acc == 0) {
        root = static_cast<std::uint32_t>(e);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("count_points: no embedding root found");
    std::vector<std::uint32_t> tp(w);  // root^j for j < w
    tp[0] = 1;
    for (unsigned j = 1; j < w; ++j) tp[j] = big.mul(tp[j - 1], root);
    for (std::size_t k = 0; k < c.f.size(); ++k) {
      std::uint32_t v = 0;
      for (unsigned j = 0; j < w; ++j)
        if ((c.f[k] >> j) & 1u) v ^= tp[j];
      fc[k] = v;
    }
  }

  const std::uint64_t n = big.size();
  const std::uint32_t mask = big.trace_mask();
  if (threads < 1) threads = 1;
  auto count_range = [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t zeros = 0;
    for (std::uint64_t xv = lo; xv < hi; ++xv) {
      const std::uint32_t x = static_cast<std::uint32_t>(xv);
      std::uint32_t acc = 0;
      for (std::size_t k = fc.size(); k-- > 0;) acc = big.mul(acc, x) ^ fc[k];
      zeros += 1u ^ (std::popcount(acc & mask) & 1u);
    }
    return zeros;
  };
  std::uint64_t zeros = 0;
  if (threads == 1) {
    zeros = count_range(0, n);
  } else {
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = t * chunk, hi = std::min(n, lo + chunk);
      pool.emplace_back([&, t, lo, hi] { partial[t] = count_range(lo, std::max(lo, hi)); });
    }
    for (auto& th : pool) th.join();
    for (std::uint64_t p : partial) zeros += p;
  }
  return 1 + 2 * zeros;
}

IntPoly charpoly_from_counts(const BigInt& q, unsigned g,
                             const std::vector<BigInt>& counts) {
  if (counts.size() != g)
    throw std::invalid_argument("charpoly_from_counts: need exactly g counts");
  std::vector<BigInt> S(g + 1), a(g + 1);
  BigInt qi = 1;
  for (unsigned i = 1; i <= g; ++i) {
    qi *= q;
    S[i] = qi + 1 - counts[i - 1];
    // Weil bound, exactly: S_i^2 <= (2g)^2 q^i.
    if (S[i] * S[i] > BigInt(4) * g * g * qi)
      throw std::runtime_error("counts violate the Weil bound at extension " +
                               std::to_string(i));
  }
  a[0] = 1;
  for (unsigned i = 1; i <= g; ++i) {
    BigInt rhs = S[i];
    for (unsigned k = 1; k < i; ++k) rhs += S[k] * a[i - k];
    rhs = -rhs;
    if (rhs % i != 0)
      throw std::runtime_error("counts inconsistent: Newton step " +
                               std::to_string(i) + " is not divisible by " +
                               std::to_string(i));
    a[i] = rhs / i;
  }
  std::vector<BigInt> c(2 * g + 1);
  for (unsigned i = 0; i <= g; ++i) c[2 * g - i] = a[i];
  BigInt qp = 1;
  for (unsigned i = 1; i <= g; ++i) {
    qp *= q;
    c[g - i] = qp * a[g - i];
  }
  return IntPoly(std::move(c));
}

std::vector<BigInt> roundtrip_counts(const IntPoly& P, const BigInt& q,
                                     unsigned depth) {
  if (!P.is_monic() || P.degree() <= 0 || P.degree() % 2 != 0)
    throw std::invalid_argument("roundtrip_counts: P must be monic of even degree");
  const unsigned n = static_cast<unsigned>(P.degree());
  const unsigned g = n / 2;
  {
    BigInt qp = 1;
    for (unsigned i = 1; i <= g; ++i) {
      qp *= q;
      if (P.coeff(g - i) != qp * P.coeff(g + i))
        throw std::invalid_argument("roundtrip_counts: P is not q-palindromic");
    }
  }
  std::vector<BigInt> a(n + 1);
  for (unsigned k = 0; k <= n; ++k) a[k] = P.coeff(n - k);
  std::vector<BigInt> p(depth + 1);
  std::vector<BigInt> N;
  BigInt qi = 1;
  for (unsigned i = 1; i <= depth; ++i) {
    BigInt s = 0;
    if (i <= n) {
      s = BigInt(i) * a[i];
      for (unsigned k = 1; k < i; ++k) s += a[k] * p[i - k];
      p[i] = -s;
    } else {
      for (unsigned k = 1; k <= n; ++k) s += a[k] * p[i - k];
      p[i] = -s;
    }
    qi *= q;
    N.push_back(qi + 1 - p[i]);
  }
  return N;
}

// ---- Genus-4 table ---------------------------------------------------------

namespace {

// Builds the expected polynomial from the coefficient pattern
// (a_1, a_2, a_3, a_4) at q = 32 with s = sqrt(2q) = 8.
IntPoly g4_poly(long a1, long a2, long a3, long a4) {
  const BigInt q = 32;
  std::vector<BigInt> c(9);
  c[8] = 1;
  c[7] = a1;
  c[6] = a2;
  c[5] = a3;
  c[4] = a4;
  BigInt qp = 1;
  for (unsigned i = 1; i <= 4; ++i) {
    qp *= q;
    c[4 - i] = qp * c[4 + i];
  }
  return IntPoly(std::move(c));
}

}  // namespace

std::vector<TableRow> genus4_rows() {
  // Rows: x^9 + α^e1 x^5 + α^e2 x^3 encoded as {9:1, 5:α^e1, 3:α^e2}.
  std::vector<TableRow> rows;
  rows.push_back({"y^2+y = x^9 + a^2*x^5 + a^9*x^3",
                  {2, 9},
                  g4_poly(8, 32, 0, -1024)});
  rows.push_back({"y^2+y = x^9 + a^2*x^5 + a^25*x^3",
                  {2, 25},
                  g4_poly(-8, 32, 0, -1024)});
  rows.push_back({"y^2+y = x^9 + x^5 + a^3*x^3", {0, 3}, g4_poly(0, 0, 0, 0)});
  rows.push_back({"y^2+y = x^9 + x^5 + a*x^3",
                  {0, 1},
                  g4_poly(0, 32, 0, 1024)});
  return rows;
}

CurveAS genus4_curve(const TableModel& m, const TableRow& row) {
  BinaryField F(5, m.modulus);
  std::vector<std::uint32_t> f(10, 0);
  f[9] = 1;
  f[5] = F.pow(m.alpha, row.f_exp[0]);
  f[3] = F.pow(m.alpha, row.f_exp[1]);
  return CurveAS(F, std::move(f));
}

std::optional<TableModel> find_genus4_model(unsigned threads) {
  const std::vector<std::uint32_t> moduli = irreducible_polys2(5);
  std::vector<TableRow> rows = genus4_rows();
  // Expected counts per row, to prune cheap extensions first.
  std::vector<std::vector<BigInt>> want;
  for (const TableRow& r : rows) want.push_back(roundtrip_counts(r.expected, 32, 4));
  for (std::uint32_t mod : moduli) {
    BinaryField F(5, mod);
    for (std::uint32_t alpha = 2; alpha < F.size(); ++alpha) {
      if (!F.is_generator(alpha)) continue;
      TableModel model{mod, alpha};
      bool all_rows_ok = true;
      for (std::size_t r = 0; r < rows.size() && all_rows_ok; ++r) {
        CurveAS c = genus4_curve(model, rows[r]);
        for (unsigned i = 1; i <= 4; ++i) {
          if (BigInt(count_points(c, i, threads)) != want[r][i - 1]) {
            all_rows_ok = false;
            break;
          }
        }
      }
      if (all_rows_ok) return model;
    }
  }
  return std::nullopt;
}

std::string modulus_bits_string(std::uint32_t modulus, unsigned deg) {
  std::string s;
  for (int d = static_cast<int>(deg); d >= 0; --d)
    s += ((modulus >> d) & 1u) ? '1' : '0';
  return s;
}

}  // namespace ssw
