#include "ssw/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "ssw/weil.hpp"

namespace ssw {

namespace {

/* Canonical form of sign * zeta_L^e as a primitive root of unity (N, j):
 * fold a minus sign into the root (order doubles for odd L, shifts by L/2
 * for even L), then reduce to the primitive order. */
std::pair<unsigned, unsigned> normalize_root(int sign, unsigned L, unsigned e) {
  unsigned N, j;
  if (sign > 0) {
    N = L;
    j = e % L;
  } else if (L % 2 == 1) {
    N = 2 * L;
    j = (2 * (e % L) + L) % N;
  } else {
    N = L;
    j = (e % L + L / 2) % L;
  }
  if (j == 0) return {1u, 0u};
  const unsigned d = std::gcd(j, N);
  return {N / d, j / d};
}

std::uint64_t orbit_key(unsigned L, unsigned k) {
  return (static_cast<std::uint64_t>(L) << 32) | k;
}

/* Lexicographic order on ascending coefficient lists (the serialization
 * order); all P in one result share a degree, so this is a total order. */
bool poly_lex_less(const IntPoly& a, const IntPoly& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

std::vector<unsigned> candidate_orders(unsigned g) {
  if (g == 0) throw std::invalid_argument("candidate_orders: g must be >= 1");
  std::vector<unsigned> out;
  const unsigned bound = 2 * (4 * g) * (4 * g) + 1;
  for (unsigned L = 1; L <= bound; ++L) {
    if (euler_phi(L) <= 4 * g) out.push_back(L);
  }
  return out;
}

EnumerationResult enumerate_simple_ss(const PrimePower& q, unsigned g) {
  if (g == 0)
    throw std::invalid_argument("enumerate_simple_ss: g must be >= 1");
  EnumerationResult result{q, g, {}, candidate_orders(g)};

  const unsigned cp = sqrt_p_conductor(q.p());
  const std::vector<int>& chi = quad_character(q.p());
  std::unordered_set<std::uint64_t> visited;

  for (unsigned L : result.scanned_orders) {
    const unsigned M = conductor(q, L);
    const std::vector<std::uint32_t> units = units_mod(M);

    std::vector<unsigned> exponents;
    if (L == 1) {
      exponents.push_back(0);
    } else {
      for (unsigned k = 1; k < L; ++k)
        if (std::gcd(k, L) == 1) exponents.push_back(k);
    }

    for (unsigned k : exponents) {
      if (visited.count(orbit_key(L, k))) continue;

      // One pass over (Z/M)^*: collect the stabilizer of pi = sqrt(q) zeta_L^k
      // and mark every Galois conjugate's (order, exponent) as covered.
      // sigma_a(pi) = chi_p(a) * sqrt(q) * zeta_L^{ak}.
      std::vector<std::uint32_t> H;
      for (std::uint32_t a : units) {
        const int sign = chi[a % cp];
        const unsigned e =
            static_cast<unsigned>(static_cast<std::uint64_t>(a) * k % L);
        const auto [Lc, kc] = normalize_root(sign, L, e);
        visited.insert(orbit_key(Lc, kc));
        if (Lc == L && kc == k) H.push_back(a);
      }
      if (H.empty() || units.size() % H.size() != 0)
        throw std::logic_error("enumerate_simple_ss: orbit-stabilizer failure");
      const unsigned degh = static_cast<unsigned>(units.size() / H.size());
      // dim = e * deg(h) / 2 >= deg(h) / 2, so deg h > 2g can never hit g.
      if (degh > 2 * g) continue;

      const LocalSplitting ls = local_degree(M, q.p(), H);
      if (ls.d * ls.r != degh)
        throw std::logic_error("enumerate_simple_ss: d*r != deg h");
      const InvariantInfo info = invariant_and_e(ls.d, L);
      if (info.e * degh != 2 * g) continue;

      // Dimension hit: re-derive everything through the exact ring and check
      // the arithmetic shortcut against the direct stabilizer scan.
      const WeilNumber w = make_weil_number(q, L, k);
      if (stabilizer(w) != H)
        throw std::logic_error(
            "enumerate_simple_ss: character stabilizer mismatch");
      const IntPoly h = min_poly(w, H);
      IsogenyClass cls = dimension(w, H, h);
      if (cls.g != g || cls.e != info.e)
        throw std::logic_error("enumerate_simple_ss: dimension recheck failed");
      result.classes.push_back(std::move(cls));
    }
  }

  std::sort(result.classes.begin(), result.classes.end(),
            [](const IsogenyClass& a, const IsogenyClass& b) {
              return poly_lex_less(a.P, b.P);
            });
  // Classes are distinct by construction (distinct orbits have distinct
  // minimal polynomials); verify rather than assume.
  for (std::size_t i = 1; i < result.classes.size(); ++i) {
    if (result.classes[i - 1].h == result.classes[i].h)
      throw std::logic_error("enumerate_simple_ss: duplicate class");
  }
  return result;
}

namespace {

/* Extract the pattern vector u from P: a_i = u_i q^{floor(i/2)} s^{i mod 2}
 * with s = sqrt(p*q); empty result when some coefficient does not conform. */
std::vector<long> extract_u(const IntPoly& P, const PrimePower& q) {
  const unsigned g = static_cast<unsigned>(P.degree()) / 2;
  const BigInt s = q.sqrt_pq();
  std::vector<long> u;
  for (unsigned i = 1; i <= g; ++i) {
    const BigInt& a = P.coeff(2 * g - i);
    BigInt denom = q.q_pow(i / 2);
    if (i % 2 == 1) denom *= s;
    BigInt quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(),
                denom.get_mpz_t());
    if (rem != 0 || !quot.fits_slong_p()) return {};
    u.push_back(quot.get_si());
  }
  return u;
}

}  // namespace

std::vector<FamilyPattern> family_scan(const std::vector<std::uint64_t>& primes,
                                       const std::vector<unsigned>& n_values,
                                       unsigned g) {
  for (unsigned n : n_values) {
    if (n % 2 == 0)
      throw std::invalid_argument("family_scan: all n must be odd");
  }
  // Keyed by (normalized u, sign_pair) for regular patterns and by the raw
  // coefficient string for residuals; std::map keeps the report ordering
  // deterministic.
  std::map<std::pair<std::vector<long>, bool>, FamilyPattern> regular;
  std::map<std::string, FamilyPattern> residual;

  for (std::uint64_t p : primes) {
    for (unsigned n : n_values) {
      const PrimePower q(p, n);
      const EnumerationResult res = enumerate_simple_ss(q, g);
      for (const IsogenyClass& cls : res.classes) {
        std::vector<long> u = extract_u(cls.P, q);
        if (u.empty() && g > 0) {
          FamilyPattern& fp =
              residual.try_emplace(cls.P.to_coeff_string()).first->second;
          if (fp.occurrences.empty()) {
            fp.g = g;
            fp.regular = false;
            fp.raw = cls.P.to_coeff_string();
          }
          if (fp.occurrences.empty() || fp.occurrences.back() != std::make_pair(p, n))
            fp.occurrences.emplace_back(p, n);
          continue;
        }
        // Normalize the sign pair: first nonzero odd-index entry positive.
        bool sign_pair = false;
        bool flip = false;
        for (unsigned i = 0; i + 1 <= u.size(); i += 2) {  // u[0] = u_1, odd index
          if (u[i] != 0) {
            sign_pair = true;
            flip = u[i] < 0;
            break;
          }
        }
        if (flip) {
          for (unsigned i = 0; i < u.size(); i += 2) u[i] = -u[i];
        }
        FamilyPattern& fp =
            regular.try_emplace(std::make_pair(u, sign_pair)).first->second;
        if (fp.occurrences.empty() && fp.u.empty()) {
          fp.g = g;
          fp.u = u;
          fp.sign_pair = sign_pair;
        }
        if (fp.occurrences.empty() || fp.occurrences.back() != std::make_pair(p, n))
          fp.occurrences.emplace_back(p, n);
      }
    }
  }

  std::vector<FamilyPattern> out;
  out.reserve(regular.size() + residual.size());
  for (auto& [key, fp] : regular) out.push_back(std::move(fp));
  for (auto& [key, fp] : residual) out.push_back(std::move(fp));
  return out;
}

}  // namespace ssw
