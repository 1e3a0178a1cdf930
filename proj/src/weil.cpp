#include "ssw/weil.hpp"

#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ssw {

unsigned conductor(const PrimePower& q, unsigned L) {
  if (L == 0) throw std::invalid_argument("conductor: L must be >= 1");
  return static_cast<unsigned>(lcm_u64(L, sqrt_p_conductor(q.p())));
}

WeilNumber make_weil_number(const PrimePower& q, unsigned L, unsigned k) {
  if (L == 0) throw std::invalid_argument("make_weil_number: L must be >= 1");
  if (L == 1) {
    if (k != 0)
      throw std::invalid_argument("make_weil_number: L = 1 requires k = 0");
  } else if (std::gcd(static_cast<std::uint64_t>(k % L),
                      static_cast<std::uint64_t>(L)) != 1) {
    throw std::invalid_argument("make_weil_number: k must be a unit mod L");
  }
  const unsigned M = conductor(q, L);
  const unsigned kk = (L == 1) ? 0u : k % L;
  // pi = p^{(n-1)/2} * sqrt(p) * zeta_L^k.
  CycElem v = sqrt_p_embed(q.p(), M) * q.sqrtq_scalar();
  if (L > 1) {
    const unsigned t = M / L;
    v = cyc_mul(v, CycElem::zeta_power(M, static_cast<long long>(kk) * t));
  }
  return WeilNumber{q, L, kk, M, std::move(v)};
}

const std::vector<int>& quad_character(std::uint64_t p) {
  static std::map<std::uint64_t, std::vector<int>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;

  const unsigned c = sqrt_p_conductor(p);
  const CycElem s = sqrt_p_embed(p, c);
  const CycElem neg = -s;
  std::vector<int> chi(c, 0);
  for (std::uint32_t a : units_mod(c)) {
    const CycElem im = galois_apply(a, s);
    if (im == s)
      chi[a] = 1;
    else if (im == neg)
      chi[a] = -1;
    else
      throw std::logic_error(
          "quad_character: sigma_a(sqrt p) is not +-sqrt p");
  }
  return cache.emplace(p, std::move(chi)).first->second;
}

std::vector<std::uint32_t> stabilizer(const WeilNumber& w) {
  std::vector<std::uint32_t> H;
  for (std::uint32_t a : units_mod(w.M)) {
    if (galois_apply(a, w.value) == w.value) H.push_back(a);
  }
  return H;
}

std::vector<std::uint32_t> stabilizer_by_character(const PrimePower& q,
                                                   unsigned L, unsigned k) {
  const unsigned M = conductor(q, L);
  const unsigned c = sqrt_p_conductor(q.p());
  const std::vector<int>& chi = quad_character(q.p());
  std::vector<std::uint32_t> H;
  for (std::uint32_t a : units_mod(M)) {
    const int s = chi[a % c];
    // sigma_a(pi) = pi  iff  chi(a) * zeta_L^{k(a-1)} = 1.
    const std::uint64_t e = static_cast<std::uint64_t>(k) * (a - 1) % L;
    const bool fixed = (s == 1) ? (e == 0) : (L % 2 == 0 && e == L / 2);
    if (fixed) H.push_back(a);
  }
  return H;
}

IntPoly min_poly(const WeilNumber& w, const std::vector<std::uint32_t>& H) {
  if (H.empty() || H.front() != 1)
    throw std::invalid_argument("min_poly: H must contain 1");
  const std::vector<std::uint32_t> units = units_mod(w.M);
  if (units.size() % H.size() != 0)
    throw std::invalid_argument("min_poly: |H| does not divide the group order");

  // Coset representatives of H in (Z/M)^*.
  std::vector<char> covered(w.M, 0);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t a : units) {
    if (covered[a]) continue;
    reps.push_back(a);
    for (std::uint32_t h : H)
      covered[static_cast<std::uint64_t>(a) * h % w.M] = 1;
  }

  // Expand prod_r (X - sigma_r(pi)) with coefficients in the ring.
  std::vector<CycElem> coeff{CycElem::from_integer(w.M, 1)};
  for (std::uint32_t r : reps) {
    const CycElem root = galois_apply(r, w.value);
    std::vector<CycElem> next(coeff.size() + 1, CycElem(w.M));
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      next[i + 1] = next[i + 1] + coeff[i];
      next[i] = next[i] - cyc_mul(coeff[i], root);
    }
    coeff = std::move(next);
  }

  std::vector<BigInt> h(coeff.size());
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    if (!coeff[i].is_rational())
      throw std::logic_error("min_poly: non-rational coefficient");
    h[i] = coeff[i].rational_value();
  }
  IntPoly out{std::move(h)};
  if (!out.is_monic() || out.degree() != static_cast<int>(reps.size()))
    throw std::logic_error("min_poly: degree/monicity check failed");

  // h(pi) = 0 exactly, evaluated by Horner in the ring.
  CycElem acc(w.M);
  for (int i = out.degree(); i >= 0; --i) {
    acc = cyc_mul(acc, w.value) + CycElem::from_integer(w.M, out.coeff(i));
  }
  if (!acc.is_zero()) throw std::logic_error("min_poly: h(pi) != 0");
  return out;
}

namespace {

/* All complex roots of a squarefree real polynomial by the Durand-Kerner
 * simultaneous iteration; deterministic starting configuration. */
std::vector<std::complex<double>> all_roots(const std::vector<double>& monic) {
  const std::size_t d = monic.size() - 1;  // monic[d] == 1
  std::vector<std::complex<double>> z(d);
  // Cauchy-style radius bound.
  double radius = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double v = std::pow(std::abs(monic[i]), 1.0 / double(d - i));
    radius = std::max(radius, v);
  }
  radius = 1.0 + radius;
  for (std::size_t j = 0; j < d; ++j) {
    const double th = 2.0 * 3.14159265358979323846 * (double(j) + 0.25) / double(d);
    z[j] = std::polar(radius, th);
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> r(1.0, 0.0);
    for (int i = static_cast<int>(d) - 1; i >= 0; --i) r = r * x + monic[i];
    return r;
  };
  for (int iter = 0; iter < 600; ++iter) {
    double worst = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      std::complex<double> denom(1.0, 0.0);
      for (std::size_t k = 0; k < d; ++k)
        if (k != j) denom *= (z[j] - z[k]);
      const std::complex<double> delta = eval(z[j]) / denom;
      z[j] -= delta;
      worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(z[j])));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

}  // namespace

bool weil_root_check(const IntPoly& P, const PrimePower& q) {
  if (P.is_zero() || !P.is_monic() || P.degree() <= 0 || P.degree() % 2 != 0)
    return false;
  if (!is_weil_palindromic(P, q)) return false;

  // Numeric modulus check on the exact squarefree part (repeated roots would
  // poison floating-point convergence; the squarefree part shares the root set).
  IntPoly sf = P.squarefree_part();
  if (sf.degree() <= 0) return false;
  std::vector<double> monic(static_cast<std::size_t>(sf.degree()) + 1);
  const BigInt& lead = sf.coeffs().back();
  for (std::size_t i = 0; i < monic.size(); ++i) {
    // squarefree_part is primitive with positive leading coefficient, but be
    // safe and normalize to monic in doubles.
    monic[i] = mpq_class(sf.coeff(i), lead).get_d();
  }
  const double sq = std::sqrt(mpz_get_d(q.q().get_mpz_t()));
  for (const auto& root : all_roots(monic)) {
    if (std::abs(std::abs(root) / sq - 1.0) > 1e-9) return false;
  }
  return true;
}

}  // namespace ssw
