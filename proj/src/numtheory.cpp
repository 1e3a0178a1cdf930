#include "ssw/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace ssw {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factor: n must be positive");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

PrimePower::PrimePower(std::uint64_t p, unsigned n) : p_(p), n_(n) {
  if (!is_prime(p)) throw std::invalid_argument("PrimePower: p is not prime");
  if (n == 0 || n % 2 == 0)
    throw std::invalid_argument("PrimePower: exponent n must be odd and >= 1");
  mpz_ui_pow_ui(q_.get_mpz_t(), p, n);
}

BigInt PrimePower::q_pow(unsigned k) const {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), q_.get_mpz_t(), k);
  return r;
}

BigInt PrimePower::sqrt_pq() const {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p_, (n_ + 1) / 2);
  return r;
}

BigInt PrimePower::sqrtq_scalar() const {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p_, (n_ - 1) / 2);
  return r;
}

std::uint64_t euler_phi(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("euler_phi: m must be positive");
  std::uint64_t r = m;
  for (const auto& [p, e] : factor(m)) {
    (void)e;
    r -= r / p;
  }
  return r;
}

std::vector<std::uint64_t> phi_inverse(std::uint64_t k) {
  std::vector<std::uint64_t> out;
  if (k == 0) return out;
  // phi(m) >= sqrt(m/2) for all m, so phi(m) = k forces m <= 2k^2.
  for (std::uint64_t m = 1; m <= 2 * k * k + 1; ++m) {
    if (euler_phi(m) == k) out.push_back(m);
  }
  return out;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mult_order: m must be positive");
  a %= m;
  if (m == 1) return 1;
  if (std::gcd(a, m) != 1)
    throw std::invalid_argument("mult_order: a not invertible mod m");
  // The order divides phi(m); walk the divisor lattice from phi(m) downward.
  std::uint64_t ord = euler_phi(m);
  for (const auto& [p, e] : factor(ord)) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow_mod_u64(a, ord / p, m) == 1)
        ord /= p;
      else
        break;
    }
  }
  return ord;
}

int kronecker(const BigInt& D, const BigInt& a) {
  return mpz_kronecker(D.get_mpz_t(), a.get_mpz_t());
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("lcm_u64: zero argument");
  return a / std::gcd(a, b) * b;
}

std::vector<std::uint32_t> units_mod(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("units_mod: m must be positive");
  if (m == 1) return {0};
  std::vector<std::uint32_t> out;
  out.reserve(euler_phi(m));
  for (std::uint32_t a = 1; a < m; ++a)
    if (std::gcd(a, m) == 1) out.push_back(a);
  return out;
}

std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("pow_mod_u64: m must be positive");
  // Operands stay below 2^32 in scope, so 128-bit intermediates are not needed;
  // use __uint128_t anyway to make the routine safe for any word-sized m.
  unsigned __int128 r = 1 % m, base = a % m;
  while (e) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace ssw
