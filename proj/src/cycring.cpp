#include "ssw/cycring.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ssw {

namespace {

/* Per-conductor context: phi(M) and rewrite rows expressing x^j (j >= phi(M))
 * on the power basis mod Phi_M.  Built once per conductor, immutable after. */
struct RingCtx {
  unsigned M = 0;
  unsigned n = 0;                              // phi(M)
  std::vector<std::vector<BigInt>> rows;       // rows[j - n] = x^j, j in [n, M-1]
};

const RingCtx& ring_ctx(unsigned M) {
  static std::map<unsigned, std::unique_ptr<RingCtx>> cache;
  static std::mutex mu;
  if (M == 0) throw std::invalid_argument("cyclotomic ring: conductor must be >= 1");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(M);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<RingCtx>();
  ctx->M = M;
  ctx->n = static_cast<unsigned>(euler_phi(M));
  const IntPoly& phi = cyclotomic(M);
  const unsigned n = ctx->n;
  if (M > n) {
    ctx->rows.reserve(M - n);
    // x^n = -(phi_0 + phi_1 x + ... + phi_{n-1} x^{n-1})  (Phi_M monic).
    std::vector<BigInt> row(n);
    for (unsigned i = 0; i < n; ++i) row[i] = -phi.coeff(i);
    ctx->rows.push_back(row);
    for (unsigned j = n + 1; j < M; ++j) {
      // x^{j} = x * x^{j-1}: shift, folding the overflow through x^n.
      const std::vector<BigInt>& prev = ctx->rows.back();
      std::vector<BigInt> cur(n, BigInt(0));
      for (unsigned i = 0; i + 1 < n; ++i) cur[i + 1] = prev[i];
      const BigInt& ov = prev[n - 1];
      if (ov != 0) {
        const std::vector<BigInt>& xn = ctx->rows.front();
        for (unsigned i = 0; i < n; ++i)
          mpz_addmul(cur[i].get_mpz_t(), ov.get_mpz_t(), xn[i].get_mpz_t());
      }
      ctx->rows.push_back(std::move(cur));
    }
  }
  const RingCtx& ref = *ctx;
  cache.emplace(M, std::move(ctx));
  return ref;
}

/* acc += v * x^e in the ring of ctx (0 <= e < M). */
void add_monomial(const RingCtx& ctx, std::vector<BigInt>& acc, const BigInt& v,
                  unsigned e) {
  if (v == 0) return;
  if (e < ctx.n) {
    acc[e] += v;
  } else {
    const std::vector<BigInt>& row = ctx.rows[e - ctx.n];
    for (unsigned i = 0; i < ctx.n; ++i)
      mpz_addmul(acc[i].get_mpz_t(), v.get_mpz_t(), row[i].get_mpz_t());
  }
}

}  // namespace

CycElem::CycElem(unsigned M) : M_(M), c_(ring_ctx(M).n, BigInt(0)) {}

CycElem CycElem::zeta_power(unsigned M, long long e) {
  const RingCtx& ctx = ring_ctx(M);
  CycElem z(M);
  long long r = e % static_cast<long long>(M);
  if (r < 0) r += M;
  add_monomial(ctx, z.c_, BigInt(1), static_cast<unsigned>(r));
  return z;
}

CycElem CycElem::from_integer(unsigned M, BigInt v) {
  CycElem z(M);
  z.c_[0] = std::move(v);
  return z;
}

CycElem CycElem::operator+(const CycElem& o) const {
  if (M_ != o.M_) throw std::invalid_argument("CycElem: conductor mismatch");
  CycElem r(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

CycElem CycElem::operator-(const CycElem& o) const {
  if (M_ != o.M_) throw std::invalid_argument("CycElem: conductor mismatch");
  CycElem r(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

CycElem CycElem::operator-() const {
  CycElem r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

CycElem CycElem::operator*(const BigInt& s) const {
  CycElem r(*this);
  for (auto& v : r.c_) v *= s;
  return r;
}

bool CycElem::operator==(const CycElem& o) const {
  return M_ == o.M_ && c_ == o.c_;
}

bool CycElem::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool CycElem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

const BigInt& CycElem::rational_value() const {
  if (!is_rational())
    throw std::invalid_argument("CycElem: element is not rational");
  return c_[0];
}

CycElem cyc_mul(const CycElem& a, const CycElem& b) {
  if (a.M_ != b.M_)
    throw std::invalid_argument("cyc_mul: conductor mismatch");
  const RingCtx& ctx = ring_ctx(a.M_);
  const unsigned n = ctx.n;
  // Plain convolution, then fold exponents >= n back onto the basis.  The
  // convolution degree 2n-2 may pass M; x^M = 1 reduces it below n + M.
  std::vector<BigInt> conv(2 * n - 1 > 0 ? 2 * n - 1 : 1, BigInt(0));
  for (unsigned i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (b.c_[j] != 0)
        mpz_addmul(conv[i + j].get_mpz_t(), a.c_[i].get_mpz_t(),
                   b.c_[j].get_mpz_t());
    }
  }
  CycElem r(a.M_);
  for (unsigned e = 0; e < conv.size(); ++e) {
    unsigned em = e >= a.M_ ? e - a.M_ : e;
    add_monomial(ctx, r.c_, conv[e], em);
  }
  return r;
}

CycElem galois_apply(std::uint64_t a, const CycElem& z) {
  const unsigned M = z.M_;
  const std::uint64_t am = a % M;
  if (std::gcd(am, static_cast<std::uint64_t>(M)) != 1)
    throw std::invalid_argument("galois_apply: a must be a unit mod M");
  const RingCtx& ctx = ring_ctx(M);
  CycElem r(M);
  for (unsigned i = 0; i < ctx.n; ++i)
    add_monomial(ctx, r.c_, z.c_[i], static_cast<unsigned>(am * i % M));
  return r;
}

CycElem embed_up(const CycElem& z, unsigned M2) {
  const unsigned M = z.M_;
  if (M2 % M != 0)
    throw std::invalid_argument("embed_up: conductor(z) must divide M2");
  const RingCtx& ctx2 = ring_ctx(M2);
  const unsigned t = M2 / M;
  CycElem r(M2);
  for (unsigned i = 0; i < z.c_.size(); ++i)
    add_monomial(ctx2, r.c_, z.c_[i], i * t);
  return r;
}

unsigned sqrt_p_conductor(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("sqrt_p_conductor: p not prime");
  if (p == 2) return 8;
  if (p % 4 == 1) return static_cast<unsigned>(p);
  return static_cast<unsigned>(4 * p);
}

CycElem sqrt_p_embed(std::uint64_t p, unsigned M) {
  const unsigned c = sqrt_p_conductor(p);
  if (M % c != 0)
    throw std::invalid_argument("sqrt_p_embed: conductor of sqrt(p) must divide M");

  // Cache the Gauss sum at its own conductor, verified to square to p.
  static std::map<std::uint64_t, CycElem> cache;
  static std::mutex mu;
  std::unique_lock<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it == cache.end()) {
    CycElem s(c);
    if (p == 2) {
      // sqrt(2) = zeta_8 + zeta_8^{-1}.
      s = CycElem::zeta_power(8, 1) + CycElem::zeta_power(8, 7);
    } else if (p % 4 == 1) {
      // Quadratic Gauss sum sum_t (t|p) zeta_p^t = sqrt(p) for p = 1 mod 4.
      for (std::uint64_t t = 1; t < p; ++t)
        s = s + CycElem::zeta_power(c, static_cast<long long>(t)) *
                    BigInt(kronecker(BigInt(static_cast<unsigned long>(t)),
                                     BigInt(static_cast<unsigned long>(p))));
    } else {
      // For p = 3 mod 4 the Gauss sum is i*sqrt(p); multiply by zeta_4^3.
      CycElem g(c);
      for (std::uint64_t t = 1; t < p; ++t)
        g = g + CycElem::zeta_power(c, static_cast<long long>(4 * t)) *
                    BigInt(kronecker(BigInt(static_cast<unsigned long>(t)),
                                     BigInt(static_cast<unsigned long>(p))));
      s = cyc_mul(CycElem::zeta_power(c, static_cast<long long>(3 * p)), g);
    }
    if (!(cyc_mul(s, s) ==
          CycElem::from_integer(c, BigInt(static_cast<unsigned long>(p)))))
      throw std::logic_error("sqrt_p_embed: Gauss sum does not square to p");
    it = cache.emplace(p, std::move(s)).first;
  }
  CycElem base = it->second;
  lock.unlock();
  return M == c ? base : embed_up(base, M);
}

}  // namespace ssw
