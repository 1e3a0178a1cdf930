#include "ssw/intpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ssw {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  canonicalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  canonicalize();
}

IntPoly IntPoly::constant(BigInt c) {
  IntPoly r;
  if (c != 0) r.c_.push_back(std::move(c));
  return r;
}

IntPoly IntPoly::monomial(unsigned deg, BigInt lead) {
  IntPoly r;
  if (lead != 0) {
    r.c_.assign(deg + 1, BigInt(0));
    r.c_.back() = std::move(lead);
  }
  return r;
}

void IntPoly::canonicalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::coeff(std::size_t i) const {
  static const BigInt kZero(0);
  return i < c_.size() ? c_[i] : kZero;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] != 0)
        mpz_addmul(r[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const BigInt& s) const {
  IntPoly r(*this);
  for (auto& v : r.c_) v *= s;
  r.canonicalize();
  return r;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly r = constant(1);
  IntPoly base(*this);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<BigInt> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigInt(static_cast<unsigned long>(i));
  return IntPoly(std::move(r));
}

IntPoly IntPoly::compose_xk(unsigned k) const {
  if (k == 0) throw std::invalid_argument("compose_xk: k must be >= 1");
  if (is_zero()) return IntPoly();
  std::vector<BigInt> r((c_.size() - 1) * k + 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scale_arg(const BigInt& c) const {
  std::vector<BigInt> r(c_);
  BigInt ck(1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] *= ck;
    ck *= c;
  }
  return IntPoly(std::move(r));
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
  if (a.is_zero()) return IntPoly();
  if (b.degree() == 0) {
    // Constant divisor: every coefficient must divide exactly.
    std::vector<BigInt> r(a.c_);
    for (auto& v : r) {
      BigInt q, rem;
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(),
                  b.c_[0].get_mpz_t());
      if (rem != 0) return std::nullopt;
      v = q;
    }
    return IntPoly(std::move(r));
  }
  if (!b.is_monic())
    throw std::invalid_argument("divide_exact: divisor must be monic or constant");
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> rem(a.c_);
  std::vector<BigInt> q(a.c_.size() - b.c_.size() + 1, BigInt(0));
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    BigInt f = rem[i + b.degree()];
    if (f == 0) continue;
    q[i] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_submul(rem[i + j].get_mpz_t(), f.get_mpz_t(), b.c_[j].get_mpz_t());
  }
  for (const auto& v : rem)
    if (v != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

BigInt IntPoly::content() const {
  BigInt g(0);
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  BigInt g = content();
  if (c_.back() < 0) g = -g;
  return *divide_exact(*this, constant(g));
}

namespace {

/* Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced mod b. */
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const BigInt lb = b.coeffs().back();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    IntPoly t = IntPoly::monomial(static_cast<unsigned>(shift), a.coeffs().back());
    a = a * lb - b * t;
  }
  return a;
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly A = a.primitive_part(), B = b.primitive_part();
  if (A.is_zero()) return B.is_zero() ? IntPoly() : B;
  if (B.is_zero()) return A;
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    IntPoly R = pseudo_rem(A, B).primitive_part();
    A = std::move(B);
    B = std::move(R);
  }
  return A.primitive_part();
}

IntPoly IntPoly::squarefree_part() const {
  if (is_zero()) return IntPoly();
  if (degree() == 0) return constant(1);
  IntPoly g = gcd(*this, derivative());
  IntPoly sf = *divide_exact(primitive_part(), g);
  return sf.primitive_part();
}

std::string IntPoly::to_coeff_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  return os.str();
}

IntPoly IntPoly::parse_coeff_string(const std::string& s) {
  std::vector<BigInt> c;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    // Trim surrounding whitespace; mpz rejects anything else malformed.
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument("polynomial parse: empty coefficient");
    BigInt v;
    if (mpz_set_str(v.get_mpz_t(), tok.substr(b, e - b + 1).c_str(), 10) != 0)
      throw std::invalid_argument("polynomial parse: bad integer '" + tok + "'");
    c.push_back(std::move(v));
  }
  if (c.empty()) throw std::invalid_argument("polynomial parse: empty input");
  return IntPoly(std::move(c));
}

const IntPoly& cyclotomic(unsigned m) {
  static std::map<unsigned, IntPoly> cache;
  static std::mutex mu;
  if (m == 0) throw std::invalid_argument("cyclotomic: m must be >= 1");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // Phi_m = (X^m - 1) / prod_{d | m, d < m} Phi_d, computed recursively
  // without re-entering the lock.
  std::vector<unsigned> stack{m};
  while (!stack.empty()) {
    unsigned k = stack.back();
    if (cache.count(k)) {
      stack.pop_back();
      continue;
    }
    bool ready = true;
    for (unsigned d = 1; d <= k / 2; ++d) {
      if (k % d == 0 && !cache.count(d)) {
        stack.push_back(d);
        ready = false;
      }
    }
    if (!ready) continue;
    IntPoly num = IntPoly::monomial(k, 1) - IntPoly::constant(1);
    for (unsigned d = 1; d <= k / 2; ++d) {
      if (k % d == 0) {
        auto q = IntPoly::divide_exact(num, cache.at(d));
        if (!q) throw std::logic_error("cyclotomic: inexact division");
        num = std::move(*q);
      }
    }
    cache.emplace(k, std::move(num));
    stack.pop_back();
  }
  return cache.at(m);
}

std::optional<std::vector<unsigned>> cyclotomic_decompose(const IntPoly& f) {
  if (f.is_zero() || !f.is_monic())
    throw std::invalid_argument("cyclotomic_decompose: input must be monic");
  std::vector<unsigned> out;
  IntPoly rem = f;
  int d = rem.degree();
  // phi(m) <= deg f is necessary for Phi_m | f, and phi(m) >= sqrt(m/2)
  // bounds the scan.
  const unsigned bound = 2u * static_cast<unsigned>(d) * static_cast<unsigned>(d) + 1;
  for (unsigned m = 1; m <= bound && rem.degree() > 0; ++m) {
    if (euler_phi(m) > static_cast<std::uint64_t>(rem.degree())) continue;
    const IntPoly& phi = cyclotomic(m);
    for (;;) {
      auto q = IntPoly::divide_exact(rem, phi);
      if (!q) break;
      out.push_back(m);
      rem = std::move(*q);
      if (rem.degree() <= 0) break;
    }
  }
  if (!(rem == IntPoly::constant(1))) return std::nullopt;
  return out;
}

bool is_weil_palindromic(const IntPoly& P, const PrimePower& q) {
  if (P.is_zero() || !P.is_monic() || P.degree() % 2 != 0)
    throw std::invalid_argument(
        "is_weil_palindromic: P must be monic of even degree");
  const unsigned g = static_cast<unsigned>(P.degree()) / 2;
  for (unsigned i = 0; i < g; ++i) {
    if (P.coeff(2 * g - i) * q.q_pow(g - i) != P.coeff(i)) return false;
  }
  return true;
}

std::optional<IntPoly> poly_kth_root(const IntPoly& F, unsigned k) {
  if (k == 0) throw std::invalid_argument("poly_kth_root: k must be >= 1");
  if (F.is_zero() || !F.is_monic())
    throw std::invalid_argument("poly_kth_root: F must be monic");
  if (k == 1) return F;
  const unsigned degF = static_cast<unsigned>(F.degree());
  if (degF % k != 0) return std::nullopt;
  const unsigned m = degF / k;
  // Recover G = X^m + g_{m-1} X^{m-1} + ... top-down: the X^{km-j} coefficient
  // of G^k is k*g_{m-j} plus terms in already-known higher coefficients.
  std::vector<BigInt> g(m + 1, BigInt(0));
  g[m] = 1;
  for (unsigned j = 1; j <= m; ++j) {
    IntPoly partial = IntPoly(std::vector<BigInt>(g)).pow(k);
    BigInt delta = F.coeff(degF - j) - partial.coeff(degF - j);
    BigInt quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), delta.get_mpz_t(),
                BigInt(k).get_mpz_t());
    if (rem != 0) return std::nullopt;
    g[m - j] = quot;
  }
  IntPoly G{std::vector<BigInt>(g)};
  if (!(G.pow(k) == F)) return std::nullopt;
  return G;
}

}  // namespace ssw
