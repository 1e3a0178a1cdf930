#include "ssw/noroot.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ssw {

namespace {

ZQPoly zq_zero() { return ZQPoly{{}}; }

ZQPoly zq_const(IntPoly c) {
  if (c.is_zero()) return zq_zero();
  return ZQPoly{{std::move(c)}};
}

void zq_trim(ZQPoly& f) {
  while (!f.zc.empty() && f.zc.back().is_zero()) f.zc.pop_back();
}

ZQPoly zq_add(const ZQPoly& a, const ZQPoly& b, int bsign) {
  ZQPoly out;
  out.zc.resize(std::max(a.zc.size(), b.zc.size()));
  for (std::size_t i = 0; i < out.zc.size(); ++i) {
    IntPoly va = i < a.zc.size() ? a.zc[i] : IntPoly();
    IntPoly vb = i < b.zc.size() ? b.zc[i] : IntPoly();
    out.zc[i] = bsign > 0 ? va + vb : va - vb;
  }
  zq_trim(out);
  return out;
}

ZQPoly zq_mul(const ZQPoly& a, const ZQPoly& b) {
  if (a.zc.empty() || b.zc.empty()) return zq_zero();
  ZQPoly out;
  out.zc.resize(a.zc.size() + b.zc.size() - 1);
  for (std::size_t i = 0; i < a.zc.size(); ++i)
    for (std::size_t j = 0; j < b.zc.size(); ++j)
      out.zc[i + j] = out.zc[i + j] + a.zc[i] * b.zc[j];
  zq_trim(out);
  return out;
}

ZQPoly zq_eval_expr(const PolyExpr& e) {
  switch (e.kind) {
    case PolyExpr::Kind::kVar:
      if (e.var == 'z') return ZQPoly{{IntPoly(), IntPoly::constant(1)}};
      if (e.var == 'q') return zq_const(IntPoly::monomial(1, 1));
      throw std::invalid_argument(std::string("variable '") + e.var +
                                  "' not allowed here (only z and q)");
    case PolyExpr::Kind::kLit:
      return zq_const(IntPoly::constant(e.lit));
    case PolyExpr::Kind::kAdd:
      return zq_add(zq_eval_expr(e.kids[0]), zq_eval_expr(e.kids[1]), +1);
    case PolyExpr::Kind::kSub:
      return zq_add(zq_eval_expr(e.kids[0]), zq_eval_expr(e.kids[1]), -1);
    case PolyExpr::Kind::kMul:
      return zq_mul(zq_eval_expr(e.kids[0]), zq_eval_expr(e.kids[1]));
    case PolyExpr::Kind::kPow: {
      ZQPoly base = zq_eval_expr(e.kids[0]);
      ZQPoly acc = zq_const(IntPoly::constant(1));
      for (unsigned i = 0; i < e.exp; ++i) acc = zq_mul(acc, base);
      return acc;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

bool ZQPoly::monic_in_z() const {
  return !zc.empty() && zc.back() == IntPoly::constant(1);
}

ZQPoly to_zq_poly(const PolyExpr& e) { return zq_eval_expr(e); }

IntPoly zq_instantiate(const ZQPoly& f, const BigInt& q) {
  std::vector<BigInt> c;
  c.reserve(f.zc.size());
  for (const IntPoly& qc : f.zc) c.push_back(qc.eval(q));
  return IntPoly(std::move(c));
}

Mod35Result mod35_no_integer_root(const ZQPoly& f) {
  if (!f.monic_in_z()) throw std::invalid_argument("mod35: f must be monic in z");
  Mod35Result res;
  res.status = Mod35Status::kProvenNoRoot;
  const std::pair<unsigned, unsigned> combos[] = {{3, 1}, {3, 2}, {5, 1}, {5, 4}};
  for (auto [m, qr] : combos) {
    Mod35Combo combo;
    combo.modulus = m;
    combo.q_residue = qr;
    std::vector<unsigned> cm(f.zc.size());
    for (std::size_t i = 0; i < f.zc.size(); ++i) {
      BigInt v = f.zc[i].eval(BigInt(qr));
      cm[i] = static_cast<unsigned>(mpz_fdiv_ui(v.get_mpz_t(), m));
    }
    for (unsigned z = 0; z < m; ++z) {
      unsigned acc = 0;
      for (std::size_t i = f.zc.size(); i-- > 0;) acc = (acc * z + cm[i]) % m;
      if (acc == 0) combo.roots.push_back(z);
    }
    if (!combo.roots.empty()) res.status = Mod35Status::kInconclusive;
    res.combos.push_back(std::move(combo));
  }
  return res;
}

bool eisenstein_irreducible(const IntPoly& f, const BigInt& p) {
  if (f.degree() < 1) throw std::invalid_argument("eisenstein: f must be nonconstant");
  if (f.coeff(f.degree()) % p == 0) return false;
  for (int i = 0; i < f.degree(); ++i)
    if (f.coeff(i) % p != 0) return false;
  return f.coeff(0) % (p * p) != 0;
}

std::vector<InventoryEntry> load_inventory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open inventory file: " + path);
  std::vector<InventoryEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '|')) fields.push_back(field);
    if (fields.size() != 5)
      throw std::runtime_error("inventory line " + std::to_string(lineno) +
                               ": expected 5 '|'-separated fields");
    InventoryEntry e;
    e.label = fields[0];
    e.method = fields[1];
    e.expected = fields[3];
    e.expr_text = fields[4];
    e.poly = to_zq_poly(parse_poly_expr(e.expr_text));
    if (e.method == "mod35") {
      if (fields[2] != "-")
        throw std::runtime_error("inventory line " + std::to_string(lineno) +
                                 ": mod35 param must be '-'");
      if (e.expected != "proven" && e.expected != "inconclusive")
        throw std::runtime_error("inventory line " + std::to_string(lineno) +
                                 ": bad expected value '" + e.expected + "'");
      if (!e.poly.monic_in_z())
        throw std::runtime_error("inventory line " + std::to_string(lineno) +
                                 ": mod35 polynomial must be monic in z");
    } else if (e.method == "eisenstein") {
      std::stringstream ps(fields[2]);
      std::string pstr, qstr;
      if (!(ps >> pstr >> qstr))
        throw std::runtime_error("inventory line " + std::to_string(lineno) +
                                 ": eisenstein param must be '<prime> <qsub>'");
      e.eis_prime = BigInt(pstr);
      e.eis_qsub = BigInt(qstr);
      if (e.expected != "irreducible")
        throw std::runtime_error("inventory line " + std::to_string(lineno) +
                                 ": bad expected value '" + e.expected + "'");
    } else {
      throw std::runtime_error("inventory line " + std::to_string(lineno) +
                               ": unknown method '" + e.method + "'");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string default_inventory_path() {
  return std::string(SSW_DATA_DIR) + "/eliminated_polynomials.txt";
}

std::vector<long> integer_roots_in_range(const IntPoly& f, long bound) {
  std::vector<long> roots;
  if (f.is_zero()) throw std::invalid_argument("integer_roots_in_range: zero polynomial");
  const int deg = f.degree();

  // 64-bit wraparound images of the coefficients (value mod 2^64).
  auto wrap = [](const BigInt& c) {
    BigInt r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), c.get_mpz_t(), 64);
    return static_cast<std::uint64_t>(r.get_ui());
  };
  std::vector<std::uint64_t> w(deg + 1);
  for (int i = 0; i <= deg; ++i) w[i] = wrap(f.coeff(i));

  auto confirm = [&](long z) {
    if (f.eval(BigInt(z)) == 0) roots.push_back(z);
  };

  bool even_poly = true;
  for (int i = 1; i <= deg; i += 2)
    if (f.coeff(i) != 0) even_poly = false;

  if (even_poly) {
    // f(z) = g(z²): sieve over w = z² for z in [0, bound].
    std::vector<std::uint64_t> g;
    for (int i = 0; i <= deg; i += 2) g.push_back(w[i]);
    for (long z = 0; z <= bound; ++z) {
      const std::uint64_t zz = static_cast<std::uint64_t>(z) * static_cast<std::uint64_t>(z);
      std::uint64_t acc = 0;
      for (std::size_t i = g.size(); i-- > 0;) acc = acc * zz + g[i];
      if (acc == 0) {
        confirm(z);
        if (z != 0) confirm(-z);
      }
    }
  } else {
    for (long z = -bound; z <= bound; ++z) {
      const std::uint64_t zu = static_cast<std::uint64_t>(z);
      std::uint64_t acc = 0;
      for (std::size_t i = w.size(); i-- > 0;) acc = acc * zu + w[i];
      if (acc == 0) confirm(z);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace ssw
