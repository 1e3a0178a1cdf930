#include "ssw/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssw/curves.hpp"
#include "ssw/cyclocheck.hpp"
#include "ssw/enumerate.hpp"
#include "ssw/expr.hpp"
#include "ssw/families.hpp"
#include "ssw/noroot.hpp"
#include "ssw/serialize.hpp"
#include "ssw/weil.hpp"

namespace ssw {

namespace {

// Bad input that never reached the library (unparseable values): exit 64.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " from '" + s + "'");
  }
}

std::vector<std::uint64_t> parse_u64_list(const std::string& s,
                                          const std::string& what) {
  std::vector<std::uint64_t> out;
  for (const std::string& item : split(s, ','))
    out.push_back(parse_u64(item, what));
  if (out.empty()) throw UsageError("empty list for " + what);
  return out;
}

IntPoly parse_poly_flag(const std::string& s) {
  try {
    return IntPoly::parse_coeff_string(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("cannot parse coefficient list: ") + e.what());
  }
}

nlohmann::json q_json(const PrimePower& q) {
  return {{"p", q.p()}, {"n", q.n()}};
}

// ---- enumerate -------------------------------------------------------------

int run_enumerate(std::uint64_t p, unsigned n, unsigned g,
                  const std::string& format, std::ostream& out) {
  PrimePower q(p, n);
  if (g < 1) throw std::invalid_argument("dimension g must be >= 1");
  EnumerationResult res = enumerate_simple_ss(q, g);
  if (format == "json")
    out << enumeration_to_json(res).dump(2) << "\n";
  else if (format == "csv")
    out << enumeration_to_csv(res);
  else
    out << enumeration_to_md(res);
  return kExitOk;
}

// ---- dim -------------------------------------------------------------------

void print_class_text(const IsogenyClass& c, std::ostream& out) {
  out << "g = " << c.g << "\n";
  out << "h = " << c.h.to_coeff_string() << "  (degree " << c.h.degree()
      << ")\n";
  out << "e = " << c.e << "\n";
  out << "P = " << c.P.to_coeff_string() << "\n";
  out << "order_L = " << c.L << "\n";
  out << "local: d = " << c.local.d << ", r = " << c.local.r << "\n";
}

int run_dim(std::uint64_t p, unsigned n, const std::string& poly,
            const std::string& format, std::ostream& out) {
  PrimePower q(p, n);
  IntPoly P = parse_poly_flag(poly);
  if (P.is_zero() || !P.is_monic() || P.degree() % 2 != 0 || P.degree() == 0)
    throw std::invalid_argument(
        "polynomial must be monic of positive even degree");
  if (!is_weil_palindromic(P, q))
    throw std::invalid_argument("polynomial is not q-palindromic");
  if (!h_cyclotomic_check(P, q))
    throw std::invalid_argument(
        "not supersingular: H(t) does not factor into cyclotomics");
  const unsigned G = static_cast<unsigned>(P.degree()) / 2;

  // Simple case: P appears in the dimension-G enumeration.
  std::vector<IsogenyClass> pool;
  for (unsigned g2 = 1; g2 <= G; ++g2) {
    EnumerationResult res = enumerate_simple_ss(q, g2);
    for (IsogenyClass& c : res.classes) {
      if (g2 == G && c.P == P) {
        if (format == "json") {
          nlohmann::json j;
          j["schema"] = 1;
          j["q"] = q_json(q);
          j["supersingular"] = true;
          j["simple"] = true;
          j["g"] = c.g;
          j["class"] = class_to_json(c);
          out << j.dump(2) << "\n";
        } else {
          out << "supersingular: yes\nsimple: yes\n";
          print_class_text(c, out);
        }
        return kExitOk;
      }
      pool.push_back(std::move(c));
    }
  }

  // Not simple: resolve P as a product of simple class polynomials P_i.
  std::sort(pool.begin(), pool.end(), [](const IsogenyClass& a,
                                         const IsogenyClass& b) {
    return a.P.degree() > b.P.degree();
  });
  std::vector<std::size_t> parts;
  std::function<bool(const IntPoly&, std::size_t)> resolve =
      [&](const IntPoly& rem, std::size_t idx) -> bool {
    if (rem == IntPoly::constant(1)) return true;
    for (std::size_t i = idx; i < pool.size(); ++i) {
      if (pool[i].P.degree() > rem.degree()) continue;
      auto quot = IntPoly::divide_exact(rem, pool[i].P);
      if (!quot) continue;
      parts.push_back(i);
      if (resolve(*quot, i)) return true;
      parts.pop_back();
    }
    return false;
  };
  if (!resolve(P, 0))
    throw std::invalid_argument(
        "supersingular-shaped but not a product of simple supersingular "
        "class polynomials: not a Frobenius characteristic polynomial");
  std::map<std::size_t, unsigned> mult;
  for (std::size_t i : parts) ++mult[i];
  if (format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["q"] = q_json(q);
    j["supersingular"] = true;
    j["simple"] = false;
    j["g"] = G;
    j["factors"] = nlohmann::json::array();
    for (auto [i, m] : mult) {
      nlohmann::json f;
      f["count"] = m;
      f["g"] = pool[i].g;
      f["class"] = class_to_json(pool[i]);
      j["factors"].push_back(std::move(f));
    }
    out << j.dump(2) << "\n";
  } else {
    out << "supersingular: yes\nsimple: no\n";
    out << "g = " << G << "\n";
    out << "isogenous to a product of simple classes:\n";
    for (auto [i, m] : mult) {
      out << "  count = " << m << ", g = " << pool[i].g
          << ", P_i = " << pool[i].P.to_coeff_string()
          << "  (h = " << pool[i].h.to_coeff_string() << ", e = " << pool[i].e
          << ")\n";
    }
  }
  return kExitNegative;
}

// ---- minpoly ---------------------------------------------------------------

int run_minpoly(std::uint64_t p, unsigned n, unsigned L, unsigned k,
                const std::string& format, std::ostream& out) {
  PrimePower q(p, n);
  if (L == 1 && k == 1) k = 0;  // zeta_1^1 = zeta_1^0; accept the default
  WeilNumber w = make_weil_number(q, L, k);
  std::vector<std::uint32_t> H = stabilizer_by_character(q, L, k);
  IntPoly h = min_poly(w, H);
  IsogenyClass c = dimension(w, H, h);
  if (format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["q"] = q_json(q);
    j["order_L"] = L;
    j["exp_k"] = k;
    j["conductor_M"] = w.M;
    j["g"] = c.g;
    j["class"] = class_to_json(c);
    out << j.dump(2) << "\n";
  } else {
    out << "pi = sqrt(q) * zeta_" << L << "^" << k << " at conductor M = "
        << w.M << "\n";
    print_class_text(c, out);
  }
  return kExitOk;
}

// ---- verify-paper ----------------------------------------------------------

int run_verify(const std::string& g_list, const std::string& p_list,
               const std::string& n_list, const std::string& format,
               std::ostream& out) {
  std::vector<std::uint64_t> gs = parse_u64_list(g_list, "--g");
  std::vector<std::uint64_t> ps = parse_u64_list(p_list, "--primes");
  std::vector<std::uint64_t> ns = parse_u64_list(n_list, "--n");
  bool all_clean = true;
  nlohmann::json ja = nlohmann::json::array();
  for (std::uint64_t g : gs) {
    if (g < 1 || g > 7)
      throw std::invalid_argument("tables exist for dimensions 1..7 only");
    for (std::uint64_t p : ps) {
      for (std::uint64_t n : ns) {
        PrimePower q(p, static_cast<unsigned>(n));
        DiscrepancyReport rep = verify_family_tables(q, static_cast<unsigned>(g));
        all_clean = all_clean && rep.clean();
        if (format == "json") {
          nlohmann::json j;
          j["q"] = q_json(q);
          j["g"] = g;
          j["matched"] = rep.matched;
          j["missing_from_enumeration"] = nlohmann::json::array();
          for (const IntPoly& f : rep.missing)
            j["missing_from_enumeration"].push_back(poly_to_json(f));
          j["missing_from_tables"] = nlohmann::json::array();
          for (const IntPoly& f : rep.unexpected)
            j["missing_from_tables"].push_back(poly_to_json(f));
          ja.push_back(std::move(j));
        } else {
          out << "q = " << p << "^" << n << ", g = " << g << ": matched "
              << rep.matched;
          if (rep.clean()) {
            out << ", clean\n";
          } else {
            out << ", MISMATCH\n";
            for (const IntPoly& f : rep.missing)
              out << "  in tables, not enumerated: " << f.to_coeff_string()
                  << "\n";
            for (const IntPoly& f : rep.unexpected)
              out << "  enumerated, not in tables: " << f.to_coeff_string()
                  << "\n";
          }
        }
      }
    }
  }
  if (format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["reports"] = std::move(ja);
    j["all_matched"] = all_clean;
    out << j.dump(2) << "\n";
  }
  return all_clean ? kExitOk : kExitNegative;
}

// ---- modtest ---------------------------------------------------------------

int run_modtest(const std::string& expr, const std::string& format,
                std::ostream& out) {
  PolyExpr ast = parse_poly_expr(expr);
  ZQPoly f = to_zq_poly(ast);
  Mod35Result res = mod35_no_integer_root(f);
  const bool proven = res.status == Mod35Status::kProvenNoRoot;
  if (format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["poly"] = expr;
    j["status"] = proven ? "ProvenNoRoot" : "Inconclusive";
    j["combos"] = nlohmann::json::array();
    for (const Mod35Combo& c : res.combos) {
      nlohmann::json cj;
      cj["modulus"] = c.modulus;
      cj["q_residue"] = c.q_residue;
      cj["roots"] = c.roots;
      j["combos"].push_back(std::move(cj));
    }
    out << j.dump(2) << "\n";
  } else {
    out << (proven ? "ProvenNoRoot" : "Inconclusive") << "\n";
    for (const Mod35Combo& c : res.combos) {
      out << "  f mod " << c.modulus << " with q = " << c.q_residue << ": ";
      if (c.roots.empty()) {
        out << "no roots\n";
      } else {
        out << "roots";
        for (unsigned r : c.roots) out << " " << r;
        out << "\n";
      }
    }
  }
  return proven ? kExitOk : kExitNegative;
}

// ---- count-curve -----------------------------------------------------------

// Evaluates a curve expression over F (variables: x, a = class of t) to the
// ascending coefficient vector of f(x).
std::vector<std::uint32_t> eval_curve_expr(const PolyExpr& e,
                                           const BinaryField& F,
                                           std::uint32_t a_elem) {
  using Coeffs = std::vector<std::uint32_t>;
  auto trim = [](Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
  };
  std::function<Coeffs(const PolyExpr&)> ev =
      [&](const PolyExpr& node) -> Coeffs {
    switch (node.kind) {
      case PolyExpr::Kind::kVar:
        if (node.var == 'x') return {0u, 1u};
        if (node.var == 'a') return {a_elem};
        throw std::invalid_argument(std::string("variable '") + node.var +
                                    "' not allowed in curve expressions");
      case PolyExpr::Kind::kLit:
        return {static_cast<std::uint32_t>(mpz_fdiv_ui(node.lit.get_mpz_t(), 2))};
      case PolyExpr::Kind::kAdd:
      case PolyExpr::Kind::kSub: {
        Coeffs a = ev(node.kids[0]), b = ev(node.kids[1]);
        if (b.size() > a.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
        trim(a);
        return a;
      }
      case PolyExpr::Kind::kMul: {
        Coeffs a = ev(node.kids[0]), b = ev(node.kids[1]);
        if (a.empty() || b.empty()) return {};
        Coeffs c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
          for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] ^= F.mul(a[i], b[j]);
        trim(c);
        return c;
      }
      case PolyExpr::Kind::kPow: {
        Coeffs base = ev(node.kids[0]);
        Coeffs acc{1u};
        for (unsigned i = 0; i < node.exp; ++i) {
          if (base.empty()) return {};
          Coeffs c(acc.size() + base.size() - 1, 0);
          for (std::size_t x = 0; x < acc.size(); ++x)
            for (std::size_t y = 0; y < base.size(); ++y)
              c[x + y] ^= F.mul(acc[x], base[y]);
          trim(c);
          acc = std::move(c);
        }
        return acc;
      }
    }
    throw std::logic_error("unreachable expression kind");
  };
  return ev(e);
}

std::uint32_t parse_modulus_bits(const std::string& bits, unsigned w) {
  if (bits.empty() || bits.size() != w + 1)
    throw UsageError("--modulus must have exactly " + std::to_string(w + 1) +
                     " bits for degree " + std::to_string(w));
  std::uint32_t m = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw UsageError("--modulus must be a 0/1 bit string (MSB first)");
    m = (m << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return m;
}

int run_count_curve(std::uint64_t p, unsigned w, const std::string& f_expr,
                    const std::string& modulus_bits, unsigned depth,
                    unsigned threads, const std::string& format,
                    std::ostream& out) {
  if (p != 2)
    throw std::invalid_argument("count-curve supports characteristic 2 only");
  if (threads == 0) {
    threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
  }
  std::uint32_t modulus = parse_modulus_bits(modulus_bits, w);
  BinaryField F(w, modulus);
  const std::uint32_t a_elem = (w == 1) ? (modulus ^ 2u) : 2u;
  std::vector<std::uint32_t> fc = eval_curve_expr(parse_poly_expr(f_expr), F, a_elem);
  CurveAS curve(F, std::move(fc));
  const unsigned g = curve.genus();
  if (depth == 0) depth = g;

  std::vector<BigInt> counts;
  for (unsigned i = 1; i <= depth; ++i)
    counts.push_back(BigInt(count_points(curve, i, threads)));

  IntPoly P;
  bool have_P = depth >= g;
  if (have_P) {
    std::vector<BigInt> first(counts.begin(), counts.begin() + g);
    P = charpoly_from_counts(F.size(), g, first);
    std::vector<BigInt> back = roundtrip_counts(P, F.size(), depth);
    for (unsigned i = 0; i < depth; ++i)
      if (back[i] != counts[i])
        throw std::logic_error(
            "charpoly does not reproduce the deeper point counts");
  }

  if (format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["q"] = {{"p", 2}, {"n", w}};
    j["modulus"] = modulus_bits_string(modulus, w);
    j["curve"] = f_expr;
    j["genus"] = g;
    j["counts"] = nlohmann::json::array();
    for (const BigInt& N : counts) j["counts"].push_back(N.get_str());
    if (have_P) j["P"] = poly_to_json(P);
    out << j.dump(2) << "\n";
  } else {
    out << "field: F_2^" << w << ", modulus "
        << modulus_bits_string(modulus, w) << "\n";
    out << "curve: y^2 + y = " << f_expr << "\n";
    out << "genus: " << g << "\n";
    for (unsigned i = 0; i < depth; ++i)
      out << "N_" << (i + 1) << " = " << counts[i].get_str() << "\n";
    if (have_P) out << "P = " << P.to_coeff_string() << "\n";
  }
  return kExitOk;
}

void emit_error(std::ostream& out, std::ostream& err, const std::string& format,
                int code, const std::string& message) {
  err << "error: " << message << "\n";
  if (format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["error"] = {{"code", code}, {"message", message}};
    out << j.dump(2) << "\n";
  }
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "ssweil: simple supersingular abelian varieties over F_q (q = p^n, n "
      "odd) - enumeration, Honda-Tate class data, verification tables, "
      "elimination tests, and Artin-Schreier point counts"};
  app.require_subcommand(1);

  // enumerate
  std::uint64_t en_p = 0;
  unsigned en_n = 1, en_g = 0;
  std::string en_format = "json";
  CLI::App* en = app.add_subcommand(
      "enumerate", "List all simple supersingular classes over F_q in dimension g");
  en->add_option("--p", en_p, "characteristic p (prime)")->required();
  en->add_option("--n", en_n, "exponent n (odd), q = p^n");
  en->add_option("--g", en_g, "dimension g >= 1")->required();
  en->add_option("--format", en_format, "json|csv|md (default json)")
      ->check(CLI::IsMember({"json", "csv", "md"}));

  // dim
  std::uint64_t dm_p = 0;
  unsigned dm_n = 1;
  std::string dm_poly, dm_format = "text";
  CLI::App* dm = app.add_subcommand(
      "dim", "Resolve a q-Weil polynomial into simple supersingular classes");
  dm->add_option("--p", dm_p, "characteristic p (prime)")->required();
  dm->add_option("--n", dm_n, "exponent n (odd), q = p^n");
  dm->add_option("--poly", dm_poly,
                 "ascending coefficients c0,c1,...,1 of P(X)")
      ->required();
  dm->add_option("--format", dm_format, "text|json (default text)")
      ->check(CLI::IsMember({"text", "json"}));

  // minpoly
  std::uint64_t mp_p = 0;
  unsigned mp_n = 1, mp_L = 0, mp_k = 1;
  std::string mp_format = "text";
  CLI::App* mp = app.add_subcommand(
      "minpoly", "Class data of pi = sqrt(q) * zeta_L^k");
  mp->add_option("--p", mp_p, "characteristic p (prime)")->required();
  mp->add_option("--n", mp_n, "exponent n (odd), q = p^n");
  mp->add_option("--order", mp_L, "order L of the root of unity")->required();
  mp->add_option("--exp", mp_k, "exponent k with gcd(k, L) = 1");
  mp->add_option("--format", mp_format, "text|json (default text)")
      ->check(CLI::IsMember({"text", "json"}));

  // verify-paper
  std::string vp_g, vp_primes, vp_n = "1", vp_format = "text";
  CLI::App* vp = app.add_subcommand(
      "verify-paper",
      "Diff the built-in dimension tables against a fresh enumeration");
  vp->add_option("--g", vp_g, "comma-separated dimensions, e.g. 1,2,3")
      ->required();
  vp->add_option("--primes", vp_primes, "comma-separated primes")->required();
  vp->add_option("--n", vp_n, "comma-separated odd exponents (default 1)");
  vp->add_option("--format", vp_format, "text|json (default text)")
      ->check(CLI::IsMember({"text", "json"}));

  // modtest
  std::string mt_poly, mt_format = "text";
  CLI::App* mt = app.add_subcommand(
      "modtest", "Mod-3/mod-5 no-integer-root test for f(z, q)");
  mt->add_option("--poly", mt_poly, "expression in z and q")->required();
  mt->add_option("--format", mt_format, "text|json (default text)")
      ->check(CLI::IsMember({"text", "json"}));

  // count-curve
  std::uint64_t cc_p = 0;
  unsigned cc_n = 0, cc_depth = 0, cc_threads = 0;
  std::string cc_f, cc_modulus, cc_format = "text";
  CLI::App* cc = app.add_subcommand(
      "count-curve",
      "Count points on y^2 + y = f(x) over F_2^n and recover charpoly");
  cc->add_option("--p", cc_p, "characteristic (must be 2)")->required();
  cc->add_option("--n", cc_n, "field degree w (elements 2^w)")->required();
  cc->add_option("--f", cc_f, "f(x) expression; 'a' is the class of t")
      ->required();
  cc->add_option("--modulus", cc_modulus,
                 "field modulus bits, MSB first (100101 = t^5+t^2+1)")
      ->required();
  cc->add_option("--depth", cc_depth, "count N_1..N_depth (default: genus)");
  cc->add_option("--threads", cc_threads, "worker threads (default: all cores)");
  cc->add_option("--format", cc_format, "text|json (default text)")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string* fmt = &en_format;
  std::ostringstream buf;
  int code = kExitInternal;
  try {
    if (en->parsed()) {
      fmt = &en_format;
      code = run_enumerate(en_p, en_n, en_g, en_format, buf);
    } else if (dm->parsed()) {
      fmt = &dm_format;
      code = run_dim(dm_p, dm_n, dm_poly, dm_format, buf);
    } else if (mp->parsed()) {
      fmt = &mp_format;
      code = run_minpoly(mp_p, mp_n, mp_L, mp_k, mp_format, buf);
    } else if (vp->parsed()) {
      fmt = &vp_format;
      code = run_verify(vp_g, vp_primes, vp_n, vp_format, buf);
    } else if (mt->parsed()) {
      fmt = &mt_format;
      code = run_modtest(mt_poly, mt_format, buf);
    } else if (cc->parsed()) {
      fmt = &cc_format;
      code = run_count_curve(cc_p, cc_n, cc_f, cc_modulus, cc_depth,
                             cc_threads, cc_format, buf);
    } else {
      err << "error: no subcommand selected\n";
      return kExitUsage;
    }
  } catch (const ParseError& e) {
    emit_error(out, err, *fmt, kExitUsage, e.what());
    return kExitUsage;
  } catch (const UsageError& e) {
    emit_error(out, err, *fmt, kExitUsage, e.what());
    return kExitUsage;
  } catch (const CapExceeded& e) {
    emit_error(out, err, *fmt, kExitRefusal, e.what());
    return kExitRefusal;
  } catch (const std::invalid_argument& e) {
    emit_error(out, err, *fmt, kExitDomain, e.what());
    return kExitDomain;
  } catch (const std::logic_error& e) {
    emit_error(out, err, *fmt, kExitInternal, e.what());
    return kExitInternal;
  } catch (const std::exception& e) {
    emit_error(out, err, *fmt, kExitDomain, e.what());
    return kExitDomain;
  }

  out << buf.str();
  return code;
}

}  // namespace ssw
