#include "ssw/hondatate.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace ssw {

const std::vector<std::uint32_t>& decomposition_subgroup(unsigned M,
                                                         std::uint64_t p) {
  static std::map<std::pair<unsigned, std::uint64_t>, std::vector<std::uint32_t>>
      cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(M, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  // M' = prime-to-p part of M.
  unsigned Mp = M;
  while (Mp % p == 0) Mp = static_cast<unsigned>(Mp / p);

  // <p mod M'> as a membership table.
  std::vector<char> in_cyc(Mp, 0);
  std::uint64_t x = 1 % Mp;
  do {
    in_cyc[x] = 1;
    x = x * (p % Mp) % Mp;
  } while (!in_cyc[x]);

  std::vector<std::uint32_t> D;
  for (std::uint32_t a : units_mod(M)) {
    if (Mp == 1 || in_cyc[a % Mp]) D.push_back(a);
  }
  return cache.emplace(std::move(key), std::move(D)).first->second;
}

LocalSplitting local_degree(unsigned M, std::uint64_t p,
                            const std::vector<std::uint32_t>& H) {
  const std::vector<std::uint32_t>& D = decomposition_subgroup(M, p);
  const std::vector<std::uint32_t> units = units_mod(M);

  std::vector<char> inH(M, 0);
  for (std::uint32_t h : H) inH[h] = 1;

  unsigned meet = 0;  // |D cap H|
  for (std::uint32_t a : D)
    if (inH[a]) ++meet;
  if (meet == 0 || D.size() % meet != 0)
    throw std::logic_error("local_degree: |D cap H| does not divide |D|");

  // |D*H| by direct product marking (both factors are subgroups).
  std::vector<char> inDH(M, 0);
  std::size_t dh = 0;
  for (std::uint32_t a : D) {
    for (std::uint32_t h : H) {
      const std::uint32_t v = static_cast<std::uint64_t>(a) * h % M;
      if (!inDH[v]) {
        inDH[v] = 1;
        ++dh;
      }
    }
  }
  if (dh == 0 || units.size() % dh != 0)
    throw std::logic_error("local_degree: |D*H| does not divide |G|");

  LocalSplitting out;
  out.d = static_cast<unsigned>(D.size() / meet);
  out.r = static_cast<unsigned>(units.size() / dh);
  return out;
}

InvariantInfo invariant_and_e(unsigned d, unsigned L) {
  InvariantInfo info;
  info.real_place = (L <= 2);
  // The invariant at each place over p is d/2 mod 1: order 2 iff d is odd.
  info.inv_order = (d % 2 == 1) ? 2 : 1;
  info.e = (info.inv_order == 2 || info.real_place) ? 2 : 1;
  return info;
}

IsogenyClass dimension(const WeilNumber& w, const std::vector<std::uint32_t>& H,
                       const IntPoly& h) {
  IsogenyClass cls;
  cls.h = h;
  cls.L = w.L;
  cls.k = w.k;
  cls.M = w.M;
  cls.local = local_degree(w.M, w.q.p(), H);

  const unsigned degh = static_cast<unsigned>(h.degree());
  if (cls.local.d * cls.local.r != degh)
    throw std::logic_error("dimension: d * r != deg h");

  const InvariantInfo info = invariant_and_e(cls.local.d, w.L);
  cls.real_place = info.real_place;
  cls.inv_order = info.inv_order;
  cls.e = info.e;
  if ((cls.e * degh) % 2 != 0)
    throw std::logic_error("dimension: e * deg h is odd");
  cls.g = cls.e * degh / 2;
  cls.P = h.pow(cls.e);
  if (!is_weil_palindromic(cls.P, w.q))
    throw std::logic_error("dimension: P fails q-palindromy");
  return cls;
}

}  // namespace ssw
