#include "epalg/structure_constants.hpp"

#include <algorithm>

namespace epalg {

std::optional<Gen> gen_from_name(const std::string& name) {
  for (int i = 0; i < kNumGen; ++i)
    if (name == kGenNames[static_cast<std::size_t>(i)]) return gen_at(i);
  return std::nullopt;
}

void StructureConstants::add(Gen a, Gen b, Gen c, Rational f) {
  if (a == b || f == 0) return;
  int ia = index_of(a), ib = index_of(b);
  Rational v = (ia < ib) ? f : -f;
  auto key = std::make_pair(std::min(ia, ib), std::max(ia, ib));
  auto& terms = table_[key];
  for (auto& t : terms) {
    if (t.c == c) {
      t.f += v;
      if (t.f == 0) {
        terms.erase(std::remove_if(terms.begin(), terms.end(),
                                   [&](const BracketTerm& u) { return u.f == 0; }),
                    terms.end());
        if (terms.empty()) table_.erase(key);
      }
      return;
    }
  }
  terms.push_back({c, v});
  std::sort(terms.begin(), terms.end(),
            [](const BracketTerm& x, const BracketTerm& y) { return index_of(x.c) < index_of(y.c); });
}

std::vector<BracketTerm> StructureConstants::bracket(Gen a, Gen b) const {
  if (a == b) return {};
  int ia = index_of(a), ib = index_of(b);
  auto it = table_.find({std::min(ia, ib), std::max(ia, ib)});
  if (it == table_.end()) return {};
  std::vector<BracketTerm> out = it->second;
  if (ia > ib)
    for (auto& t : out) t.f = -t.f;
  return out;
}

Rational StructureConstants::coefficient(Gen a, Gen b, Gen c) const {
  for (const auto& t : bracket(a, b))
    if (t.c == c) return t.f;
  return Rational(0);
}

void StructureConstants::erase_bracket(Gen a, Gen b) {
  int ia = index_of(a), ib = index_of(b);
  table_.erase({std::min(ia, ib), std::max(ia, ib)});
}

StructureConstants build_algebra() {
  StructureConstants sc;
  const Rational one(1);
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      for (int m = 1; m <= 3; ++m) {
        int e = epsilon(j, k, m);
        if (e == 0) continue;
        if (j < k) {
          sc.add(rotation(j), rotation(k), rotation(m), Rational(e));   // [Jj,Jk] = i e Jm
          sc.add(boost(j), boost(k), rotation(m), Rational(-e));        // [Kj,Kk] = -i e Jm
          sc.add(gamma_mu(j), gamma_mu(k), rotation(m), Rational(-e));  // [Gj,Gk] = -i e Jm
        }
        sc.add(rotation(j), boost(k), boost(m), Rational(e));           // [Jj,Kk] = i e Km
        sc.add(rotation(j), momentum_mu(k), momentum_mu(m), Rational(e));  // [Jj,Pk] = i e Pm
        sc.add(gamma_mu(j), rotation(k), gamma_mu(m), Rational(e));     // [Gj,Jk] = i e Gm
      }
    }
  }
  for (int k = 1; k <= 3; ++k) {
    sc.add(Gen::Gam0, gamma_mu(k), boost(k), one);        // [G0,Gk] = i Kk
    sc.add(Gen::Gam0, boost(k), gamma_mu(k), -one);       // [G0,Kk] = -i Gk
    sc.add(gamma_mu(k), boost(k), Gen::Gam0, -one);       // [Gj,Kk] = -i d_jk G0
    sc.add(boost(k), Gen::P0, momentum_mu(k), -one);      // [Kj,P0] = -i Pj
    sc.add(boost(k), momentum_mu(k), Gen::P0, -one);      // [Kj,Pk] = -i d_jk P0
  }
  for (int mu = 0; mu <= 3; ++mu) {
    sc.add(gamma_mu(mu), momentum_mu(mu), Gen::G, one);   // [G^mu,P_nu] = i d^mu_nu G
    sc.add(gamma_mu(mu), Gen::G, momentum_mu(mu), Rational(kEta[static_cast<std::size_t>(mu)]));
  }
  return sc;
}

StructureConstants build_su2() {
  StructureConstants sc;
  for (int j = 1; j <= 3; ++j)
    for (int k = j + 1; k <= 3; ++k)
      for (int m = 1; m <= 3; ++m) {
        int e = epsilon(j, k, m);
        if (e != 0) sc.add(rotation(j), rotation(k), rotation(m), Rational(e));
      }
  return sc;
}

}  // namespace epalg
