// Characters as weight multisets, exterior-power layers of the little adjoint
// module, and multiplicities of irreducibles via the Weyl alternating sum.
#ifndef EXMULT_CHARACTERS_HPP
#define EXMULT_CHARACTERS_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "exmult/rootsys.hpp"

namespace exmult {

using WeightPoly = std::unordered_map<Weight, Cint, WeightHash>;

// Exterior-power layers use packed keys: four 16-bit lanes, offset so that
// the packed order equals lexicographic order on coordinates. Entries are
// sorted by key. Coefficients stay below 2^63 (checked).
using PackedPoly = std::vector<std::pair<std::uint64_t, std::int64_t>>;

constexpr int kPackRank = 4;

inline std::uint64_t pack_weight(const Weight& w) {
  std::uint64_t k = 0;
  for (int i = 0; i < kPackRank; ++i)
    k = (k << 16) | static_cast<std::uint16_t>(w[i] + 32768);
  return k;
}

inline Weight unpack_weight(std::uint64_t k) {
  Weight w{};
  for (int i = kPackRank - 1; i >= 0; --i) {
    w[i] = static_cast<std::int16_t>(static_cast<int>(k & 0xffff) - 32768);
    k >>= 16;
  }
  return w;
}

inline long long term_cap() {
  const char* env = std::getenv("EXMULT_TERM_CAP");
  if (env != nullptr) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 100000000;  // default cap on stored (weight, degree) entries
}

// chi of V_{theta_s}: r_s at weight zero plus every short root with
// multiplicity one, on fundamental-weight coordinates.
inline WeightPoly little_adjoint_character(const RootSystem& rs) {
  WeightPoly chi;
  chi[wzero()] = Cint(rs.num_short_simple());
  for (const Root& rt : rs.positive_roots()) {
    if (rt.is_long) continue;
    chi[rt.omega] = Cint(1);
    chi[wneg(rt.omega)] = Cint(1);
  }
  return chi;
}

namespace detail {

inline PackedPoly merge_shifted(const PackedPoly& base, const PackedPoly& low,
                                const Weight& mu) {
  PackedPoly out;
  out.reserve(base.size() + low.size());
  std::size_t i = 0, j = 0;
  while (i < base.size() || j < low.size()) {
    std::uint64_t kj = 0;
    if (j < low.size()) kj = pack_weight(wadd(unpack_weight(low[j].first), mu));
    if (j >= low.size() || (i < base.size() && base[i].first < kj)) {
      out.push_back(base[i]);
      ++i;
    } else if (i >= base.size() || kj < base[i].first) {
      out.emplace_back(kj, low[j].second);
      ++j;
    } else {
      std::int64_t c;
      if (__builtin_add_overflow(base[i].second, low[j].second, &c)) {
        std::fprintf(stderr, "exmult: 64-bit overflow in exterior layer\n");
        std::abort();
      }
      out.emplace_back(base[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

// Layers of the exterior algebra of V_{theta_s}: element d is the character
// of the d-th exterior power. Keys are packed weights (rank <= 4 only).
inline std::vector<PackedPoly> exterior_powers(const RootSystem& rs) {
  if (rs.rank() > kPackRank)
    throw ExpansionTooLarge("exterior powers limited to rank <= " +
                            std::to_string(kPackRank) + ", got " + rs.name());
  std::vector<Weight> vecs(static_cast<std::size_t>(rs.num_short_simple()), wzero());
  for (const Root& rt : rs.positive_roots()) {
    if (rt.is_long) continue;
    vecs.push_back(rt.omega);
    vecs.push_back(wneg(rt.omega));
  }
  const int dim = static_cast<int>(vecs.size());
  const long long cap = term_cap();
  std::vector<PackedPoly> layers(static_cast<std::size_t>(dim) + 1);
  layers[0].emplace_back(pack_weight(wzero()), 1);
  long long stored = 1;
  int used = 0;
  for (const Weight& mu : vecs) {
    ++used;
    for (int d = std::min(used, dim); d >= 1; --d) {
      auto& dst = layers[static_cast<std::size_t>(d)];
      stored -= static_cast<long long>(dst.size());
      dst = detail::merge_shifted(dst, layers[static_cast<std::size_t>(d) - 1], mu);
      stored += static_cast<long long>(dst.size());
      if (stored > cap)
        throw ExpansionTooLarge("exterior expansion of " + rs.name() + " exceeds " +
                                std::to_string(cap) +
                                " stored terms (EXMULT_TERM_CAP raises the cap)");
    }
  }
  return layers;
}

inline std::int64_t packed_coeff(const PackedPoly& ch, std::uint64_t key) {
  auto it = std::lower_bound(ch.begin(), ch.end(), key,
                             [](const auto& e, std::uint64_t k) { return e.first < k; });
  return it != ch.end() && it->first == key ? it->second : 0;
}

// Multiplicity of V_lambda in the module with the given character, by the
// alternating sum of weight multiplicities over the Weyl group.
inline Cint irreducible_multiplicity(const RootSystem& rs, const PackedPoly& ch,
                                     const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw NotDominant("irreducible_multiplicity needs a dominant weight");
  Weight lr = wadd(lambda, rs.rho());
  Cint total(0);
  for (const WeylElement& w : rs.weyl_group()) {
    Weight mu = wsub(w.apply(lr, rs.rank()), rs.rho());
    std::int64_t m = packed_coeff(ch, pack_weight(mu));
    if (m != 0) total += Cint(w.sign) * Cint(m);
  }
  if (total.sign() < 0) throw Error("negative multiplicity: character is not a module");
  return total;
}

// Full decomposition into irreducibles, keyed by dominant highest weight.
inline std::map<Weight, Cint> decompose(const RootSystem& rs, const PackedPoly& ch) {
  std::map<Weight, Cint> out;
  for (const auto& entry : ch) {
    Weight mu = unpack_weight(entry.first);
    if (!rs.is_dominant(mu)) continue;
    Cint m = irreducible_multiplicity(rs, ch, mu);
    if (!m.is_zero()) out.emplace(mu, m);
  }
  return out;
}

// dim V_lambda by the Weyl dimension formula; exact rational bookkeeping.
inline Cint weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda)) throw NotDominant("weyl_dimension needs a dominant weight");
  Weight lr = wadd(lambda, rs.rho());
  Rat prod(1);
  for (const Root& rt : rs.positive_roots()) {
    Weight cv = rs.coroot(rt.alpha);
    prod *= Rat(Cint(rs.pairing(lr, cv)), Cint(rs.pairing(rs.rho(), cv)));
  }
  if (!prod.is_integer()) throw NonIntegralResult("weyl_dimension is not an integer");
  return prod.num();
}

}  // namespace exmult

#endif  // EXMULT_CHARACTERS_HPP
