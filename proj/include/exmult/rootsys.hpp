// Root systems with two root lengths: B_r, C_r (r >= 2), F4, G2.
// Bourbaki numbering throughout. cartan(i, j) = <alpha_j, alpha_i^vee> with
// 0-based indices. Weights are coordinates on the fundamental weights; roots
// are additionally kept as coefficients on the simple roots.
#ifndef EXMULT_ROOTSYS_HPP
#define EXMULT_ROOTSYS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "exmult/intarith.hpp"

namespace exmult {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedType : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct NotARoot : Error {
  using Error::Error;
};
struct NotShortPositive : Error {
  using Error::Error;
};
struct NotDominant : Error {
  using Error::Error;
};
struct GroupTooLarge : Error {
  using Error::Error;
};
struct ExpansionTooLarge : Error {
  using Error::Error;
};
struct NonIntegralResult : Error {
  using Error::Error;
};
struct DivisionFailure : Error {
  using Error::Error;
};
struct NonPolynomial : Error {
  using Error::Error;
};
struct ChainAssertionFailure : Error {
  using Error::Error;
};

constexpr int kMaxRank = 12;

// Coordinates are int16; every lattice point touched by this library stays
// well inside that range.
using Weight = std::array<std::int16_t, kMaxRank>;

inline Weight wzero() { return Weight{}; }

inline Weight wadd(const Weight& a, const Weight& b) {
  Weight r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = static_cast<std::int16_t>(a[i] + b[i]);
  return r;
}

inline Weight wsub(const Weight& a, const Weight& b) {
  Weight r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = static_cast<std::int16_t>(a[i] - b[i]);
  return r;
}

inline Weight wneg(const Weight& a) {
  Weight r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = static_cast<std::int16_t>(-a[i]);
  return r;
}

inline Weight wscale(int c, const Weight& a) {
  Weight r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = static_cast<std::int16_t>(c * a[i]);
  return r;
}

inline bool wis_zero(const Weight& a) {
  for (int i = 0; i < kMaxRank; ++i)
    if (a[i] != 0) return false;
  return true;
}

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < kMaxRank; ++i) {
      h ^= static_cast<std::uint16_t>(w[i]);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

enum class Type { B, C, F, G };

inline std::string type_name(Type t) {
  switch (t) {
    case Type::B:
      return "B";
    case Type::C:
      return "C";
    case Type::F:
      return "F";
    case Type::G:
      return "G";
  }
  return "?";
}

inline Type type_from_string(const std::string& s) {
  if (s == "B" || s == "b") return Type::B;
  if (s == "C" || s == "c") return Type::C;
  if (s == "F" || s == "f") return Type::F;
  if (s == "G" || s == "g") return Type::G;
  throw UnsupportedType("unknown type '" + s + "', expected one of B, C, F, G");
}

struct Root {
  Weight alpha;  // coefficients on the simple roots
  Weight omega;  // the same root on the fundamental weights
  int height = 0;
  int height_s = 0;  // contribution of short simple roots to the height
  int height_l = 0;
  bool is_long = false;
  int index = -1;  // position in positive_roots()
};

// One Weyl group element, stored as its matrix on fundamental-weight
// coordinates: (w mu)_j = sum_i rows[j][i] mu_i.
struct WeylElement {
  std::array<Weight, kMaxRank> rows;
  int length = 0;
  int sign = 1;
  int short_inversions = 0;  // short roots in R(w)
  int long_inversions = 0;

  Weight apply(const Weight& mu, int rank) const {
    Weight out{};
    for (int j = 0; j < rank; ++j) {
      int v = 0;
      for (int i = 0; i < rank; ++i) v += rows[j][i] * mu[i];
      out[j] = static_cast<std::int16_t>(v);
    }
    return out;
  }
};

class RootSystem {
 public:
  RootSystem(Type type, int rank) : type_(type), rank_(rank) {
    init_cartan();
    build_roots();
  }

  Type type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return type_name(type_) + std::to_string(rank_); }

  int cartan(int i, int j) const {
    check_index(i);
    check_index(j);
    return cartan_[i][j];
  }

  bool simple_is_long(int i) const {
    check_index(i);
    return len2_[i] != 1;
  }
  int simple_len2(int i) const {
    check_index(i);
    return len2_[i];
  }
  int long_len2() const { return long_len2_; }

  int num_short_simple() const { return rs_; }
  int num_positive() const { return static_cast<int>(pos_.size()); }
  int num_short_positive() const { return short_pos_; }

  const std::vector<Root>& positive_roots() const { return pos_; }
  const Root& positive_root(int i) const {
    if (i < 0 || i >= static_cast<int>(pos_.size()))
      throw IndexOutOfRange("positive root index " + std::to_string(i));
    return pos_[static_cast<std::size_t>(i)];
  }
  const Root& simple_root(int i) const {
    check_index(i);
    return pos_[static_cast<std::size_t>(simple_index_[i])];
  }
  const Root& theta() const { return pos_[static_cast<std::size_t>(theta_)]; }
  const Root& theta_s() const { return pos_[static_cast<std::size_t>(theta_s_)]; }

  // k(alpha) for the label pair (ks, kl).
  int label(const Root& root, int ks, int kl) const { return root.is_long ? kl : ks; }
  int label_simple(int i, int ks, int kl) const { return simple_is_long(i) ? kl : ks; }

  // rho_k on fundamental-weight coordinates: entry i is k(alpha_i).
  Weight rho_k(int ks, int kl) const {
    Weight w{};
    for (int i = 0; i < rank_; ++i) w[i] = static_cast<std::int16_t>(label_simple(i, ks, kl));
    return w;
  }
  Weight rho() const { return rho_k(1, 1); }

  // Fundamental-weight coordinates of a root-lattice element.
  Weight omega_coords(const Weight& alpha_coeffs) const {
    Weight w{};
    for (int i = 0; i < rank_; ++i) {
      int v = 0;
      for (int j = 0; j < rank_; ++j) v += cartan_[i][j] * alpha_coeffs[j];
      w[i] = static_cast<std::int16_t>(v);
    }
    return w;
  }

  // <mu, alpha^vee> for mu on fundamental-weight coordinates and a coroot on
  // the simple-coroot basis.
  int pairing(const Weight& mu, const Weight& coroot_coeffs) const {
    int v = 0;
    for (int i = 0; i < rank_; ++i) v += mu[i] * coroot_coeffs[i];
    return v;
  }

  // Coefficients of alpha^vee on the simple coroots. Accepts positive and
  // negative roots, given on the simple-root basis.
  Weight coroot(const Weight& alpha_coeffs) const {
    const Root& rt = root_from_alpha(alpha_coeffs);
    bool negated = !(alpha_coeffs == rt.alpha);
    int l2 = rt.is_long ? long_len2_ : 1;
    Weight cv{};
    for (int i = 0; i < rank_; ++i) {
      int num = rt.alpha[i] * len2_[i];
      if (num % l2 != 0) throw NotARoot("coroot coefficient is not integral");
      cv[i] = static_cast<std::int16_t>(num / l2);
    }
    return negated ? wneg(cv) : cv;
  }

  // (rho_k, alpha^vee) for a coroot on the simple-coroot basis.
  int special_height(const Weight& coroot_coeffs, int ks, int kl) const {
    int v = 0;
    for (int i = 0; i < rank_; ++i) v += label_simple(i, ks, kl) * coroot_coeffs[i];
    return v;
  }

  // (sigma_k, alpha) = kl * height_l + ks * height_s.
  int sigma_height(const Root& root, int ks, int kl) const {
    return ks * root.height_s + kl * root.height_l;
  }

  // Reflection s_i on fundamental-weight coordinates.
  Weight simple_reflection_weight(int i, const Weight& mu) const {
    check_index(i);
    Weight out = mu;
    int m = mu[i];
    if (m != 0)
      for (int j = 0; j < rank_; ++j)
        out[j] = static_cast<std::int16_t>(out[j] - m * cartan_[j][i]);
    return out;
  }

  // Reflection s_i on simple-root coefficients.
  Weight simple_reflection_root(int i, const Weight& alpha_coeffs) const {
    check_index(i);
    int m = 0;
    for (int j = 0; j < rank_; ++j) m += cartan_[i][j] * alpha_coeffs[j];
    Weight out = alpha_coeffs;
    out[i] = static_cast<std::int16_t>(out[i] - m);
    return out;
  }

  // Signed index of the root with the given fundamental-weight coordinates:
  // idx+1 for positive_roots()[idx], -(idx+1) for its negative, 0 otherwise.
  int signed_root_by_omega(const Weight& omega) const {
    auto it = by_omega_.find(omega);
    return it == by_omega_.end() ? 0 : it->second;
  }

  const Root& root_from_alpha(const Weight& alpha_coeffs) const {
    auto it = by_alpha_.find(alpha_coeffs);
    if (it == by_alpha_.end()) {
      it = by_alpha_.find(wneg(alpha_coeffs));
      if (it == by_alpha_.end()) throw NotARoot("not a root of " + name());
    }
    return pos_[static_cast<std::size_t>(it->second)];
  }

  bool is_dominant(const Weight& mu) const {
    for (int i = 0; i < rank_; ++i)
      if (mu[i] < 0) return false;
    return true;
  }

  long long weyl_order() const {
    long long n = 1;
    switch (type_) {
      case Type::B:
      case Type::C:
        for (int i = 1; i <= rank_; ++i) n *= 2ll * i;
        return n;
      case Type::F:
        return 1152;
      case Type::G:
        return 12;
    }
    return 0;
  }

  const std::vector<WeylElement>& weyl_group() const {
    if (!weyl_.empty()) return weyl_;
    long long order = weyl_order();
    if (order > 1000000)
      throw GroupTooLarge(name() + " has Weyl group of order " + std::to_string(order));
    weyl_.reserve(static_cast<std::size_t>(order));
    WeylElement id;
    for (int j = 0; j < rank_; ++j) {
      id.rows[j] = Weight{};
      id.rows[j][j] = 1;
    }
    weyl_.push_back(id);
    std::unordered_map<Weight, int, WeightHash> seen;
    seen.emplace(id.apply(rho(), rank_), 0);
    for (std::size_t head = 0; head < weyl_.size(); ++head) {
      for (int i = 0; i < rank_; ++i) {
        WeylElement w = weyl_[head];
        int si = signed_root_by_omega(w.apply(simple_root(i).omega, rank_));
        if (si <= 0) continue;  // length would drop
        WeylElement next = w;
        for (int j = 0; j < rank_; ++j) {
          int col = 0;
          for (int m = 0; m < rank_; ++m) col += w.rows[j][m] * cartan_[m][i];
          next.rows[j][i] = static_cast<std::int16_t>(w.rows[j][i] - col);
        }
        next.length = w.length + 1;
        next.sign = -w.sign;
        next.short_inversions = w.short_inversions + (simple_is_long(i) ? 0 : 1);
        next.long_inversions = w.long_inversions + (simple_is_long(i) ? 1 : 0);
        Weight key = next.apply(rho(), rank_);
        if (seen.emplace(key, static_cast<int>(weyl_.size())).second) weyl_.push_back(next);
      }
    }
    if (static_cast<long long>(weyl_.size()) != order)
      throw Error(name() + ": generated " + std::to_string(weyl_.size()) +
                  " Weyl elements, expected " + std::to_string(order));
    return weyl_;
  }

  // Special exponents: the partition conjugate to the multiplicities of the
  // (2,1)-special heights over the coroots of the short positive roots,
  // returned in increasing order.
  std::vector<int> special_exponents() const {
    std::map<int, int> mult;
    for (const Root& rt : pos_) {
      if (rt.is_long) continue;
      ++mult[special_height(coroot(rt.alpha), 2, 1)];
    }
    std::vector<int> parts;
    for (const auto& kv : mult) parts.push_back(kv.second);
    std::sort(parts.rbegin(), parts.rend());
    std::vector<int> dual;
    for (int j = 1; j <= parts[0]; ++j) {
      int c = 0;
      for (int p : parts)
        if (p >= j) ++c;
      dual.push_back(c);
    }
    std::sort(dual.begin(), dual.end());
    return dual;
  }

 private:
  Type type_;
  int rank_;
  std::array<std::array<int, kMaxRank>, kMaxRank> cartan_{};
  std::array<int, kMaxRank> len2_{};
  int long_len2_ = 2;
  int rs_ = 0;
  int short_pos_ = 0;
  int theta_ = -1;
  int theta_s_ = -1;
  std::array<int, kMaxRank> simple_index_{};
  std::vector<Root> pos_;
  std::map<Weight, int> by_alpha_;
  std::unordered_map<Weight, int, WeightHash> by_omega_;
  mutable std::vector<WeylElement> weyl_;

  void check_index(int i) const {
    if (i < 0 || i >= rank_)
      throw IndexOutOfRange("simple root index " + std::to_string(i) + " for " + name());
  }

  void init_cartan() {
    switch (type_) {
      case Type::B:
        if (rank_ < 2 || rank_ > kMaxRank)
          throw UnsupportedType("type B needs 2 <= rank <= " + std::to_string(kMaxRank));
        chain();
        cartan_[rank_ - 1][rank_ - 2] = -2;  // alpha_{r-1} long, alpha_r short
        for (int i = 0; i < rank_; ++i) len2_[i] = i == rank_ - 1 ? 1 : 2;
        long_len2_ = 2;
        break;
      case Type::C:
        if (rank_ < 2 || rank_ > kMaxRank)
          throw UnsupportedType("type C needs 2 <= rank <= " + std::to_string(kMaxRank));
        chain();
        cartan_[rank_ - 2][rank_ - 1] = -2;  // alpha_{r-1} short, alpha_r long
        for (int i = 0; i < rank_; ++i) len2_[i] = i == rank_ - 1 ? 2 : 1;
        long_len2_ = 2;
        break;
      case Type::F:
        if (rank_ != 4) throw UnsupportedType("type F needs rank 4");
        chain();
        cartan_[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        len2_[0] = len2_[1] = 2;
        len2_[2] = len2_[3] = 1;
        long_len2_ = 2;
        break;
      case Type::G:
        if (rank_ != 2) throw UnsupportedType("type G needs rank 2");
        cartan_[0][0] = cartan_[1][1] = 2;
        cartan_[0][1] = -3;  // alpha_1 short, alpha_2 long
        cartan_[1][0] = -1;
        len2_[0] = 1;
        len2_[1] = 3;
        long_len2_ = 3;
        break;
    }
    for (int i = 0; i < rank_; ++i) rs_ += len2_[i] == 1 ? 1 : 0;
    // Symmetry of the induced bilinear form.
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        if (cartan_[i][j] * len2_[i] != cartan_[j][i] * len2_[j])
          throw Error("asymmetric bilinear form in " + name());
  }

  // Simply-laced chain defaults; length markers are patched by the caller.
  void chain() {
    for (int i = 0; i < rank_; ++i) {
      cartan_[i][i] = 2;
      if (i + 1 < rank_) {
        cartan_[i][i + 1] = -1;
        cartan_[i + 1][i] = -1;
      }
    }
  }

  int root_len2(const Weight& alpha_coeffs) const {
    long long twice = 0;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        twice += static_cast<long long>(alpha_coeffs[i]) * alpha_coeffs[j] * cartan_[i][j] *
                 len2_[i];
    if (twice <= 0 || twice % 2 != 0) throw Error("bad root length in " + name());
    return static_cast<int>(twice / 2);
  }

  void build_roots() {
    std::map<Weight, bool> found;  // positive roots, by simple-root coefficients
    std::vector<Weight> frontier;
    for (int i = 0; i < rank_; ++i) {
      Weight e{};
      e[i] = 1;
      found.emplace(e, true);
      frontier.push_back(e);
    }
    while (!frontier.empty()) {
      std::vector<Weight> next;
      for (const Weight& a : frontier) {
        for (int i = 0; i < rank_; ++i) {
          Weight b = simple_reflection_root(i, a);
          bool positive = true;
          for (int j = 0; j < rank_; ++j)
            if (b[j] < 0) positive = false;
          if (positive && found.emplace(b, true).second) next.push_back(b);
        }
      }
      frontier = std::move(next);
    }
    for (const auto& kv : found) {
      const Weight& a = kv.first;
      Root rt;
      rt.alpha = a;
      rt.omega = omega_coords(a);
      for (int i = 0; i < rank_; ++i) {
        rt.height += a[i];
        if (len2_[i] == 1)
          rt.height_s += a[i];
        else
          rt.height_l += a[i];
      }
      int l2 = root_len2(a);
      if (l2 != 1 && l2 != long_len2_) throw Error("unexpected root length in " + name());
      rt.is_long = l2 != 1;
      pos_.push_back(rt);
    }
    std::sort(pos_.begin(), pos_.end(), [](const Root& x, const Root& y) {
      if (x.height != y.height) return x.height < y.height;
      return y.alpha < x.alpha;
    });
    for (int idx = 0; idx < static_cast<int>(pos_.size()); ++idx) {
      Root& rt = pos_[static_cast<std::size_t>(idx)];
      rt.index = idx;
      by_alpha_.emplace(rt.alpha, idx);
      by_omega_.emplace(rt.omega, idx + 1);
      by_omega_.emplace(wneg(rt.omega), -(idx + 1));
      if (rt.height == 1) {
        for (int i = 0; i < rank_; ++i)
          if (rt.alpha[i] == 1) simple_index_[i] = idx;
      }
      if (!rt.is_long) {
        ++short_pos_;
        theta_s_ = idx;  // sorted by height: the last short root is theta_s
      }
      theta_ = idx;
    }
    // Highest and highest short roots are unique height maxima of their kind.
    if (!pos_.back().is_long || theta_s_ == theta_ || theta_s_ < 0)
      throw Error("theta mix-up in " + name());
  }
};

}  // namespace exmult

#endif  // EXMULT_ROOTSYS_HPP
