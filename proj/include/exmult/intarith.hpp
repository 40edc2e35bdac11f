// Exact scalar arithmetic: a checked 128-bit integer and a rational built on it.
#ifndef EXMULT_INTARITH_HPP
#define EXMULT_INTARITH_HPP

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace exmult {

// Signed 128-bit integer that aborts the process on overflow. Every quantity
// in this library is known to stay far below 2^127, so a trap here is a logic
// error and not recoverable.
class Cint {
 public:
  constexpr Cint() : v_(0) {}
  constexpr Cint(long long v) : v_(v) {}

  static Cint raw(__int128 v) {
    Cint c;
    c.v_ = v;
    return c;
  }

  Cint operator+(Cint o) const {
    Cint r;
    if (__builtin_add_overflow(v_, o.v_, &r.v_)) trap("add");
    return r;
  }
  Cint operator-(Cint o) const {
    Cint r;
    if (__builtin_sub_overflow(v_, o.v_, &r.v_)) trap("sub");
    return r;
  }
  Cint operator*(Cint o) const {
    Cint r;
    if (__builtin_mul_overflow(v_, o.v_, &r.v_)) trap("mul");
    return r;
  }
  Cint operator-() const { return Cint(0) - *this; }
  Cint& operator+=(Cint o) { return *this = *this + o; }
  Cint& operator-=(Cint o) { return *this = *this - o; }
  Cint& operator*=(Cint o) { return *this = *this * o; }

  bool operator==(Cint o) const { return v_ == o.v_; }
  bool operator!=(Cint o) const { return v_ != o.v_; }
  bool operator<(Cint o) const { return v_ < o.v_; }
  bool operator<=(Cint o) const { return v_ <= o.v_; }
  bool operator>(Cint o) const { return v_ > o.v_; }
  bool operator>=(Cint o) const { return v_ >= o.v_; }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }
  Cint abs() const { return v_ < 0 ? -*this : *this; }

  // Quotient of an exact division; traps when the remainder is nonzero.
  Cint div_exact(Cint d) const {
    if (d.v_ == 0 || v_ % d.v_ != 0) trap("div_exact");
    return raw(v_ / d.v_);
  }
  bool divisible_by(Cint d) const { return d.v_ != 0 && v_ % d.v_ == 0; }

  long long to_ll() const {
    if (v_ > INT64_MAX || v_ < INT64_MIN) trap("to_ll");
    return static_cast<long long>(v_);
  }
  double to_double() const { return static_cast<double>(v_); }

  std::string to_string() const {
    if (v_ == 0) return "0";
    unsigned __int128 u =
        v_ < 0 ? -static_cast<unsigned __int128>(v_) : static_cast<unsigned __int128>(v_);
    char buf[48];
    int n = 0;
    while (u > 0) {
      buf[n++] = static_cast<char>('0' + static_cast<int>(u % 10));
      u /= 10;
    }
    std::string s;
    if (v_ < 0) s.push_back('-');
    while (n > 0) s.push_back(buf[--n]);
    return s;
  }

  __int128 raw_value() const { return v_; }

 private:
  __int128 v_;

  [[noreturn]] static void trap(const char* op) {
    std::fprintf(stderr, "exmult: 128-bit integer overflow in %s\n", op);
    std::abort();
  }
};

inline Cint gcd(Cint a, Cint b) {
  __int128 x = a.abs().raw_value();
  __int128 y = b.abs().raw_value();
  while (y != 0) {
    __int128 t = x % y;
    x = y;
    y = t;
  }
  return Cint::raw(x);
}

// Exact rational with positive denominator, always kept in lowest terms.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(Cint n) : num_(n), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(Cint n, Cint d) : num_(n), den_(d) { normalize(); }

  const Cint& num() const { return num_; }
  const Cint& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == Cint(1); }
  int sign() const { return num_.sign(); }

  Rat operator+(const Rat& o) const {
    if (den_ == Cint(1) && o.den_ == Cint(1)) return Rat(num_ + o.num_);
    return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rat operator-(const Rat& o) const {
    if (den_ == Cint(1) && o.den_ == Cint(1)) return Rat(num_ - o.num_);
    return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rat operator*(const Rat& o) const {
    if (den_ == Cint(1) && o.den_ == Cint(1)) return Rat(num_ * o.num_);
    return Rat(num_ * o.num_, den_ * o.den_);
  }
  Rat operator/(const Rat& o) const { return Rat(num_ * o.den_, den_ * o.num_); }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }

  std::string to_string() const {
    if (den_ == Cint(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

 private:
  Cint num_, den_;

  void normalize() {
    if (den_.is_zero()) {
      std::fprintf(stderr, "exmult: rational with zero denominator\n");
      std::abort();
    }
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = Cint(1);
      return;
    }
    Cint g = gcd(num_, den_);
    if (g != Cint(1)) {
      num_ = num_.div_exact(g);
      den_ = den_.div_exact(g);
    }
  }
};

}  // namespace exmult

#endif  // EXMULT_INTARITH_HPP
