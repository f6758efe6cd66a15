#pragma once

#include <cstdint>
#include <string>

#include "eddeg/errors.hpp"

namespace eddeg {

// Default modulus for counting runs.
inline constexpr std::uint64_t kDefaultModulus = 2147483629ULL;
// Second prime used by the agreement protocol.
inline constexpr std::uint64_t kAlternateModulus = 2147483587ULL;

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Element of F_p for an odd prime p < 2^63. Each element carries its
// modulus; mixed-modulus arithmetic throws RingMismatch.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

  static Fp from_int(std::int64_t k, std::uint64_t p) {
    std::int64_t r = k % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp operator+(const Fp& o) const {
    check(o);
    std::uint64_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return Fp(s, p_);
  }
  Fp operator-(const Fp& o) const {
    check(o);
    return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
  }
  Fp operator*(const Fp& o) const {
    check(o);
    return Fp(static_cast<std::uint64_t>(
                  static_cast<unsigned __int128>(v_) * o.v_ % p_),
              p_);
  }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inverse() const;
  Fp mul_int(long k) const { return *this * from_int(k, p_); }

  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  std::string to_string() const { return std::to_string(v_); }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_)
      throw RingMismatch("prime field moduli differ: " + std::to_string(p_) +
                         " vs " + std::to_string(o.p_));
  }
  std::uint64_t v_;
  std::uint64_t p_;
};

}  // namespace eddeg
