#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace eddeg {

// Exponent vector of fixed length (one slot per ambient variable).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  Monomial(std::initializer_list<std::uint32_t> e) : e_(e) {}
  explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto x : e_) d += x;
    return d;
  }

  bool is_one() const {
    for (auto x : e_)
      if (x) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && m.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
    return r;
  }

  // Caller must check divisibility.
  Monomial operator/(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= m.e_[i];
    return r;
  }

  Monomial lcm(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (m.e_[i] > r.e_[i]) r.e_[i] = m.e_[i];
    return r;
  }

  bool operator==(const Monomial& m) const { return e_ == m.e_; }
  bool operator!=(const Monomial& m) const { return e_ != m.e_; }

 private:
  std::vector<std::uint32_t> e_;
};

enum class OrderKind { degrevlex, lex, block };

// Total monomial order compatible with multiplication. block(k) eliminates
// the first k variables: any monomial touching them ranks above all
// monomials that do not (degrevlex within each block).
struct MonomialOrder {
  OrderKind kind = OrderKind::degrevlex;
  std::size_t block_size = 0;

  static MonomialOrder degrevlex() { return {OrderKind::degrevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder block(std::size_t k) { return {OrderKind::block, k}; }

  // Returns <0, 0, >0 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  const char* name() const;
};

}  // namespace eddeg
