#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eddeg/monomial.hpp"
#include "eddeg/prime_field.hpp"
#include "eddeg/rational.hpp"
#include "eddeg/ring.hpp"
#include "eddeg/rng.hpp"

namespace eddeg {

// Per-field constants and sampling. Fp needs the ring's modulus, Q does not.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static Rational one(const Ring&) { return Rational(1); }
  static Rational from_int(const Ring&, long k) { return Rational(k); }
  // Generic draws over Q: integers in [-10^4, 10^4].
  static Rational random(Rng& rng, const Ring&) {
    return Rational(rng.int_in(-10000, 10000));
  }
  static Rational random_nonzero(Rng& rng, const Ring& r) {
    for (;;) {
      Rational x = random(rng, r);
      if (!x.is_zero()) return x;
    }
  }
};

template <>
struct FieldOps<Fp> {
  static Fp one(const Ring& r) { return Fp(1, r.modulus); }
  static Fp from_int(const Ring& r, long k) { return Fp::from_int(k, r.modulus); }
  static Fp random(Rng& rng, const Ring& r) {
    return Fp(rng.below(r.modulus), r.modulus);
  }
  static Fp random_nonzero(Rng& rng, const Ring& r) {
    return Fp(1 + rng.below(r.modulus - 1), r.modulus);
  }
};

// Sparse multivariate polynomial over an exact field K. Terms are stored
// with nonzero coefficients only, sorted descending under degrevlex; the
// Groebner engine re-sorts into its active order internally.
template <class K>
class Polynomial {
 public:
  using Term = std::pair<Monomial, K>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr ring, K c) {
    Polynomial f(std::move(ring));
    if (!c.is_zero()) f.terms_.emplace_back(Monomial(f.ring_->nvars()), std::move(c));
    return f;
  }

  static Polynomial variable(RingPtr ring, std::size_t index) {
    Polynomial f(ring);
    Monomial m(ring->nvars());
    m[index] = 1;
    f.terms_.emplace_back(std::move(m), FieldOps<K>::one(*ring));
    return f;
  }

  static Polynomial term(RingPtr ring, Monomial m, K c) {
    Polynomial f(std::move(ring));
    if (!c.is_zero()) f.terms_.emplace_back(std::move(m), std::move(c));
    return f;
  }

  // Sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    MonomialOrder ord = MonomialOrder::degrevlex();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return ord.greater(a.first, b.first);
    });
    Polynomial f(std::move(ring));
    for (auto& t : terms) {
      if (!f.terms_.empty() && f.terms_.back().first == t.first)
        f.terms_.back().second += t.second;
      else
        f.terms_.push_back(std::move(t));
      if (!f.terms_.empty() && f.terms_.back().second.is_zero()) f.terms_.pop_back();
    }
    return f;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
  }

  // Constant coefficient of a constant polynomial; zero for the zero poly.
  K constant_value() const {
    if (terms_.empty()) return K();
    return terms_[0].second;
  }

  // Degrevlex is degree compatible, so the first term has maximal degree.
  std::uint64_t total_degree() const {
    return terms_.empty() ? 0 : terms_[0].first.total_degree();
  }

  const Term& leading_term() const { return terms_.front(); }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  Polynomial operator+(const Polynomial& g) const { return merged(g, false); }
  Polynomial operator-(const Polynomial& g) const { return merged(g, true); }

  Polynomial operator*(const Polynomial& g) const {
    require_same_ring(ring_, g.ring_);
    MonomialOrder ord = MonomialOrder::degrevlex();
    auto cmp = [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); };
    std::map<Monomial, K, decltype(cmp)> acc(cmp);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : g.terms_) {
        Monomial m = ma * mb;
        K c = ca * cb;
        auto it = acc.find(m);
        if (it == acc.end()) {
          if (!c.is_zero()) acc.emplace(std::move(m), std::move(c));
        } else {
          it->second += c;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    }
    Polynomial r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) r.terms_.emplace_back(m, c);
    return r;
  }

  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial scaled(const K& c) const {
    if (c.is_zero()) return zero(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.second = t.second * c;
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, FieldOps<K>::one(*ring_));
    Polynomial base(*this);
    while (e) {
      if (e & 1) r = r * base;
      base = (e >>= 1) ? base * base : base;
    }
    return r;
  }

  bool operator==(const Polynomial& g) const {
    return ring_->same_as(*g.ring_) && terms_ == g.terms_;
  }
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

  // Formal partial derivative.
  Polynomial differentiate(std::size_t var) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial d = m;
      d[var] -= 1;
      K coeff = c.mul_int(static_cast<long>(m[var]));
      if (!coeff.is_zero()) r.terms_.emplace_back(std::move(d), std::move(coeff));
    }
    // Dividing surviving terms by the same variable preserves the order.
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string cs = c.to_string();
      bool negative = !cs.empty() && cs[0] == '-';
      if (first) {
        if (negative) out += "-";
        first = false;
      } else {
        out += negative ? " - " : " + ";
      }
      if (negative) cs = cs.substr(1);
      std::string vars;
      for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += ring_->vars[i];
        if (m[i] > 1) vars += "^" + std::to_string(m[i]);
      }
      if (vars.empty()) {
        out += cs;
      } else if (cs == "1") {
        out += vars;
      } else {
        out += cs + "*" + vars;
      }
    }
    return out;
  }

 private:
  Polynomial merged(const Polynomial& g, bool subtract) const {
    require_same_ring(ring_, g.ring_);
    MonomialOrder ord = MonomialOrder::degrevlex();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
      int c = ord.compare(terms_[i].first, g.terms_[j].first);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = g.terms_[j++];
        r.terms_.emplace_back(t.first, subtract ? -t.second : t.second);
      } else {
        K coeff = subtract ? terms_[i].second - g.terms_[j].second
                           : terms_[i].second + g.terms_[j].second;
        if (!coeff.is_zero()) r.terms_.emplace_back(terms_[i].first, std::move(coeff));
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) {
      const auto& t = g.terms_[j];
      r.terms_.emplace_back(t.first, subtract ? -t.second : t.second);
    }
    return r;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

using PolyQ = Polynomial<Rational>;
using PolyP = Polynomial<Fp>;

// Ring-homomorphism image of f under var -> images[var]. Variables without
// an image are sent to the same-named variable of the target ring. The
// target defaults to the ring of the first image (or f's ring if the map is
// empty of polynomial images).
template <class K>
Polynomial<K> substitute(const Polynomial<K>& f,
                         const std::map<std::string, Polynomial<K>>& images,
                         RingPtr target = nullptr) {
  if (!target) {
    if (!images.empty())
      target = images.begin()->second.ring();
    else
      target = f.ring();
  }
  const std::size_t n = f.ring()->nvars();
  // Per-variable image in the target ring.
  std::vector<Polynomial<K>> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& name = f.ring()->vars[i];
    auto it = images.find(name);
    if (it != images.end()) {
      require_same_ring(it->second.ring(), target);
      image[i] = it->second;
    } else {
      std::size_t j = target->index_of(name);
      if (j == Ring::npos)
        throw RingMismatch("variable '" + name +
                           "' has no image and is absent from the target ring");
      image[i] = Polynomial<K>::variable(target, j);
    }
  }
  for (const auto& [name, g] : images) {
    if (f.ring()->index_of(name) == Ring::npos)
      throw UnknownVariable("substituted variable '" + name + "' not in ring");
  }
  // Cache powers of each image as needed.
  std::vector<std::vector<Polynomial<K>>> powers(n);
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial<K>& {
    auto& cache = powers[i];
    if (cache.empty())
      cache.push_back(Polynomial<K>::constant(target, FieldOps<K>::one(*target)));
    while (cache.size() <= e) cache.push_back(cache.back() * image[i]);
    return cache[e];
  };
  Polynomial<K> acc(target);
  for (const auto& [m, c] : f.terms()) {
    Polynomial<K> t = Polynomial<K>::constant(target, c);
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) t = t * power(i, m[i]);
    acc += t;
  }
  return acc;
}

// Embeds f into a ring with the same coefficient field whose variable list
// contains f's variables (by name).
template <class K>
Polynomial<K> embed(const Polynomial<K>& f, const RingPtr& target) {
  if (f.ring()->modulus != target->modulus)
    throw RingMismatch("embedding must preserve the coefficient field");
  std::vector<std::size_t> slot(f.ring()->nvars());
  for (std::size_t i = 0; i < slot.size(); ++i) {
    slot[i] = target->index_of(f.ring()->vars[i]);
    if (slot[i] == Ring::npos)
      throw RingMismatch("target ring lacks variable '" + f.ring()->vars[i] + "'");
  }
  std::vector<typename Polynomial<K>::Term> terms;
  terms.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) {
    Monomial t(target->nvars());
    for (std::size_t i = 0; i < slot.size(); ++i) t[slot[i]] = m[i];
    terms.emplace_back(std::move(t), c);
  }
  return Polynomial<K>::from_terms(target, std::move(terms));
}

// Reduction of a rational polynomial mod p; throws if a denominator
// vanishes mod p.
PolyP reduce_mod(const PolyQ& f, const RingPtr& fp_ring);

}  // namespace eddeg
