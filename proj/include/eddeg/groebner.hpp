#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eddeg/polynomial.hpp"

namespace eddeg {

template <class K>
struct IdealPresentation {
  RingPtr ring;
  std::vector<Polynomial<K>> generators;

  // Drops zero generators; the list must stay nonempty.
  static IdealPresentation make(RingPtr ring, std::vector<Polynomial<K>> gens) {
    IdealPresentation ideal;
    ideal.ring = std::move(ring);
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      require_same_ring(g.ring(), ideal.ring);
      ideal.generators.push_back(std::move(g));
    }
    if (ideal.generators.empty())
      throw InternalError("ideal presentation needs at least one nonzero generator");
    return ideal;
  }
};

struct GroebnerOptions {
  // Buchberger's coprime criterion is always on; the chain criterion is
  // optional. Both leave the computed basis unchanged.
  bool use_chain_criterion = false;
  std::uint64_t max_degree = 120;
  std::size_t max_basis_size = 20000;
};

template <class K>
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order;
  // Reduced and monic: no leading monomial divides another, every element
  // is fully reduced against the rest. Sorted by leading monomial ascending.
  std::vector<Polynomial<K>> elements;

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> lm;
    lm.reserve(elements.size());
    for (const auto& g : elements) lm.push_back(leading(g));
    return lm;
  }

  // Leading monomial under this basis' order (elements are stored with
  // canonical degrevlex term order, so scan when the orders differ).
  Monomial leading(const Polynomial<K>& g) const {
    const auto& ts = g.terms();
    if (order.kind == OrderKind::degrevlex) return ts.front().first;
    std::size_t best = 0;
    for (std::size_t i = 1; i < ts.size(); ++i)
      if (order.greater(ts[i].first, ts[best].first)) best = i;
    return ts[best].first;
  }
};

// Number of solutions counted with multiplicity; infinite when the locus
// has positive dimension.
class Count {
 public:
  static Count infinite() { return Count(true, 0); }
  static Count of(std::int64_t n) { return Count(false, n); }

  bool is_finite() const { return !infinite_; }
  std::int64_t value() const {
    if (infinite_) throw InternalError("infinite count has no value");
    return n_;
  }
  // -1 encodes INFINITE in reports.
  std::int64_t encoded() const { return infinite_ ? -1 : n_; }

  bool operator==(const Count& o) const {
    return infinite_ == o.infinite_ && (infinite_ || n_ == o.n_);
  }
  bool operator!=(const Count& o) const { return !(*this == o); }

  std::string to_string() const {
    return infinite_ ? "INFINITE" : std::to_string(n_);
  }

 private:
  Count(bool inf, std::int64_t n) : infinite_(inf), n_(n) {}
  bool infinite_;
  std::int64_t n_;
};

namespace gb_detail {

template <class K>
using TermVec = std::vector<std::pair<Monomial, K>>;

template <class K>
TermVec<K> to_sorted(const Polynomial<K>& f, const MonomialOrder& ord) {
  TermVec<K> v(f.terms().begin(), f.terms().end());
  if (ord.kind != OrderKind::degrevlex)
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
      return ord.greater(a.first, b.first);
    });
  return v;
}

template <class K>
Polynomial<K> to_poly(const RingPtr& ring, TermVec<K> v) {
  return Polynomial<K>::from_terms(ring, std::move(v));
}

// c * x^m * g; shifting by a fixed monomial preserves the sort.
template <class K>
TermVec<K> scaled_shift(const K& c, const Monomial& m, const TermVec<K>& g) {
  TermVec<K> r;
  r.reserve(g.size());
  for (const auto& t : g) r.emplace_back(t.first * m, c * t.second);
  return r;
}

// f[from..] - c * x^m * g, inputs sorted descending under ord.
template <class K>
TermVec<K> subtract_multiple(const TermVec<K>& f, std::size_t from, const K& c,
                             const Monomial& m, const TermVec<K>& g,
                             const MonomialOrder& ord) {
  TermVec<K> r;
  r.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].first * m;
    int cmp = ord.compare(f[i].first, gm);
    if (cmp > 0) {
      r.push_back(f[i++]);
    } else if (cmp < 0) {
      r.emplace_back(std::move(gm), -(c * g[j].second));
      ++j;
    } else {
      K coeff = f[i].second - c * g[j].second;
      if (!coeff.is_zero()) r.emplace_back(f[i].first, std::move(coeff));
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) r.push_back(f[i]);
  for (; j < g.size(); ++j) r.emplace_back(g[j].first * m, -(c * g[j].second));
  return r;
}

// Full normal form of f against the (monic) reducers: no remaining term is
// divisible by any reducer's leading monomial.
template <class K>
TermVec<K> reduce_full(TermVec<K> f, const std::vector<const TermVec<K>*>& reducers,
                       const MonomialOrder& ord, std::uint64_t max_degree) {
  TermVec<K> done;
  std::size_t head = 0;
  while (head < f.size()) {
    const Monomial& lm = f[head].first;
    if (lm.total_degree() > max_degree)
      throw ResourceLimit("normal form exceeded the degree limit of " +
                          std::to_string(max_degree));
    const TermVec<K>* reducer = nullptr;
    for (const auto* g : reducers) {
      if (!(*g)[0].first.divides(lm)) continue;
      reducer = g;
      break;
    }
    if (!reducer) {
      done.push_back(std::move(f[head]));
      ++head;
      continue;
    }
    // Reducers are monic, so the cofactor coefficient is the term's own.
    Monomial q = lm / (*reducer)[0].first;
    f = subtract_multiple(f, head, f[head].second, q, *reducer, ord);
    head = 0;
  }
  return done;
}

template <class K>
void make_monic(TermVec<K>& f) {
  if (f.empty() || f[0].second.is_one()) return;
  K inv = f[0].second.inverse();
  for (auto& t : f) t.second = t.second * inv;
}

}  // namespace gb_detail

// Reduced Groebner basis of the generated ideal; deterministic for fixed
// input. Buchberger with normal pair selection (lowest lcm degree first).
template <class K>
GroebnerBasis<K> groebner_basis(const IdealPresentation<K>& ideal,
                                const MonomialOrder& order,
                                const GroebnerOptions& options = {}) {
  using gb_detail::TermVec;
  const RingPtr& ring = ideal.ring;

  std::vector<TermVec<K>> basis;
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    auto v = gb_detail::to_sorted(g, order);
    gb_detail::make_monic(v);
    basis.push_back(std::move(v));
  }
  if (basis.empty())
    throw InternalError("ideal presentation needs at least one nonzero generator");

  // Pair queue keyed by (lcm degree, lcm, indices) for determinism.
  struct Pair {
    std::uint64_t degree;
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [&order](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = basis[i][0].first.lcm(basis[j][0].first);
      queue.insert(Pair{l.total_degree(), std::move(l), i, j});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});

    if (p.degree > options.max_degree)
      throw ResourceLimit("S-pair lcm degree " + std::to_string(p.degree) +
                          " exceeds the limit of " +
                          std::to_string(options.max_degree));

    const Monomial& lm_i = basis[p.i][0].first;
    const Monomial& lm_j = basis[p.j][0].first;
    if (lm_i.coprime(lm_j)) continue;

    if (options.use_chain_criterion) {
      bool skip = false;
      for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        if (!basis[k][0].first.divides(p.lcm)) continue;
        auto key = [](std::size_t a, std::size_t b) {
          return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        };
        if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) skip = true;
      }
      if (skip) continue;
    }

    // S-polynomial: both halves scaled to the pair's lcm; leading terms cancel.
    const K one = FieldOps<K>::one(*ring);
    TermVec<K> s = gb_detail::scaled_shift(one, p.lcm / lm_i, basis[p.i]);
    s = gb_detail::subtract_multiple(s, 0, one, p.lcm / lm_j, basis[p.j], order);

    std::vector<const TermVec<K>*> reducers;
    reducers.reserve(basis.size());
    for (const auto& b : basis) reducers.push_back(&b);
    s = gb_detail::reduce_full(std::move(s), reducers, order, options.max_degree);
    if (s.empty()) continue;
    gb_detail::make_monic(s);
    basis.push_back(std::move(s));
    if (basis.size() > options.max_basis_size)
      throw ResourceLimit("basis size exceeds the limit of " +
                          std::to_string(options.max_basis_size));
    push_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial another divides.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j) continue;
      const Monomial& a = basis[j][0].first;
      const Monomial& b = basis[i][0].first;
      if (a.divides(b) && (a != b || j < i)) keep[i] = false;
    }
  }
  std::vector<TermVec<K>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis[i]));

  // Interreduce tails until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<const TermVec<K>*> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(&minimal[j]);
      TermVec<K> r = gb_detail::reduce_full(minimal[i], others, order,
                                            options.max_degree);
      if (r != minimal[i]) {
        changed = true;
        if (r.empty()) {
          minimal.erase(minimal.begin() + i);
          --i;
        } else {
          gb_detail::make_monic(r);
          minimal[i] = std::move(r);
        }
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(),
            [&](const TermVec<K>& a, const TermVec<K>& b) {
              return order.less(a[0].first, b[0].first);
            });

  GroebnerBasis<K> result;
  result.ring = ring;
  result.order = order;
  for (auto& v : minimal)
    result.elements.push_back(gb_detail::to_poly(ring, std::move(v)));
  return result;
}

// Remainder of f on division by G: no term divisible by a leading monomial
// of G; zero iff f lies in the ideal.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& G,
                          std::uint64_t max_degree = 10000) {
  require_same_ring(f.ring(), G.ring);
  std::vector<gb_detail::TermVec<K>> stored;
  stored.reserve(G.elements.size());
  for (const auto& g : G.elements)
    stored.push_back(gb_detail::to_sorted(g, G.order));
  std::vector<const gb_detail::TermVec<K>*> reducers;
  for (const auto& v : stored) reducers.push_back(&v);
  auto r = gb_detail::reduce_full(gb_detail::to_sorted(f, G.order), reducers,
                                  G.order, max_degree);
  return gb_detail::to_poly(G.ring, std::move(r));
}

// Test-facing check: every input generator and every S-polynomial of basis
// pairs reduces to zero.
template <class K>
bool is_groebner_basis_of(const GroebnerBasis<K>& G,
                          const IdealPresentation<K>& ideal) {
  for (const auto& f : ideal.generators)
    if (!normal_form(f, G).is_zero()) return false;
  for (std::size_t i = 0; i < G.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < G.elements.size(); ++j) {
      const Monomial lm_i = G.leading(G.elements[i]);
      const Monomial lm_j = G.leading(G.elements[j]);
      Monomial l = lm_i.lcm(lm_j);
      Polynomial<K> s =
          G.elements[i] * Polynomial<K>::term(G.ring, l / lm_i,
                                              FieldOps<K>::one(*G.ring)) -
          G.elements[j] * Polynomial<K>::term(G.ring, l / lm_j,
                                              FieldOps<K>::one(*G.ring));
      if (!normal_form(s, G).is_zero()) return false;
    }
  }
  return true;
}

// Dimension of the quotient ring as a vector space: the number of standard
// monomials. Infinite unless every variable has a pure power among the
// leading monomials.
template <class K>
Count quotient_dimension(const GroebnerBasis<K>& G) {
  const std::size_t n = G.ring->nvars();
  std::vector<Monomial> lms = G.leading_monomials();
  for (const auto& m : lms)
    if (m.is_one()) return Count::of(0);  // unit ideal
  for (std::size_t v = 0; v < n; ++v) {
    bool pure = false;
    for (const auto& m : lms) {
      bool only_v = m[v] > 0;
      for (std::size_t w = 0; w < n && only_v; ++w)
        if (w != v && m[w] > 0) only_v = false;
      if (only_v) {
        pure = true;
        break;
      }
    }
    if (!pure) return Count::infinite();
  }

  // Walk the staircase: choose exponents variable by variable, keeping only
  // the leading monomials that can still divide the prefix.
  std::uint32_t max_exp = 0;
  for (const auto& m : lms)
    for (std::size_t v = 0; v < n; ++v) max_exp = std::max(max_exp, m[v]);
  std::int64_t count = 0;
  auto recurse = [&](auto&& self, std::size_t var,
                     const std::vector<Monomial>& alive) -> void {
    if (var == n) {
      // Along this branch every leading monomial failed to divide.
      count += 1;
      return;
    }
    for (std::uint32_t e = 0;; ++e) {
      if (e > max_exp)
        throw InternalError("staircase walk failed to terminate");
      std::vector<Monomial> next;
      bool blocked = false;
      for (const auto& m : alive) {
        if (m[var] > e) continue;
        bool tail_zero = true;
        for (std::size_t w = var + 1; w < n && tail_zero; ++w)
          if (m[w] > 0) tail_zero = false;
        if (tail_zero) {
          blocked = true;  // m divides the prefix outright
          break;
        }
        next.push_back(m);
      }
      if (blocked) break;
      self(self, var + 1, next);
    }
  };
  recurse(recurse, 0, lms);
  return Count::of(count);
}

// Krull dimension via the leading-term ideal: the largest variable subset S
// such that no leading monomial is supported entirely inside S.
template <class K>
int ideal_dimension(const GroebnerBasis<K>& G) {
  const std::size_t n = G.ring->nvars();
  std::vector<Monomial> lms = G.leading_monomials();
  for (const auto& m : lms)
    if (m.is_one()) throw UnitIdeal("dimension of the unit ideal is undefined");
  if (n > 22) throw InternalError("ideal_dimension supports at most 22 variables");
  std::vector<std::uint32_t> supports;
  supports.reserve(lms.size());
  for (const auto& m : lms) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v]) s |= (1u << v);
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    bool independent = true;
    for (std::uint32_t s : supports) {
      if ((s & ~subset) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(subset));
  }
  return best;
}

// Solutions of the ideal with g != 0, counted with multiplicity, via a
// fresh Rabinowitsch variable: quotient dimension of I + <t*g - 1>.
template <class K>
Count count_with_inequation(const IdealPresentation<K>& ideal,
                            const Polynomial<K>& g,
                            const GroebnerOptions& options = {}) {
  require_same_ring(ideal.ring, g.ring());
  if (g.is_zero()) return Count::of(0);
  if (g.is_constant())
    return quotient_dimension(
        groebner_basis(ideal, MonomialOrder::degrevlex(), options));

  std::string fresh = "_t";
  while (ideal.ring->index_of(fresh) != Ring::npos) fresh += "_";
  RingPtr ext = extend_ring(ideal.ring, fresh);

  std::vector<Polynomial<K>> gens;
  gens.reserve(ideal.generators.size() + 1);
  for (const auto& f : ideal.generators) gens.push_back(embed(f, ext));
  Polynomial<K> t = Polynomial<K>::variable(ext, ext->nvars() - 1);
  Polynomial<K> one = Polynomial<K>::constant(ext, FieldOps<K>::one(*ext));
  gens.push_back(t * embed(g, ext) - one);

  auto G = groebner_basis(IdealPresentation<K>::make(ext, std::move(gens)),
                          MonomialOrder::degrevlex(), options);
  return quotient_dimension(G);
}

}  // namespace eddeg
