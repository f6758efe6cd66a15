#include "eddeg/milnor.hpp"

#include "eddeg/groebner.hpp"
#include "eddeg/parse.hpp"

namespace eddeg {

MilnorModel make_milnor_model(MilnorModelTag tag) {
  RingPtr ring = make_ring_q({"x", "y", "z"});
  switch (tag) {
    case MilnorModelTag::smooth:
      return {tag, parse_poly("x", ring)};
    case MilnorModelTag::node:
      return {tag, parse_poly("x*y", ring)};
    case MilnorModelTag::umbrella:
      return {tag, parse_poly("x*y^2 - z^2", ring)};
    case MilnorModelTag::triple:
      return {tag, parse_poly("x^2*y^2 + x^2*z^2 + y^2*z^2 - x^2*y^2*z^2", ring)};
  }
  throw InternalError("unknown Milnor model tag");
}

namespace {

// All monomials of total degree d as polynomials.
std::vector<PolyQ> degree_monomials(const RingPtr& ring, std::uint32_t d) {
  const std::size_t n = ring->nvars();
  std::vector<PolyQ> out;
  Monomial m(n);
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == n) {
      m[var] = left;
      out.push_back(PolyQ::term(ring, m, Rational(1)));
      m[var] = 0;
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      m[var] = e;
      self(self, var + 1, left - e);
    }
    m[var] = 0;
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace

long long milnor_number(const PolyQ& f, const std::vector<Rational>& point,
                        int max_order) {
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->nvars();
  if (point.size() != n) throw InternalError("point has wrong length");

  PolyQ shifted = f;
  bool needs_shift = false;
  for (const auto& x : point) needs_shift = needs_shift || !x.is_zero();
  if (needs_shift) {
    std::map<std::string, PolyQ> images;
    for (std::size_t i = 0; i < n; ++i)
      images[ring->vars[i]] =
          PolyQ::variable(ring, i) + PolyQ::constant(ring, point[i]);
    shifted = substitute(f, images, ring);
  }

  std::vector<PolyQ> partials;
  partials.reserve(n);
  for (std::size_t i = 0; i < n; ++i) partials.push_back(shifted.differentiate(i));

  long long previous = -1;
  for (int order = 1; order <= max_order; ++order) {
    std::vector<PolyQ> gens = partials;
    for (auto& m : degree_monomials(ring, static_cast<std::uint32_t>(order)))
      gens.push_back(std::move(m));
    auto G = groebner_basis(IdealPresentation<Rational>::make(ring, std::move(gens)),
                            MonomialOrder::degrevlex());
    Count dim = quotient_dimension(G);
    if (!dim.is_finite())
      throw InternalError("truncated Jacobian quotient must be finite");
    if (dim.value() == previous) return previous;
    previous = dim.value();
  }
  throw NotIsolated("no stabilization up to order " + std::to_string(max_order) +
                    "; the critical point is not isolated");
}

long long model_fiber_chi(const MilnorModel& model) {
  constexpr long long chi_plane = 1;       // chi(C^2)
  constexpr long long chi_line = 1;        // chi(C)
  constexpr long long chi_punctured = 0;   // chi(C*)
  switch (model.tag) {
    case MilnorModelTag::smooth:
      // Contractible nearby fiber.
      return 0;
    case MilnorModelTag::node:
      // Fiber xy = t is C* x C.
      return chi_punctured * chi_line - 1;
    case MilnorModelTag::umbrella:
      // Fiber xy^2 - z^2 = t double-covers C^2 with ramification over the
      // curve xy^2 = t, a copy of C*.
      return (2 * chi_plane - chi_punctured) - 1;
    case MilnorModelTag::triple: {
      // (x,y,z) -> (x^2,y^2,z^2) maps the fiber 8-to-1 onto the fiber of
      // xy + xz + yz - xyz; the ramification locus has Euler characteristic
      // zero, and the base fiber is a bouquet of mu 2-spheres.
      RingPtr ring = make_ring_q({"x", "y", "z"});
      PolyQ cone = parse_poly("x*y + x*z + y*z - x*y*z", ring);
      long long mu = milnor_number(cone, {Rational(0), Rational(0), Rational(0)});
      long long chi_base_fiber = 1 + mu;
      return 8 * chi_base_fiber - 1;
    }
  }
  throw InternalError("unknown Milnor model tag");
}

}  // namespace eddeg
