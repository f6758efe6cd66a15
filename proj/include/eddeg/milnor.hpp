#pragma once

#include "eddeg/polynomial.hpp"

namespace eddeg {

// Local models of the distance-sphere divisor along its strata: smooth
// points, a transverse node xy = 0, the pinch point xy^2 = z^2, and the
// triple-wall germ x^2y^2 + x^2z^2 + y^2z^2 = x^2y^2z^2.
enum class MilnorModelTag { smooth, node, umbrella, triple };

struct MilnorModel {
  MilnorModelTag tag;
  PolyQ local_equation;  // in x, y, z over Q
};

MilnorModel make_milnor_model(MilnorModelTag tag);

// Local Milnor number at an isolated critical point: the stabilized value
// of dim Q[z]/(Jacobian ideal shifted to the origin + m^N) as N grows. Two
// consecutive equal values certify stabilization; no stabilization before
// max_order means the critical point is not isolated.
long long milnor_number(const PolyQ& f, const std::vector<Rational>& point,
                        int max_order = 30);

// Euler characteristic of the reduced cohomology of the nearby fiber.
// smooth -> 0; node -> -1 (fiber C* x C); umbrella -> 1 (degree-2 cover of
// C^2 ramified over C*); triple -> 15 via the eightfold cover of the fiber
// of xy + xz + yz - xyz, whose Milnor number is recomputed on the spot.
long long model_fiber_chi(const MilnorModel& model);

}  // namespace eddeg
