#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eddeg/groebner.hpp"
#include "eddeg/parse.hpp"
#include "eddeg/polynomial.hpp"

namespace eddeg {

enum class VarietyMode { implicit, parametric };

// Affine variety cut out by ideal generators; ambient dimension is the
// ring's variable count.
struct ImplicitVariety {
  IdealPresentation<Rational> ideal;
  int codim = 1;

  std::size_t ambient_dimension() const { return ideal.ring->nvars(); }
};

// Rational map t -> (num_1/den_1, ..., num_n/den_n); all components share
// the domain ring.
struct ParametricVariety {
  RingPtr domain;
  std::vector<std::pair<PolyQ, PolyQ>> components;

  std::size_t ambient_dimension() const { return components.size(); }
  std::size_t domain_dimension() const { return domain->nvars(); }
};

class VarietyPresentation {
 public:
  static VarietyPresentation implicit(IdealPresentation<Rational> ideal, int codim);
  static VarietyPresentation parametric(RingPtr domain,
                                        std::vector<std::pair<PolyQ, PolyQ>> comps);

  VarietyMode mode() const {
    return std::holds_alternative<ImplicitVariety>(data_) ? VarietyMode::implicit
                                                          : VarietyMode::parametric;
  }
  std::size_t ambient_dimension() const;
  const ImplicitVariety& implicit_data() const { return std::get<ImplicitVariety>(data_); }
  const ParametricVariety& parametric_data() const {
    return std::get<ParametricVariety>(data_);
  }

 private:
  std::variant<ImplicitVariety, ParametricVariety> data_;
};

// Variety files. Implicit: `# vars: x,y` and `# codim: c` headers, then one
// generator per line. Parametric: `# params: t1,...` header, then one
// `numerator | denominator` line per component. `#` comments and blank
// lines are ignored.
VarietyPresentation load_variety(const std::string& path);
VarietyPresentation parse_variety_text(const std::string& text);

}  // namespace eddeg
