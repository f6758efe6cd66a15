#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "eddeg/errors.hpp"

namespace eddeg {

// Variable names plus the coefficient-field tag. modulus == 0 means Q,
// otherwise the ring is over F_modulus. Rings are immutable and shared;
// cross-ring operations require an explicit embedding.
struct Ring {
  std::vector<std::string> vars;
  std::uint64_t modulus = 0;

  std::size_t nvars() const { return vars.size(); }

  // Index of a variable name, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return i;
    return npos;
  }

  bool same_as(const Ring& o) const {
    return modulus == o.modulus && vars == o.vars;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring_q(std::vector<std::string> vars) {
  return std::make_shared<Ring>(Ring{std::move(vars), 0});
}

inline RingPtr make_ring_fp(std::vector<std::string> vars, std::uint64_t p) {
  return std::make_shared<Ring>(Ring{std::move(vars), p});
}

// Same coefficient field, one extra variable appended at the end. The new
// name must be fresh.
inline RingPtr extend_ring(const RingPtr& ring, const std::string& name) {
  if (ring->index_of(name) != Ring::npos)
    throw RingMismatch("variable '" + name + "' already present in ring");
  auto vars = ring->vars;
  vars.push_back(name);
  return std::make_shared<Ring>(Ring{std::move(vars), ring->modulus});
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b))
    throw RingMismatch("operands live in different rings");
}

}  // namespace eddeg
