#include "eddeg/variety.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "eddeg/errors.hpp"

namespace eddeg {

VarietyPresentation VarietyPresentation::implicit(IdealPresentation<Rational> ideal,
                                                  int codim) {
  const int n = static_cast<int>(ideal.ring->nvars());
  if (codim < 1 || codim > n)
    throw CodimensionOutOfRange("codimension " + std::to_string(codim) +
                                " out of range for ambient dimension " +
                                std::to_string(n));
  VarietyPresentation v;
  v.data_ = ImplicitVariety{std::move(ideal), codim};
  return v;
}

VarietyPresentation VarietyPresentation::parametric(
    RingPtr domain, std::vector<std::pair<PolyQ, PolyQ>> comps) {
  for (auto& [num, den] : comps) {
    require_same_ring(num.ring(), domain);
    require_same_ring(den.ring(), domain);
    if (den.is_zero()) throw ZeroDenominator("component denominator is zero");
  }
  if (comps.empty()) throw InternalError("parametric variety needs components");
  VarietyPresentation v;
  v.data_ = ParametricVariety{std::move(domain), std::move(comps)};
  return v;
}

std::size_t VarietyPresentation::ambient_dimension() const {
  if (mode() == VarietyMode::implicit) return implicit_data().ambient_dimension();
  return parametric_data().ambient_dimension();
}

namespace {

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) names.push_back(cur);
  return names;
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

VarietyPresentation parse_variety_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> vars, params;
  int codim = -1;
  std::vector<std::string> body;
  while (std::getline(in, line)) {
    std::string t = strip(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::string rest = strip(t.substr(1));
      if (rest.rfind("vars:", 0) == 0) {
        vars = split_names(rest.substr(5));
      } else if (rest.rfind("params:", 0) == 0) {
        params = split_names(rest.substr(7));
      } else if (rest.rfind("codim:", 0) == 0) {
        codim = std::stoi(strip(rest.substr(6)));
      }
      continue;  // other # lines are comments
    }
    body.push_back(t);
  }

  if (!vars.empty() && !params.empty())
    throw SyntaxError("variety file declares both vars and params", 0);

  if (!vars.empty()) {
    if (codim < 0)
      throw SyntaxError("implicit variety file needs a '# codim:' header", 0);
    RingPtr ring = make_ring_q(vars);
    std::vector<PolyQ> gens;
    for (const auto& src : body) gens.push_back(parse_poly(src, ring));
    return VarietyPresentation::implicit(
        IdealPresentation<Rational>::make(ring, std::move(gens)), codim);
  }
  if (!params.empty()) {
    RingPtr domain = make_ring_q(params);
    std::vector<std::pair<PolyQ, PolyQ>> comps;
    for (const auto& src : body) {
      std::size_t bar = src.find('|');
      if (bar == std::string::npos)
        throw SyntaxError("parametric component needs 'numerator | denominator'", 0);
      comps.emplace_back(parse_poly(strip(src.substr(0, bar)), domain),
                         parse_poly(strip(src.substr(bar + 1)), domain));
    }
    return VarietyPresentation::parametric(domain, std::move(comps));
  }
  throw SyntaxError("variety file needs a '# vars:' or '# params:' header", 0);
}

VarietyPresentation load_variety(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open variety file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_variety_text(buf.str());
}

}  // namespace eddeg
