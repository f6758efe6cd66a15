#include "eddeg/multiview.hpp"

#include <json.hpp>

namespace eddeg {

namespace {

using ordered_json = nlohmann::ordered_json;

QMat random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  QMat m(rows, QVec(cols, Rational(0)));
  for (auto& row : m)
    for (auto& x : row) x = Rational(rng.int_in(-100, 100));
  return m;
}

QMat random_full_rank(Rng& rng, std::size_t rows, std::size_t cols) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    QMat m = random_matrix(rng, rows, cols);
    if (matrix_rank(m) == std::min(rows, cols)) return m;
  }
  throw InternalError("failed to draw a full-rank matrix in 100 attempts");
}

// Row of a 3x4 matrix applied to (y1, y2, y3, 1) as a degree-1 polynomial.
PolyQ row_form(const RingPtr& ring, const QVec& row) {
  PolyQ f = PolyQ::constant(ring, row[3]);
  for (std::size_t j = 0; j < 3; ++j)
    f += PolyQ::variable(ring, j).scaled(row[j]);
  return f;
}

}  // namespace

CameraRig random_camera_rig(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw InternalError("a rig needs at least two cameras");
  CameraRig rig;
  rig.n = n;
  rig.seed = seed;
  Rng rng(Rng::mix(seed, 0xC0FFEE));

  std::vector<QVec> centers;
  for (std::size_t i = 0; i < n; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 100)
        throw InternalError("failed to draw distinct camera centers");
      QMat a = random_full_rank(rng, 3, 4);
      QVec center = kernel_vector_3x4(a);
      bool fresh = true;
      for (const auto& c : centers) fresh = fresh && !proportional(c, center);
      if (!fresh) continue;
      rig.cameras.push_back(std::move(a));
      centers.push_back(std::move(center));
      break;
    }
  }

  // Twists must keep the n chart denominators pairwise non-proportional.
  RingPtr probe = make_ring_q({"y1", "y2", "y3"});
  std::vector<PolyQ> dens;
  for (std::size_t i = 0; i < n; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 100) throw InternalError("failed to draw chart twists");
      QMat t = random_matrix(rng, 3, 3);
      if (matrix_rank(t) != 3) continue;
      QMat b = matrix_product(t, rig.cameras[i]);
      PolyQ den = row_form(probe, b[2]);
      if (den.is_zero()) continue;
      bool fresh = true;
      for (const auto& d : dens) {
        // Proportional degree-1 denominators would align two charts.
        if ((d.scaled(den.leading_term().second) -
             den.scaled(d.leading_term().second))
                .is_zero())
          fresh = false;
      }
      if (!fresh) continue;
      rig.chart_twists.push_back(std::move(t));
      dens.push_back(std::move(den));
      break;
    }
  }
  return rig;
}

MultiviewMap multiview_map(const CameraRig& rig) {
  MultiviewMap map;
  map.domain = make_ring_q({"y1", "y2", "y3"});
  for (std::size_t i = 0; i < rig.n; ++i) {
    QMat b = matrix_product(rig.chart_twists[i], rig.cameras[i]);
    PolyQ den = row_form(map.domain, b[2]);
    if (den.is_zero())
      throw DegenerateChart("camera " + std::to_string(i + 1) +
                            " has an identically zero chart denominator");
    map.components.emplace_back(row_form(map.domain, b[0]), den);
    map.components.emplace_back(row_form(map.domain, b[1]), den);
  }
  return map;
}

namespace {

Count multiview_trial(const CameraRig& rig, std::uint64_t p,
                      std::uint64_t trial_seed, const GroebnerOptions& options) {
  MultiviewMap map = multiview_map(rig);
  auto comps = reduce_components(map.components, p);
  const RingPtr& domain = comps.front().first.ring();
  Rng rng(trial_seed);
  std::vector<Fp> alpha;
  for (std::size_t i = 0; i < 2 * rig.n; ++i)
    alpha.push_back(FieldOps<Fp>::random(rng, *domain));
  auto [system, ineq] = parametric_critical_system(domain, comps, alpha);
  return count_with_inequation(system, ineq, options);
}

}  // namespace

EDCertificate ed_degree_for_rig(const CameraRig& rig, const Protocol& protocol) {
  std::vector<Trial> trials;
  for (int i = 0; i < protocol.trials; ++i) {
    const std::uint64_t p = protocol.primes[i % protocol.primes.size()];
    const std::uint64_t trial_seed = Rng::mix(protocol.seed, static_cast<std::uint64_t>(i));
    trials.push_back(
        Trial{p, trial_seed, multiview_trial(rig, p, trial_seed, protocol.groebner)});
  }
  return certify(std::move(trials));
}

EDCertificate ed_degree_multiview(std::size_t n, const Protocol& protocol,
                                  const MultiviewOptions& options) {
  if (n < 2) throw InternalError("the multiview variety needs n >= 2 cameras");
  std::vector<Trial> trials;
  for (int i = 0; i < protocol.trials; ++i) {
    const std::uint64_t p = protocol.primes[i % protocol.primes.size()];
    const std::uint64_t trial_seed = Rng::mix(protocol.seed, static_cast<std::uint64_t>(i));
    const std::uint64_t rig_seed = Rng::mix(trial_seed, 0x5160);
    CameraRig rig = random_camera_rig(n, rig_seed);
    Count raw = multiview_trial(rig, p, trial_seed, protocol.groebner);
    trials.push_back(Trial{p, trial_seed, raw});

    if (options.verify_second_chart) {
      // Recount after an invertible change of the source P^3; the critical
      // points live off the moved hyperplane for generic data, so the count
      // must survive.
      Rng rng(Rng::mix(trial_seed, 0xC4A7));
      QMat m;
      do {
        m = random_matrix(rng, 4, 4);
      } while (matrix_rank(m) != 4);
      CameraRig twisted = rig;
      for (auto& a : twisted.cameras) a = matrix_product(a, m);
      Count again = multiview_trial(twisted, p, trial_seed, protocol.groebner);
      trials.push_back(Trial{p, trial_seed, again});
    }
  }
  return certify(std::move(trials));
}

std::int64_t ed_degree_closed_form(std::size_t n) {
  Rational nn(static_cast<long>(n));
  Rational value = Rational(9, 2) * nn * nn * nn - Rational(21, 2) * nn * nn +
                   Rational(8) * nn - Rational(4);
  if (!value.is_integer())
    throw NotInteger("closed form evaluated to " + value.to_string());
  return static_cast<std::int64_t>(value.numerator().get_si());
}

std::int64_t ed_degree_upper_bound(std::size_t n) {
  Rational nn(static_cast<long>(n));
  Rational value =
      Rational(6) * nn * nn * nn - Rational(15) * nn * nn + Rational(11) * nn - Rational(4);
  return static_cast<std::int64_t>(value.numerator().get_si());
}

namespace {

ordered_json matrix_to_json(const QMat& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : m) {
    ordered_json r = ordered_json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

QMat matrix_from_json(const ordered_json& rows) {
  QMat m;
  for (const auto& row : rows) {
    QVec r;
    for (const auto& x : row) r.push_back(Rational::from_string(x.get<std::string>()));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

std::string rig_to_json(const CameraRig& rig) {
  ordered_json j;
  j["n"] = rig.n;
  j["seed"] = rig.seed;
  j["cameras"] = ordered_json::array();
  for (const auto& a : rig.cameras) j["cameras"].push_back(matrix_to_json(a));
  j["chart_twists"] = ordered_json::array();
  for (const auto& t : rig.chart_twists) j["chart_twists"].push_back(matrix_to_json(t));
  return j.dump(2);
}

CameraRig rig_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  CameraRig rig;
  rig.n = j.at("n").get<std::size_t>();
  rig.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& a : j.at("cameras")) rig.cameras.push_back(matrix_from_json(a));
  for (const auto& t : j.at("chart_twists"))
    rig.chart_twists.push_back(matrix_from_json(t));
  if (rig.cameras.size() != rig.n || rig.chart_twists.size() != rig.n)
    throw Error("rig JSON is inconsistent");
  return rig;
}

}  // namespace eddeg
