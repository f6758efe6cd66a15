#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eddeg/critical.hpp"
#include "eddeg/linalg.hpp"
#include "eddeg/variety.hpp"

namespace eddeg {

// n full-rank 3x4 cameras with pairwise distinct centers, plus one
// invertible 3x3 chart twist per camera fixing a generic affine chart of
// its image plane. Deterministic for a given seed.
struct CameraRig {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<QMat> cameras;       // 3x4 each
  std::vector<QMat> chart_twists;  // 3x3 each
};

CameraRig random_camera_rig(std::size_t n, std::uint64_t seed);

// Joint-projection map in one affine chart: for camera i the two components
// are rows 1 and 2 of (twist * camera) applied to (y,1), divided by row 3.
struct MultiviewMap {
  RingPtr domain;  // y1, y2, y3
  std::vector<std::pair<PolyQ, PolyQ>> components;  // 2n entries
};

MultiviewMap multiview_map(const CameraRig& rig);

struct MultiviewOptions {
  // Rerun each trial with the cameras composed with a random invertible 4x4
  // change of the source space and require the same count.
  bool verify_second_chart = false;
};

// ED degree of the joint image of n cameras in a generic affine chart,
// computed by the parametric critical route. Fresh rig and data point per
// trial.
EDCertificate ed_degree_multiview(std::size_t n, const Protocol& protocol,
                                  const MultiviewOptions& options = {});

// Same count for one fixed rig, fresh data point per trial.
EDCertificate ed_degree_for_rig(const CameraRig& rig, const Protocol& protocol);

// Exact evaluation of the closed form 9/2 n^3 - 21/2 n^2 + 8n - 4; throws
// NotInteger if the arithmetic ever failed to clear denominators.
std::int64_t ed_degree_closed_form(std::size_t n);

// Known cubic upper bound 6n^3 - 15n^2 + 11n - 4.
std::int64_t ed_degree_upper_bound(std::size_t n);

// JSON round-trip for rigs; matrices are arrays of rational strings.
std::string rig_to_json(const CameraRig& rig);
CameraRig rig_from_json(const std::string& text);

}  // namespace eddeg
