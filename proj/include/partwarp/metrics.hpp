/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <vector>

#include "partwarp/depth_map.hpp"

namespace partwarp {

/* Axis-aligned box in pixel coordinates, top-left origin. */
struct BBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double area() const { return w * h; }
};

/* Intersection over union; 0 when the union is empty. */
double box_iou(const BBox &a, const BBox &b);
double mask_iou(const Mask &a, const Mask &b);

struct Detection {
  int image = 0;  // group key: detections only match targets with the same key
  BBox box;
  double confidence = 0.0;
  std::vector<uint8_t> state;
};

struct GroundTruth {
  int image = 0;
  BBox box;
  std::vector<uint8_t> state;
};

/* Best box IoU per ground truth over every same-image detection,
 * regardless of confidence and without claiming matches. */
std::vector<double> per_target_best_iou(const std::vector<GroundTruth> &gts,
                                        const std::vector<Detection> &dets);

/* Exclusive matching: detections in descending confidence order (stable)
 * each claim the free same-image target of highest IoU >= threshold, ties
 * broken toward the lowest target index.  Returns the claimed target
 * index per detection, -1 where unmatched, aligned with `dets`. */
std::vector<int> greedy_match(const std::vector<Detection> &dets,
                              const std::vector<GroundTruth> &gts,
                              double iou_threshold);

struct ApResult {
  double value = 0.0;
  bool applicable = false;  // false when there are no targets
};

/* All-point interpolated average precision at one IoU threshold. */
ApResult average_precision(const std::vector<Detection> &dets,
                           const std::vector<GroundTruth> &gts,
                           double iou_threshold);

struct StateAgreement {
  double rate = 0.0;
  bool applicable = false;  // false when nothing matched
};

/* Fraction of agreeing state bits across all matched pairs.  `matches`
 * must come from greedy_match over the same inputs. */
StateAgreement state_match_rate(const std::vector<Detection> &dets,
                                const std::vector<GroundTruth> &gts,
                                const std::vector<int> &matches);

struct EvalReport {
  size_t ground_truths = 0;
  size_t detections = 0;
  size_t matched = 0;
  double mean_best_iou = 0.0;  // over targets; 0 when there are none
  ApResult ap;
  StateAgreement state;
};

EvalReport evaluate(const std::vector<Detection> &dets,
                    const std::vector<GroundTruth> &gts, double iou_threshold);

}  // namespace partwarp
