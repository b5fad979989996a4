/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "partwarp/errors.hpp"

namespace partwarp {

double box_iou(const BBox &a, const BBox &b) {
  const double iw =
      std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x);
  const double ih =
      std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y);
  const double inter = iw > 0.0 && ih > 0.0 ? iw * ih : 0.0;
  const double uni = a.area() + b.area() - inter;
  if (!(uni > 0.0)) return 0.0;
  return inter / uni;
}

double mask_iou(const Mask &a, const Mask &b) {
  if (a.width != b.width || a.height != b.height)
    throw geometry_error("mask_iou: size mismatch");
  size_t inter = 0, uni = 0;
  for (size_t i = 0; i < a.on.size(); ++i) {
    const bool pa = a.on[i] != 0, pb = b.on[i] != 0;
    inter += (pa && pb) ? 1 : 0;
    uni += (pa || pb) ? 1 : 0;
  }
  if (uni == 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<double> per_target_best_iou(const std::vector<GroundTruth> &gts,
                                        const std::vector<Detection> &dets) {
  std::vector<double> best(gts.size(), 0.0);
  for (size_t g = 0; g < gts.size(); ++g)
    for (const Detection &d : dets) {
      if (d.image != gts[g].image) continue;
      best[g] = std::max(best[g], box_iou(d.box, gts[g].box));
    }
  return best;
}

namespace {

std::vector<size_t> confidence_order(const std::vector<Detection> &dets) {
  std::vector<size_t> order(dets.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return dets[a].confidence > dets[b].confidence;
  });
  return order;
}

}  // namespace

std::vector<int> greedy_match(const std::vector<Detection> &dets,
                              const std::vector<GroundTruth> &gts,
                              double iou_threshold) {
  std::vector<int> match(dets.size(), -1);
  std::vector<uint8_t> taken(gts.size(), 0);
  for (size_t di : confidence_order(dets)) {
    const Detection &d = dets[di];
    double best = 0.0;
    int best_gt = -1;
    for (size_t g = 0; g < gts.size(); ++g) {
      if (taken[g] || gts[g].image != d.image) continue;
      const double iou = box_iou(d.box, gts[g].box);
      if (iou < iou_threshold) continue;
      if (iou > best || best_gt < 0) {  // ascending scan keeps lowest index
        best = iou;
        best_gt = static_cast<int>(g);
      }
    }
    if (best_gt >= 0) {
      taken[best_gt] = 1;
      match[di] = best_gt;
    }
  }
  return match;
}

ApResult average_precision(const std::vector<Detection> &dets,
                           const std::vector<GroundTruth> &gts,
                           double iou_threshold) {
  ApResult r;
  if (gts.empty()) return r;  // recall has no denominator
  r.applicable = true;
  if (dets.empty()) return r;

  const std::vector<int> match = greedy_match(dets, gts, iou_threshold);
  std::vector<double> prec, rec;
  prec.reserve(dets.size());
  rec.reserve(dets.size());
  size_t tp = 0, fp = 0;
  for (size_t di : confidence_order(dets)) {
    if (match[di] >= 0)
      ++tp;
    else
      ++fp;
    prec.push_back(static_cast<double>(tp) / static_cast<double>(tp + fp));
    rec.push_back(static_cast<double>(tp) / static_cast<double>(gts.size()));
  }

  // interpolate: precision at each point becomes the best value at any
  // recall from here on
  for (size_t i = prec.size() - 1; i-- > 0;)
    prec[i] = std::max(prec[i], prec[i + 1]);

  double ap = 0.0, prev_recall = 0.0;
  for (size_t i = 0; i < prec.size(); ++i)
    if (rec[i] > prev_recall) {
      ap += (rec[i] - prev_recall) * prec[i];
      prev_recall = rec[i];
    }
  r.value = ap;
  return r;
}

StateAgreement state_match_rate(const std::vector<Detection> &dets,
                                const std::vector<GroundTruth> &gts,
                                const std::vector<int> &matches) {
  StateAgreement out;
  size_t agree = 0, total = 0;
  for (size_t di = 0; di < matches.size(); ++di) {
    if (matches[di] < 0) continue;
    const auto &ds = dets[di].state;
    const auto &gs = gts[static_cast<size_t>(matches[di])].state;
    if (ds.size() != gs.size())
      throw config_error("state vectors of a matched pair differ in length");
    for (size_t b = 0; b < ds.size(); ++b)
      agree += (ds[b] != 0) == (gs[b] != 0) ? 1 : 0;
    total += ds.size();
  }
  if (total == 0) return out;
  out.applicable = true;
  out.rate = static_cast<double>(agree) / static_cast<double>(total);
  return out;
}

EvalReport evaluate(const std::vector<Detection> &dets,
                    const std::vector<GroundTruth> &gts,
                    double iou_threshold) {
  EvalReport rep;
  rep.ground_truths = gts.size();
  rep.detections = dets.size();

  const std::vector<double> best = per_target_best_iou(gts, dets);
  if (!best.empty()) {
    double sum = 0.0;
    for (double v : best) sum += v;
    rep.mean_best_iou = sum / static_cast<double>(best.size());
  }

  const std::vector<int> matches = greedy_match(dets, gts, iou_threshold);
  for (int m : matches) rep.matched += m >= 0 ? 1 : 0;
  rep.ap = average_precision(dets, gts, iou_threshold);
  rep.state = state_match_rate(dets, gts, matches);
  return rep;
}

}  // namespace partwarp
