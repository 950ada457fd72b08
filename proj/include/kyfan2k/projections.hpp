#pragma once

#include <span>
#include <vector>

namespace kyfan2k {

/// Euclidean projection onto {y : sum of the k largest y_i^2 <= radius^2},
/// the unit ball of the gauge behind the Ky Fan 2-k-norm. Preserves the signs
/// and the ordering of |x|; x itself is returned when already inside.
std::vector<double> project_gauge2k_ball(std::span<const double> x, int k, double radius = 1.0);

/// Euclidean projection onto {y : sum of the k largest |y_i| <= radius}, the
/// gauge ball behind the Ky Fan k-norm.
std::vector<double> project_topk_sum_ball(std::span<const double> x, int k, double radius = 1.0);

struct EpiPoint {
    std::vector<double> y;
    double s = 0.0;
};

/// Joint Euclidean projection of (x, t) onto {(y, s) : gauge_2k(y, k) <= s}.
EpiPoint project_gauge2k_epigraph(std::span<const double> x, double t, int k);

/// Joint Euclidean projection of (x, t) onto {(y, s) : max_i |y_i| <= c * s}.
EpiPoint project_linf_epigraph(std::span<const double> x, double t, double c);

}  // namespace kyfan2k
