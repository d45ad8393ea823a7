#include "polycover/cost.h"

#include <cmath>

namespace polycover {

std::string toString(CostKind kind) {
  switch (kind) {
    case CostKind::kTime:
      return "time";
    case CostKind::kDistance:
      return "distance";
    case CostKind::kWaypoints:
      return "waypoints";
  }
  return "unknown";
}

CostKind costKindFromString(const std::string& name) {
  if (name == "time") return CostKind::kTime;
  if (name == "distance") return CostKind::kDistance;
  if (name == "waypoints") return CostKind::kWaypoints;
  throw CoverageError(ErrorKind::kInvalidInput, "unknown cost model '" + name + "'");
}

CostModel CostModel::time(double v_max, double a_max) {
  if (!(v_max > 0.0) || !(a_max > 0.0) || !std::isfinite(v_max) ||
      !std::isfinite(a_max)) {
    throw CoverageError(ErrorKind::kInvalidInput,
                        "velocity and acceleration limits must be positive");
  }
  return {CostKind::kTime, v_max, a_max};
}

double segmentTime(double d, double v_max, double a_max) {
  if (d < 0.0 || std::isnan(d)) {
    throw CoverageError(ErrorKind::kInvalidInput, "segment length must be nonnegative");
  }
  const double t_a = v_max / a_max;
  const double d_a = 0.5 * v_max * t_a;
  if (d < 2.0 * d_a) return std::sqrt(4.0 * d / a_max);
  return 2.0 * t_a + (d - 2.0 * d_a) / v_max;
}

double polylineCost(const Polyline& p, const CostModel& model) {
  switch (model.kind) {
    case CostKind::kWaypoints:
      return static_cast<double>(p.waypoints.size());
    case CostKind::kDistance:
      return p.length();
    case CostKind::kTime: {
      double t = 0.0;
      for (std::size_t i = 0; i + 1 < p.waypoints.size(); ++i) {
        t += segmentTime(distance(p.waypoints[i], p.waypoints[i + 1]), model.v_max,
                         model.a_max);
      }
      return t;
    }
  }
  return 0.0;
}

}  // namespace polycover
