#pragma once

#include <string>

#include "polycover/geometry.h"

namespace polycover {

enum class CostKind { kTime, kDistance, kWaypoints };

std::string toString(CostKind kind);
CostKind costKindFromString(const std::string& name);

// Scores a polyline. The time model assumes the vehicle stops at every
// waypoint and follows a trapezoidal velocity ramp in between.
struct CostModel {
  CostKind kind = CostKind::kTime;
  double v_max = 3.0;  // m/s
  double a_max = 0.5;  // m/s^2

  static CostModel time(double v_max, double a_max);
  static CostModel distance() { return {CostKind::kDistance, 3.0, 0.5}; }
  static CostModel waypoints() { return {CostKind::kWaypoints, 3.0, 0.5}; }
};

// Rest-to-rest travel time over distance d with instantaneous acceleration
// a_max up to cruise speed v_max.
double segmentTime(double d, double v_max, double a_max);

double polylineCost(const Polyline& p, const CostModel& model);

}  // namespace polycover
