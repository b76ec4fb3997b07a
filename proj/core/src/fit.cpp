// Copyright 2026 The qemlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qemlab/fit.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qem {

namespace {

void check_series(std::span<const SeriesPoint> points, size_t min_points,
                  const char* who) {
  if (points.size() < min_points) {
    throw std::invalid_argument(std::string(who) + ": too few points");
  }
  for (size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].x > points[i - 1].x)) {
      throw std::invalid_argument(std::string(who) +
                                  ": abscissas must be strictly increasing");
    }
  }
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string fit_kind_name(FitKind k) {
  switch (k) {
    case FitKind::Linear: return "linear";
    case FitKind::Exponential: return "exponential";
    case FitKind::Richardson: return "richardson";
  }
  return "?";
}

FitKind fit_kind_from_name(const std::string& name) {
  if (name == "linear") return FitKind::Linear;
  if (name == "exponential") return FitKind::Exponential;
  if (name == "richardson") return FitKind::Richardson;
  throw std::invalid_argument("unknown fit kind: " + name);
}

FitResult fit_linear(std::span<const SeriesPoint> points, double target) {
  check_series(points, 2, "fit_linear");
  const double m = static_cast<double>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    sx += p.x;
    sy += p.value;
    sxx += p.x * p.x;
    sxy += p.x * p.value;
  }
  const double det = m * sxx - sx * sx;
  const double slope = (m * sxy - sx * sy) / det;
  const double intercept = (sy - slope * sx) / m;
  FitResult r;
  r.kind = FitKind::Linear;
  r.a = intercept;
  r.b = slope;
  r.target = target;
  r.extrapolated = intercept + slope * target;
  for (const auto& p : points) {
    const double e = p.value - (intercept + slope * p.x);
    r.residual_ss += e * e;
  }
  return r;
}

FitResult fit_exponential(std::span<const SeriesPoint> points, double target,
                          double b_lo, double b_hi, double b_step) {
  check_series(points, 3, "fit_exponential");
  if (!(b_lo > 0) || !(b_hi >= b_lo) || !(b_step > 0)) {
    throw std::invalid_argument("fit_exponential: bad b bounds");
  }
  const size_t m = points.size();
  double sy = 0;
  for (const auto& p : points) sy += p.value;
  const double mean_y = sy / static_cast<double>(m);

  double best_b = b_lo, best_a = 0, best_c = mean_y;
  double best_ss = -1;
  const auto steps = static_cast<size_t>(std::ceil((b_hi - b_lo) / b_step)) + 1;
  for (size_t k = 0; k <= steps; ++k) {
    const double b = k == steps ? b_hi
                                : std::min(b_hi, b_lo + static_cast<double>(k) * b_step);
    // Exact least squares in (a, c) with u_i = b^{x_i}.
    double su = 0, suu = 0, suy = 0;
    for (const auto& p : points) {
      const double u = std::pow(b, p.x);
      su += u;
      suu += u * u;
      suy += u * p.value;
    }
    const double det = suu * static_cast<double>(m) - su * su;
    double a, c;
    if (std::abs(det) < 1e-12 * std::max(1.0, suu * static_cast<double>(m))) {
      a = 0;  // constant model; b^x indistinguishable from the offset
      c = mean_y;
    } else {
      a = (static_cast<double>(m) * suy - su * sy) / det;
      c = (suu * sy - su * suy) / det;
    }
    double ss = 0;
    for (const auto& p : points) {
      const double e = p.value - (a * std::pow(b, p.x) + c);
      ss += e * e;
    }
    if (best_ss < 0 || ss < best_ss) {  // strict: ties keep the smallest b
      best_ss = ss;
      best_b = b;
      best_a = a;
      best_c = c;
    }
    if (k == steps) break;
  }
  FitResult r;
  r.kind = FitKind::Exponential;
  r.a = best_a;
  r.b = best_b;
  r.c = best_c;
  r.residual_ss = best_ss;
  r.target = target;
  r.extrapolated = best_a * std::pow(best_b, target) + best_c;
  return r;
}

FitResult richardson(std::span<const SeriesPoint> points) {
  check_series(points, 2, "richardson");
  const size_t k = points.size();
  FitResult r;
  r.kind = FitKind::Richardson;
  r.target = 0;
  r.weights.resize(k);
  for (size_t i = 0; i < k; ++i) {
    // g_i = prod_{j != i} x_j / (x_j - x_i); solves the Vandermonde system.
    double w = 1;
    for (size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      const double denom = points[j].x - points[i].x;
      if (denom == 0) throw std::invalid_argument("richardson: duplicate abscissas");
      w *= points[j].x / denom;
    }
    r.weights[i] = w;
    r.extrapolated += w * points[i].value;
  }
  return r;
}

FitResult fit_series(FitKind kind, std::span<const SeriesPoint> points, double target) {
  switch (kind) {
    case FitKind::Linear: return fit_linear(points, target);
    case FitKind::Exponential: return fit_exponential(points, target);
    case FitKind::Richardson: return richardson(points);
  }
  throw std::logic_error("fit_series: bad kind");
}

std::string fit_csv_header() {
  return "kind,a|alpha,b|beta,c,residual_ss,target,extrapolated";
}

std::string fit_csv_row(const FitResult& fit) {
  std::string row = fit_kind_name(fit.kind);
  if (fit.kind == FitKind::Richardson) {
    row += ",,,";
  } else if (fit.kind == FitKind::Linear) {
    row += "," + format_value(fit.a) + "," + format_value(fit.b) + ",";
  } else {
    row += "," + format_value(fit.a) + "," + format_value(fit.b) + "," +
           format_value(fit.c);
  }
  row += "," + format_value(fit.residual_ss);
  row += "," + format_value(fit.target);
  row += "," + format_value(fit.extrapolated);
  return row;
}

}  // namespace qem
