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

#pragma once

#include <span>
#include <string>
#include <vector>

namespace qem {

/// One measured point of an extrapolation series. std_error is carried for
/// reporting only; fits minimize unweighted squared residuals.
struct SeriesPoint {
  double x = 0;
  double value = 0;
  double std_error = 0;
};

enum class FitKind { Linear, Exponential, Richardson };

std::string fit_kind_name(FitKind k);
FitKind fit_kind_from_name(const std::string& name);

/// Fitted extrapolation model. Linear uses (a, b) as (intercept, slope);
/// exponential is a * b^x + c; Richardson stores the quadrature weights.
struct FitResult {
  FitKind kind = FitKind::Linear;
  double a = 0;
  double b = 0;
  double c = 0;
  std::vector<double> weights;  // Richardson only
  double residual_ss = 0;
  double target = 0;
  double extrapolated = 0;
};

/// Ordinary least squares line through >= 2 points.
FitResult fit_linear(std::span<const SeriesPoint> points, double target);

/// Least-squares a * b^x + c with b restricted to [b_lo, b_hi], solved by a
/// dense grid over b (step b_step) with the exact linear solve in (a, c) at
/// each grid value. Ties keep the smallest b. Needs >= 3 points.
FitResult fit_exponential(std::span<const SeriesPoint> points, double target,
                          double b_lo = 0.6, double b_hi = 1.2,
                          double b_step = 1e-4);

/// Richardson extrapolation to 0: weights g solve sum g_i = 1 and
/// sum g_i x_i^j = 0 for j = 1..k-1. Abscissas must be distinct.
FitResult richardson(std::span<const SeriesPoint> points);

FitResult fit_series(FitKind kind, std::span<const SeriesPoint> points, double target);

/// CSV row in the fixed schema
/// `kind,a|alpha,b|beta,c,residual_ss,target,extrapolated` (Richardson rows
/// leave the parameter columns empty).
std::string fit_csv_header();
std::string fit_csv_row(const FitResult& fit);

}  // namespace qem
