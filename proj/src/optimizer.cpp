// Copyright 2026 The VOQE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "voqe/optimizer.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace voqe {

RealVector gradient(const CostFn& cost, std::span<const double> theta, double h) {
  if (!(h > 0.0)) throw InvalidArgument("gradient: step must be positive");
  std::vector<double> x(theta.begin(), theta.end());
  RealVector g(static_cast<Eigen::Index>(x.size()));
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double orig = x[k];
    x[k] = orig + h;
    const double up = cost(x);
    x[k] = orig - h;
    const double down = cost(x);
    x[k] = orig;
    g(static_cast<Eigen::Index>(k)) = (up - down) / (2.0 * h);
  }
  return g;
}

CostGradFn with_finite_differences(CostFn cost, double h) {
  return [cost = std::move(cost), h](std::span<const double> theta, std::span<double> grad) {
    const RealVector g = gradient(cost, theta, h);
    for (std::size_t k = 0; k < grad.size(); ++k) grad[k] = g(static_cast<Eigen::Index>(k));
    return cost(theta);
  };
}

namespace {

struct Sample {
  double alpha = 0.0;
  double f = 0.0;
  double slope = 0.0;  // directional derivative g . p
  RealVector g;
};

class LineSearch {
 public:
  LineSearch(const CostGradFn& cost, const RealVector& x, const RealVector& p, double f0, double slope0,
             const MinimizeOptions& opt, int& evaluations)
      : cost_(cost), x_(x), p_(p), f0_(f0), slope0_(slope0), opt_(opt), evaluations_(evaluations) {}

  // Strong-Wolfe search; returns false when no point with sufficient decrease was found.
  bool run(double alpha0, Sample& out) {
    Sample prev{0.0, f0_, slope0_, RealVector()};
    double alpha = alpha0;
    for (int i = 0; i < kMaxBracket; ++i) {
      Sample cur = eval(alpha);
      if (!std::isfinite(cur.f) || cur.f > f0_ + opt_.c1 * alpha * slope0_ || (i > 0 && cur.f >= prev.f)) {
        return zoom(prev, cur, out);
      }
      if (std::abs(cur.slope) <= -opt_.c2 * slope0_) {
        out = std::move(cur);
        return true;
      }
      if (cur.slope >= 0.0) return zoom(cur, prev, out);
      prev = std::move(cur);
      alpha *= 2.0;
    }
    out = std::move(prev);
    return out.alpha > 0.0;
  }

 private:
  static constexpr int kMaxBracket = 30;
  static constexpr int kMaxZoom = 40;

  Sample eval(double alpha) {
    Sample s;
    s.alpha = alpha;
    const RealVector xt = x_ + alpha * p_;
    s.g.resize(x_.size());
    s.f = cost_(std::span<const double>(xt.data(), static_cast<std::size_t>(xt.size())),
                std::span<double>(s.g.data(), static_cast<std::size_t>(s.g.size())));
    s.slope = s.g.dot(p_);
    ++evaluations_;
    return s;
  }

  bool zoom(Sample lo, Sample hi, Sample& out) {
    for (int j = 0; j < kMaxZoom; ++j) {
      double alpha = cubic_min(lo, hi);
      const double a = std::min(lo.alpha, hi.alpha);
      const double b = std::max(lo.alpha, hi.alpha);
      const double margin = 0.1 * (b - a);
      if (!std::isfinite(alpha) || alpha < a + margin || alpha > b - margin) alpha = 0.5 * (a + b);
      if (b - a < 1e-16 * std::max(1.0, b)) break;
      Sample cur = eval(alpha);
      if (!std::isfinite(cur.f) || cur.f > f0_ + opt_.c1 * alpha * slope0_ || cur.f >= lo.f) {
        hi = std::move(cur);
      } else {
        if (std::abs(cur.slope) <= -opt_.c2 * slope0_) {
          out = std::move(cur);
          return true;
        }
        if (cur.slope * (hi.alpha - lo.alpha) >= 0.0) hi = lo;
        lo = std::move(cur);
      }
    }
    // Curvature condition not met; lo still satisfies sufficient decrease.
    out = std::move(lo);
    return out.alpha > 0.0 && out.f < f0_;
  }

  static double cubic_min(const Sample& s0, const Sample& s1) {
    const double d1 = s0.slope + s1.slope - 3.0 * (s0.f - s1.f) / (s0.alpha - s1.alpha);
    const double rad = d1 * d1 - s0.slope * s1.slope;
    if (rad < 0.0) return std::numeric_limits<double>::quiet_NaN();
    const double d2 = std::copysign(std::sqrt(rad), s1.alpha - s0.alpha);
    return s1.alpha - (s1.alpha - s0.alpha) * (s1.slope + d2 - d1) / (s1.slope - s0.slope + 2.0 * d2);
  }

  const CostGradFn& cost_;
  const RealVector& x_;
  const RealVector& p_;
  double f0_;
  double slope0_;
  const MinimizeOptions& opt_;
  int& evaluations_;
};

}  // namespace

RunRecord minimize(const CostGradFn& cost, const RealVector& theta0, const MinimizeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.theta_init = theta0;
  const Eigen::Index dim = theta0.size();

  RealVector x = theta0;
  RealVector g(dim);
  double f = cost(std::span<const double>(x.data(), static_cast<std::size_t>(dim)),
                  std::span<double>(g.data(), static_cast<std::size_t>(dim)));
  rec.evaluations = 1;
  if (!std::isfinite(f)) throw InvalidArgument("minimize: initial cost is not finite");
  rec.cost_history.push_back({0, f});

  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(dim, dim);
  bool fresh_h = true;
  int iter = 0;
  rec.status = "max_iter";
  while (true) {
    if (f < options.cost_tol) {
      rec.converged = true;
      rec.status = "cost_tol";
      break;
    }
    if (g.norm() < options.grad_tol) {
      rec.converged = true;
      rec.status = "grad_tol";
      break;
    }
    if (iter >= options.max_iter) break;

    RealVector p = -h * g;
    double slope = g.dot(p);
    if (!(slope < 0.0)) {
      h.setIdentity();
      fresh_h = true;
      p = -g;
      slope = g.dot(p);
    }
    const double alpha0 = fresh_h ? std::min(1.0, 1.0 / g.norm()) : 1.0;
    Sample step;
    LineSearch search(cost, x, p, f, slope, options, rec.evaluations);
    if (!search.run(alpha0, step)) {
      if (!fresh_h) {
        h.setIdentity();
        fresh_h = true;
        continue;
      }
      rec.status = "line_search_failed";
      break;
    }

    const RealVector s = step.alpha * p;
    const RealVector y = step.g - g;
    x += s;
    f = step.f;
    g = step.g;
    ++iter;
    rec.cost_history.push_back({iter, f});

    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      if (fresh_h) {
        h *= sy / y.dot(y);
        fresh_h = false;
      }
      const double rho = 1.0 / sy;
      const RealVector hy = h * y;
      // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T, expanded.
      h += (rho * rho * y.dot(hy) + rho) * (s * s.transpose()) - rho * (hy * s.transpose() + s * hy.transpose());
    }
  }

  rec.theta_final = x;
  rec.final_cost = f;
  rec.iterations = iter;
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace voqe
