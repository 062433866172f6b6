// Copyright 2026 The xyzhea Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "xyzhea/bfgs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "xyzhea/error.hpp"

namespace xyzhea {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

struct Point {
    double alpha = 0.0;
    double f = 0.0;
    double slope = 0.0; // directional derivative
    std::vector<double> x;
    std::vector<double> g;
};

class LineSearch {
  public:
    LineSearch(const ObjectiveWithGradient &objective, const BfgsConfig &config,
               std::span<const double> x, std::span<const double> p, double f0, double slope0,
               int &evaluations)
        : objective_(objective), config_(config), x_(x), p_(p), f0_(f0), slope0_(slope0),
          evaluations_(evaluations) {}

    std::optional<Point> run(double alpha0) {
        Point prev{0.0, f0_, slope0_, {}, {}};
        double alpha = alpha0;
        for (int i = 0; budget_left(); ++i) {
            Point cur = evaluate(alpha);
            if (!armijo(cur) || (i > 0 && cur.f >= prev.f)) {
                return zoom(std::move(prev), std::move(cur));
            }
            if (std::abs(cur.slope) <= -config_.c2 * slope0_) {
                return cur;
            }
            if (cur.slope >= 0.0) {
                return zoom(std::move(cur), std::move(prev));
            }
            prev = std::move(cur);
            alpha *= 2.0;
        }
        return best_;
    }

  private:
    bool budget_left() const { return used_ < config_.max_line_search_evaluations; }

    bool armijo(const Point &pt) const {
        return pt.f <= f0_ + config_.c1 * pt.alpha * slope0_ && pt.f < f0_;
    }

    Point evaluate(double alpha) {
        Point pt;
        pt.alpha = alpha;
        pt.x.resize(x_.size());
        pt.g.resize(x_.size());
        for (std::size_t i = 0; i < x_.size(); ++i) {
            pt.x[i] = x_[i] + alpha * p_[i];
        }
        pt.f = objective_(pt.x, pt.g);
        ++used_;
        ++evaluations_;
        if (std::isnan(pt.f)) {
            throw NumericalError("objective returned NaN at step " + std::to_string(alpha),
                                 std::numeric_limits<double>::quiet_NaN());
        }
        pt.slope = dot(pt.g, p_);
        if (armijo(pt) && (!best_ || pt.f < best_->f)) {
            best_ = pt;
        }
        return pt;
    }

    // lo satisfies Armijo with the lowest f seen so far; the minimiser lies
    // between lo and hi.
    std::optional<Point> zoom(Point lo, Point hi) {
        while (budget_left()) {
            const double a = lo.alpha, b = hi.alpha;
            const double width = std::abs(b - a);
            if (width <= 1e-14 * std::max(1.0, std::abs(a))) {
                break;
            }
            double trial = cubic_minimizer(lo, hi);
            const double left = std::min(a, b) + 0.1 * width;
            const double right = std::max(a, b) - 0.1 * width;
            if (!std::isfinite(trial) || trial < left || trial > right) {
                trial = 0.5 * (a + b);
            }
            Point cur = evaluate(trial);
            if (!armijo(cur) || cur.f >= lo.f) {
                hi = std::move(cur);
            } else {
                if (std::abs(cur.slope) <= -config_.c2 * slope0_) {
                    return cur;
                }
                if (cur.slope * (hi.alpha - lo.alpha) >= 0.0) {
                    hi = std::move(lo);
                }
                lo = std::move(cur);
            }
        }
        return best_;
    }

    static double cubic_minimizer(const Point &p0, const Point &p1) {
        const double d1 = p0.slope + p1.slope - 3.0 * (p0.f - p1.f) / (p0.alpha - p1.alpha);
        const double disc = d1 * d1 - p0.slope * p1.slope;
        if (disc < 0.0) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        const double d2 = std::copysign(std::sqrt(disc), p1.alpha - p0.alpha);
        return p1.alpha - (p1.alpha - p0.alpha) * (p1.slope + d2 - d1) /
                              (p1.slope - p0.slope + 2.0 * d2);
    }

    const ObjectiveWithGradient &objective_;
    const BfgsConfig &config_;
    std::span<const double> x_;
    std::span<const double> p_;
    double f0_;
    double slope0_;
    int &evaluations_;
    int used_ = 0;
    std::optional<Point> best_;
};

} // namespace

std::string_view bfgs_status_name(BfgsStatus s) noexcept {
    switch (s) {
    case BfgsStatus::Converged: return "converged";
    case BfgsStatus::MaxIterations: return "max_iterations";
    case BfgsStatus::LineSearchFailed: return "line_search_failed";
    }
    return "?";
}

BfgsResult minimize_bfgs(const ObjectiveWithGradient &objective, std::span<const double> x0,
                         const BfgsConfig &config) {
    if (config.max_iterations < 1) {
        throw InputError("max_iterations must be >= 1");
    }
    const std::size_t n = x0.size();
    for (double v : x0) {
        if (!std::isfinite(v)) {
            throw InputError("BFGS start point is not finite");
        }
    }
    BfgsResult res;
    res.x.assign(x0.begin(), x0.end());
    res.gradient.assign(n, 0.0);
    res.f = objective(res.x, res.gradient);
    res.evaluations = 1;
    if (std::isnan(res.f)) {
        throw NumericalError("objective returned NaN at the start point",
                             std::numeric_limits<double>::quiet_NaN());
    }

    // Inverse Hessian, row-major.
    std::vector<double> hinv(n * n, 0.0);
    auto reset = [&] {
        std::fill(hinv.begin(), hinv.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            hinv[i * n + i] = 1.0;
        }
    };
    reset();
    bool is_identity = true;
    bool scaled = false;
    std::vector<double> p(n), s(n), y(n), hy(n);

    res.status = BfgsStatus::MaxIterations;
    int it = 0;
    for (; it < config.max_iterations; ++it) {
        if (max_abs(res.gradient) <= config.gradient_tolerance) {
            res.status = BfgsStatus::Converged;
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            const double *row = &hinv[i * n];
            for (std::size_t j = 0; j < n; ++j) {
                acc += row[j] * res.gradient[j];
            }
            p[i] = -acc;
        }
        double slope = dot(res.gradient, p);
        if (!(slope < 0.0)) {
            reset();
            is_identity = true;
            for (std::size_t i = 0; i < n; ++i) {
                p[i] = -res.gradient[i];
            }
            slope = dot(res.gradient, p);
        }
        const double alpha0 =
            is_identity && !scaled ? std::min(1.0, 1.0 / std::sqrt(dot(res.gradient, res.gradient)))
                                   : 1.0;
        LineSearch ls(objective, config, res.x, p, res.f, slope, res.evaluations);
        std::optional<Point> step = ls.run(alpha0);
        if (!step) {
            if (!is_identity) {
                reset();
                is_identity = true;
                scaled = false;
                continue;
            }
            res.status = BfgsStatus::LineSearchFailed;
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = step->x[i] - res.x[i];
            y[i] = step->g[i] - res.gradient[i];
        }
        res.x = std::move(step->x);
        res.gradient = std::move(step->g);
        res.f = step->f;

        const double sy = dot(s, y);
        if (sy > 1e-300) {
            if (!scaled) {
                const double yy = dot(y, y);
                const double factor = sy / yy;
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                        hinv[i * n + j] *= factor;
                    }
                }
                scaled = true;
            }
            const double rho = 1.0 / sy;
            for (std::size_t i = 0; i < n; ++i) {
                double acc = 0.0;
                const double *row = &hinv[i * n];
                for (std::size_t j = 0; j < n; ++j) {
                    acc += row[j] * y[j];
                }
                hy[i] = acc;
            }
            const double yhy = dot(y, hy);
            const double ss_coef = rho + rho * rho * yhy;
            for (std::size_t i = 0; i < n; ++i) {
                double *row = &hinv[i * n];
                for (std::size_t j = 0; j < n; ++j) {
                    row[j] += ss_coef * s[i] * s[j] - rho * (hy[i] * s[j] + s[i] * hy[j]);
                }
            }
            is_identity = false;
        }
    }
    res.iterations = it;
    return res;
}

} // namespace xyzhea
