// Copyright 2026 The qsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qsim/optimizers.hpp"

#include "qsim/error.hpp"
#include "qsim/random.hpp"
#include "qsim/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace qsim {

namespace {

struct BudgetExhausted {};

// Counts evaluations, rejects non-finite values and remembers the best point.
class Evaluator {
  public:
    Evaluator(const Objective &f, std::size_t budget) : f_(f), budget_(budget) {}

    double operator()(std::span<const double> x) {
        if (count_ >= budget_) {
            throw BudgetExhausted{};
        }
        ++count_;
        const double value = f_(x);
        if (!std::isfinite(value)) {
            std::ostringstream msg;
            msg << "objective returned " << value << " at [";
            for (std::size_t k = 0; k < x.size(); ++k) {
                msg << (k == 0 ? "" : ", ") << x[k];
            }
            msg << "]";
            throw Error(ErrorKind::Numerical, msg.str());
        }
        if (value < best_f_) {
            best_f_ = value;
            best_x_.assign(x.begin(), x.end());
        }
        return value;
    }

    [[nodiscard]] std::size_t count() const noexcept { return count_; }
    [[nodiscard]] std::size_t remaining() const noexcept { return budget_ - count_; }
    [[nodiscard]] double best_f() const noexcept { return best_f_; }
    [[nodiscard]] const std::vector<double> &best_x() const noexcept { return best_x_; }

  private:
    const Objective &f_;
    std::size_t budget_;
    std::size_t count_ = 0;
    double best_f_ = std::numeric_limits<double>::infinity();
    std::vector<double> best_x_;
};

using Point = std::vector<double>;

// One Nelder-Mead run from a fresh simplex around x0. Returns true when the
// stopping rule fired.
bool nelder_mead(Evaluator &eval, const Point &x0, const OptimizerSpec &spec,
                 std::vector<double> &history, double &start_f) {
    constexpr double kReflect = 1.0;
    constexpr double kExpand = 2.0;
    constexpr double kContract = 0.5;
    constexpr double kShrink = 0.5;
    const std::size_t d = x0.size();

    std::vector<Point> xs(d + 1, x0);
    std::vector<double> fs(d + 1);
    fs[0] = eval(xs[0]);
    start_f = fs[0];
    for (std::size_t i = 0; i < d; ++i) {
        xs[i + 1][i] += spec.initial_step;
        fs[i + 1] = eval(xs[i + 1]);
    }

    const std::size_t window = 10 * d;
    const std::size_t first = history.size();
    std::vector<std::size_t> order(d + 1);
    Point centroid(d);
    Point trial(d);
    const auto along = [&](const Point &from, const Point &to, double t) {
        Point p(d);
        for (std::size_t k = 0; k < d; ++k) p[k] = from[k] + t * (to[k] - from[k]);
        return p;
    };

    for (;;) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        std::vector<Point> sx(d + 1);
        std::vector<double> sf(d + 1);
        for (std::size_t i = 0; i <= d; ++i) {
            sx[i] = std::move(xs[order[i]]);
            sf[i] = fs[order[i]];
        }
        xs = std::move(sx);
        fs = std::move(sf);
        history.push_back(fs[0]);

        double diameter = 0.0;
        for (std::size_t i = 1; i <= d; ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                diameter = std::max(diameter, std::abs(xs[i][k] - xs[0][k]));
            }
        }
        if (fs[d] - fs[0] <= spec.tolerance || diameter <= spec.xtol) {
            return true;
        }
        // Stagnation: the best vertex has not moved by more than the
        // tolerance for a window of iterations.
        if (history.size() > window + first &&
            history[history.size() - 1 - window] - fs[0] <= spec.tolerance) {
            return true;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < d; ++k) centroid[k] += xs[i][k] / static_cast<double>(d);
        }
        // reflection: c + a (c - worst)
        const Point xr = along(centroid, xs[d], -kReflect);
        const double fr = eval(xr);
        if (fr < fs[0]) {
            const Point xe = along(centroid, xr, kExpand);
            const double fe = eval(xe);
            if (fe < fr) {
                xs[d] = xe;
                fs[d] = fe;
            } else {
                xs[d] = xr;
                fs[d] = fr;
            }
            continue;
        }
        if (fr < fs[d - 1]) {
            xs[d] = xr;
            fs[d] = fr;
            continue;
        }
        const bool outside = fr < fs[d];
        const Point xc = outside ? along(centroid, xr, kContract) : along(centroid, xs[d], kContract);
        const double fc = eval(xc);
        if (outside ? fc <= fr : fc < fs[d]) {
            xs[d] = xc;
            fs[d] = fc;
            continue;
        }
        for (std::size_t i = 1; i <= d; ++i) {
            xs[i] = along(xs[0], xs[i], kShrink);
            fs[i] = eval(xs[i]);
        }
    }
}

bool simplex(Evaluator &eval, const Point &x0, const OptimizerSpec &spec,
             std::vector<double> &history) {
    Point start = x0;
    OptimizerSpec stage = spec;
    for (;;) {
        double previous = 0.0;
        nelder_mead(eval, start, stage, history, previous);
        // Restart around the best vertex; stop once a run (the first one
        // included) fails to improve on its starting point.
        if (previous - eval.best_f() <= spec.tolerance) {
            return true;
        }
        // Later restarts only repair a collapsed simplex, so they start small.
        stage.initial_step = 0.1 * spec.initial_step;
        start = eval.best_x();
    }
}

bool evolution_strategy(Evaluator &eval, const Point &x0, const OptimizerSpec &spec,
                        std::vector<double> &history) {
    constexpr std::size_t kMu = 4;
    constexpr std::size_t kLambda = 12;
    constexpr double kAdapt = 0.85;
    Rng rng(spec.seed);
    double sigma = spec.initial_step;
    const std::size_t d = x0.size();

    struct Member {
        Point x;
        double f;
    };
    std::vector<Member> parents;
    parents.push_back({x0, eval(x0)});
    while (parents.size() < kMu) {
        Point x = x0;
        for (double &v : x) v += sigma * rng.normal();
        const double f = eval(x);
        parents.push_back({std::move(x), f});
    }
    const auto by_value = [](const Member &a, const Member &b) { return a.f < b.f; };
    std::stable_sort(parents.begin(), parents.end(), by_value);

    for (;;) {
        history.push_back(parents.front().f);
        if (sigma <= spec.xtol) {
            return true;
        }
        std::vector<Member> pool = parents;
        std::size_t successes = 0;
        for (std::size_t k = 0; k < kLambda; ++k) {
            const Member &parent = parents[k % kMu];
            Point x = parent.x;
            for (std::size_t j = 0; j < d; ++j) x[j] += sigma * rng.normal();
            const double f = eval(x);
            if (f < parent.f) ++successes;
            pool.push_back({std::move(x), f});
        }
        std::stable_sort(pool.begin(), pool.end(), by_value);
        pool.resize(kMu);
        parents = std::move(pool);
        const double rate = static_cast<double>(successes) / static_cast<double>(kLambda);
        if (rate > 0.2) {
            sigma /= kAdapt;
        } else if (rate < 0.2) {
            sigma *= kAdapt;
        }
    }
}

bool shift_descent(Evaluator &eval, const Point &x0, const OptimizerSpec &spec,
                   std::vector<double> &history) {
    Point x = x0;
    double f = eval(x);
    const Objective counted = [&](std::span<const double> p) { return eval(p); };
    for (;;) {
        history.push_back(eval.best_f());
        const std::vector<double> grad = parameter_shift_gradient(counted, x);
        for (std::size_t k = 0; k < x.size(); ++k) x[k] -= spec.learning_rate * grad[k];
        const double next = eval(x);
        if (std::abs(next - f) <= spec.tolerance) {
            history.push_back(eval.best_f());
            return true;
        }
        f = next;
    }
}

} // namespace

std::string_view to_string(OptimizerMethod method) noexcept {
    switch (method) {
    case OptimizerMethod::Simplex: return "simplex";
    case OptimizerMethod::EvolutionStrategy: return "evolution-strategy";
    case OptimizerMethod::ParameterShiftDescent: return "parameter-shift-descent";
    }
    return "unknown";
}

OptimizerMethod parse_optimizer_method(std::string_view name) {
    for (const auto m : {OptimizerMethod::Simplex, OptimizerMethod::EvolutionStrategy,
                         OptimizerMethod::ParameterShiftDescent}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    throw Error(ErrorKind::NotFound, "unknown optimizer '" + std::string(name) + "'");
}

std::vector<double> parameter_shift_gradient(const Objective &f, std::span<const double> x) {
    std::vector<double> grad(x.size());
    std::vector<double> shifted(x.begin(), x.end());
    for (std::size_t k = 0; k < x.size(); ++k) {
        shifted[k] = x[k] + kPi / 2;
        const double plus = f(shifted);
        shifted[k] = x[k] - kPi / 2;
        const double minus = f(shifted);
        shifted[k] = x[k];
        grad[k] = 0.5 * (plus - minus);
    }
    return grad;
}

OptimizeResult minimize(const Objective &f, std::vector<double> x0, const OptimizerSpec &spec) {
    if (x0.empty()) {
        throw Error(ErrorKind::InvalidArgument, "cannot minimize over zero parameters");
    }
    if (spec.budget == 0) {
        throw Error(ErrorKind::InvalidArgument, "optimizer budget must be at least 1");
    }
    Evaluator eval(f, spec.budget);
    OptimizeResult result;
    try {
        switch (spec.method) {
        case OptimizerMethod::Simplex:
            result.converged = simplex(eval, x0, spec, result.history);
            break;
        case OptimizerMethod::EvolutionStrategy:
            result.converged = evolution_strategy(eval, x0, spec, result.history);
            break;
        case OptimizerMethod::ParameterShiftDescent:
            result.converged = shift_descent(eval, x0, spec, result.history);
            break;
        }
    } catch (const BudgetExhausted &) {
        result.converged = false;
        result.history.push_back(eval.best_f());
    }
    result.x = eval.best_x();
    result.f = eval.best_f();
    result.evaluations = eval.count();
    return result;
}

} // namespace qsim
