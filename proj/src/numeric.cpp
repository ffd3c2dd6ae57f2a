// Copyright 2026 fracalc developers
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

#include "numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <utility>

#include "errors.hpp"
#include "special_functions.hpp"

namespace fracalc {

namespace {

// Neumaier-compensated accumulator; quadrature sums and difference stencils
// must not add their own noise on top of the node error.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Implicit-QL diagonalization of a symmetric tridiagonal matrix (EISPACK
// lineage). d holds the diagonal, e the subdiagonal in e[0..n-2]; z is
// rotated along and returns the first components of the eigenvectors.
// Eigenvalues come back sorted ascending.
void imtqlx(std::vector<double>& d, std::vector<double>& e,
            std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  const double prec = std::numeric_limits<double>::epsilon();
  e.resize(n, 0.0);
  e[n - 1] = 0.0;

  for (int l = 1; l <= n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      for (; m <= n; ++m) {
        if (m == n) break;
        if (std::abs(e[m - 1]) <= prec * (std::abs(d[m - 1]) + std::abs(d[m])))
          break;
      }
      if (m == l) break;
      if (iter >= 30)
        throw Error("jacobi_rule: eigenvalue iteration failed to converge");
      ++iter;
      double p = d[l - 1];
      double g = (d[l] - p) / (2.0 * e[l - 1]);
      double r = std::hypot(g, 1.0);
      g = d[m - 1] - p + e[l - 1] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      p = 0.0;
      for (int ii = 1; ii <= m - l; ++ii) {
        const int i = m - ii;
        double f = s * e[i - 1];
        const double b = c * e[i - 1];
        if (std::abs(g) <= std::abs(f)) {
          c = g / f;
          r = std::hypot(c, 1.0);
          e[i] = f * r;
          s = 1.0 / r;
          c = c * s;
        } else {
          s = f / g;
          r = std::hypot(s, 1.0);
          e[i] = g * r;
          c = 1.0 / r;
          s = s * c;
        }
        g = d[i] - p;
        r = (d[i - 1] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i] = g + p;
        g = c * r - b;
        f = z[i];
        z[i] = s * z[i - 1] + c * f;
        z[i - 1] = c * z[i - 1] - s * f;
      }
      d[l - 1] -= p;
      e[l - 1] = g;
      e[m - 1] = 0.0;
    }
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return d[a] < d[b]; });
  std::vector<double> ds(n), zs(n);
  for (int i = 0; i < n; ++i) {
    ds[i] = d[order[i]];
    zs[i] = z[order[i]];
  }
  d = std::move(ds);
  z = std::move(zs);
}

// Monic three-term recurrence coefficients for the Jacobi weight
// (1-t)^(s-1) (1+t)^0 on (-1,1), then Golub-Welsch and the affine map to
// (0,1). Total weight is pinned to the analytic value 1/s.
QuadratureRule build_jacobi_rule(double s, int n) {
  const double a = s - 1.0;  // alpha; beta = 0 throughout
  std::vector<double> diag(n), sub(n > 1 ? n - 1 : 0), z(n, 0.0);
  z[0] = 1.0;
  diag[0] = -a / (a + 2.0);
  for (int k = 1; k < n; ++k) {
    const double t = 2.0 * k + a;
    diag[k] = a == 0.0 ? 0.0 : -(a * a) / (t * (t + 2.0));
    const double bk =
        k == 1 ? 4.0 * (1.0 + a) / ((2.0 + a) * (2.0 + a) * (3.0 + a))
               : 4.0 * k * k * (k + a) * (k + a) /
                     (t * t * (t + 1.0) * (t - 1.0));
    sub[k - 1] = std::sqrt(bk);
  }
  imtqlx(diag, sub, z);

  QuadratureRule rule;
  rule.order = s;
  rule.node_count = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = (1.0 + diag[i]) * 0.5;
    rule.weights[i] = z[i] * z[i] / s;
  }
  return rule;
}

// Central difference stencil for the k-th derivative on integer offsets,
// second-order accurate: alternating binomial weights, smoothed onto integer
// offsets for odd k. Pairs (offset, weight), offsets ascending.
std::vector<std::pair<int, double>> central_stencil(int k) {
  std::vector<double> c{1.0};
  for (int i = 0; i < k; ++i) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j];
      next[j + 1] -= c[j];
    }
    c = std::move(next);
  }
  std::vector<std::pair<int, double>> out;
  if (k % 2 == 0) {
    for (std::size_t j = 0; j < c.size(); ++j)
      out.emplace_back(k / 2 - static_cast<int>(j), c[j]);
  } else {
    std::vector<double> sm(c.size() + 1, 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      sm[j] += 0.5 * c[j];
      sm[j + 1] += 0.5 * c[j];
    }
    for (std::size_t j = 0; j < sm.size(); ++j)
      out.emplace_back((k + 1) / 2 - static_cast<int>(j), sm[j]);
  }
  std::erase_if(out, [](const auto& p) { return p.second == 0.0; });
  std::sort(out.begin(), out.end());
  return out;
}

double apply_stencil(const Evaluable& g,
                     const std::vector<std::pair<int, double>>& stencil,
                     int k, double x, double h) {
  CompensatedSum acc;
  for (const auto& [off, w] : stencil) acc.add(w * g(x + off * h));
  return acc.value() / std::pow(h, k);
}

constexpr int kMaxDifferenceOrder = 16;

// k-th derivative of g at x by central differences with one Richardson
// extrapolation level (h and 2h), which lifts the truncation error from
// O(h^2) to O(h^4). The step balances that against roundoff eps/h^k.
double differentiate(const Evaluable& g, int k, double x,
                     DerivativeInfo* info) {
  if (k > kMaxDifferenceOrder)
    throw DomainError(
        "rl_derivative: differentiation order exceeds the finite-difference "
        "limit of 16");
  const double eps = std::numeric_limits<double>::epsilon();
  const double h_nominal = std::max(1.0, x) * std::pow(eps, 1.0 / (k + 4));
  const auto stencil = central_stencil(k);
  const int reach = 2 * stencil.back().first;  // farthest point of the 2h pass
  double h = h_nominal;
  if (x - reach * h <= 0.0) h = x / (reach + 1);
  if (info) {
    info->near_origin = x < 10.0 * h_nominal;
    info->k = k;
  }
  const double d1 = apply_stencil(g, stencil, k, x, h);
  const double d2 = apply_stencil(g, stencil, k, x, 2.0 * h);
  return (4.0 * d1 - d2) / 3.0;
}

void check_point(double x, const char* op) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError(std::string(op) +
                      ": evaluation point must be positive and finite");
}

}  // namespace

std::shared_ptr<const QuadratureRule> jacobi_rule(double s, int n) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw DomainError("jacobi_rule: order must be positive and finite");
  if (n < 1 || n > kMaxQuadratureNodes)
    throw DomainError("jacobi_rule: node count must be in [1, 512]");

  char key[40];
  std::snprintf(key, sizeof key, "%.11e|%d", s, n);  // 12 significant digits

  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const QuadratureRule>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rule = std::make_shared<const QuadratureRule>(build_jacobi_rule(s, n));
  cache.emplace(key, rule);
  return rule;
}

double rl_integral(const Evaluable& f, double s, double x, int n) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw DomainError("rl_integral: order must be positive and finite");
  check_point(x, "rl_integral");
  const auto rule = jacobi_rule(s, n);
  // After u = v^2 the integrand against the (1-v)^(s-1) weight is
  // (1+v)^(s-1) * 2v * f(v^2 x); fractional powers of f at the origin become
  // smooth in v, so the rule keeps its design accuracy on x^k inputs.
  CompensatedSum acc;
  for (int i = 0; i < n; ++i) {
    const double v = rule->nodes[i];
    acc.add(rule->weights[i] * 2.0 * v *
            std::exp((s - 1.0) * std::log1p(v)) * f(v * v * x));
  }
  return std::pow(x, s) * rgamma(s) * acc.value();
}

double rl_derivative_with_k(const Evaluable& f, double s, double x, int n,
                            int k, DerivativeInfo* info) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw DomainError("rl_derivative: order must be positive and finite");
  check_point(x, "rl_derivative");
  if (k < 1 || !(static_cast<double>(k) > s))
    throw DomainError(
        "rl_derivative: intermediate order k must be an integer greater than "
        "the order");
  const double residual = static_cast<double>(k) - s;
  Evaluable g{[&f, residual, n](double y) {
                return rl_integral(f, residual, y, n);
              },
              f.label};
  return differentiate(g, k, x, info);
}

double rl_derivative(const Evaluable& f, double s, double x, int n,
                     DerivativeInfo* info) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw DomainError("rl_derivative: order must be positive and finite");
  check_point(x, "rl_derivative");
  const double nearest = std::round(s);
  if (std::abs(s - nearest) <= 1e-12) {
    // Integer order: differentiate f directly; k - s = 0 would require a
    // zero-order integral with Gamma(0) in the kernel.
    return differentiate(f, static_cast<int>(nearest), x, info);
  }
  const int k = static_cast<int>(std::floor(s)) + 1;
  return rl_derivative_with_k(f, s, x, n, k, info);
}

KIndependenceReport k_independence_check(const Evaluable& f, double s,
                                         double x, int n) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw DomainError("k_independence_check: order must be positive");
  int k = static_cast<int>(std::floor(s)) + 1;
  // Keep the intermediate gamma argument clearly off the pole when s sits
  // just below an integer.
  if (static_cast<double>(k) - s < 1e-9) ++k;
  KIndependenceReport report;
  report.k_low = k;
  report.k_high = k + 1;
  report.value_low = rl_derivative_with_k(f, s, x, n, k);
  report.value_high = rl_derivative_with_k(f, s, x, n, k + 1);
  const double scale =
      std::max(std::abs(report.value_low), std::abs(report.value_high));
  report.rel_difference =
      scale == 0.0 ? 0.0
                   : std::abs(report.value_low - report.value_high) / scale;
  return report;
}

double nested_integral_oracle(const Evaluable& f, int m, double x, int n) {
  if (m < 1 || m > 3)
    throw DomainError("nested_integral_oracle: depth must be 1, 2 or 3");
  check_point(x, "nested_integral_oracle");
  const auto rule = jacobi_rule(1.0, n);  // plain Gauss-Legendre on (0,1)
  // Literal iterated integration, one rule per level; deliberately does not
  // share the weighted-kernel path with rl_integral.
  std::function<double(int, double)> level = [&](int depth,
                                                 double upper) -> double {
    CompensatedSum acc;
    for (int i = 0; i < rule->node_count; ++i) {
      const double t = rule->nodes[i] * upper;
      acc.add(rule->weights[i] * (depth == 1 ? f(t) : level(depth - 1, t)));
    }
    return upper * acc.value();
  };
  return level(m, x);
}

}  // namespace fracalc
