#include "stochdg/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace stochdg {

double legendre(int j, double x) {
  if (j == 0) return 1.0;
  double pm1 = 1.0, p = x;
  for (int k = 2; k <= j; ++k) {
    double pn = ((2.0 * k - 1.0) * x * p - (k - 1.0) * pm1) / k;
    pm1 = p;
    p = pn;
  }
  return p;
}

double legendre_deriv(int j, double x) {
  if (j == 0) return 0.0;
  // (1-x^2) P_j' = j (P_{j-1} - x P_j); at |x|=1 use P_j'(±1) = ±^{j+1} j(j+1)/2
  if (std::abs(std::abs(x) - 1.0) < 1e-14) {
    double sgn = (x > 0) ? 1.0 : ((j % 2 == 0) ? -1.0 : 1.0);
    return sgn * 0.5 * j * (j + 1.0);
  }
  return j * (legendre(j - 1, x) - x * legendre(j, x)) / (1.0 - x * x);
}

double ortho_legendre(int j, double x) {
  return std::sqrt(j + 0.5) * legendre(j, x);
}

double ortho_legendre_deriv(int j, double x) {
  return std::sqrt(j + 0.5) * legendre_deriv(j, x);
}

const QuadRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  static std::map<int, QuadRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  QuadRule rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n / 2 + n % 2; ++i) {
    // Newton iteration from the Chebyshev-like initial guess
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it2 = 0; it2 < 100; ++it2) {
      double f = legendre(n, x);
      double df = legendre_deriv(n, x);
      double dx = f / df;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double dp = legendre_deriv(n, x);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.points[i] = -x;  // ascending order
    rule.weights[i] = w;
    rule.points[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.points[n / 2] = 0.0;
  auto [pos, inserted] = cache.emplace(n, std::move(rule));
  (void)inserted;
  return pos->second;
}

BasisTable tabulate_basis(int n_modes, const std::vector<double>& pts) {
  BasisTable t;
  t.n_modes = n_modes;
  t.pts = pts;
  t.val.resize(n_modes * pts.size());
  t.der.resize(n_modes * pts.size());
  for (int j = 0; j < n_modes; ++j)
    for (std::size_t g = 0; g < pts.size(); ++g) {
      t.val[j * pts.size() + g] = ortho_legendre(j, pts[g]);
      t.der[j * pts.size() + g] = ortho_legendre_deriv(j, pts[g]);
    }
  return t;
}

}  // namespace stochdg
