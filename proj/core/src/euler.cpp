#include "stochdg/euler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stochdg {

double pressure(const State& s, GasParams g) {
  if (!(s.rho > 0.0))
    throw AdmissibilityError("pressure: non-positive density rho=" +
                             std::to_string(s.rho));
  return (g.gamma - 1.0) * (s.E - 0.5 * s.m * s.m / s.rho);
}

bool admissible(const State& s, GasParams g, double floor) {
  if (!(s.rho > floor)) return false;
  double p = (g.gamma - 1.0) * (s.E - 0.5 * s.m * s.m / s.rho);
  return p > floor;
}

void require_admissible(const State& s, GasParams g, const char* where,
                        double floor) {
  if (!admissible(s, g, floor))
    throw AdmissibilityError(std::string(where) + ": inadmissible state rho=" +
                             std::to_string(s.rho) + " m=" + std::to_string(s.m) +
                             " E=" + std::to_string(s.E));
}

State flux(const State& s, GasParams g) {
  double p = pressure(s, g);
  if (!(p > 0.0))
    throw AdmissibilityError("flux: non-positive pressure p=" + std::to_string(p));
  double v = s.m / s.rho;
  return {s.m, s.m * v + p, (s.E + p) * v};
}

Mat3 flux_jacobian(const State& s, GasParams g) {
  double gm = g.gamma;
  double r = s.rho, m = s.m, E = s.E;
  double v = m / r;
  Mat3 j;
  j(0, 0) = 0.0;
  j(0, 1) = 1.0;
  j(0, 2) = 0.0;
  j(1, 0) = -0.5 * (gm - 3.0) * v * v;
  j(1, 1) = (3.0 - gm) * v;
  j(1, 2) = gm - 1.0;
  j(2, 0) = -gm * E * m / (r * r) + (gm - 1.0) * v * v * v;
  j(2, 1) = gm * E / r - 1.5 * (gm - 1.0) * v * v;
  j(2, 2) = gm * v;
  return j;
}

std::array<double, 3> wave_speeds(const State& s, GasParams g) {
  double p = pressure(s, g);
  if (!(p > 0.0))
    throw AdmissibilityError("wave_speeds: non-positive pressure");
  double v = s.m / s.rho;
  double c = std::sqrt(g.gamma * p / s.rho);
  return {v - c, v, v + c};
}

double max_wave_speed(const State& s, GasParams g) {
  auto ws = wave_speeds(s, g);
  return std::max(std::abs(ws[0]), std::abs(ws[2]));
}

std::pair<double, double> entropy_pair(const State& s, GasParams g) {
  double p = pressure(s, g);
  if (!(p > 0.0)) throw AdmissibilityError("entropy_pair: non-positive pressure");
  double sigma = std::log(p) - g.gamma * std::log(s.rho);
  double eta = -s.rho * sigma / (g.gamma - 1.0);
  return {eta, eta * s.m / s.rho};
}

Mat3 entropy_hessian(const State& s, GasParams g) {
  double g1 = g.gamma - 1.0;
  double r = s.rho, m = s.m;
  double p = pressure(s, g);
  if (!(p > 0.0)) throw AdmissibilityError("entropy_hessian: non-positive pressure");

  // p_a and p_ab
  double pa[3] = {g1 * 0.5 * m * m / (r * r), -g1 * m / r, g1};
  double pab[3][3] = {{-g1 * m * m / (r * r * r), g1 * m / (r * r), 0.0},
                      {g1 * m / (r * r), -g1 / r, 0.0},
                      {0.0, 0.0, 0.0}};
  // s = log p - gamma log rho
  double sa[3];
  for (int a = 0; a < 3; ++a) sa[a] = pa[a] / p;
  sa[0] -= g.gamma / r;
  double sigma = std::log(p) - g.gamma * std::log(r);

  Mat3 h;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      double sab = pab[a][b] / p - pa[a] * pa[b] / (p * p);
      if (a == 0 && b == 0) sab += g.gamma / (r * r);
      double eab = -(((a == 0) ? sa[b] : 0.0) + ((b == 0) ? sa[a] : 0.0) +
                     r * sab) /
                   g1;
      h(a, b) = eab;
    }
  (void)sigma;
  return h;
}

std::array<Mat3, 3> flux_hessians(const State& s, GasParams g) {
  double gm = g.gamma;
  double r = s.rho, m = s.m, E = s.E;
  std::array<Mat3, 3> h{};  // H F_1 = 0

  // F_2 = (gamma-1) E + (3-gamma)/2 m^2/rho
  double c2 = (3.0 - gm) * 0.5;
  h[1](0, 0) = c2 * 2.0 * m * m / (r * r * r);
  h[1](0, 1) = h[1](1, 0) = -c2 * 2.0 * m / (r * r);
  h[1](1, 1) = c2 * 2.0 / r;

  // F_3 = gamma E m / rho - (gamma-1)/2 m^3/rho^2
  double g1 = gm - 1.0;
  h[2](0, 0) = 2.0 * gm * E * m / (r * r * r) - 3.0 * g1 * m * m * m / (r * r * r * r);
  h[2](0, 1) = h[2](1, 0) = -gm * E / (r * r) + 3.0 * g1 * m * m / (r * r * r);
  h[2](0, 2) = h[2](2, 0) = -gm * m / (r * r);
  h[2](1, 1) = -3.0 * g1 * m / (r * r);
  h[2](1, 2) = h[2](2, 1) = gm / r;
  return h;
}

std::array<double, 3> sym_eigenvalues(const Mat3& m) {
  // cyclic Jacobi; a handful of sweeps is ample for 3x3
  double a[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = 0.5 * (m(i, j) + m(j, i));
  for (int sweep = 0; sweep < 32; ++sweep) {
    double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
    if (off < 1e-300) break;
    double scale = std::abs(a[0][0]) + std::abs(a[1][1]) + std::abs(a[2][2]) + off;
    if (off <= 1e-16 * scale) break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < 3; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::array<double, 3> ev = {a[0][0], a[1][1], a[2][2]};
  std::sort(ev.begin(), ev.end());
  return ev;
}

double flux_hessian_bound(const State& s, GasParams g) {
  auto h = flux_hessians(s, g);
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    auto ev = sym_eigenvalues(h[i]);
    double spec = std::max(std::abs(ev[0]), std::abs(ev[2]));
    sum += spec * spec;
  }
  return std::sqrt(sum);
}

std::pair<double, double> entropy_hessian_bounds(const State& s, GasParams g) {
  auto ev = sym_eigenvalues(entropy_hessian(s, g));
  return {ev[0], ev[2]};
}

namespace {
double halton(unsigned long long i, int base) {
  double f = 1.0, r = 0.0;
  unsigned long long n = i + 1;  // skip the zero point
  while (n > 0) {
    f /= base;
    r += f * static_cast<double>(n % base);
    n /= base;
  }
  return r;
}
}  // namespace

StateSetConstants state_set_constants(const StateBox& box, double gamma_lo,
                                      double gamma_hi, int n_samples) {
  if (n_samples < 1)
    throw std::invalid_argument("state_set_constants: n_samples >= 1 required");
  static const int bases[4] = {2, 3, 5, 7};
  StateSetConstants out;
  out.eta_lower = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_samples; ++i) {
    State s;
    for (int d = 0; d < 3; ++d) {
      double u = (n_samples == 1) ? 0.5 : halton(i, bases[d]);
      s[d] = box.lo[d] + u * (box.hi[d] - box.lo[d]);
    }
    double ug = (n_samples == 1) ? 0.5 : halton(i, bases[3]);
    GasParams g{gamma_lo + ug * (gamma_hi - gamma_lo)};
    require_admissible(s, g, "state_set_constants", 0.0);
    out.C_F = std::max(out.C_F, flux_hessian_bound(s, g));
    auto [lo, hi] = entropy_hessian_bounds(s, g);
    out.eta_lower = std::min(out.eta_lower, lo);
    out.eta_upper = std::max(out.eta_upper, hi);
  }
  return out;
}

State roe_mean(const State& l, const State& r, GasParams g) {
  double sl = std::sqrt(l.rho), sr = std::sqrt(r.rho);
  double u = (sl * l.m / l.rho + sr * r.m / r.rho) / (sl + sr);
  double hl = (l.E + pressure(l, g)) / l.rho;
  double hr = (r.E + pressure(r, g)) / r.rho;
  double h = (sl * hl + sr * hr) / (sl + sr);
  double rho = sl * sr;
  // reassemble a conserved state with these (rho, u, H)
  double e = rho * h / g.gamma + 0.5 * (g.gamma - 1.0) / g.gamma * rho * u * u;
  return {rho, rho * u, e};
}

EigenBasis euler_eigenbasis(const State& s, GasParams g) {
  double p = pressure(s, g);
  if (!(p > 0.0)) throw AdmissibilityError("euler_eigenbasis: non-positive pressure");
  double u = s.m / s.rho;
  double c = std::sqrt(g.gamma * p / s.rho);
  double h = (s.E + p) / s.rho;
  EigenBasis eb;
  eb.lambda = {u - c, u, u + c};
  // right eigenvectors as columns
  eb.right(0, 0) = 1.0;       eb.right(0, 1) = 1.0;      eb.right(0, 2) = 1.0;
  eb.right(1, 0) = u - c;     eb.right(1, 1) = u;        eb.right(1, 2) = u + c;
  eb.right(2, 0) = h - u * c; eb.right(2, 1) = 0.5 * u * u; eb.right(2, 2) = h + u * c;
  double b2 = (g.gamma - 1.0) / (c * c);
  double b1 = 0.5 * b2 * u * u;
  eb.left(0, 0) = 0.5 * (b1 + u / c);
  eb.left(0, 1) = -0.5 * (b2 * u + 1.0 / c);
  eb.left(0, 2) = 0.5 * b2;
  eb.left(1, 0) = 1.0 - b1;
  eb.left(1, 1) = b2 * u;
  eb.left(1, 2) = -b2;
  eb.left(2, 0) = 0.5 * (b1 - u / c);
  eb.left(2, 1) = -0.5 * (b2 * u - 1.0 / c);
  eb.left(2, 2) = 0.5 * b2;
  return eb;
}

}  // namespace stochdg
