#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace stochdg {

// Conserved variables of the 1D compressible Euler system.
struct State {
  double rho = 0.0;
  double m = 0.0;
  double E = 0.0;

  double& operator[](int i) { return i == 0 ? rho : (i == 1 ? m : E); }
  double operator[](int i) const { return i == 0 ? rho : (i == 1 ? m : E); }
};

inline State operator+(const State& a, const State& b) {
  return {a.rho + b.rho, a.m + b.m, a.E + b.E};
}
inline State operator-(const State& a, const State& b) {
  return {a.rho - b.rho, a.m - b.m, a.E - b.E};
}
inline State operator*(double c, const State& a) {
  return {c * a.rho, c * a.m, c * a.E};
}

struct GasParams {
  double gamma = 1.4;
};

class AdmissibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Mat3 {
  std::array<double, 9> a{};
  double& operator()(int i, int j) { return a[3 * i + j]; }
  double operator()(int i, int j) const { return a[3 * i + j]; }
  State apply(const State& v) const {
    return {a[0] * v.rho + a[1] * v.m + a[2] * v.E,
            a[3] * v.rho + a[4] * v.m + a[5] * v.E,
            a[6] * v.rho + a[7] * v.m + a[8] * v.E};
  }
};

inline constexpr double kAdmissibilityFloor = 1e-10;

double pressure(const State& s, GasParams g);
bool admissible(const State& s, GasParams g, double floor = kAdmissibilityFloor);
// Throws AdmissibilityError with context if density or pressure is at/below the floor.
void require_admissible(const State& s, GasParams g, const char* where,
                        double floor = kAdmissibilityFloor);

State flux(const State& s, GasParams g);
Mat3 flux_jacobian(const State& s, GasParams g);

// (u-c, u, u+c) with u = m/rho, c = sqrt(gamma p / rho)
std::array<double, 3> wave_speeds(const State& s, GasParams g);
double max_wave_speed(const State& s, GasParams g);

// Physical entropy pair: eta = -rho sigma/(gamma-1), sigma = log(p rho^-gamma),
// q = eta m / rho. Strictly convex eta on admissible states.
std::pair<double, double> entropy_pair(const State& s, GasParams g);
Mat3 entropy_hessian(const State& s, GasParams g);
// Hessians of the three flux components.
std::array<Mat3, 3> flux_hessians(const State& s, GasParams g);

// Eigenvalues of a symmetric 3x3 matrix (ascending), by Jacobi rotations.
std::array<double, 3> sym_eigenvalues(const Mat3& m);

struct StateBox {
  State lo, hi;
};

struct StateSetConstants {
  double C_F = 0.0;       // bound on |v^T H_u F v| <= C_F |v|^2 (l2 over components)
  double eta_lower = 0.0; // min eigenvalue of H_u eta over the sample
  double eta_upper = 0.0; // max eigenvalue of H_u eta over the sample
};

// Deterministic low-discrepancy (Halton) sampling of box x [gamma_lo, gamma_hi].
// Throws AdmissibilityError if a sampled state is inadmissible.
StateSetConstants state_set_constants(const StateBox& box, double gamma_lo,
                                      double gamma_hi, int n_samples);

// Pointwise values entering state_set_constants; exposed for oracles.
double flux_hessian_bound(const State& s, GasParams g);
std::pair<double, double> entropy_hessian_bounds(const State& s, GasParams g);

// Characteristic decomposition used by the slope limiter.
struct EigenBasis {
  Mat3 right;  // columns are right eigenvectors
  Mat3 left;   // rows are left eigenvectors, left * right = I
  std::array<double, 3> lambda;
};
State roe_mean(const State& l, const State& r, GasParams g);
EigenBasis euler_eigenbasis(const State& s, GasParams g);

}  // namespace stochdg
