#pragma once

#include <vector>

namespace stochdg {

struct QuadRule {
  std::vector<double> points;   // on (-1,1)
  std::vector<double> weights;  // sum to 2
};

// Gauss-Legendre rule with n points, exact for polynomials of degree 2n-1.
const QuadRule& gauss_legendre(int n);

// Legendre polynomial P_j and derivative at x via the three-term recurrence.
double legendre(int j, double x);
double legendre_deriv(int j, double x);

// Orthonormal basis on (-1,1): phi_j = sqrt(j + 1/2) P_j.
double ortho_legendre(int j, double x);
double ortho_legendre_deriv(int j, double x);

// Tabulated basis values/derivatives: val[j*npts + g] = phi_j(pts[g]).
struct BasisTable {
  int n_modes = 0;
  std::vector<double> pts;
  std::vector<double> val;
  std::vector<double> der;
};
BasisTable tabulate_basis(int n_modes, const std::vector<double>& pts);

}  // namespace stochdg
