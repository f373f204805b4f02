#include "fiedler/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fiedler/errors.hpp"

namespace fiedler {

void apply_sign_policy(std::span<double> v) {
  double largest = 0.0;
  for (double x : v) largest = std::max(largest, std::abs(x));
  if (largest == 0.0) return;
  for (double x : v) {
    if (std::abs(x) >= largest * (1.0 - kSignTieTol)) {
      if (x < 0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

FiedlerResult fiedler_of_laplacian(const SymmetricMatrix& L) {
  const std::size_t n = L.order();
  if (n < 2) throw GraphError("Fiedler vector needs at least two vertices");
  const Spectrum s = eig_sym(L);

  FiedlerResult r;
  r.lambda1_residual = std::abs(s.eigenvalues[0]);
  r.lambda2 = s.eigenvalues[1];
  r.gap = n > 2 ? s.eigenvalues[2] - s.eigenvalues[1] : std::numeric_limits<double>::infinity();
  r.degenerate = r.gap < kDegenerateGapTol * std::max(1.0, std::abs(r.lambda2));

  const auto column = s.vector(1);
  r.phi.assign(column.begin(), column.end());
  const double mean = std::accumulate(r.phi.begin(), r.phi.end(), 0.0) / static_cast<double>(n);
  for (double& x : r.phi) x -= mean;
  double norm = 0.0;
  for (double x : r.phi) norm += x * x;
  norm = std::sqrt(norm);
  if (!(norm > 0.0)) throw NumericalError("Fiedler vector vanished after mean removal");
  for (double& x : r.phi) x /= norm;
  apply_sign_policy(r.phi);

  const double rayleigh = L.quadratic_form(r.phi);
  if (std::abs(rayleigh - r.lambda2) > kCourantTol * std::max(1.0, r.lambda2)) {
    throw NumericalError("Courant identity check failed: lambda2=" + std::to_string(r.lambda2) +
                         " vs phi^T L phi=" + std::to_string(rayleigh));
  }
  return r;
}

FiedlerResult fiedler(const Graph& g) {
  if (g.vertex_count() < 2) throw GraphError("Fiedler vector needs at least two vertices");
  if (!is_connected(g)) throw GraphError("graph is disconnected");
  return fiedler_of_laplacian(laplacian(g));
}

double dirichlet_energy(const Graph& g, std::span<const double> phi) {
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    const double d = phi[e.u] - phi[e.v];
    total += e.w * d * d;
  }
  return total;
}

FirstOrderEstimate first_order_perturbation(const SymmetricMatrix& m, const SymmetricMatrix& dm,
                                            const Spectrum& s, std::size_t i) {
  const std::size_t n = s.order();
  if (m.order() != n || dm.order() != n) throw DomainError("first_order_perturbation: order mismatch");
  if (i >= n) throw DomainError("first_order_perturbation: index out of range");
  const double lambda = s.eigenvalues[i];
  const double tol = kDegenerateGapTol * std::max(1.0, std::abs(lambda));
  if ((i > 0 && lambda - s.eigenvalues[i - 1] <= tol) ||
      (i + 1 < n && s.eigenvalues[i + 1] - lambda <= tol)) {
    throw DomainError("first_order_perturbation: eigenvalue " + std::to_string(i) +
                      " is not simple");
  }

  const auto phi_i = s.vector(i);
  const std::vector<double> dphi = dm.multiply(phi_i);

  FirstOrderEstimate out;
  out.eigenvalue = lambda + std::inner_product(phi_i.begin(), phi_i.end(), dphi.begin(), 0.0);
  out.eigenvector.assign(phi_i.begin(), phi_i.end());
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    const auto phi_j = s.vector(j);
    const double coupling = std::inner_product(phi_j.begin(), phi_j.end(), dphi.begin(), 0.0);
    const double coeff = coupling / (lambda - s.eigenvalues[j]);
    for (std::size_t k = 0; k < n; ++k) out.eigenvector[k] += coeff * phi_j[k];
  }
  return out;
}

namespace {

constexpr double kWeylSlack = 1e-10;

// Descending 1-based accessor over an ascending spectrum.
double desc(const Spectrum& s, std::size_t k) { return s.eigenvalues[s.order() - k]; }

void check_orders(const Spectrum& m, const Spectrum& p, const Spectrum& sum) {
  if (m.order() != p.order() || m.order() != sum.order()) {
    throw DomainError("weyl_check: spectra have different orders");
  }
}

}  // namespace

bool weyl_check(const Spectrum& m, const Spectrum& p, const Spectrum& sum) {
  check_orders(m, p, sum);
  const std::size_t n = m.order();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; i + j - 1 <= n; ++j)
      if (desc(sum, i + j - 1) > desc(m, i) + desc(p, j) + kWeylSlack) return false;
  return true;
}

bool weyl_upper_check(const Spectrum& m, const Spectrum& p, const Spectrum& sum) {
  check_orders(m, p, sum);
  const std::size_t n = m.order();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i + j >= n + 1 && desc(m, i) + desc(p, j) > desc(sum, i + j - n) + kWeylSlack) return false;
  return true;
}

}  // namespace fiedler
