#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fiedler/graph.hpp"

namespace fiedler {

// Eigen-decomposition of a symmetric matrix: eigenvalues ascending, and the
// matching orthonormal eigenvectors stored column by column.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<double> eigenvectors;  // column k occupies [k*n, (k+1)*n)

  std::size_t order() const noexcept { return eigenvalues.size(); }
  std::span<const double> vector(std::size_t k) const {
    return {eigenvectors.data() + k * order(), order()};
  }
};

// Full spectrum by Householder tridiagonalization followed by implicit QL
// with Wilkinson-style shifts. Deterministic; throws NumericalError naming
// the eigenvalue index if an iteration cap is reached.
Spectrum eig_sym(const SymmetricMatrix& m);

// Eigenvalues only (same reduction, no vector accumulation).
std::vector<double> eigenvalues_sym(const SymmetricMatrix& m);

inline constexpr double kDegenerateGapTol = 1e-8;
inline constexpr double kCourantTol = 1e-9;
inline constexpr double kSignTieTol = 1e-10;

struct FiedlerResult {
  double lambda2 = 0.0;
  std::vector<double> phi;
  double gap = 0.0;  // lambda3 - lambda2, +inf when n == 2
  double lambda1_residual = 0.0;
  bool degenerate = false;  // gap < 1e-8 * max(1, lambda2)
};

// Fiedler pair of a connected graph. Throws GraphError if the graph is
// disconnected or has fewer than two vertices.
FiedlerResult fiedler(const Graph& g);

// Same as fiedler() but on an already assembled Laplacian that the caller
// knows to be connected.
FiedlerResult fiedler_of_laplacian(const SymmetricMatrix& L);

// Flips `v` so its largest-magnitude entry is positive; among entries within
// a relative 1e-10 of the largest magnitude the lowest index decides.
void apply_sign_policy(std::span<double> v);

struct FirstOrderEstimate {
  double eigenvalue = 0.0;
  std::vector<double> eigenvector;
};

// Rayleigh-Schroedinger first-order update of eigenpair `i` (0-based) of M
// under M + dM, using the full spectrum `s` of M. Refuses (DomainError) when
// eigenvalue i is not simple.
FirstOrderEstimate first_order_perturbation(const SymmetricMatrix& m, const SymmetricMatrix& dm,
                                            const Spectrum& s, std::size_t i);

// Weyl's inequalities with eigenvalues re-indexed in descending order
// (alpha for M, delta for P, gamma for M + P), 1e-10 slack.
//   lower: gamma_{i+j-1} <= alpha_i + delta_j   (i + j - 1 <= n)
//   upper: alpha_i + delta_j <= gamma_{i+j-n}   (i + j - n >= 1)
bool weyl_check(const Spectrum& m, const Spectrum& p, const Spectrum& sum);
bool weyl_upper_check(const Spectrum& m, const Spectrum& p, const Spectrum& sum);

// Σ_edges w (phi_u - phi_v)^2, the edge-sum form of the Courant identity.
double dirichlet_energy(const Graph& g, std::span<const double> phi);

}  // namespace fiedler
