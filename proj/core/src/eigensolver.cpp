// Dense symmetric eigensolver: Householder reduction to tridiagonal form and
// implicit QL iteration (the tred2/tql2 pair of EISPACK). Eigenvectors are
// kept column-major so that both phases sweep contiguous memory.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fiedler/errors.hpp"
#include "fiedler/spectral.hpp"

namespace fiedler {

namespace {

constexpr int kMaxQlIterations = 100;

class Workspace {
 public:
  explicit Workspace(const SymmetricMatrix& m)
      : n_(m.order()), v_(n_ * n_), d_(n_), e_(n_) {
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < n_; ++i) at(i, j) = m(i, j);
  }

  double& at(std::size_t row, std::size_t col) { return v_[col * n_ + row]; }

  void tridiagonalize();
  void diagonalize(bool with_vectors);
  Spectrum take_sorted(bool with_vectors);

 private:
  std::size_t n_;
  std::vector<double> v_;
  std::vector<double> d_;
  std::vector<double> e_;
};

void Workspace::tridiagonalize() {
  const std::size_t n = n_;
  for (std::size_t j = 0; j < n; ++j) d_[j] = at(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d_[k]);
    if (scale == 0.0) {
      e_[i] = d_[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d_[j] = at(i - 1, j);
        at(i, j) = 0.0;
        at(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d_[k] /= scale;
        h += d_[k] * d_[k];
      }
      double f = d_[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e_[i] = scale * g;
      h -= f * g;
      d_[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e_[j] = 0.0;

      for (std::size_t j = 0; j < i; ++j) {
        f = d_[j];
        at(j, i) = f;
        g = e_[j] + at(j, j) * f;
        for (std::size_t k = j + 1; k <= i - 1; ++k) {
          g += at(k, j) * d_[k];
          e_[k] += at(k, j) * f;
        }
        e_[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e_[j] /= h;
        f += e_[j] * d_[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e_[j] -= hh * d_[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d_[j];
        g = e_[j];
        for (std::size_t k = j; k <= i - 1; ++k) at(k, j) -= (f * e_[k] + g * d_[k]);
        d_[j] = at(i - 1, j);
        at(i, j) = 0.0;
      }
    }
    d_[i] = h;
  }

  // Accumulate the Householder transformations.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    at(n - 1, i) = at(i, i);
    at(i, i) = 1.0;
    const double h = d_[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d_[k] = at(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += at(k, i + 1) * at(k, j);
        for (std::size_t k = 0; k <= i; ++k) at(k, j) -= g * d_[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) at(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d_[j] = at(n - 1, j);
    at(n - 1, j) = 0.0;
  }
  at(n - 1, n - 1) = 1.0;
  e_[0] = 0.0;
}

void Workspace::diagonalize(bool with_vectors) {
  const std::size_t n = n_;
  for (std::size_t i = 1; i < n; ++i) e_[i - 1] = e_[i];
  e_[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d_[l]) + std::abs(e_[l]));
    std::size_t m = l;
    while (m < n) {
      if (std::abs(e_[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > kMaxQlIterations) {
          throw NumericalError("eig_sym: QL iteration did not converge for eigenvalue index " +
                               std::to_string(l));
        }
        double g = d_[l];
        double p = (d_[l + 1] - g) / (2.0 * e_[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d_[l] = e_[l] / (p + r);
        d_[l + 1] = e_[l] * (p + r);
        const double dl1 = d_[l + 1];
        double h = g - d_[l];
        for (std::size_t i = l + 2; i < n; ++i) d_[i] -= h;
        f += h;

        p = d_[m];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        const double el1 = e_[l + 1];
        double s = 0.0;
        double s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e_[ii];
          h = c * p;
          r = std::hypot(p, e_[ii]);
          e_[ii + 1] = s * r;
          s = e_[ii] / r;
          c = p / r;
          p = c * d_[ii] - s * g;
          d_[ii + 1] = h + s * (c * g + s * d_[ii]);
          if (with_vectors) {
            double* left = v_.data() + ii * n;
            double* right = left + n;
            for (std::size_t k = 0; k < n; ++k) {
              const double hk = right[k];
              right[k] = s * left[k] + c * hk;
              left[k] = c * left[k] - s * hk;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e_[l] / dl1;
        e_[l] = s * p;
        d_[l] = c * p;
      } while (std::abs(e_[l]) > eps * tst1);
    }
    d_[l] += f;
    e_[l] = 0.0;
  }
}

Spectrum Workspace::take_sorted(bool with_vectors) {
  const std::size_t n = n_;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d_[a] < d_[b]; });
  Spectrum s;
  s.eigenvalues.resize(n);
  if (with_vectors) s.eigenvectors.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    s.eigenvalues[k] = d_[order[k]];
    if (with_vectors) {
      std::copy_n(v_.data() + order[k] * n, n, s.eigenvectors.data() + k * n);
    }
  }
  return s;
}

void check_finite(const SymmetricMatrix& m) {
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!std::isfinite(m(i, j))) throw NumericalError("eig_sym: non-finite matrix entry");
}

}  // namespace

Spectrum eig_sym(const SymmetricMatrix& m) {
  if (m.order() == 0) return {};
  check_finite(m);
  Workspace w(m);
  w.tridiagonalize();
  w.diagonalize(true);
  return w.take_sorted(true);
}

std::vector<double> eigenvalues_sym(const SymmetricMatrix& m) {
  if (m.order() == 0) return {};
  check_finite(m);
  Workspace w(m);
  w.tridiagonalize();
  w.diagonalize(false);
  return w.take_sorted(false).eigenvalues;
}

}  // namespace fiedler
