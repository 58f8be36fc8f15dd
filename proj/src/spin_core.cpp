#include "mixspin/spin_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mixspin/errors.hpp"

namespace mixspin {

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  const std::size_t n = a.size();
  RealMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

RealMatrix operator*(double s, const RealMatrix& a) {
  RealMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = s * a(i, j);
  return c;
}

RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  RealMatrix c(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) c(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return c;
}

SpinOps spin_operators(Spin s) {
  if (s.twice != 1 && s.twice != 2)
    throw ArgumentError("spin_operators: only s = 1/2 and s = 1 are supported, got 2s = " +
                        std::to_string(s.twice));
  const auto dim = static_cast<std::size_t>(s.multiplicity());
  const double sv = s.value();

  // raising operator: <m+1| S+ |m> = sqrt(s(s+1) - m(m+1)), basis index k <-> m = s - k
  RealMatrix raise(dim);
  for (std::size_t k = 1; k < dim; ++k) {
    const double m = sv - static_cast<double>(k);
    raise(k - 1, k) = std::sqrt(sv * (sv + 1.0) - m * (m + 1.0));
  }
  RealMatrix lower(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) lower(i, j) = raise(j, i);

  SpinOps ops{s, 0.5 * (raise + lower), 0.5 * (lower - raise), RealMatrix(dim)};
  for (std::size_t k = 0; k < dim; ++k) ops.sz(k, k) = sv - static_cast<double>(k);
  return ops;
}

DenseSym6 DenseSym6::from_full(const Matrix6& m, BasisOrder order) {
  DenseSym6 out(order);
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) out.set(i, j, m[i][j]);
  return out;
}

DenseSym6 DenseSym6::identity(BasisOrder order) {
  DenseSym6 out(order);
  for (int i = 0; i < kDim; ++i) out.set(i, i, 1.0);
  return out;
}

double DenseSym6::trace() const {
  double t = 0.0;
  for (int i = 0; i < kDim; ++i) t += (*this)(i, i);
  return t;
}

Matrix6 DenseSym6::to_full() const {
  Matrix6 m{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) m[i][j] = (*this)(i, j);
  return m;
}

DenseSym6 DenseSym6::reordered(BasisOrder target) const {
  if (target == order_) return *this;
  DenseSym6 out(target);
  for (int a = 0; a < kDim; ++a)
    for (int b = a; b < kDim; ++b) {
      const int pa = kPaperToProduct[a];
      const int pb = kPaperToProduct[b];
      if (target == BasisOrder::Paper)
        out.set(a, b, (*this)(pa, pb));
      else
        out.set(pa, pb, (*this)(a, b));
    }
  return out;
}

DenseSym6 build_hamiltonian(double j, double b) {
  if (!std::isfinite(j) || !std::isfinite(b))
    throw DomainError(DomainReason::NonFinite, "build_hamiltonian: non-finite J or B");
  const SpinOps small = spin_operators(Spin::half());
  const SpinOps big = spin_operators(Spin::one());
  const RealMatrix i2 = RealMatrix::identity(2);
  const RealMatrix i3 = RealMatrix::identity(3);

  // s^y S^y = (i a)(x)(i c) = -(a (x) c) for the stored imaginary parts
  const RealMatrix zeeman = kron(small.sz, i3) + kron(i2, big.sz);
  const RealMatrix exchange = kron(small.sx, big.sx) - kron(small.sy_imag, big.sy_imag);
  const RealMatrix h = b * zeeman - j * exchange;

  DenseSym6 out(BasisOrder::Product);
  for (int r = 0; r < kDim; ++r)
    for (int c = r; c < kDim; ++c) out.set(r, c, h(r, c));
  return out;
}

EigenDecomp symmetric_eigen(const DenseSym6& m) {
  constexpr int kMaxSweeps = 100;
  constexpr double kOffTolerance = 1e-14;

  Matrix6 a = m.to_full();
  Matrix6 v{};
  for (int i = 0; i < kDim; ++i) v[i][i] = 1.0;

  double frob = 0.0;
  for (const auto& row : a)
    for (double x : row) frob += x * x;
  const double scale = std::max(1.0, std::sqrt(frob));

  auto off_norm = [&a] {
    double s = 0.0;
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        if (i != j) s += a[i][j] * a[i][j];
    return std::sqrt(s);
  };

  EigenDecomp out;
  int sweep = 0;
  for (; sweep <= kMaxSweeps; ++sweep) {
    if (off_norm() < kOffTolerance * scale) break;
    if (sweep == kMaxSweeps)
      throw NumericError("symmetric_eigen: Jacobi iteration did not converge in 100 sweeps");

    for (int p = 0; p < kDim - 1; ++p) {
      for (int q = p + 1; q < kDim; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        // element negligible against both diagonals: drop it
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(a[p][p]) + g == std::abs(a[p][p]) &&
            std::abs(a[q][q]) + g == std::abs(a[q][q])) {
          a[p][q] = a[q][p] = 0.0;
          continue;
        }
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < kDim; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < kDim; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        a[p][q] = a[q][p] = 0.0;

        for (int k = 0; k < kDim; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  out.sweeps = sweep;

  std::array<int, kDim> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&a](int x, int y) { return a[x][x] < a[y][y]; });
  for (int k = 0; k < kDim; ++k) {
    out.eigenvalues[k] = a[order[k]][order[k]];
    for (int i = 0; i < kDim; ++i) out.eigenvectors[i][k] = v[i][order[k]];
  }
  return out;
}

namespace {

void check_temperature(double temperature, const char* who) {
  if (std::isnan(temperature) || std::isinf(temperature))
    throw DomainError(DomainReason::NonFinite, std::string(who) + ": non-finite temperature");
  if (temperature <= 0.0)
    throw DomainError(DomainReason::NonPositiveTemperature,
                      std::string(who) + ": temperature must be positive");
}

}  // namespace

DenseSym6 gibbs_state(const DenseSym6& h, double temperature) {
  check_temperature(temperature, "gibbs_state");
  const EigenDecomp eig = symmetric_eigen(h);
  const double e_min = eig.eigenvalues[0];

  std::array<double, kDim> w{};
  double z = 0.0;
  for (int k = 0; k < kDim; ++k) {
    w[k] = std::exp(-(eig.eigenvalues[k] - e_min) / temperature);
    z += w[k];
  }

  DenseSym6 rho(h.order());
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      double s = 0.0;
      for (int k = 0; k < kDim; ++k) s += w[k] * eig.eigenvectors[i][k] * eig.eigenvectors[j][k];
      rho.set(i, j, s / z);
    }
  return rho;
}

double thermal_log_partition(const DenseSym6& h, double temperature) {
  check_temperature(temperature, "thermal_log_partition");
  const EigenDecomp eig = symmetric_eigen(h);
  const double e_min = eig.eigenvalues[0];
  double z = 0.0;
  for (double e : eig.eigenvalues) z += std::exp(-(e - e_min) / temperature);
  return -e_min / temperature + std::log(z);
}

DenseSym6 partial_transpose(const DenseSym6& rho, Subsystem) {
  const DenseSym6 in = rho.reordered(BasisOrder::Product);
  DenseSym6 out(BasisOrder::Product);
  // (m, mu), (n, nu) -> (n, mu), (m, nu); first label is the spin-1/2 index
  for (int m = 0; m < 2; ++m)
    for (int mu = 0; mu < 3; ++mu)
      for (int n = 0; n < 2; ++n)
        for (int nu = 0; nu < 3; ++nu) {
          const int row = m * 3 + mu;
          const int col = n * 3 + nu;
          if (row > col) continue;
          out.set(row, col, in(n * 3 + mu, m * 3 + nu));
        }
  return out;
}

NegativityResult negativity_of_state(const DenseSym6& rho_pt) {
  const double tr = rho_pt.trace();
  if (!(std::abs(tr - 1.0) <= 1e-10))
    throw ContractError("negativity_of_state: trace " + std::to_string(tr) + " differs from 1");

  const EigenDecomp eig = symmetric_eigen(rho_pt);

  // block members expressed in the matrix's own ordering
  const bool product = rho_pt.order() == BasisOrder::Product;
  const std::array<int, 2> block12 = product ? std::array<int, 2>{kPaperToProduct[0], kPaperToProduct[1]}
                                             : std::array<int, 2>{0, 1};
  const std::array<int, 2> block56 = product ? std::array<int, 2>{kPaperToProduct[4], kPaperToProduct[5]}
                                             : std::array<int, 2>{4, 5};

  NegativityResult res;
  res.mode = EvalMode::Oracle;
  double abs_sum = 0.0;
  double eig_sum = 0.0;
  for (int k = 0; k < kDim; ++k) {
    const double lambda = eig.eigenvalues[k];
    abs_sum += std::abs(lambda);
    eig_sum += lambda;
    if (lambda >= 0.0) continue;
    res.negativity -= lambda;
    // spectral weight of the eigenvector on each block; exact even inside
    // degenerate eigenspaces because it is a projector trace
    double w12 = 0.0;
    double w56 = 0.0;
    for (int i : block12) w12 += eig.eigenvectors[i][k] * eig.eigenvectors[i][k];
    for (int i : block56) w56 += eig.eigenvectors[i][k] * eig.eigenvectors[i][k];
    res.neg_block_12 += lambda * w12;
    res.neg_block_56 += lambda * w56;
  }

  const double via_trace_norm = 0.5 * (abs_sum - 1.0);
  if (std::abs(via_trace_norm - res.negativity) > 1e-12 + 0.5 * std::abs(eig_sum - 1.0))
    throw ContractError("negativity_of_state: negative-eigenvalue sum and trace-norm forms disagree");
  return res;
}

double min_eigenvalue(const DenseSym6& m) { return symmetric_eigen(m).eigenvalues[0]; }

}  // namespace mixspin
