#pragma once

// Exact matrix backend for the two-site (1/2, 1) system: spin operators,
// Hamiltonian assembly, a Jacobi eigensolver, thermal states, partial
// transposition and matrix-level negativity. Every closed form in the
// project is checked against this pipeline.

#include <array>
#include <cstddef>
#include <vector>

#include "mixspin/negativity.hpp"

namespace mixspin {

inline constexpr int kDim = 6;

// Spin magnitude stored as 2s so half-integers stay exact.
struct Spin {
  int twice;
  static constexpr Spin half() { return {1}; }
  static constexpr Spin one() { return {2}; }
  double value() const { return 0.5 * twice; }
  int multiplicity() const { return twice + 1; }
};

// Small dense row-major real matrix.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  static RealMatrix identity(std::size_t n);
  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
  friend RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
  friend RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
  friend RealMatrix operator*(double s, const RealMatrix& a);

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

RealMatrix kron(const RealMatrix& a, const RealMatrix& b);

// Spin matrices in the |s, s-1, ..., -s> basis. sy is purely imaginary, so
// only its imaginary part is stored: sy = i * sy_imag.
struct SpinOps {
  Spin spin;
  RealMatrix sx;
  RealMatrix sy_imag;
  RealMatrix sz;
};

SpinOps spin_operators(Spin s);

// ProductOrder: |s_z> (x) |S_z>, s_z in {+1/2, -1/2} outer and S_z in
// {+1, 0, -1} inner.
// PaperOrder: {|-1/2,-1>, |1/2,0>, |-1/2,1>, |1/2,-1>, |-1/2,0>, |1/2,1>},
// the ordering in which the partial transpose is block diagonal.
enum class BasisOrder { Product, Paper };

// product index of the k-th PaperOrder basis vector
inline constexpr std::array<int, kDim> kPaperToProduct = {5, 1, 3, 2, 4, 0};

using Matrix6 = std::array<std::array<double, kDim>, kDim>;

// 6x6 real symmetric matrix; only the upper triangle is stored so
// symmetry holds by construction.
class DenseSym6 {
 public:
  explicit DenseSym6(BasisOrder order = BasisOrder::Product) : order_(order) {}

  static DenseSym6 from_full(const Matrix6& m, BasisOrder order = BasisOrder::Product);
  static DenseSym6 identity(BasisOrder order = BasisOrder::Product);

  double operator()(int i, int j) const { return upper_[index(i, j)]; }
  void set(int i, int j, double v) { upper_[index(i, j)] = v; }

  BasisOrder order() const { return order_; }
  double trace() const;
  Matrix6 to_full() const;
  DenseSym6 reordered(BasisOrder target) const;

  friend bool operator==(const DenseSym6&, const DenseSym6&) = default;

 private:
  static constexpr int index(int i, int j) {
    if (i > j) {
      const int t = i;
      i = j;
      j = t;
    }
    return i * kDim - i * (i - 1) / 2 + (j - i);
  }

  std::array<double, kDim * (kDim + 1) / 2> upper_{};
  BasisOrder order_;
};

struct EigenDecomp {
  std::array<double, kDim> eigenvalues{};  // ascending
  Matrix6 eigenvectors{};                  // column k is the k-th eigenvector
  int sweeps = 0;
};

// H = B (s^z + S^z) - J (s^x S^x + s^y S^y), ProductOrder.
DenseSym6 build_hamiltonian(double j, double b);

// Cyclic Jacobi. Throws NumericError if 100 sweeps do not converge.
EigenDecomp symmetric_eigen(const DenseSym6& m);

enum class Subsystem { First };

DenseSym6 gibbs_state(const DenseSym6& h, double temperature);

// ln Tr exp(-H/T), evaluated with the ground energy factored out.
double thermal_log_partition(const DenseSym6& h, double temperature);

DenseSym6 partial_transpose(const DenseSym6& rho, Subsystem subsystem = Subsystem::First);

// Sum of |negative eigenvalues| of a partially transposed unit-trace state.
// Also cross-checks against (||rho_pt||_1 - 1) / 2.
NegativityResult negativity_of_state(const DenseSym6& rho_pt);

// Smallest eigenvalue, convenience for PPT checks.
double min_eigenvalue(const DenseSym6& m);

}  // namespace mixspin
