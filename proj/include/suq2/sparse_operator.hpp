#pragma once

#include <Eigen/Sparse>

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace suq2::gns {

/// Complex sparse square matrix on a truncated Hilbert space.
///
/// Immutable value type backed by an Eigen column-major sparse matrix.
class SparseOperator {
 public:
  using Scalar = std::complex<double>;
  using Matrix = Eigen::SparseMatrix<Scalar>;
  using Vector = Eigen::VectorX<Scalar>;
  using Triplet = Eigen::Triplet<Scalar>;

  SparseOperator() = default;
  explicit SparseOperator(std::size_t dim);
  SparseOperator(std::size_t dim, const std::vector<Triplet>& entries);
  explicit SparseOperator(Matrix m);

  static SparseOperator identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t nnz() const { return static_cast<std::size_t>(m_.nonZeros()); }
  const Matrix& matrix() const { return m_; }
  Scalar entry(std::size_t row, std::size_t col) const;
  std::vector<Triplet> triplets() const;

  SparseOperator adjoint() const;
  Vector apply(const Vector& v) const { return m_ * v; }

  friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator*(Scalar s, const SparseOperator& a);

  /// Principal compression onto the listed basis positions (in that order).
  SparseOperator restrict_to(std::span<const std::size_t> indices) const;
  /// Block rows x cols; both lists must have equal length.
  SparseOperator block(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  double max_abs_entry() const;
  /// Largest |entry| among the listed columns (all rows).
  double max_abs_entry_in_columns(std::span<const std::size_t> cols) const;

  /// Operator norm by power iteration on T*T: all-ones start vector, stop at
  /// relative change below rel_tol or after max_iter iterations.
  double norm(double rel_tol = 1e-6, int max_iter = 10000) const;

  /// Line-based triplet text: header "dim nnz q twolmax", then "row col re im".
  void write_triplets(std::ostream& os, double q, int twolmax) const;
  static SparseOperator read_triplets(std::istream& is, double* q = nullptr, int* twolmax = nullptr);

 private:
  Matrix m_;
};

}  // namespace suq2::gns
