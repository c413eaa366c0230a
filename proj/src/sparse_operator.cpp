#include "suq2/sparse_operator.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <vector>

#include "suq2/errors.hpp"

namespace suq2::gns {

namespace {
Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }
}  // namespace

SparseOperator::SparseOperator(std::size_t dim) : m_(idx(dim), idx(dim)) {}

SparseOperator::SparseOperator(std::size_t dim, const std::vector<Triplet>& entries)
    : m_(idx(dim), idx(dim)) {
  m_.setFromTriplets(entries.begin(), entries.end());
  m_.prune(Scalar(0.0));
  m_.makeCompressed();
}

SparseOperator::SparseOperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error("SparseOperator must be square");
  m_.prune(Scalar(0.0));
  m_.makeCompressed();
}

SparseOperator SparseOperator::identity(std::size_t dim) {
  Matrix m(idx(dim), idx(dim));
  m.setIdentity();
  return SparseOperator(std::move(m));
}

SparseOperator::Scalar SparseOperator::entry(std::size_t row, std::size_t col) const {
  return m_.coeff(idx(row), idx(col));
}

std::vector<SparseOperator::Triplet> SparseOperator::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (Eigen::Index k = 0; k < m_.outerSize(); ++k)
    for (Matrix::InnerIterator it(m_, k); it; ++it) out.emplace_back(it.row(), it.col(), it.value());
  return out;
}

SparseOperator SparseOperator::adjoint() const { return SparseOperator(Matrix(m_.adjoint())); }

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
  return SparseOperator(SparseOperator::Matrix(a.m_ + b.m_));
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
  return SparseOperator(SparseOperator::Matrix(a.m_ - b.m_));
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  return SparseOperator(SparseOperator::Matrix(a.m_ * b.m_));
}

SparseOperator operator*(SparseOperator::Scalar s, const SparseOperator& a) {
  return SparseOperator(SparseOperator::Matrix(s * a.m_));
}

SparseOperator SparseOperator::restrict_to(std::span<const std::size_t> indices) const {
  return block(indices, indices);
}

SparseOperator SparseOperator::block(std::span<const std::size_t> rows,
                                     std::span<const std::size_t> cols) const {
  if (rows.size() != cols.size()) throw Error("block must be square");
  std::vector<Eigen::Index> row_pos(dim(), -1);
  for (std::size_t r = 0; r < rows.size(); ++r) row_pos[rows[r]] = idx(r);
  std::vector<Triplet> entries;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (Matrix::InnerIterator it(m_, idx(cols[c])); it; ++it) {
      const Eigen::Index r = row_pos[static_cast<std::size_t>(it.row())];
      if (r >= 0) entries.emplace_back(r, idx(c), it.value());
    }
  }
  return SparseOperator(rows.size(), entries);
}

double SparseOperator::max_abs_entry() const {
  double m = 0.0;
  for (Eigen::Index k = 0; k < m_.outerSize(); ++k)
    for (Matrix::InnerIterator it(m_, k); it; ++it) m = std::max(m, std::abs(it.value()));
  return m;
}

double SparseOperator::max_abs_entry_in_columns(std::span<const std::size_t> cols) const {
  double m = 0.0;
  for (std::size_t c : cols)
    for (Matrix::InnerIterator it(m_, idx(c)); it; ++it) m = std::max(m, std::abs(it.value()));
  return m;
}

double SparseOperator::norm(double rel_tol, int max_iter) const {
  if (dim() == 0 || nnz() == 0) return 0.0;
  Vector v = Vector::Ones(m_.cols());
  v.normalize();
  const Matrix adj = m_.adjoint();
  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    const Vector w = m_ * v;
    lambda = w.squaredNorm();  // Rayleigh quotient of T*T at the unit vector v
    const Vector u = adj * w;
    // Stop once v is an approximate eigenvector: |T*T v - lambda v| <= rel_tol lambda.
    if ((u - lambda * v).norm() <= rel_tol * lambda) break;
    const double un = u.norm();
    if (un == 0.0) break;
    v = u / un;
  }
  return std::sqrt(lambda);
}

void SparseOperator::write_triplets(std::ostream& os, double q, int twolmax) const {
  const auto entries = triplets();
  os << dim() << ' ' << entries.size() << ' ' << std::setprecision(17) << q << ' ' << twolmax << '\n';
  for (const auto& t : entries)
    os << t.row() << ' ' << t.col() << ' ' << t.value().real() << ' ' << t.value().imag() << '\n';
}

SparseOperator SparseOperator::read_triplets(std::istream& is, double* q, int* twolmax) {
  std::size_t dim = 0, nnz = 0;
  double qv = 0;
  int tl = 0;
  if (!(is >> dim >> nnz >> qv >> tl)) throw ParseError("bad triplet header");
  std::vector<Triplet> entries;
  entries.reserve(nnz);
  for (std::size_t k = 0; k < nnz; ++k) {
    long r = 0, c = 0;
    double re = 0, im = 0;
    if (!(is >> r >> c >> re >> im)) throw ParseError("truncated triplet body");
    if (r < 0 || c < 0 || static_cast<std::size_t>(r) >= dim || static_cast<std::size_t>(c) >= dim)
      throw ParseError("triplet index out of range");
    entries.emplace_back(r, c, Scalar(re, im));
  }
  if (q) *q = qv;
  if (twolmax) *twolmax = tl;
  return SparseOperator(dim, entries);
}

}  // namespace suq2::gns
