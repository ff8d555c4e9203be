#ifndef KOSZUL_LINALG_HPP
#define KOSZUL_LINALG_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "koszul/field.hpp"

namespace koszul {

using Vector = std::vector<Scalar>;

/// Coordinate-list matrix. set() overwrites, a zero value erases.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Scalar value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  static SparseMatrix from_dense(const std::vector<Vector>& rows, std::size_t cols);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  void set(std::size_t row, std::size_t col, const Scalar& value);
  /// Appends an entry whose coordinates the caller guarantees are new.
  void append(std::size_t row, std::size_t col, const Scalar& value);
  /// Adds value to the entry at (row, col).
  void add(std::size_t row, std::size_t col, const Scalar& value);
  Scalar get(std::size_t row, std::size_t col) const;

  SparseMatrix transposed() const;
  std::vector<Vector> to_dense() const;
  /// M v over the given field.
  Vector apply(const Vector& v, const FieldSpec& field) const;
  /// Column c as a dense vector.
  Vector column(std::size_t c) const;

 private:
  std::size_t find(std::size_t row, std::size_t col) const;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> entries_;
};

std::size_t rank(const SparseMatrix& m, const FieldSpec& field);
/// Basis of {v : M v = 0}, one vector per non-pivot column of the reduced
/// row echelon form, in column order.
std::vector<Vector> kernel_basis(const SparseMatrix& m, const FieldSpec& field);
/// Some x with M x = b, or nullopt if the system is inconsistent. Free
/// variables are set to zero.
std::optional<Vector> solve(const SparseMatrix& m, const Vector& b, const FieldSpec& field);
/// Rank of a list of equal-length vectors.
std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t dim, const FieldSpec& field);
/// Vectors of Z whose classes form a basis of span(Z) / span(B).
/// Throws InapplicableError if span(B) is not contained in span(Z).
std::vector<Vector> quotient_representatives(const std::vector<Vector>& z,
                                             const std::vector<Vector>& b, std::size_t dim,
                                             const FieldSpec& field);

/// A growing row-echelon basis of a subspace of F^dim supporting
/// membership tests and coordinates with respect to the inserted vectors.
class IncrementalBasis {
 public:
  /// With track_coordinates, express() is available at the cost of
  /// quadratic bookkeeping.
  IncrementalBasis(std::size_t dim, FieldSpec field, bool track_coordinates = false);
  ~IncrementalBasis();
  IncrementalBasis(const IncrementalBasis&);
  IncrementalBasis& operator=(const IncrementalBasis&);
  IncrementalBasis(IncrementalBasis&&) noexcept;
  IncrementalBasis& operator=(IncrementalBasis&&) noexcept;

  std::size_t dim() const noexcept;
  std::size_t rank() const noexcept;
  const FieldSpec& field() const noexcept;

  /// Inserts v if it is independent of the current span; returns whether it was.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  /// Coefficients c with v = sum_k c_k w_k, w_k the accepted vectors in
  /// insertion order; nullopt if v is outside the span. Requires
  /// track_coordinates.
  std::optional<Vector> express(const Vector& v) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace koszul

#endif
