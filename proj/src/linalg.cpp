#include "koszul/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>

#include "koszul/error.hpp"

namespace koszul {

namespace {

struct RationalOps {
  using T = mpq_class;
  T from(const Scalar& x) const { return x; }
  Scalar to(const T& x) const { return x; }
  bool is_zero(const T& x) const { return sgn(x) == 0; }
  T zero() const { return 0; }
  T one() const { return 1; }
  T inv(const T& x) const { return 1 / x; }
  // a - c * b, in place
  void axpy(T& a, const T& c, const T& b) const { a -= c * b; }
  void scale(T& a, const T& c) const { a *= c; }
};

struct ModularOps {
  using T = std::uint32_t;
  std::uint32_t p;
  T from(const Scalar& x) const { return to_residue(x, p); }
  Scalar to(const T& x) const { return Scalar(static_cast<unsigned long>(x)); }
  bool is_zero(const T& x) const { return x == 0; }
  T zero() const { return 0; }
  T one() const { return 1; }
  T inv(T x) const {
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<T>(result);
  }
  void axpy(T& a, const T& c, const T& b) const {
    const std::uint64_t prod = static_cast<std::uint64_t>(c) * b % p;
    a = static_cast<T>((a + p - prod) % p);
  }
  void scale(T& a, const T& c) const {
    a = static_cast<T>(static_cast<std::uint64_t>(a) * c % p);
  }
};

template <class Ops>
using Rows = std::vector<std::vector<typename Ops::T>>;

template <class Ops>
Rows<Ops> convert(const Ops& ops, const std::vector<Vector>& dense, std::size_t cols) {
  Rows<Ops> rows(dense.size(), std::vector<typename Ops::T>(cols, ops.zero()));
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != cols) throw DimensionMismatch("vector length mismatch");
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(dense[r][c]) != 0) rows[r][c] = ops.from(dense[r][c]);
    }
  }
  return rows;
}

template <class Ops>
Rows<Ops> convert(const Ops& ops, const SparseMatrix& m) {
  Rows<Ops> rows(m.rows(), std::vector<typename Ops::T>(m.cols(), ops.zero()));
  for (const auto& e : m.entries()) rows[e.row][e.col] = ops.from(e.value);
  return rows;
}

/// Reduced row echelon form in place; returns pivot columns.
template <class Ops>
std::vector<std::size_t> rref(const Ops& ops, Rows<Ops>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && ops.is_zero(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const auto inv = ops.inv(rows[r][c]);
    for (std::size_t k = c; k < cols; ++k) ops.scale(rows[r][k], inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || ops.is_zero(rows[i][c])) continue;
      const auto factor = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!ops.is_zero(rows[r][k])) ops.axpy(rows[i][k], factor, rows[r][k]);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Row echelon form (no back substitution); enough for rank.
template <class Ops>
std::size_t echelon_rank(const Ops& ops, Rows<Ops>& rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && ops.is_zero(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const auto inv = ops.inv(rows[r][c]);
    for (std::size_t k = c; k < cols; ++k) ops.scale(rows[r][k], inv);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (ops.is_zero(rows[i][c])) continue;
      const auto factor = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!ops.is_zero(rows[r][k])) ops.axpy(rows[i][k], factor, rows[r][k]);
      }
    }
    ++r;
  }
  return r;
}

template <class Ops>
std::vector<Vector> kernel_impl(const Ops& ops, Rows<Ops> rows, std::size_t cols) {
  const auto pivots = rref(ops, rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, Scalar(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (!ops.is_zero(rows[i][f])) {
        auto neg = ops.zero();
        ops.axpy(neg, ops.one(), rows[i][f]);
        v[pivots[i]] = ops.to(neg);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class Ops>
std::optional<Vector> solve_impl(const Ops& ops, Rows<Ops> rows, std::size_t cols) {
  // rows carry the right-hand side in column `cols`.
  const auto pivots = rref(ops, rows, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vector x(cols, Scalar(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = ops.to(rows[i][cols]);
  return x;
}

template <class Ops>
struct Echelon {
  using T = typename Ops::T;
  Ops ops;
  std::size_t dim;
  bool track;
  std::vector<std::vector<T>> rows;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<T>> combos;  // rows[r] = sum_k combos[r][k] * accepted[k]
  std::size_t accepted = 0;

  // Reduces v in place; returns multipliers per row.
  std::vector<T> reduce(std::vector<T>& v) const {
    std::vector<T> mult(rows.size(), ops.zero());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto c = pivots[r];
      if (ops.is_zero(v[c])) continue;
      mult[r] = v[c];
      for (std::size_t k = 0; k < dim; ++k) {
        if (!ops.is_zero(rows[r][k])) ops.axpy(v[k], mult[r], rows[r][k]);
      }
    }
    return mult;
  }

  std::vector<T> load(const Vector& v) const {
    if (v.size() != dim) throw DimensionMismatch("vector length mismatch");
    std::vector<T> out(dim, ops.zero());
    for (std::size_t k = 0; k < dim; ++k) {
      if (sgn(v[k]) != 0) out[k] = ops.from(v[k]);
    }
    return out;
  }

  bool add(const Vector& input) {
    auto v = load(input);
    const auto mult = reduce(v);
    std::size_t piv = 0;
    while (piv < dim && ops.is_zero(v[piv])) ++piv;
    if (piv == dim) return false;
    const auto inv = ops.inv(v[piv]);
    for (auto& x : v) ops.scale(x, inv);
    if (track) {
      std::vector<T> combo(accepted + 1, ops.zero());
      combo[accepted] = ops.one();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (ops.is_zero(mult[r])) continue;
        for (std::size_t k = 0; k < combos[r].size(); ++k) {
          if (!ops.is_zero(combos[r][k])) ops.axpy(combo[k], mult[r], combos[r][k]);
        }
      }
      for (auto& x : combo) ops.scale(x, inv);
      combos.push_back(std::move(combo));
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    ++accepted;
    return true;
  }

  bool contains(const Vector& input) const {
    auto v = load(input);
    reduce(v);
    return std::all_of(v.begin(), v.end(), [this](const T& x) { return ops.is_zero(x); });
  }

  std::optional<Vector> express(const Vector& input) const {
    if (!track) throw std::logic_error("coordinates were not tracked");
    auto v = load(input);
    const auto mult = reduce(v);
    if (!std::all_of(v.begin(), v.end(), [this](const T& x) { return ops.is_zero(x); })) {
      return std::nullopt;
    }
    std::vector<T> coeff(accepted, ops.zero());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (ops.is_zero(mult[r])) continue;
      for (std::size_t k = 0; k < combos[r].size(); ++k) {
        if (ops.is_zero(combos[r][k])) continue;
        // coeff += mult * combo
        auto neg = ops.zero();
        ops.axpy(neg, mult[r], combos[r][k]);
        ops.axpy(coeff[k], ops.one(), neg);
      }
    }
    Vector out;
    out.reserve(accepted);
    for (const auto& x : coeff) out.push_back(ops.to(x));
    return out;
  }
};

template <class F>
auto dispatch(const FieldSpec& field, F&& f) {
  if (field.is_rational()) return f(RationalOps{});
  return f(ModularOps{field.characteristic()});
}

}  // namespace

SparseMatrix SparseMatrix::from_dense(const std::vector<Vector>& rows, std::size_t cols) {
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(rows[r][c]) != 0) m.entries_.push_back({r, c, rows[r][c]});
    }
  }
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.entries_.push_back({k, k, Scalar(1)});
  return m;
}

std::size_t SparseMatrix::find(std::size_t row, std::size_t col) const {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k].row == row && entries_[k].col == col) return k;
  }
  return entries_.size();
}

void SparseMatrix::set(std::size_t row, std::size_t col, const Scalar& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index out of range");
  const auto k = find(row, col);
  if (sgn(value) == 0) {
    if (k < entries_.size()) entries_.erase(entries_.begin() + static_cast<long>(k));
    return;
  }
  if (k < entries_.size()) {
    entries_[k].value = value;
  } else {
    entries_.push_back({row, col, value});
  }
}

void SparseMatrix::append(std::size_t row, std::size_t col, const Scalar& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index out of range");
  if (sgn(value) != 0) entries_.push_back({row, col, value});
}

void SparseMatrix::add(std::size_t row, std::size_t col, const Scalar& value) {
  set(row, col, get(row, col) + value);
}

Scalar SparseMatrix::get(std::size_t row, std::size_t col) const {
  const auto k = find(row, col);
  return k < entries_.size() ? entries_[k].value : Scalar(0);
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t(cols_, rows_);
  for (const auto& e : entries_) t.entries_.push_back({e.col, e.row, e.value});
  return t;
}

std::vector<Vector> SparseMatrix::to_dense() const {
  std::vector<Vector> d(rows_, Vector(cols_, Scalar(0)));
  for (const auto& e : entries_) d[e.row][e.col] = e.value;
  return d;
}

Vector SparseMatrix::apply(const Vector& v, const FieldSpec& field) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length mismatch");
  Vector out(rows_, Scalar(0));
  for (const auto& e : entries_) out[e.row] += e.value * v[e.col];
  for (auto& x : out) x = field.normalize(x);
  return out;
}

Vector SparseMatrix::column(std::size_t c) const {
  Vector out(rows_, Scalar(0));
  for (const auto& e : entries_) {
    if (e.col == c) out[e.row] = e.value;
  }
  return out;
}

std::size_t rank(const SparseMatrix& m, const FieldSpec& field) {
  return dispatch(field, [&](const auto& ops) {
    // Eliminate along the shorter dimension.
    if (m.rows() > m.cols()) {
      auto rows = convert(ops, m.transposed());
      return echelon_rank(ops, rows, m.rows());
    }
    auto rows = convert(ops, m);
    return echelon_rank(ops, rows, m.cols());
  });
}

std::vector<Vector> kernel_basis(const SparseMatrix& m, const FieldSpec& field) {
  return dispatch(field, [&](const auto& ops) { return kernel_impl(ops, convert(ops, m), m.cols()); });
}

std::optional<Vector> solve(const SparseMatrix& m, const Vector& b, const FieldSpec& field) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  return dispatch(field, [&](const auto& ops) {
    auto rows = convert(ops, m);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      rows[r].push_back(sgn(b[r]) != 0 ? ops.from(b[r]) : ops.zero());
    }
    return solve_impl(ops, std::move(rows), m.cols());
  });
}

std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t dim, const FieldSpec& field) {
  return dispatch(field, [&](const auto& ops) {
    auto rows = convert(ops, vectors, dim);
    return echelon_rank(ops, rows, dim);
  });
}

std::vector<Vector> quotient_representatives(const std::vector<Vector>& z,
                                             const std::vector<Vector>& b, std::size_t dim,
                                             const FieldSpec& field) {
  IncrementalBasis zspan(dim, field);
  for (const auto& v : z) zspan.add(v);
  IncrementalBasis acc(dim, field);
  for (const auto& v : b) {
    if (!zspan.contains(v)) {
      throw InapplicableError("boundary vector outside the span of the cycles");
    }
    acc.add(v);
  }
  std::vector<Vector> reps;
  for (const auto& v : z) {
    if (acc.add(v)) reps.push_back(v);
  }
  return reps;
}

struct IncrementalBasis::Impl {
  FieldSpec field;
  std::variant<Echelon<RationalOps>, Echelon<ModularOps>> echelon;
};

IncrementalBasis::IncrementalBasis(std::size_t dim, FieldSpec field, bool track_coordinates) {
  if (field.is_rational()) {
    impl_ = std::make_unique<Impl>(
        Impl{field, Echelon<RationalOps>{RationalOps{}, dim, track_coordinates, {}, {}, {}, 0}});
  } else {
    impl_ = std::make_unique<Impl>(Impl{
        field, Echelon<ModularOps>{ModularOps{field.characteristic()}, dim, track_coordinates,
                                   {}, {}, {}, 0}});
  }
}

IncrementalBasis::~IncrementalBasis() = default;
IncrementalBasis::IncrementalBasis(const IncrementalBasis& other)
    : impl_(std::make_unique<Impl>(*other.impl_)) {}
IncrementalBasis& IncrementalBasis::operator=(const IncrementalBasis& other) {
  if (this != &other) impl_ = std::make_unique<Impl>(*other.impl_);
  return *this;
}
IncrementalBasis::IncrementalBasis(IncrementalBasis&&) noexcept = default;
IncrementalBasis& IncrementalBasis::operator=(IncrementalBasis&&) noexcept = default;

std::size_t IncrementalBasis::dim() const noexcept {
  return std::visit([](const auto& e) { return e.dim; }, impl_->echelon);
}

std::size_t IncrementalBasis::rank() const noexcept {
  return std::visit([](const auto& e) { return e.rows.size(); }, impl_->echelon);
}

const FieldSpec& IncrementalBasis::field() const noexcept { return impl_->field; }

bool IncrementalBasis::add(const Vector& v) {
  return std::visit([&](auto& e) { return e.add(v); }, impl_->echelon);
}

bool IncrementalBasis::contains(const Vector& v) const {
  return std::visit([&](const auto& e) { return e.contains(v); }, impl_->echelon);
}

std::optional<Vector> IncrementalBasis::express(const Vector& v) const {
  return std::visit([&](const auto& e) { return e.express(v); }, impl_->echelon);
}

}  // namespace koszul
