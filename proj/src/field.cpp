#include "sfvs/field.hpp"

#include <stdexcept>

namespace sfvs {

Fp Fp::from_signed(std::int64_t v) {
  if (v >= 0) return Fp(static_cast<std::uint64_t>(v));
  return -Fp(static_cast<std::uint64_t>(-(v + 1)) + 1);
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this, acc(1);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Fp Fp::inverse() const { return pow(kModulus - 2); }

Fp Fp::random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1, kModulus - 1);
  return Fp(dist(rng));
}

FieldMatrix FieldMatrix::identity(int n) {
  FieldMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Fp(1);
  return m;
}

std::vector<Fp> FieldMatrix::column(int c) const {
  std::vector<Fp> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

FieldMatrix FieldMatrix::select_columns(std::span<const int> cols) const {
  FieldMatrix out(rows_, static_cast<int>(cols.size()));
  for (int r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(r, int(j)) = at(r, cols[j]);
  return out;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

RrefResult rref(const FieldMatrix& m) {
  RrefResult res{m, {}};
  FieldMatrix& a = res.reduced;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < a.rows(); ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(row, c));
    Fp inv = a.at(row, col).inverse();
    for (int c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      Fp f = a.at(r, col);
      for (int c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(row, c);
    }
    res.pivots.push_back(col);
    ++row;
  }
  return res;
}

int rank(const FieldMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

int rank_of_columns(const FieldMatrix& m, std::span<const int> cols) {
  if (cols.empty()) return 0;
  return rank(m.select_columns(cols));
}

FieldMatrix row_basis(const FieldMatrix& m) {
  RrefResult r = rref(m);
  const int rk = static_cast<int>(r.pivots.size());
  FieldMatrix out(rk, m.cols());
  for (int i = 0; i < rk; ++i)
    for (int c = 0; c < m.cols(); ++c) out.at(i, c) = r.reduced.at(i, c);
  return out;
}

FieldMatrix dualize(const FieldMatrix& m) {
  RrefResult r = rref(m);
  const int rk = static_cast<int>(r.pivots.size());
  if (rk != m.rows()) throw std::invalid_argument("dualize: matrix is not of full row rank");
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  // With m ~ [I | B] over (pivot, free) columns the dual is [-B^T | I].
  FieldMatrix out(static_cast<int>(free_cols.size()), n);
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    out.at(int(j), free_cols[j]) = Fp(1);
    for (int i = 0; i < rk; ++i) out.at(int(j), r.pivots[i]) = -r.reduced.at(i, free_cols[j]);
  }
  return out;
}

std::vector<Fp> wedge3_coordinates(std::span<const Fp> a, std::span<const Fp> b,
                                   std::span<const Fp> c, int d1, int d2) {
  const std::size_t total = std::size_t(d1) + d2;
  if (a.size() != total || b.size() != total || c.size() != total)
    throw std::invalid_argument("wedge3: column length mismatch");
  for (int i = d1; i < d1 + d2; ++i)
    if (!a[i].is_zero() || !b[i].is_zero())
      throw std::invalid_argument("wedge3: first-block column has second-block support");
  for (int i = 0; i < d1; ++i)
    if (!c[i].is_zero())
      throw std::invalid_argument("wedge3: second-block column has first-block support");

  std::vector<Fp> out;
  out.reserve(std::size_t(d1) * (d1 > 0 ? d1 - 1 : 0) / 2 * d2);
  for (int i = 0; i < d1; ++i)
    for (int j = i + 1; j < d1; ++j) {
      Fp minor = a[i] * b[j] - a[j] * b[i];
      for (int l = 0; l < d2; ++l) out.push_back(minor * c[d1 + l]);
    }
  return out;
}

bool IncrementalBasis::insert(std::vector<Fp> v) {
  if (v.size() != dim_) throw std::invalid_argument("IncrementalBasis: dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Fp f = v[pivot_[i]];
    if (f.is_zero()) continue;
    const auto& row = rows_[i];
    for (std::size_t c = 0; c < dim_; ++c)
      if (!row[c].is_zero()) v[c] -= f * row[c];
  }
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  Fp inv = v[p].inverse();
  for (auto& x : v) x *= inv;
  rows_.push_back(std::move(v));
  pivot_.push_back(p);
  return true;
}

}  // namespace sfvs
