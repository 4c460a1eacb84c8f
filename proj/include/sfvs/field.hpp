#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace sfvs {

/// Element of the prime field with p = 2^61 - 1.
class Fp {
 public:
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

  constexpr Fp() = default;
  constexpr Fp(std::uint64_t v) : value_(reduce64(v)) {}  // NOLINT
  static Fp from_signed(std::int64_t v);

  constexpr std::uint64_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.value_ + b.value_;
    return raw(s >= kModulus ? s - kModulus : s);
  }
  friend constexpr Fp operator-(Fp a, Fp b) {
    return raw(a.value_ >= b.value_ ? a.value_ - b.value_
                                    : a.value_ + kModulus - b.value_);
  }
  friend constexpr Fp operator-(Fp a) { return Fp{} - a; }
  friend constexpr Fp operator*(Fp a, Fp b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a.value_) * b.value_;
    std::uint64_t lo = static_cast<std::uint64_t>(p) & kModulus;
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    return raw(s >= kModulus ? s - kModulus : s);
  }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  Fp pow(std::uint64_t e) const;
  /// Multiplicative inverse; the caller guarantees a nonzero value.
  Fp inverse() const;

  friend constexpr bool operator==(Fp a, Fp b) { return a.value_ == b.value_; }

  /// Uniform nonzero element.
  static Fp random_nonzero(std::mt19937_64& rng);

 private:
  static constexpr std::uint64_t reduce64(std::uint64_t v) {
    v = (v & kModulus) + (v >> 61);
    return v >= kModulus ? v - kModulus : v;
  }
  static constexpr Fp raw(std::uint64_t v) {
    Fp f;
    f.value_ = v;
    return f;
  }
  std::uint64_t value_ = 0;
};

/// Dense row-major matrix over Fp.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
  static FieldMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Fp& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  Fp at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  std::vector<Fp> column(int c) const;
  FieldMatrix select_columns(std::span<const int> cols) const;
  FieldMatrix transpose() const;

  bool operator==(const FieldMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Fp> data_;
};

struct RrefResult {
  FieldMatrix reduced;
  std::vector<int> pivots;
};

/// Reduced row-echelon form; pivots are taken as the first nonzero entry.
RrefResult rref(const FieldMatrix& m);
int rank(const FieldMatrix& m);
int rank_of_columns(const FieldMatrix& m, std::span<const int> cols);

/// Representation of the dual matroid. Throws std::invalid_argument when m
/// lacks full row rank.
FieldMatrix dualize(const FieldMatrix& m);

/// Row space basis with exactly rank(m) rows; same column matroid.
FieldMatrix row_basis(const FieldMatrix& m);

/// Coordinates of a ^ b ^ c for a, b supported on the first d1 rows and c on
/// the last d2 rows. Entry for row pair {i<j} and second-block row l sits at
/// index pair_rank(i,j) * d2 + l. Throws std::invalid_argument on support
/// violations.
std::vector<Fp> wedge3_coordinates(std::span<const Fp> a, std::span<const Fp> b,
                                   std::span<const Fp> c, int d1, int d2);

/// Streaming linear-independence filter: keeps vectors that are not in the
/// span of the ones kept so far.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t dim) : dim_(dim) {}
  /// Returns true and absorbs v when v is independent of the stored basis.
  bool insert(std::vector<Fp> v);
  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::vector<Fp>> rows_;
  std::vector<std::size_t> pivot_;
};

}  // namespace sfvs
