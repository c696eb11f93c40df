#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "collapse_lab/gf.hpp"
#include "collapse_lab/poly.hpp"

namespace clab {

// Square matrix of field indices, row-major. The field is carried by the caller
// (a GroupContext or an explicit Field argument).
class Matrix {
 public:
  using Elem = Field::Elem;

  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  Matrix(std::initializer_list<std::initializer_list<Elem>> rows);

  static Matrix identity(int n);
  static Matrix scalar(int n, Elem s);

  int dim() const { return n_; }
  Elem operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  Elem& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<Elem>& data() const { return a_; }
  std::vector<Elem>& data() { return a_; }

  bool operator==(const Matrix&) const = default;
  // Canonical order: row-major entry indices, lexicographic.
  std::strong_ordering operator<=>(const Matrix& o) const;

 private:
  int n_ = 0;
  std::vector<Elem> a_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept;
};

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_add(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_sub(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_scale(const Field& f, const Matrix& a, Field::Elem s);
Matrix mat_inv(const Field& f, const Matrix& a);  // throws InvalidArgument if singular
Matrix mat_pow(const Field& f, const Matrix& a, std::uint64_t e);
Matrix transpose(const Matrix& a);
Field::Elem det(const Field& f, const Matrix& a);
int rank(const Field& f, const Matrix& a);

// Monic characteristic polynomial det(XI - M).
Poly char_poly(const Field& f, const Matrix& m);
Matrix poly_eval_matrix(const Field& f, const Poly& p, const Matrix& m);
Matrix companion(const Field& f, const Poly& monic);
Matrix block_diag(const std::vector<Matrix>& blocks);
Matrix elementary(int n, int i, int j, Field::Elem v);  // I + v e_ij (0-based)

// Basis of the right nullspace of a rows x cols system over f.
std::vector<std::vector<Field::Elem>> nullspace(const Field& f, std::vector<std::vector<Field::Elem>> rows,
                                                std::size_t cols);

// "0,2;1,0"
std::string format_matrix(const Matrix& m);
Matrix parse_matrix(const Field& f, std::string_view text, std::optional<int> n = std::nullopt);

}  // namespace clab
