#include "collapse_lab/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "collapse_lab/error.hpp"

namespace clab {

Matrix::Matrix(std::initializer_list<std::initializer_list<Elem>> rows) : n_(static_cast<int>(rows.size())) {
  a_.reserve(static_cast<std::size_t>(n_) * n_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n_) throw InvalidArgument("Matrix: rows must form a square");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(int n) { return scalar(n, 1); }

Matrix Matrix::scalar(int n, Elem s) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

std::strong_ordering Matrix::operator<=>(const Matrix& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (auto c = a_[i] <=> o.a_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t MatrixHash::operator()(const Matrix& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : m.data()) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

static void same_dim(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("matrix dimension mismatch");
}

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b) {
  same_dim(a, b);
  const int n = a.dim();
  Matrix r(n);
  if (f.m() == 1) {
    const std::uint64_t p = f.p();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::uint64_t s = 0;
        for (int k = 0; k < n; ++k) s += std::uint64_t{a(i, k)} * b(k, j);
        r(i, j) = static_cast<Field::Elem>(s % p);
      }
    return r;
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) r(i, j) = f.add(r(i, j), f.mul(aik, b(k, j)));
    }
  return r;
}

Matrix mat_add(const Field& f, const Matrix& a, const Matrix& b) {
  same_dim(a, b);
  Matrix r(a.dim());
  for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] = f.add(a.data()[i], b.data()[i]);
  return r;
}

Matrix mat_sub(const Field& f, const Matrix& a, const Matrix& b) {
  same_dim(a, b);
  Matrix r(a.dim());
  for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] = f.sub(a.data()[i], b.data()[i]);
  return r;
}

Matrix mat_scale(const Field& f, const Matrix& a, Field::Elem s) {
  Matrix r(a.dim());
  for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] = f.mul(a.data()[i], s);
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(j, i) = a(i, j);
  return r;
}

Matrix mat_inv(const Field& f, const Matrix& a) {
  const int n = a.dim();
  Matrix m = a, r = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw InvalidArgument("mat_inv: singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(col, j));
        std::swap(r(piv, j), r(col, j));
      }
    const auto iv = f.inv(m(col, col));
    for (int j = 0; j < n; ++j) {
      m(col, j) = f.mul(m(col, j), iv);
      r(col, j) = f.mul(r(col, j), iv);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || m(i, col) == 0) continue;
      const auto c = m(i, col);
      for (int j = 0; j < n; ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(c, m(col, j)));
        r(i, j) = f.sub(r(i, j), f.mul(c, r(col, j)));
      }
    }
  }
  return r;
}

Matrix mat_pow(const Field& f, const Matrix& a, std::uint64_t e) {
  Matrix r = Matrix::identity(a.dim()), b = a;
  while (e) {
    if (e & 1) r = mat_mul(f, r, b);
    e >>= 1;
    if (e) b = mat_mul(f, b, b);
  }
  return r;
}

Field::Elem det(const Field& f, const Matrix& a) {
  const int n = a.dim();
  Matrix m = a;
  Field::Elem d = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      d = f.neg(d);
    }
    d = f.mul(d, m(col, col));
    const auto iv = f.inv(m(col, col));
    for (int i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const auto c = f.mul(m(i, col), iv);
      for (int j = col; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(c, m(col, j)));
    }
  }
  return d;
}

int rank(const Field& f, const Matrix& a) {
  std::vector<std::vector<Field::Elem>> rows(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) rows[i].push_back(a(i, j));
  return a.dim() - static_cast<int>(nullspace(f, rows, a.dim()).size());
}

Poly char_poly(const Field& f, const Matrix& m) {
  const int n = m.dim();
  Matrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (h(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int k = 0; k < n; ++k) std::swap(h(piv, k), h(j + 1, k));
      for (int k = 0; k < n; ++k) std::swap(h(k, piv), h(k, j + 1));
    }
    const auto iv = f.inv(h(j + 1, j));
    for (int i = j + 2; i < n; ++i) {
      const auto u = f.mul(h(i, j), iv);
      if (u == 0) continue;
      for (int k = 0; k < n; ++k) h(i, k) = f.sub(h(i, k), f.mul(u, h(j + 1, k)));
      for (int k = 0; k < n; ++k) h(k, j + 1) = f.add(h(k, j + 1), f.mul(u, h(k, i)));
    }
  }
  // p_m = (X - h_mm) p_{m-1} - sum_i h_{m-i,m} (h_{m,m-1} ... h_{m-i+1,m-i}) p_{m-i-1}, 1-based.
  std::vector<Poly> p(n + 1);
  p[0] = Poly({1});
  auto H = [&](int i, int j) { return h(i - 1, j - 1); };
  for (int mm = 1; mm <= n; ++mm) {
    Poly cur = poly_mul(f, Poly({f.neg(H(mm, mm)), 1}), p[mm - 1]);
    Field::Elem t = 1;
    for (int i = 1; i < mm; ++i) {
      t = f.mul(t, H(mm - i + 1, mm - i));
      const auto c = f.mul(H(mm - i, mm), t);
      if (c != 0) cur = poly_sub(f, cur, poly_scale(f, p[mm - i - 1], c));
    }
    p[mm] = std::move(cur);
  }
  return p[n];
}

Matrix poly_eval_matrix(const Field& f, const Poly& p, const Matrix& m) {
  Matrix r(m.dim());
  for (int k = p.degree(); k >= 0; --k) r = mat_add(f, mat_mul(f, r, m), Matrix::scalar(m.dim(), p.c[k]));
  return r;
}

Matrix companion(const Field& f, const Poly& monic) {
  const int n = monic.degree();
  if (n < 1 || monic.lead() != 1) throw InvalidArgument("companion: need a monic polynomial of positive degree");
  Matrix c(n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c(i, n - 1) = f.neg(monic.c[i]);
  return c;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.dim();
  Matrix r(n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.dim(); ++i)
      for (int j = 0; j < b.dim(); ++j) r(off + i, off + j) = b(i, j);
    off += b.dim();
  }
  return r;
}

Matrix elementary(int n, int i, int j, Field::Elem v) {
  Matrix r = Matrix::identity(n);
  r(i, j) = v;
  return r;
}

std::vector<std::vector<Field::Elem>> nullspace(const Field& f, std::vector<std::vector<Field::Elem>> rows,
                                                std::size_t cols) {
  std::vector<int> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const auto iv = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, iv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const auto k = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(k, rows[r][j]));
    }
    pivcol.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<std::vector<Field::Elem>> basis;
  std::vector<bool> is_piv(cols, false);
  for (int c : pivcol) is_piv[c] = true;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_piv[fc]) continue;
    std::vector<Field::Elem> v(cols, 0);
    v[fc] = 1;
    for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = f.neg(rows[i][fc]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string format_matrix(const Matrix& m) {
  std::string s;
  for (int i = 0; i < m.dim(); ++i) {
    if (i) s += ';';
    for (int j = 0; j < m.dim(); ++j) {
      if (j) s += ',';
      s += std::to_string(m(i, j));
    }
  }
  return s;
}

Matrix parse_matrix(const Field& f, std::string_view text, std::optional<int> n) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::vector<std::vector<Field::Elem>> rows;
  std::stringstream rs(s);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Field::Elem> r;
    std::stringstream es(row);
    std::string e;
    while (std::getline(es, e, ',')) {
      bool neg = !e.empty() && e[0] == '-';
      const std::string digits = neg ? e.substr(1) : e;
      if (digits.empty() || digits.size() > 9 ||
          !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InvalidArgument("malformed matrix entry '" + e + "'");
      const auto v = std::stoull(digits);
      if (v >= f.q()) throw InvalidArgument("matrix entry " + digits + " is not a field index of GF(" + f.name() + ")");
      auto x = static_cast<Field::Elem>(v);
      r.push_back(neg ? f.neg(x) : x);
    }
    rows.push_back(std::move(r));
  }
  const int dim = static_cast<int>(rows.size());
  if (dim == 0) throw InvalidArgument("empty matrix");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != dim) throw InvalidArgument("matrix text is not square");
  if (n && *n != dim) throw InvalidArgument("matrix dimension " + std::to_string(dim) + " does not match n = " + std::to_string(*n));
  Matrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace clab
