#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace clab {

// GF(p^m). Elements are indices sum c_i p^i of their little-endian coefficient vectors
// modulo a fixed monic irreducible; the index order is the canonical element order.
class Field {
 public:
  using Elem = std::uint32_t;
  static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

  // Memoized per (p, m): repeated calls return the same object.
  static std::shared_ptr<const Field> create(std::uint32_t p, unsigned m = 1,
                                             std::uint64_t cap = kDefaultCap);
  static std::shared_ptr<const Field> of_order(std::uint64_t q, std::uint64_t cap = kDefaultCap);

  std::uint32_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint32_t q() const { return q_; }
  // Monic, low-degree first, length m + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string name() const;  // "p^m"

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t k) const;

  Elem add(Elem a, Elem b) const {
    if (m_ == 1) {
      const Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    return neg_slow(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (m_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
      std::uint32_t s = log_[a] + log_[b];
      if (s >= q_ - 1) s -= q_ - 1;
      return exp_[s];
    }
    return mul_slow(a, b);
  }
  Elem inv(Elem a) const;  // throws on 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }

  bool is_square(Elem a) const;           // throws on 0
  Elem multiplicative_generator() const;  // least index of order q-1
  std::uint64_t elem_order(Elem a) const; // throws on 0

  std::vector<std::uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<std::uint32_t>& c) const;

  bool same(const Field& o) const { return p_ == o.p_ && m_ == o.m_; }

  Field(std::uint32_t p, unsigned m);  // use create()

 private:
  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;
  Elem mul_slow(Elem a, Elem b) const;

  std::uint32_t p_;
  unsigned m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_table_;  // q <= 256, p odd, m > 1
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
  Elem generator_ = 0;
};

using FieldPtr = std::shared_ptr<const Field>;

// Value type bound to its field; mixing fields throws.
class FieldElement {
 public:
  FieldElement(FieldPtr f, Field::Elem v);
  static FieldElement from_int(FieldPtr f, std::int64_t k);

  Field::Elem index() const { return v_; }
  const FieldPtr& field() const { return f_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius() const;
  bool is_square() const;
  std::uint64_t order() const;

  bool operator==(const FieldElement& o) const;
  bool operator<(const FieldElement& o) const;

 private:
  void check(const FieldElement& o) const;
  FieldPtr f_;
  Field::Elem v_;
};

}  // namespace clab
