#include <gtest/gtest.h>

#include "collapse_lab/error.hpp"
#include "collapse_lab/gf.hpp"
#include "collapse_lab/qarith.hpp"
#include "oracle.hpp"

using namespace clab;

namespace {

std::vector<std::uint64_t> small_orders() {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= 64; ++q)
    if (prime_power(q)) out.push_back(q);
  return out;
}

}  // namespace

TEST(Field, PrimeFieldModulus) {
  const auto f = Field::create(2);
  EXPECT_EQ(f->q(), 2u);
  EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(Field, FourElementModulus) {
  EXPECT_EQ(Field::create(2, 2)->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(Field, ModulusIsLeastIrreducible) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                                                     {3, 2}, {3, 3}, {5, 2}, {7, 2}, {5, 3}})
    EXPECT_EQ(Field::create(p, m)->modulus(), oracle::least_irreducible(p, m)) << p << "^" << m;
}

TEST(Field, EightElementModulusReading) {
  // Base-p integer order: X^3+X+1 (index 3) precedes X^3+X^2+1 (index 5).
  EXPECT_EQ(Field::create(2, 3)->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
}

TEST(Field, Deterministic) {
  EXPECT_EQ(Field::create(3, 2).get(), Field::create(3, 2).get());
  EXPECT_EQ(Field::of_order(9)->modulus(), Field::create(3, 2)->modulus());
}

TEST(Field, RejectsBadInput) {
  EXPECT_THROW(Field::create(4), InvalidArgument);
  EXPECT_THROW(Field::of_order(6), InvalidArgument);
  EXPECT_THROW(Field::create(2, 30), CapExceeded);
}

TEST(Field, ArithmeticExamples) {
  const auto f7 = Field::create(7);
  EXPECT_EQ(f7->mul(3, 5), 1u);
  EXPECT_EQ(f7->inv(3), 5u);
  const auto f4 = Field::create(2, 2);
  EXPECT_EQ(f4->mul(2, 2), 3u);  // t*t = t+1
  EXPECT_THROW(f7->inv(0), InvalidArgument);
}

TEST(Field, Frobenius) {
  const auto f4 = Field::create(2, 2);
  EXPECT_EQ(f4->frobenius(2), 3u);
  const auto f7 = Field::create(7);
  for (Field::Elem a = 0; a < 7; ++a) EXPECT_EQ(f7->frobenius(a), a);
  const auto f9 = Field::create(3, 2);
  for (Field::Elem a = 0; a < 9; ++a) EXPECT_EQ(f9->frobenius(f9->frobenius(a)), a);
}

TEST(Field, SquaresAndGenerator) {
  const auto f7 = Field::create(7);
  EXPECT_FALSE(f7->is_square(3));
  EXPECT_TRUE(f7->is_square(2));
  EXPECT_EQ(f7->multiplicative_generator(), 3u);
  for (std::uint64_t q : small_orders()) EXPECT_EQ(Field::of_order(q)->elem_order(1), 1u);
  EXPECT_THROW(f7->is_square(0), InvalidArgument);
}

TEST(Field, AxiomsExhaustive) {
  for (std::uint64_t q : small_orders()) {
    const auto f = Field::of_order(q);
    for (Field::Elem a = 0; a < q; ++a) {
      EXPECT_EQ(f->add(a, 0), a);
      EXPECT_EQ(f->mul(a, 1), a);
      EXPECT_EQ(f->add(a, f->neg(a)), 0u);
      if (a) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
      for (Field::Elem b = 0; b < q; ++b) {
        ASSERT_EQ(f->mul(a, b), oracle::field_mul(*f, a, b)) << q;
        ASSERT_EQ(f->add(a, b), oracle::field_add(*f, a, b)) << q;
        ASSERT_EQ(f->mul(a, b), f->mul(b, a));
      }
    }
    if (q > 32) continue;  // cubic loops
    for (Field::Elem a = 0; a < q; ++a)
      for (Field::Elem b = 0; b < q; ++b)
        for (Field::Elem c = 0; c < q; ++c) {
          ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
          ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
          ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
        }
  }
}

TEST(Field, FrobeniusIsAFieldAutomorphismOfOrderM) {
  for (std::uint64_t q : small_orders()) {
    const auto f = Field::of_order(q);
    for (Field::Elem a = 0; a < q; ++a)
      for (Field::Elem b = 0; b < q; ++b) {
        ASSERT_EQ(f->frobenius(f->add(a, b)), f->add(f->frobenius(a), f->frobenius(b)));
        ASSERT_EQ(f->frobenius(f->mul(a, b)), f->mul(f->frobenius(a), f->frobenius(b)));
      }
    unsigned period = 0;
    for (unsigned k = 1; k <= f->m() && !period; ++k) {
      bool identity = true;
      for (Field::Elem a = 0; a < q; ++a) {
        Field::Elem x = a;
        for (unsigned i = 0; i < k; ++i) x = f->frobenius(x);
        identity = identity && x == a;
      }
      if (identity) period = k;
    }
    EXPECT_EQ(period, f->m()) << q;
  }
}

TEST(Field, UnitsAndSquares) {
  for (std::uint64_t q : small_orders()) {
    const auto f = Field::of_order(q);
    std::uint64_t squares = 0;
    for (Field::Elem a = 1; a < q; ++a) {
      EXPECT_EQ(f->pow(a, q - 1), 1u);
      EXPECT_EQ((q - 1) % f->elem_order(a), 0u);
      squares += f->is_square(a);
    }
    EXPECT_EQ(squares, f->p() == 2 ? q - 1 : (q - 1) / 2) << q;
    EXPECT_EQ(f->elem_order(f->multiplicative_generator()), q - 1);
    for (Field::Elem g = 1; g < f->multiplicative_generator(); ++g) EXPECT_LT(f->elem_order(g), q - 1);
  }
}

TEST(FieldElement, MixingFieldsThrows) {
  const FieldElement a(Field::create(5), 2), b(Field::create(7), 2);
  EXPECT_THROW(a + b, InvalidArgument);
  EXPECT_EQ((a * a).index(), 4u);
  EXPECT_EQ(a.inv().index(), 3u);
}
