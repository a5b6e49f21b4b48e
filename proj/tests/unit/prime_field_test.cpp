#include <random>

#include <gtest/gtest.h>

#include "binorder/error.hpp"
#include "binorder/prime_field.hpp"
#include "oracles.hpp"

namespace binorder {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

TEST(PrimeField, Validation) {
  EXPECT_EQ(kind_of([] { PrimeField f(4); }), ErrorKind::InvalidField);
  EXPECT_EQ(kind_of([] { PrimeField f(3); }), ErrorKind::InvalidField);
  EXPECT_EQ(kind_of([] { PrimeField f(2); }), ErrorKind::InvalidField);
  EXPECT_EQ(kind_of([] { PrimeField f(9); }), ErrorKind::InvalidField);
  EXPECT_EQ(kind_of([] { PrimeField f(std::uint64_t{1} << 32 | 15); }), ErrorKind::InvalidField);
  EXPECT_EQ(PrimeField(4294967291ULL).modulus(), 4294967291ULL);
}

TEST(PrimitiveElement, Examples) {
  EXPECT_EQ(find_primitive_element(5).value(), 2u);
  EXPECT_EQ(find_primitive_element(7).value(), 3u);
  EXPECT_EQ(find_primitive_element(11).value(), 2u);
  EXPECT_EQ(find_primitive_element(13).value(), 2u);
  EXPECT_EQ(find_primitive_element(23).value(), 5u);
}

TEST(PrimitiveElement, SmallestOfFullOrderForPrimesBelow500) {
  for (std::uint64_t q = 5; q < 500; ++q) {
    if (!testing::is_prime_naive(q)) continue;
    std::uint64_t expected = 2;
    while (testing::order_by_walk(expected, q) != q - 1) ++expected;
    ASSERT_EQ(find_primitive_element(q).value(), expected) << q;
  }
}

TEST(ElementOrder, ExamplesAndWalk) {
  EXPECT_EQ(element_order({1, 5}), 1u);
  EXPECT_EQ(element_order({4, 5}), 2u);
  EXPECT_EQ(element_order({2, 5}), 4u);
  EXPECT_EQ(element_order({2, 7}), 3u);
  for (std::uint64_t q : {5, 7, 11, 13, 101, 257})
    for (std::uint64_t x = 1; x < q; ++x) ASSERT_EQ(element_order({x, q}), testing::order_by_walk(x, q));
  EXPECT_EQ(kind_of([] { element_order({0, 5}); }), ErrorKind::ZeroElement);
}

TEST(PrimeFieldElement, Arithmetic) {
  const PrimeField f(7);
  EXPECT_EQ(f.element(3) + f.element(5), f.element(1));
  EXPECT_EQ(f.element(3) - f.element(5), f.element(5));
  EXPECT_EQ(f.element(3) * f.element(5), f.element(1));
  EXPECT_EQ(-f.element(0), f.zero());
  EXPECT_EQ(f.element(3).inverse(), f.element(5));
  EXPECT_EQ(f.element(3).pow(6), f.one());
  EXPECT_EQ(f.element(3).pow(mpz_class("1000000000000000000000000")), f.element(3).pow(mpz_class("1000000000000000000000000") % 6));
  EXPECT_EQ(f.element(12).value(), 5u);
}

TEST(PrimeFieldElement, Errors) {
  EXPECT_EQ(kind_of([] { PrimeFieldElement(0, 5).inverse(); }), ErrorKind::ZeroElement);
  EXPECT_EQ(kind_of([] { (void)(PrimeFieldElement(1, 5) + PrimeFieldElement(1, 7)); }), ErrorKind::ModulusMismatch);
  EXPECT_EQ(kind_of([] { (void)(PrimeFieldElement(1, 5) * PrimeFieldElement(1, 7)); }), ErrorKind::ModulusMismatch);
}

TEST(PrimeFieldElement, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {5ULL, 13ULL, 65537ULL, 4294967291ULL}) {
    for (int iter = 0; iter < 2000; ++iter) {
      const PrimeFieldElement x(rng(), q), y(rng(), q), z(rng(), q);
      ASSERT_EQ(x + y, y + x);
      ASSERT_EQ(x * y, y * x);
      ASSERT_EQ((x + y) + z, x + (y + z));
      ASSERT_EQ((x * y) * z, x * (y * z));
      ASSERT_EQ(x * (y + z), x * y + x * z);
      ASSERT_EQ(x + (-x), PrimeFieldElement(0, q));
      ASSERT_EQ(x - y, x + (-y));
      if (!x.is_zero()) {
        ASSERT_EQ(x * x.inverse(), PrimeFieldElement(1, q));
        ASSERT_EQ(x.pow(q - 1), PrimeFieldElement(1, q));
      }
    }
  }
}

}  // namespace
}  // namespace binorder
