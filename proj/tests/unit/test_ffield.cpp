#include <gtest/gtest.h>

#include <random>

#include "sip/error.hpp"
#include "sip/ffield.hpp"
#include "sip/numtheory.hpp"

using namespace sip;

TEST(FiniteField, ModulusChoice) {
  auto F9 = FiniteField::make(3, 2);
  EXPECT_EQ(F9.modulus(), (std::vector<long>{1, 0, 1}));
  auto F3 = FiniteField::make(3, 1);
  EXPECT_EQ(F3.modulus(), (std::vector<long>{0, 1}));
  EXPECT_EQ(F3.q(), 3);
  // Over F_5, x^2 + 2 is the least irreducible quadratic under the ordering.
  EXPECT_EQ(FiniteField::make(5, 2).modulus(), (std::vector<long>{2, 0, 1}));
}

TEST(FiniteField, ModulusIsLeastIrreducibleByExhaustion) {
  for (auto [p, k] : std::vector<std::pair<long, int>>{{3, 2}, {3, 3}, {5, 2}, {7, 2}, {3, 4}, {13, 2}}) {
    auto F = FiniteField::make(p, k);
    const auto& f = F.modulus();
    // f has no root and, for k = 4, no quadratic factor: checked by the
    // field having q - 1 distinct powers of its generator.
    long q = F.q();
    auto g = F.primitive_element();
    EXPECT_EQ(g.order(), q - 1);
    // No smaller monic polynomial of degree k is irreducible: each has a
    // root or factors, so the field built on it would collapse. Evaluate
    // every smaller candidate at all elements of F_p for k <= 3.
    if (k <= 3) {
      long code_f = 0;
      for (int i = k - 1; i >= 0; --i) code_f = code_f * p + f[i];
      for (long c = 0; c < code_f; ++c) {
        std::vector<long> h(k + 1);
        long t = c;
        for (int i = 0; i < k; ++i) {
          h[i] = t % p;
          t /= p;
        }
        h[k] = 1;
        bool has_root = false;
        for (long x = 0; x < p && !has_root; ++x) {
          long v = 0;
          for (int i = k; i >= 0; --i) v = (v * x + h[i]) % p;
          has_root = v == 0;
        }
        EXPECT_TRUE(has_root) << "p=" << p << " k=" << k << " candidate " << c;
      }
    }
  }
}

TEST(FiniteField, Errors) {
  EXPECT_THROW(FiniteField::make(2, 3), InvalidArgument);
  EXPECT_THROW(FiniteField::make(9, 1), InvalidArgument);
  EXPECT_THROW(FiniteField::make(3, 13), InvalidArgument);
  EXPECT_THROW(FiniteField::make(3, 0), InvalidArgument);
  auto F9 = FiniteField::make(3, 2);
  EXPECT_THROW(F9.from_code(9), InvalidArgument);
  EXPECT_THROW(F9.zero().inverse(), InvalidArgument);
  EXPECT_THROW(F9.one().frobenius(5), InvalidArgument);
}

TEST(FiniteField, AllNonzeroElementsOfF25SatisfyX24) {
  auto F = FiniteField::make(5, 2);
  for (std::uint32_t c = 1; c < 25; ++c) EXPECT_TRUE(F.from_code(c).pow(24).is_one());
  for (std::uint32_t c = 0; c < 25; ++c) EXPECT_EQ(F.from_code(c).pow(25), F.from_code(c));
}

TEST(FiniteField, PrimitiveElements) {
  EXPECT_EQ(FiniteField::make(3, 1).primitive_element().code(), 2u);
  EXPECT_EQ(FiniteField::make(5, 1).primitive_element().code(), 2u);
  auto F9 = FiniteField::make(3, 2);
  EXPECT_EQ(F9.primitive_element().order(), 8);
  // Least code: every smaller nonzero code has smaller order.
  for (std::uint32_t c = 1; c < F9.primitive_element().code(); ++c) EXPECT_LT(F9.from_code(c).order(), 8);
}

TEST(FiniteField, Interning) {
  auto a = FiniteField::make(7, 2), b = FiniteField::make(7, 2);
  EXPECT_TRUE(a == b);
  EXPECT_EQ(a.from_int(3), b.from_int(3));
}

TEST(FiniteField, Frobenius) {
  auto F9 = FiniteField::make(3, 2);
  for (long n = 0; n < 3; ++n) EXPECT_EQ(F9.from_int(n).frobenius(3), F9.from_int(n));
  auto i = F9.primitive_element().pow(2);
  EXPECT_EQ(i * i, F9.from_int(-1));
  EXPECT_EQ(i.frobenius(3), -i);
  for (std::uint32_t c = 0; c < 9; ++c) EXPECT_EQ(F9.from_code(c).frobenius(3).frobenius(3), F9.from_code(c));
}

TEST(FiniteField, FrobeniusIsAutomorphismRandomized) {
  std::mt19937 rng(7);
  for (auto [p, k] : std::vector<std::pair<long, int>>{{3, 2}, {5, 2}, {7, 2}, {3, 4}, {11, 2}, {13, 2}, {3, 6}}) {
    auto F = FiniteField::make(p, k);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F.q() - 1));
    long r = p;
    for (int t = 0; t < 200; ++t) {
      auto x = F.from_code(pick(rng)), y = F.from_code(pick(rng));
      EXPECT_EQ((x + y).frobenius(r), x.frobenius(r) + y.frobenius(r));
      EXPECT_EQ((x * y).frobenius(r), x.frobenius(r) * y.frobenius(r));
    }
  }
}

TEST(FiniteField, FieldAxiomsRandomized) {
  std::mt19937 rng(11);
  for (auto [p, k] : std::vector<std::pair<long, int>>{{3, 1}, {3, 2}, {5, 3}, {7, 2}, {13, 2}, {101, 1}, {3, 12}}) {
    auto F = FiniteField::make(p, k);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F.q() - 1));
    for (int t = 0; t < 300; ++t) {
      auto a = F.from_code(pick(rng)), b = F.from_code(pick(rng)), c = F.from_code(pick(rng));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
      EXPECT_EQ(a + F.zero(), a);
      EXPECT_EQ(a * F.one(), a);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
      EXPECT_EQ(a.pow(F.q()), a);
    }
  }
}

TEST(FiniteField, MaximalTwoPowerElement) {
  auto F3 = FiniteField::make(3, 1);
  EXPECT_EQ(F3.max_2power_element(), F3.from_int(-1));
  auto F9 = FiniteField::make(3, 2);
  auto a9 = F9.max_2power_element();
  EXPECT_EQ(a9.order(), 8);
  EXPECT_EQ(a9.frobenius(3), -a9.inverse());
  auto F25 = FiniteField::make(5, 2);
  auto a25 = F25.max_2power_element();
  EXPECT_EQ(a25.order(), 8);
  EXPECT_EQ(a25.frobenius(5), -a25);
}

TEST(FiniteField, MaximalTwoPowerOrderExhaustive) {
  for (long q = 3; q <= 10000; q += 2) {
    auto pk = nt::prime_power(q);
    if (pk.first == 0) continue;
    auto F = FiniteField::make(pk.first, pk.second);
    long two = 1;
    while ((q - 1) % (2 * two) == 0) two *= 2;
    EXPECT_EQ(F.max_2power_element().order(), two) << "q=" << q;
  }
}

TEST(FiniteField, Subfields) {
  auto F = FiniteField::make(3, 4);
  auto g = F.subfield_generator(2);
  EXPECT_EQ(g.order(), 8);
  EXPECT_TRUE(F.in_subfield(g, 2));
  EXPECT_FALSE(F.in_subfield(F.primitive_element(), 2));
  EXPECT_THROW(F.subfield_generator(3), InvalidArgument);
  EXPECT_EQ(F.from_code(0).to_string(), "0");
}
