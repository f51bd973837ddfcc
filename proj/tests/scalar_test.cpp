#include <gtest/gtest.h>

#include "homlie/random.hpp"
#include "homlie/scalar.hpp"

namespace homlie {
namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F7 = FieldSpec::prime(7);

Scalar q(long num, long den = 1) { return Scalar::rational(num, den); }
Scalar r7(std::uint64_t v) { return Scalar::residue(F7, v); }

TEST(FieldSpec, RejectsCompositeModuli) {
  EXPECT_THROW(FieldSpec::prime(1), Error);
  EXPECT_THROW(FieldSpec::prime(0), Error);
  EXPECT_THROW(FieldSpec::prime(10005), Error);
  EXPECT_THROW(FieldSpec::prime(3215031751ULL), Error);  // strong pseudoprime to bases 2,3,5,7
  EXPECT_NO_THROW(FieldSpec::prime(2));
  EXPECT_NO_THROW(FieldSpec::prime(10007));
  EXPECT_NO_THROW(FieldSpec::prime(18446744073709551557ULL));  // largest 64-bit prime
}

TEST(IsPrime, AgreesWithTrialDivision) {
  auto slow = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), slow(n)) << n;
}

TEST(ScalarAdd, Examples) {
  EXPECT_EQ(scalar_add(q(1, 2), q(1, 3)), q(5, 6));
  EXPECT_EQ(scalar_add(q(0), q(-7, 3)), q(-7, 3));
  EXPECT_EQ(scalar_add(r7(5), r7(4)), r7(2));
}

TEST(ScalarAdd, FieldMismatchIsRejected) {
  try {
    (void)scalar_add(q(1), r7(1));
    FAIL() << "expected field mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::field_mismatch);
  }
  EXPECT_THROW((void)(r7(1) * Scalar::residue(FieldSpec::prime(11), 1)), Error);
}

TEST(ScalarMul, Examples) {
  EXPECT_EQ(scalar_mul(q(2, 3), q(3, 4)), q(1, 2));
  EXPECT_EQ(scalar_inv(q(1)), q(1));
  EXPECT_EQ(scalar_inv(r7(3)), r7(5));
  EXPECT_EQ(scalar_inv(q(-3, 5)), q(-5, 3));
}

TEST(ScalarInv, ZeroThrowsDivisionByZero) {
  try {
    (void)scalar_inv(q(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::division_by_zero);
  }
  EXPECT_THROW((void)scalar_inv(r7(0)), Error);
}

TEST(ReduceMod, Examples) {
  EXPECT_EQ(reduce_mod(q(1, 2), 7), r7(4));
  EXPECT_EQ(reduce_mod(q(0), 10007), Scalar::zero(FieldSpec::prime(10007)));
  EXPECT_EQ(reduce_mod(q(-5), 7), r7(2));
}

TEST(ReduceMod, DenominatorDivisibleByPIsAnError) {
  try {
    (void)reduce_mod(q(3, 14), 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::reduction);
  }
}

TEST(Scalar, CanonicalFormIsUnique) {
  EXPECT_EQ(q(2, 4), q(1, 2));
  EXPECT_EQ(q(-2, -4), q(1, 2));
  EXPECT_EQ(q(3, -6).to_string(), "-1/2");
  EXPECT_EQ(q(0, -5).to_string(), "0");
  EXPECT_NE(q(1), r7(1));
}

TEST(Scalar, ParseLiterals) {
  EXPECT_EQ(Scalar::parse(Q, "-3/4"), q(-3, 4));
  EXPECT_EQ(Scalar::parse(Q, "17"), q(17));
  EXPECT_EQ(Scalar::parse(Q, "+6/8"), q(3, 4));
  EXPECT_EQ(Scalar::parse(F7, "-5"), r7(2));
  const mpz_class big("123456789012345678901234567890");
  EXPECT_EQ(Scalar::parse(F7, big.get_str()).as_residue(), mpz_fdiv_ui(big.get_mpz_t(), 7));
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "0x10", "1 /2", "a", "--1"}) {
    EXPECT_THROW(Scalar::parse(Q, bad), Error) << bad;
  }
  EXPECT_THROW(Scalar::parse(F7, "1/2"), Error);
}

TEST(Scalar, LiteralRoundTrip) {
  CounterRng rng(42);
  for (int i = 0; i < 200; ++i) {
    const Scalar s = q(rng.symmetric(1000000), static_cast<long>(rng.below(1000) + 1));
    EXPECT_EQ(Scalar::parse(Q, s.to_string()), s);
  }
}

// Field axioms on random triples, over Q and over a few primes.
class FieldAxioms : public ::testing::TestWithParam<std::uint64_t> {};

Scalar random_scalar(const FieldSpec& field, CounterRng& rng) {
  if (field.is_prime()) return Scalar::residue(field, rng.below(field.modulus()));
  return Scalar::rational(rng.symmetric(50), static_cast<long>(rng.below(20) + 1));
}

TEST_P(FieldAxioms, HoldExactly) {
  const FieldSpec field = GetParam() == 0 ? Q : FieldSpec::prime(GetParam());
  CounterRng rng(split_key(7, GetParam()));
  for (int i = 0; i < 500; ++i) {
    const Scalar a = random_scalar(field, rng);
    const Scalar b = random_scalar(field, rng);
    const Scalar c = random_scalar(field, rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a - a, Scalar::zero(field));
    if (!a.is_zero()) ASSERT_EQ(a * a.inv(), Scalar::one(field));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms,
                         ::testing::Values(0, 2, 7, 10007, 4294967291ULL, 18446744073709551557ULL));

TEST(ReduceMod, IsARingMorphism) {
  CounterRng rng(99);
  for (std::uint64_t p : {7ULL, 10007ULL, 4294967291ULL}) {
    for (int i = 0; i < 300; ++i) {
      const Scalar a = q(rng.symmetric(10000), static_cast<long>(rng.below(500) + 1));
      const Scalar b = q(rng.symmetric(10000), static_cast<long>(rng.below(500) + 1));
      const auto den_ok = [p](const Scalar& s) {
        return mpz_fdiv_ui(s.as_rational().get_den_mpz_t(), p) != 0;
      };
      if (!den_ok(a) || !den_ok(b)) continue;
      if (den_ok(a + b)) ASSERT_EQ(reduce_mod(a + b, p), reduce_mod(a, p) + reduce_mod(b, p));
      ASSERT_EQ(reduce_mod(a * b, p), reduce_mod(a, p) * reduce_mod(b, p));
    }
  }
}

TEST(CounterRng, BelowIsInRangeAndDeterministic) {
  CounterRng a(5), b(5);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.below(10007);
    ASSERT_LT(x, 10007u);
    ASSERT_EQ(x, b.below(10007));
    const auto s = a.symmetric(3);
    ASSERT_GE(s, -3);
    ASSERT_LE(s, 3);
    (void)b.symmetric(3);
  }
}

}  // namespace
}  // namespace homlie
