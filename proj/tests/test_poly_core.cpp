#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace k0qgr;

namespace {

std::vector<Int> ints(std::initializer_list<long long> xs) {
  std::vector<Int> v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

Errc error_of(std::initializer_list<std::int64_t> raw) {
  try {
    DegreeData::validate(raw);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::Parse;
}

}  // namespace

TEST(DegreeData, DerivedFields) {
  const auto dd = DegreeData::validate({3, 1, 2});
  EXPECT_EQ(dd.degrees(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(dd.g(), 3);
  EXPECT_EQ(dd.d(), 4);
  EXPECT_EQ(dd.ell(), 6);
  EXPECT_EQ(dd.multiplicity(1), 1);
  EXPECT_EQ(dd.multiplicity(2), 1);
  EXPECT_EQ(dd.multiplicity(3), 1);
  EXPECT_EQ(dd.multiplicity(4), 0);
}

TEST(DegreeData, Errors) {
  EXPECT_EQ(error_of({1, 1, 2}), Errc::PairingBroken);
  EXPECT_EQ(error_of({2, 2, 2}), Errc::GcdNotOne);
  EXPECT_EQ(error_of({1, 1}), Errc::GMin);
  EXPECT_EQ(error_of({0, 1, 1}), Errc::NonPositiveDegree);
  EXPECT_EQ(error_of({-1, 2, 3}), Errc::NonPositiveDegree);
  EXPECT_EQ(error_of({}), Errc::GMin);
}

TEST(DegreeData, EnumerationSatisfiesInvariants) {
  const auto all = enumerate_degree_data(12);
  ASSERT_FALSE(all.empty());
  for (const auto& dd : all) {
    int sum = 0, count = 0;
    for (auto [j, n] : dd.multiplicities()) {
      sum += j * n;
      count += n;
    }
    EXPECT_EQ(count, dd.g());
    EXPECT_EQ(sum, dd.ell());
    EXPECT_GE(dd.g(), 3);
    EXPECT_LE(dd.ell(), 12);
    const auto& d = dd.degrees();
    for (int i = 0; i < dd.g(); ++i) EXPECT_EQ(d[i] + d[dd.g() - 1 - i], dd.d());
    // round-trips through validation
    std::vector<std::int64_t> raw(d.begin(), d.end());
    EXPECT_EQ(DegreeData::validate(std::span<const std::int64_t>(raw)), dd);
  }
  // spot counts: ell = 3 gives only (1,1,1)
  EXPECT_EQ(std::count_if(all.begin(), all.end(), [](const DegreeData& dd) { return dd.ell() == 3; }), 1);
}

TEST(DefiningPoly, Examples) {
  EXPECT_EQ(defining_int_poly(DegreeData::validate({1, 1, 1})), (IntPoly{1, -3, 1}));
  EXPECT_EQ(defining_int_poly(DegreeData::validate({5, 6, 7})), (IntPoly{1, 0, 0, 0, 0, -1, -1, -1, 0, 0, 0, 0, 1}));
  EXPECT_EQ(defining_int_poly(DegreeData::validate({1, 1, 2, 2})), (IntPoly{1, -2, -2, 1}));
  EXPECT_EQ(defining_poly(DegreeData::validate({1, 1, 1})), LaurentPoly::from_terms({{0, 1}, {1, -3}, {2, 1}}));
}

TEST(DefiningPoly, ReciprocalMonicConstantOne) {
  for (const auto& dd : enumerate_degree_data(14)) {
    const IntPoly f = defining_int_poly(dd);
    ASSERT_EQ(f.degree(), dd.d());
    EXPECT_TRUE(f.is_monic());
    EXPECT_EQ(f[0], 1);
    for (int i = 0; i <= dd.d(); ++i) EXPECT_EQ(f[i], f[dd.d() - i]) << dd.to_string();
  }
}

TEST(Hilbert, Examples) {
  EXPECT_EQ(hilbert_coeffs(DegreeData::validate({1, 1, 1}), 4), ints({1, 3, 8, 21, 55}));
  EXPECT_EQ(hilbert_coeffs(DegreeData::validate({1, 2, 3}), 5), ints({1, 1, 2, 4, 6, 11}));
  EXPECT_EQ(hilbert_coeffs(DegreeData::validate({5, 6, 7}), 0), ints({1}));
}

TEST(Hilbert, MatchesLongDivisionAndInvertsF) {
  constexpr std::size_t n = 500;
  for (const auto& dd : enumerate_degree_data(10)) {
    const IntPoly f = defining_int_poly(dd);
    const auto a = hilbert_coeffs(dd, n);
    EXPECT_EQ(a, oracle::series_inverse(f, n)) << dd.to_string();
    const auto one = oracle::convolve(f, a, n);
    EXPECT_EQ(one[0], 1);
    EXPECT_TRUE(std::all_of(one.begin() + 1, one.end(), [](const Int& x) { return x.is_zero(); })) << dd.to_string();
    EXPECT_TRUE(std::all_of(a.begin(), a.end(), [](const Int& x) { return x.sign() >= 0; })) << dd.to_string();
  }
}

TEST(Hilbert, ExceedsSixtyFourBits) {
  const auto a = hilbert_coeffs(DegreeData::validate({1, 1, 1}), 60);
  EXPECT_FALSE(fits_int64(a[60]));
  EXPECT_EQ(a[60], a[59] * 3 - a[58]);
}

TEST(HilbertStream, ExtensionIsPure) {
  const HilbertStream s(DegreeData::validate({1, 1, 1}));
  const HilbertStream t = s.extended(4);
  EXPECT_EQ(s.prefix(), ints({1}));
  EXPECT_EQ(t.prefix(), ints({1, 3, 8, 21, 55}));
  EXPECT_EQ(t.extended(2).prefix(), t.prefix());
}

TEST(SeriesProduct, Examples) {
  const auto dd = DegreeData::validate({1, 1, 1});
  const auto p = LaurentPoly::from_terms({{0, -3}, {1, 13}, {2, -4}});
  EXPECT_EQ(series_product_coeffs(p, dd, 2), ints({-3, 4, 11}));
  EXPECT_EQ(series_product_coeffs(p, dd, 5), ints({-3, 4, 11, 29, 76, 199}));
  EXPECT_EQ(series_product_coeffs(LaurentPoly::monomial(1, 0), dd, 3), ints({1, 3, 8, 21}));
  try {
    series_product_coeffs(LaurentPoly::monomial(1, -1), dd, 3);
    FAIL() << "expected NegativeExponent";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NegativeExponent);
  }
}

TEST(SeriesProduct, CoefficientIdentityOnRandomInput) {
  std::mt19937_64 rng(20240601);
  for (const auto& dd : {DegreeData::validate({1, 1, 1}), DegreeData::validate({1, 2, 3}),
                         DegreeData::validate({2, 3, 4}), DegreeData::validate({1, 1, 2, 2})}) {
    for (int trial = 0; trial < 40; ++trial) {
      const LaurentPoly p = oracle::random_laurent(rng, 0, 6, 50);
      const std::size_t n = 40;
      const auto b = series_product_coeffs(p, dd, n);
      auto bb = [&](std::int64_t i) { return i < 0 ? Int(0) : b[static_cast<std::size_t>(i)]; };
      for (std::int64_t i = 0; i <= static_cast<std::int64_t>(n); ++i) {
        Int rhs = bb(i) + bb(i - dd.d());
        for (auto [j, nj] : dd.multiplicities()) rhs -= bb(i - j) * nj;
        EXPECT_EQ(p.coeff(i), rhs) << dd.to_string() << " i=" << i;
      }
    }
  }
}

TEST(IntPoly, ArithmeticAndDivision) {
  const IntPoly a{1, 2, 1};
  const IntPoly b{1, 1};
  EXPECT_EQ(a * b, (IntPoly{1, 3, 3, 1}));
  EXPECT_EQ(a - a, IntPoly{});
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(divide_exact(a, b), std::optional<IntPoly>(b));
  EXPECT_FALSE(divide_exact(a, IntPoly{1, -1}).has_value());
  const auto dm = divmod_unit_leading(IntPoly{0, 0, 0, 21, -8} - IntPoly{1}, IntPoly{1, -3, 1});
  EXPECT_EQ(dm.quotient, (IntPoly{-1, -3, -8}));
  EXPECT_TRUE(dm.remainder.is_zero());
  EXPECT_EQ(gcd(IntPoly{-1, 0, 1}, IntPoly{1, 2, 1}), (IntPoly{1, 1}));
  EXPECT_EQ(IntPoly({2, 4, 6}).primitive_part(), (IntPoly{1, 2, 3}));
  EXPECT_EQ(IntPoly({1, 0, -3}).eval(Int(2)), -11);
}

TEST(LaurentPoly, ParseAndPrint) {
  const auto p = LaurentPoly::parse("0:-3,1:13,2:-4");
  EXPECT_EQ(p, LaurentPoly::from_terms({{0, -3}, {1, 13}, {2, -4}}));
  EXPECT_EQ(p.to_string(), "0:-3,1:13,2:-4");
  EXPECT_EQ(LaurentPoly::parse("-2:5, 3:+1").to_string(), "-2:5,3:1");
  EXPECT_EQ(LaurentPoly::parse("1:0").to_string(), "0:0");
  EXPECT_TRUE(LaurentPoly::parse("0:0").is_zero());
  for (const char* bad : {"", "1", "1:", ":1", "1:2,1:3", "a:1", "1:2;3:4", "1.5:2"}) {
    try {
      LaurentPoly::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::Parse) << bad;
    }
  }
}

TEST(LaurentPoly, StoresNoZeros) {
  LaurentPoly p = LaurentPoly::from_terms({{-1, 2}, {0, 1}});
  p.add_term(-1, -2);
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.min_exponent(), 0);
  const auto [poly, s] = (LaurentPoly::monomial(3, -2) * LaurentPoly::monomial(1, 1)).to_poly();
  EXPECT_EQ(poly, IntPoly{3});
  EXPECT_EQ(s, -1);
}
