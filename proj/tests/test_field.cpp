#include <gtest/gtest.h>

#include <random>

#include "ellcode/error.hpp"
#include "ellcode/field.hpp"
#include "oracles.hpp"

using namespace ellcode;

namespace {

void expect_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
    FAIL() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Field, PrimeFieldAddition) {
  Field F = Field::prime(5);
  EXPECT_EQ(F.add(F.from_int(3), F.from_int(4)), F.from_int(2));
  EXPECT_EQ(F.order(), 5u);
}

TEST(Field, RejectsBadParameters) {
  expect_kind(ErrorKind::NotPrime, [] { Field::prime(9); });
  expect_kind(ErrorKind::ReducibleModulus, [] { Field::extension(2, 4, std::vector<std::uint32_t>{1, 0, 0, 0, 1}); });
  expect_kind(ErrorKind::DegreeMismatch, [] { Field::extension(2, 4, std::vector<std::uint32_t>{1, 1, 1}); });
  expect_kind(ErrorKind::DegreeMismatch, [] { Field::extension(3, 0); });
}

TEST(Field, GF16ModulusIsIrreducibleByExhaustiveSearch) {
  EXPECT_TRUE(oracle::irreducible_by_search({1, 1, 0, 0, 1}, 2));
  Field F = Field::extension(2, 4, std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  EXPECT_EQ(F.order(), 16u);
}

TEST(Field, GF49ModulusHasNoRoot) {
  int roots = 0;
  for (int r = 0; r < 7; ++r) roots += (r * r + 1) % 7 == 0;
  EXPECT_EQ(roots, 0);
  Field F = Field::extension(7, 2, std::vector<std::uint32_t>{1, 0, 1});
  EXPECT_EQ(F.order(), 49u);
}

TEST(Field, DefaultModulusIsSmallestIrreducible) {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    Field F = Field::extension(p, m);
    const auto& mod = F.modulus();
    std::vector<int> f(mod.begin(), mod.end());
    EXPECT_TRUE(oracle::irreducible_by_search(f, p));
    long t = 0;
    for (int i = m - 1; i >= 0; --i) t = t * p + f[i];
    for (long s = 0; s < t; ++s) {
      std::vector<int> g(m + 1);
      long v = s;
      for (int i = 0; i < m; ++i) {
        g[i] = static_cast<int>(v % p);
        v /= p;
      }
      g[m] = 1;
      EXPECT_FALSE(oracle::irreducible_by_search(g, p)) << "smaller irreducible exists for p=" << p << " m=" << m;
    }
  }
  EXPECT_EQ(Field::extension(2, 4).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
  EXPECT_EQ(Field::extension(7, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(Field, IrreducibilityAgreesWithSearch) {
  for (int p : {2, 3, 5}) {
    for (int m = 1; m <= 5; ++m) {
      long count = 1;
      for (int i = 0; i < m; ++i) count *= p;
      if (count > 400) break;
      for (long t = 0; t < count; ++t) {
        std::vector<std::uint32_t> f(m + 1);
        std::vector<int> g(m + 1);
        long v = t;
        for (int i = 0; i < m; ++i) {
          f[i] = static_cast<std::uint32_t>(v % p);
          g[i] = static_cast<int>(f[i]);
          v /= p;
        }
        f[m] = 1;
        g[m] = 1;
        EXPECT_EQ(is_irreducible_mod_p(f, p), oracle::irreducible_by_search(g, p));
      }
    }
  }
}

TEST(Field, GF16ReductionExample) {
  Field F = Field::extension(2, 4, std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  const Fe x = F.generator();
  const Fe x3 = F.mul(x, F.mul(x, x));
  EXPECT_EQ(F.mul(x, x3), F.from_coeffs(std::vector<std::uint32_t>{1, 1}));
}

TEST(Field, InverseAxiomExhaustive) {
  for (auto F : {Field::extension(2, 4), Field::extension(7, 2), Field::extension(3, 3), Field::prime(13)}) {
    for (std::uint64_t i = 1; i < F.order(); ++i) {
      const Fe a = F.element(i);
      EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
    }
    expect_kind(ErrorKind::DivisionByZero, [&] { F.inv(F.zero()); });
  }
}

TEST(Field, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (auto F : {Field::extension(2, 5), Field::extension(7, 2), Field::extension(3, 3), Field::extension(5, 4)}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const Fe a = oracle::random_element(F, rng), b = oracle::random_element(F, rng), c = oracle::random_element(F, rng);
      EXPECT_EQ(F.add(a, F.add(b, c)), F.add(F.add(a, b), c));
      EXPECT_EQ(F.mul(a, F.mul(b, c)), F.mul(F.mul(a, b), c));
      EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      EXPECT_EQ(F.mul(a, b), F.mul(b, a));
      EXPECT_EQ(F.add(a, b), F.add(b, a));
      EXPECT_EQ(F.sub(F.add(a, b), b), a);
      EXPECT_EQ(F.add(a, F.neg(a)), F.zero());
    }
  }
}

TEST(Field, FrobeniusIsRingHomomorphism) {
  std::mt19937_64 rng(11);
  for (auto F : {Field::extension(2, 6), Field::extension(3, 4), Field::extension(7, 2)}) {
    for (int trial = 0; trial < 500; ++trial) {
      const Fe a = oracle::random_element(F, rng), b = oracle::random_element(F, rng);
      EXPECT_EQ(F.frobenius(F.add(a, b)), F.add(F.frobenius(a), F.frobenius(b)));
      EXPECT_EQ(F.frobenius(F.mul(a, b)), F.mul(F.frobenius(a), F.frobenius(b)));
    }
  }
}

TEST(Field, DecomposeRoundTripExhaustive) {
  Field F = Field::extension(2, 4);
  for (std::uint64_t i = 0; i < F.order(); ++i) {
    const Fe a = F.element(i);
    EXPECT_EQ(F.recompose(F.decompose(a)), a);
    EXPECT_EQ(F.index(a), i);
  }
  EXPECT_EQ(F.decompose(F.zero()), (std::vector<std::uint32_t>{0, 0, 0, 0}));
  EXPECT_EQ(F.decompose(F.add(F.generator(), F.one())), (std::vector<std::uint32_t>{1, 1, 0, 0}));
  Field G = Field::extension(7, 2, std::vector<std::uint32_t>{1, 0, 1});
  const Fe e = G.add(G.scale(G.generator(), 3), G.from_int(5));
  EXPECT_EQ(G.decompose(e), (std::vector<std::uint32_t>{5, 3}));
}

TEST(Field, FermatExhaustive) {
  for (auto F : {Field::extension(2, 12), Field::extension(3, 7), Field::extension(7, 4), Field::prime(4093)}) {
    ASSERT_LE(F.order(), 4096u);
    for (std::uint64_t i = 1; i < F.order(); ++i) EXPECT_EQ(F.pow(F.element(i), F.order() - 1), F.one());
  }
}

TEST(Field, SubfieldMembership) {
  Field F = Field::extension(2, 4);
  EXPECT_TRUE(F.in_subfield(F.one(), 1));
  EXPECT_FALSE(F.in_subfield(F.generator(), 1));
  EXPECT_NE(F.mul(F.generator(), F.generator()), F.generator());
  expect_kind(ErrorKind::InvalidSubfieldDegree, [&] { F.in_subfield(F.one(), 3); });
  Field G = Field::extension(7, 2);
  EXPECT_TRUE(G.in_subfield(G.from_int(3), 1));
  // GF(4) inside GF(16) has exactly 4 elements.
  int count = 0;
  for (std::uint64_t i = 0; i < F.order(); ++i) count += F.in_subfield(F.element(i), 2);
  EXPECT_EQ(count, 4);
}

TEST(Field, SquareRoots) {
  for (auto F : {Field::extension(7, 2), Field::extension(3, 3), Field::prime(17), Field::extension(2, 5), Field::extension(5, 2)}) {
    int squares = 0;
    for (std::uint64_t i = 0; i < F.order(); ++i) {
      const Fe a = F.element(i);
      auto r = F.sqrt(a);
      bool is_square = false;
      for (std::uint64_t j = 0; j < F.order() && !is_square; ++j) is_square = F.sqr(F.element(j)) == a;
      EXPECT_EQ(r.has_value(), is_square);
      if (r) {
        EXPECT_EQ(F.sqr(*r), a);
        ++squares;
      }
    }
    if (F.characteristic() == 2) EXPECT_EQ(squares, static_cast<int>(F.order()));
  }
}

TEST(Field, ArtinSchreierSolutions) {
  Field F = Field::extension(2, 5);
  for (std::uint64_t i = 0; i < F.order(); ++i) {
    const Fe c = F.element(i);
    bool solvable = false;
    for (std::uint64_t j = 0; j < F.order(); ++j) {
      const Fe w = F.element(j);
      solvable |= F.add(F.sqr(w), w) == c;
    }
    auto w = F.solve_artin_schreier(c);
    EXPECT_EQ(w.has_value(), solvable);
    if (w) EXPECT_EQ(F.add(F.sqr(*w), *w), c);
  }
}

TEST(Field, ForeignElementRejected) {
  Field F = Field::extension(2, 4);
  Fe bad;
  bad.coeffs[5] = 1;
  expect_kind(ErrorKind::FieldMismatch, [&] { F.checked_add(bad, F.one()); });
  Fe big;
  big.coeffs[0] = 3;
  EXPECT_FALSE(F.contains(big));
}
