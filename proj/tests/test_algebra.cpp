// Field, matrix and subspace layer: exhaustive small-field laws, RREF
// canonicity, and counting cross-checks against independent enumeration.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "geodex/subspace.hpp"

using namespace geodex;

namespace {

Mat random_matrix(const FieldPtr& F, std::uint32_t r, std::uint32_t c, std::mt19937_64& rng) {
  Mat m(F, r, c);
  std::uniform_int_distribution<std::uint32_t> dist(0, F->q() - 1);
  for (auto& x : m.a) x = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("prime field GF(3)") {
  auto F = Field::make(3, 1);
  CHECK(F->q() == 3);
  CHECK(F->modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK(F->add(2, 2) == 1);
  CHECK(F->mul(2, 2) == 1);
  CHECK(F->neg(1) == 2);
  CHECK(F->inv(2) == 2);
}

TEST_CASE("GF(4) uses modulus x^2+x+1 and matches hand arithmetic") {
  auto F = Field::make(2, 2);
  CHECK(F->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  // Codes: 0, 1, 2 = x, 3 = x+1.
  CHECK(F->add(2, 3) == 1);
  CHECK(F->mul(2, 2) == 3);   // x^2 = x+1
  CHECK(F->mul(2, 3) == 1);   // x(x+1) = 1
  CHECK(F->inv(2) == 3);
  CHECK(F->frobenius(2) == 3);
  CHECK(F->frobenius(F->frobenius(2)) == 2);
}

TEST_CASE("GF(8) and GF(9) pick the expected smallest moduli") {
  auto F8 = Field::make(2, 3);
  CHECK(F8->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3+x+1
  auto F9 = Field::make(3, 2);
  CHECK(F9->modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2+1
}

TEST_CASE("field laws hold exhaustively on GF(4) and GF(9)") {
  for (auto [p, f] : {std::pair<int, int>{2, 2}, {3, 2}}) {
    auto F = Field::make(p, f);
    std::uint32_t q = F->q();
    for (Fel a = 0; a < q; ++a) {
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a) {
        CHECK(F->mul(a, F->inv(a)) == 1);
        CHECK(F->pow(a, q - 1) == 1);
      }
      CHECK(F->frobenius(a, f) == a);
      for (Fel b = 0; b < q; ++b) {
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        CHECK(F->frobenius(F->add(a, b)) == F->add(F->frobenius(a), F->frobenius(b)));
        CHECK(F->frobenius(F->mul(a, b)) == F->mul(F->frobenius(a), F->frobenius(b)));
        for (Fel c = 0; c < q; ++c)
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      }
    }
  }
}

TEST_CASE("field beyond the 256-element table threshold still works") {
  auto F = Field::make(257, 1);
  for (Fel a = 1; a < F->q(); ++a) CHECK(F->mul(a, F->inv(a)) == 1);
  CHECK(F->add(200, 100) == 43);
}

TEST_CASE("unitary involution on GF(9): sigma = cube map") {
  auto F = Field::make(3, 2);
  for (Fel a = 0; a < 9; ++a) {
    Fel s = F->frobenius(a, 1);
    CHECK(F->frobenius(s, 1) == a);
    bool cube = a == 0 ? s == 0 : s == F->pow(a, 3);
    CHECK(cube);
  }
  // The prime subfield is exactly the fixed set.
  int fixed = 0;
  for (Fel a = 0; a < 9; ++a)
    if (F->frobenius(a, 1) == a) ++fixed;
  CHECK(fixed == 3);
}

TEST_CASE("field construction rejects bad parameters") {
  CHECK_THROWS_AS(Field::make(4, 1), Error);
  CHECK_THROWS_AS(Field::make(6, 2), Error);
  CHECK_THROWS_AS(Field::make(2, 17), Error);
  // x^2+1 = (x+1)^2 over GF(2).
  CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), Error);
  try {
    Field::make(2, 2, {1, 0, 1});
  } catch (const Error& e) {
    CHECK(e.code() == errc::reducible);
  }
  try {
    Field::make(9, 1);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_prime);
  }
}

TEST_CASE("nonsquare detection in odd characteristic") {
  auto F3 = Field::make(3, 1);
  CHECK(F3->nonsquare() == 2);
  auto F9 = Field::make(3, 2);
  Fel d = F9->nonsquare();
  for (Fel a = 1; a < 9; ++a) CHECK(F9->mul(a, a) != d);
  auto F4 = Field::make(2, 2);
  CHECK_THROWS_AS(F4->nonsquare(), Error);
}

TEST_CASE("rref is idempotent and preserves the row space") {
  std::mt19937_64 rng(20240901);
  for (auto q : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}}) {
    auto F = Field::make(q.first, q.second);
    for (int trial = 0; trial < 40; ++trial) {
      Mat A = random_matrix(F, 4, 6, rng);
      Mat R = A;
      std::uint32_t rk = rref(R);
      Mat R2 = R;
      CHECK(rref(R2) == rk);
      CHECK(R2 == R);
      CHECK(rank(stack(A, R)) == rk);
      // Pivots are 1 and alone in their column.
      std::uint32_t c = 0;
      for (std::uint32_t i = 0; i < rk; ++i) {
        while (R.at(i, c) == 0) ++c;
        CHECK(R.at(i, c) == 1);
        for (std::uint32_t i2 = 0; i2 < rk; ++i2)
          if (i2 != i) CHECK(R.at(i2, c) == 0);
      }
    }
  }
}

TEST_CASE("kernel vectors annihilate the matrix") {
  std::mt19937_64 rng(7);
  auto F = Field::make(3, 1);
  for (int trial = 0; trial < 30; ++trial) {
    Mat A = random_matrix(F, 3, 5, rng);
    Mat K = kernel(A);
    CHECK(K.rows == 5 - rank(A));
    Mat prod = mat_mul(A, transpose(K));
    for (Fel x : prod.a) CHECK(x == 0);
  }
}

TEST_CASE("matrix inverse round-trips") {
  std::mt19937_64 rng(99);
  auto F = Field::make(2, 2);
  int found = 0;
  while (found < 10) {
    Mat A = random_matrix(F, 4, 4, rng);
    if (!invertible(A)) continue;
    ++found;
    CHECK(mat_mul(A, inverse(A)) == Mat::identity(F, 4));
  }
}

TEST_CASE("subspace dimension formula dim(A+B) + dim(A/\\B) = dim A + dim B") {
  std::mt19937_64 rng(31337);
  for (auto pf : {std::pair<int, int>{2, 1}, {3, 1}}) {
    auto F = Field::make(pf.first, pf.second);
    for (int trial = 0; trial < 60; ++trial) {
      Subspace A = span(random_matrix(F, 2, 5, rng));
      Subspace B = span(random_matrix(F, 3, 5, rng));
      Subspace S = sub_sum(A, B), I = sub_intersect(A, B);
      CHECK(S.dim() + I.dim() == A.dim() + B.dim());
      CHECK(sub_contains(A, I));
      CHECK(sub_contains(B, I));
      CHECK(sub_contains(S, A));
      CHECK(sub_contains(S, B));
      CHECK(quotient_dim(A, B) == S.dim() - B.dim());
    }
  }
}

TEST_CASE("gaussian binomial pinned values and identities") {
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(3, 2, 3) == 13);
  CHECK(gaussian_binomial(5, 0, 2) == 1);
  CHECK(gaussian_binomial(5, 5, 3) == 1);
  CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), Error);
  // Symmetry and the Pascal-type recurrence over a spread of parameters.
  for (std::uint32_t q : {2u, 3u, 4u, 5u})
    for (std::uint32_t n = 1; n <= 8; ++n)
      for (std::uint32_t m = 0; m <= n; ++m) {
        CHECK(gaussian_binomial(n, m, q) == gaussian_binomial(n, n - m, q));
        if (m >= 1 && m <= n - 1) {
          Bigint qm = 1;
          for (std::uint32_t i = 0; i < m; ++i) qm *= q;
          CHECK(gaussian_binomial(n, m, q) ==
                gaussian_binomial(n - 1, m - 1, q) + qm * gaussian_binomial(n - 1, m, q));
        }
      }
  // A value that overflows 64 bits.
  CHECK(gaussian_binomial(64, 32, 2) > Bigint("18446744073709551615"));
}

TEST_CASE("enumerate_subspaces is canonical, deduplicated, lex-sorted and complete") {
  auto F2 = Field::make(2, 1);
  auto F3 = Field::make(3, 1);
  struct Case {
    FieldPtr F;
    std::uint32_t n, k;
    unsigned long long expect;
  };
  for (const auto& c : {Case{F2, 4, 2, 35}, Case{F2, 3, 1, 7}, Case{F3, 3, 2, 13},
                        Case{F3, 4, 2, 130}, Case{F2, 5, 2, 155}}) {
    auto subs = enumerate_subspaces(c.F, c.n, c.k);
    CHECK(subs.size() == c.expect);
    CHECK(gaussian_binomial(c.n, c.k, c.F->q()) == c.expect);
    std::set<std::string> labels;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      CHECK(subs[i].dim() == c.k);
      // Canonical: re-spanning changes nothing.
      CHECK(span(subs[i].basis) == subs[i]);
      labels.insert(sub_label(subs[i]));
      if (i) CHECK(subs[i - 1] < subs[i]);
    }
    CHECK(labels.size() == subs.size());
  }
  CHECK_THROWS_AS(enumerate_subspaces(F2, 30, 2), Error);
}

TEST_CASE("maximal flags of a subspace") {
  auto F = Field::make(2, 1);
  Subspace U = span(Mat::identity(F, 3));
  auto flags = maximal_flags_of(U);
  // Chains 0 < C_1 < C_2 < GF(2)^3: 7 * 3 = 21.
  CHECK(flags.size() == 21);
  for (const auto& chain : flags) {
    CHECK(chain.size() == 3);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      CHECK(chain[i].dim() == i + 1);
      if (i) CHECK(sub_contains(chain[i], chain[i - 1]));
    }
  }
}

TEST_CASE("subspace membership and labels") {
  auto F = Field::make(2, 1);
  Subspace S = span_of_vectors(F, 4, {{1, 0, 1, 0}, {0, 1, 1, 0}});
  CHECK(sub_member(S, {1, 1, 0, 0}));
  CHECK_FALSE(sub_member(S, {0, 0, 0, 1}));
  CHECK(sub_label(zero_subspace(F, 4)) == "0");
  CHECK(sub_label(S) == "1,0,1,0;0,1,1,0");
}
