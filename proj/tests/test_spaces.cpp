#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "geodex/errors.hpp"
#include "geodex/formed_space.hpp"

using namespace geodex;

namespace {

Subspace random_subspace(const FieldPtr& F, std::uint32_t n, std::uint32_t k,
                         std::mt19937_64& rng) {
  Mat M(F, k, n);
  for (auto& e : M.a) e = static_cast<Fel>(rng() % F->q());
  return span(M);
}

Isometry random_word(const FormedSpace& W, const std::vector<Isometry>& gens,
                     std::mt19937_64& rng, int len) {
  Isometry g{Mat::identity(W.F, W.dim), 0, "word"};
  for (int i = 0; i < len; ++i) {
    const Isometry& h = gens[rng() % gens.size()];
    Mat m = g.matrix;
    if (h.frob) {
      std::uint32_t r = h.frob;
      m = map_entries(m, [&](Fel a) { return W.F->frobenius(a, r); });
    }
    g.matrix = mat_mul(m, h.matrix);
    g.frob = (g.frob + h.frob) % W.F->f();
  }
  return g;
}

}  // namespace

TEST_CASE("construction fixes dimension, Gram layout and quadratic data") {
  FormedSpace sp = space_make(SpaceKind::symplectic, 2, 2, 1);
  CHECK(sp.dim == 4);
  CHECK(sp.gram.at(0, 2) == 1);
  CHECK(sp.gram.at(2, 0) == 1);
  CHECK(sp.gram.at(0, 0) == 0);
  CHECK(sp.name() == "Sp(4,2)");

  FormedSpace sp3 = space_make(SpaceKind::symplectic, 2, 3, 1);
  CHECK(sp3.gram.at(2, 0) == 2);
  CHECK(sp3.gram.at(0, 2) == 1);

  FormedSpace o5 = space_make(SpaceKind::orthogonal_odd, 2, 3, 1);
  CHECK(o5.dim == 5);
  CHECK(o5.gram.at(4, 4) == 1);
  CHECK(o5.gram.at(2, 0) == 1);
  CHECK(o5.quad == std::vector<Fel>{0, 0, 0, 0, 2});
  CHECK(o5.name() == "O(5,3)");

  FormedSpace om = space_make(SpaceKind::orthogonal_minus, 2, 3, 1);
  CHECK(om.dim == 6);
  CHECK(om.gram.at(4, 4) == 1);
  CHECK(om.gram.at(5, 5) == 1);  // -nonsquare = -2 = 1 over GF(3)
  CHECK(om.name() == "O-(6,3)");

  FormedSpace u4 = space_make(SpaceKind::unitary_even, 2, 2, 2);
  CHECK(u4.dim == 4);
  CHECK(u4.sigma_power == 1);
  CHECK(u4.sigma(2) == u4.F->frobenius(2, 1));
  CHECK(u4.name() == "U(4,4)");

  FormedSpace u5 = space_make(SpaceKind::unitary_odd, 2, 2, 2);
  CHECK(u5.dim == 5);
  CHECK(u5.gram.at(4, 4) == 1);

  CHECK_THROWS_AS(space_make(SpaceKind::orthogonal_odd, 2, 2, 1), Error);
  try {
    space_make(SpaceKind::orthogonal_plus, 2, 2, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::unsupported_characteristic);
  }
  try {
    space_make(SpaceKind::unitary_even, 2, 3, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_a_square);
  }
  CHECK_THROWS_AS(space_make(SpaceKind::symplectic, 0, 2, 1), Error);

  FormedSpace via_q = space_make_q(SpaceKind::symplectic, 2, 9);
  CHECK(via_q.F->p() == 3);
  CHECK(via_q.F->f() == 2);
  CHECK_THROWS_AS(space_make_q(SpaceKind::symplectic, 2, 6), Error);
  CHECK_THROWS_AS(space_make_q(SpaceKind::symplectic, 2, 1), Error);

  CHECK(space_kind_from_name("orthogonal_minus") == SpaceKind::orthogonal_minus);
  CHECK(std::string(space_kind_name(SpaceKind::unitary_odd)) == "unitary_odd");
  CHECK_THROWS_AS(space_kind_from_name("euclidean"), Error);
}

TEST_CASE("the form is linear in the first slot and twisted in the second") {
  FormedSpace u = space_make(SpaceKind::unitary_even, 2, 2, 2);
  const FieldPtr& F = u.F;
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::vector<Fel> v(u.dim), w(u.dim);
    for (auto& e : v) e = static_cast<Fel>(rng() % F->q());
    for (auto& e : w) e = static_cast<Fel>(rng() % F->q());
    Fel a = static_cast<Fel>(rng() % F->q());
    std::vector<Fel> av = v, aw = w;
    for (auto& e : av) e = F->mul(a, e);
    for (auto& e : aw) e = F->mul(a, e);
    CHECK(u.form(av, w) == F->mul(a, u.form(v, w)));
    CHECK(u.form(v, aw) == F->mul(u.sigma(a), u.form(v, w)));
    CHECK(u.form(w, v) == u.sigma(u.form(v, w)));
  }

  FormedSpace sp = space_make(SpaceKind::symplectic, 2, 3, 1);
  std::vector<Fel> v(4, 0);
  for (Fel a = 0; a < 3; ++a)
    for (Fel b = 0; b < 3; ++b)
      for (Fel c = 0; c < 3; ++c)
        for (Fel d = 0; d < 3; ++d) {
          v = {a, b, c, d};
          CHECK(sp.form(v, v) == 0);
        }
}

TEST_CASE("perp complements dimension and detects singularity") {
  std::mt19937_64 rng(7);
  std::vector<FormedSpace> spaces;
  spaces.push_back(space_make(SpaceKind::symplectic, 3, 2, 1));
  spaces.push_back(space_make(SpaceKind::orthogonal_odd, 2, 3, 1));
  spaces.push_back(space_make(SpaceKind::orthogonal_minus, 1, 3, 2));
  spaces.push_back(space_make(SpaceKind::unitary_even, 2, 2, 2));
  for (const FormedSpace& W : spaces) {
    for (int t = 0; t < 25; ++t) {
      Subspace U = random_subspace(W.F, W.dim, 1 + t % W.dim, rng);
      Subspace Up = perp(W, U);
      CHECK(U.dim() + Up.dim() == W.dim);
      CHECK(perp(W, Up) == U);
      if (is_singular(W, U)) CHECK(sub_contains(Up, U));
    }
    CHECK(perp(W, zero_subspace(W.F, W.dim)) == full_space(W.F, W.dim));
  }

  FormedSpace sp = space_make(SpaceKind::symplectic, 2, 2, 1);
  Mat hyp(sp.F, 2, 4);
  hyp.at(0, 0) = 1;
  hyp.at(1, 2) = 1;  // e_1, f_1 pair to 1
  CHECK(!is_singular(sp, span(hyp)));
  Mat iso(sp.F, 2, 4);
  iso.at(0, 0) = 1;
  iso.at(1, 1) = 1;
  CHECK(is_singular(sp, span(iso)));
}

TEST_CASE("singular subspace counts match the classical point and generator totals") {
  struct Row {
    FormedSpace W;
    std::uint32_t k;
    std::size_t count;
  };
  std::vector<Row> rows;
  rows.push_back({space_make(SpaceKind::symplectic, 2, 2, 1), 1, 15});
  rows.push_back({space_make(SpaceKind::symplectic, 2, 2, 1), 2, 15});
  rows.push_back({space_make(SpaceKind::symplectic, 2, 3, 1), 1, 40});
  rows.push_back({space_make(SpaceKind::symplectic, 2, 3, 1), 2, 40});
  rows.push_back({space_make(SpaceKind::symplectic, 3, 2, 1), 1, 63});
  rows.push_back({space_make(SpaceKind::symplectic, 3, 2, 1), 2, 315});
  rows.push_back({space_make(SpaceKind::symplectic, 3, 2, 1), 3, 135});
  rows.push_back({space_make(SpaceKind::orthogonal_odd, 2, 3, 1), 1, 40});
  rows.push_back({space_make(SpaceKind::orthogonal_odd, 2, 3, 1), 2, 40});
  rows.push_back({space_make(SpaceKind::orthogonal_plus, 2, 3, 1), 1, 16});
  rows.push_back({space_make(SpaceKind::orthogonal_plus, 2, 3, 1), 2, 8});
  rows.push_back({space_make(SpaceKind::orthogonal_plus, 3, 3, 1), 1, 130});
  rows.push_back({space_make(SpaceKind::orthogonal_plus, 3, 3, 1), 2, 520});
  rows.push_back({space_make(SpaceKind::orthogonal_plus, 3, 3, 1), 3, 80});
  rows.push_back({space_make(SpaceKind::orthogonal_minus, 2, 3, 1), 1, 112});
  rows.push_back({space_make(SpaceKind::orthogonal_minus, 2, 3, 1), 2, 280});
  rows.push_back({space_make(SpaceKind::unitary_even, 2, 2, 2), 1, 45});
  rows.push_back({space_make(SpaceKind::unitary_even, 2, 2, 2), 2, 27});
  rows.push_back({space_make(SpaceKind::unitary_odd, 2, 2, 2), 1, 165});
  rows.push_back({space_make(SpaceKind::unitary_odd, 2, 2, 2), 2, 297});
  for (const Row& r : rows) {
    CAPTURE(r.W.name());
    CAPTURE(r.k);
    auto subs = enumerate_singular(r.W, r.k);
    CHECK(subs.size() == r.count);
    CHECK(std::is_sorted(subs.begin(), subs.end()));
    for (const Subspace& S : subs) {
      REQUIRE(S.dim() == r.k);
      REQUIRE(is_singular(r.W, S));
    }
  }

  FormedSpace sp = space_make(SpaceKind::symplectic, 2, 2, 1);
  CHECK(enumerate_singular(sp, 0).size() == 1);
  CHECK_THROWS_AS(enumerate_singular(sp, 3), Error);
}

TEST_CASE("the Witt index is exact: maximal singular subspaces do not extend") {
  for (FormedSpace W : {space_make(SpaceKind::orthogonal_minus, 2, 3, 1),
                        space_make(SpaceKind::unitary_odd, 2, 2, 2)}) {
    CAPTURE(W.name());
    for (const Subspace& S : enumerate_singular(W, W.omega)) {
      Subspace P = perp(W, S);
      std::uint64_t total = 1;
      for (std::uint32_t i = 0; i < P.dim(); ++i) total *= W.F->q();
      for (std::uint64_t code = 1; code < total; ++code) {
        std::vector<Fel> coords(P.dim());
        std::uint64_t c = code;
        for (std::uint32_t i = P.dim(); i-- > 0;) {
          coords[i] = static_cast<Fel>(c % W.F->q());
          c /= W.F->q();
        }
        std::vector<Fel> v = row_apply(coords, P.basis);
        if (vector_singular(W, v)) REQUIRE(sub_member(S, v));
      }
    }
  }
}

TEST_CASE("hyperbolic extension rebuilds a frame from a maximal and an opposite flag") {
  std::mt19937_64 rng(23);
  std::vector<FormedSpace> spaces;
  spaces.push_back(space_make(SpaceKind::symplectic, 2, 3, 1));
  spaces.push_back(space_make(SpaceKind::symplectic, 3, 2, 1));
  spaces.push_back(space_make(SpaceKind::orthogonal_odd, 2, 3, 1));
  spaces.push_back(space_make(SpaceKind::orthogonal_plus, 2, 3, 1));
  spaces.push_back(space_make(SpaceKind::orthogonal_minus, 2, 3, 1));
  spaces.push_back(space_make(SpaceKind::unitary_even, 2, 2, 2));
  spaces.push_back(space_make(SpaceKind::unitary_odd, 2, 2, 2));

  for (const FormedSpace& W : spaces) {
    CAPTURE(W.name());
    PolarFrame st = standard_frame(W);
    check_frame(W, st);

    auto frame_parts = [&](const PolarFrame& fr) {
      Mat xm(W.F, W.omega, W.dim), ym(W.F, W.omega, W.dim);
      for (std::uint32_t i = 0; i < W.omega; ++i)
        for (std::uint32_t t = 0; t < W.dim; ++t) {
          xm.at(i, t) = fr.x[i][t];
          ym.at(i, t) = fr.y[i][t];
        }
      return std::pair<Subspace, Subspace>(span(xm), span(ym));
    };

    auto [X0, Y0] = frame_parts(st);
    auto gens = isometry_generators(W).gens;
    for (int trial = 0; trial < 8; ++trial) {
      Isometry g = random_word(W, gens, rng, 6);
      Subspace X = apply_isometry(W, g, X0);
      std::vector<Subspace> flag;
      for (std::uint32_t i = 1; i <= W.omega; ++i) {
        Mat ym(W.F, i, W.dim);
        for (std::uint32_t r = 0; r < i; ++r)
          for (std::uint32_t t = 0; t < W.dim; ++t) ym.at(r, t) = st.y[r][t];
        flag.push_back(apply_isometry(W, g, span(ym)));
      }
      PolarFrame fr = hyperbolic_extend(W, X, flag);
      auto [Xf, Yf] = frame_parts(fr);
      CHECK(Xf == X);
      CHECK(Yf == flag.back());
    }

    // X and Y must be opposite; handing in X itself as the flag's top fails.
    std::vector<Subspace> bad_flag;
    for (std::uint32_t i = 1; i <= W.omega; ++i) {
      Mat xm(W.F, i, W.dim);
      for (std::uint32_t r = 0; r < i; ++r)
        for (std::uint32_t t = 0; t < W.dim; ++t) xm.at(r, t) = st.x[r][t];
      bad_flag.push_back(span(xm));
    }
    CHECK_THROWS_AS(hyperbolic_extend(W, X0, bad_flag), Error);
  }

  FormedSpace sp = space_make(SpaceKind::symplectic, 2, 3, 1);
  PolarFrame st = standard_frame(sp);
  Mat ym(sp.F, 2, 4);
  for (std::uint32_t r = 0; r < 2; ++r)
    for (std::uint32_t t = 0; t < 4; ++t) ym.at(r, t) = st.y[r][t];
  Subspace Y = span(ym);
  Mat xm(sp.F, 2, 4);
  for (std::uint32_t r = 0; r < 2; ++r)
    for (std::uint32_t t = 0; t < 4; ++t) xm.at(r, t) = st.x[r][t];
  Subspace X = span(xm);
  // Flag out of order.
  try {
    hyperbolic_extend(sp, X, {Y, Y});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_flag);
  }
  // X not maximal.
  Mat one(sp.F, 1, 4);
  one.at(0, 0) = 1;
  Mat y1(sp.F, 1, 4);
  y1.at(0, 2) = 1;
  CHECK_THROWS_AS(hyperbolic_extend(sp, span(one), {span(y1), Y}), Error);
}

TEST_CASE("isometry generators preserve the form and singularity") {
  FormedSpace sp2 = space_make(SpaceKind::symplectic, 2, 2, 1);
  auto g2 = isometry_generators(sp2);
  CHECK(g2.gens.size() == 15);
  CHECK(g2.notes.empty());

  FormedSpace sp3 = space_make(SpaceKind::symplectic, 2, 3, 1);
  auto g3 = isometry_generators(sp3);
  CHECK(g3.gens.size() == 80);

  FormedSpace o5 = space_make(SpaceKind::orthogonal_odd, 2, 3, 1);
  auto go = isometry_generators(o5);
  CHECK(go.gens.size() == 81);  // 121 projective points, 40 singular

  FormedSpace u4 = space_make(SpaceKind::unitary_even, 2, 2, 2);
  auto gu = isometry_generators(u4);
  CHECK(gu.gens.size() == 47);  // 45 isotropic points, one trace-zero parameter,
                                // one torus element, one Frobenius map
  bool has_frob = false;
  for (const auto& g : gu.gens) {
    CHECK(preserves_form(u4, g));
    if (g.provenance == "frobenius") has_frob = true;
  }
  CHECK(has_frob);

  FormedSpace om9 = space_make(SpaceKind::orthogonal_minus, 1, 3, 2);
  auto gm = isometry_generators(om9);
  CHECK(gm.notes.size() == 1);
  for (const auto& g : gm.gens) CHECK(g.provenance != "frobenius");

  FormedSpace sp4 = space_make(SpaceKind::symplectic, 2, 2, 2);
  auto g4 = isometry_generators(sp4);
  bool frob4 = false;
  for (const auto& g : g4.gens) frob4 = frob4 || g.provenance == "frobenius";
  CHECK(frob4);

  auto lines = enumerate_singular(sp3, 2);
  for (std::size_t i = 0; i < 5; ++i) {
    Subspace img = apply_isometry(sp3, g3.gens[i * 7], lines[i * 3]);
    CHECK(is_singular(sp3, img));
    CHECK(std::binary_search(lines.begin(), lines.end(), img));
  }

  Isometry bogus{Mat::identity(sp3.F, 4), 0, "shear"};
  bogus.matrix.at(0, 1) = 1;
  CHECK(!preserves_form(sp3, bogus));

  std::vector<Fel> v{1, 2, 0, 1};
  Isometry id_frob{Mat::identity(u4.F, 4), 1, "frobenius"};
  auto w = apply_isometry_vec(u4, id_frob, v);
  for (std::uint32_t i = 0; i < 4; ++i) CHECK(w[i] == u4.F->frobenius(v[i], 1));
}
