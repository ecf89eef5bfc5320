#include <catch2/catch_amalgamated.hpp>

#include <q6/quadspace.hpp>

using namespace q6;

namespace {

std::vector<Rat> e(int i) { return ref_spaces::unit(i, Rat(1)); }

LinearSubspace<Rat> span(std::vector<std::vector<Rat>> rows) {
    return LinearSubspace<Rat>::span_points(rows);
}

} // namespace

TEST_CASE("gram matrix conventions") {
    auto g = gram8(Rat(1));
    CHECK(g * g == Matrix<Rat>::identity(8, Rat(1)));
    CHECK(g.rank() == 8);
    // x^T G x = 2 * (x1x8 - x2x7 + x3x6 - x4x5)
    std::vector<Rat> x{Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6), Rat(7), Rat(8)};
    Rat xtgx;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) xtgx += x[i] * g(i, j) * x[j];
    CHECK(xtgx == Rat(2) * q6_value(x));
    CHECK(q6_value(x) == Rat(8 - 14 + 18 - 20));
}

TEST_CASE("annihilator examples") {
    // point e1 -> hyperplane {x8 = 0}
    auto a = annihilator(span({e(0)}));
    CHECK(a.ldim() == 7);
    CHECK_FALSE(a.contains_vector(e(7)));
    for (int i = 0; i < 7; ++i) CHECK(a.contains_vector(e(i)));

    // H0 is maximal isotropic, so Ann(H0) = H0
    auto h0 = ref_spaces::H0(Rat(1));
    CHECK(annihilator(h0) == h0);

    // full space -> zero space
    LinearSubspace<Rat> full = span({e(0), e(1), e(2), e(3), e(4), e(5), e(6), e(7)});
    CHECK(annihilator(full).ldim() == 0);
}

TEST_CASE("annihilator is an involution and dims are complementary") {
    Rng rng(31);
    for (int t = 0; t < 10; ++t) {
        std::size_t k = 1 + static_cast<std::size_t>(rng.uniform(0, 5));
        Matrix<Rat> m(k, 8);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < 8; ++j) m(i, j) = Rat(rng.small_int());
        auto s = LinearSubspace<Rat>::span_rows(std::move(m));
        if (s.ldim() == 0) continue;
        auto a = annihilator(s);
        CHECK(s.ldim() + a.ldim() == 8);
        CHECK(annihilator(a) == s);
    }
}

TEST_CASE("restricted rank examples") {
    // {x7 = x8 = 0}: rank drops to 4
    auto s = span({e(0), e(1), e(2), e(3), e(4), e(5)});
    CHECK(restrict_rank(s) == 4);
    CHECK(restrict_rank(ref_spaces::H0(Rat(1))) == 0);
    CHECK(restrict_rank(span({e(0), e(7)})) == 2);
}

TEST_CASE("restriction to Ann(z) of a point z on Q6 has rank 6") {
    Rng rng(77);
    int done = 0;
    while (done < 5) {
        // sample a rational point of Q6: pick 7 coordinates, solve for x8
        std::vector<Rat> z(8);
        for (int i = 0; i < 7; ++i) z[i] = Rat(rng.small_int());
        if (z[0].is_zero()) continue;
        z[7] = (z[1] * z[6] - z[2] * z[5] + z[3] * z[4]) / z[0];
        REQUIRE(q6_value(z).is_zero());
        auto a = annihilator(span({z}));
        CHECK(a.ldim() == 7);
        CHECK(restrict_rank(a) == 6);
        ++done;
    }
}

TEST_CASE("iso_type on the reference spaces") {
    auto v0 = ref_spaces::V0(Rat(1));
    auto h0 = ref_spaces::H0(Rat(1));
    CHECK(iso_type(v0) == IsoType::Vertical);
    CHECK(iso_type(h0) == IsoType::Horizontal);
    CHECK(intersection_ldim(v0, h0) == 3); // they meet in a P^2
    CHECK_THROWS_AS(iso_type(span({e(0), e(1)})), input_error);
    CHECK_THROWS_AS(iso_type(span({e(0), e(1), e(2), e(7)})), input_error); // not isotropic
}

TEST_CASE("extend_isotropic_plane") {
    auto v0 = ref_spaces::V0(Rat(1));
    auto h0 = ref_spaces::H0(Rat(1));

    auto [v, h] = extend_isotropic_plane(span({e(0), e(1), e(2)}));
    CHECK(v == v0);
    CHECK(h == h0);

    auto [v2, h2] = extend_isotropic_plane(span({e(0), e(1), e(3)}));
    CHECK(v2 == v0);
    CHECK(iso_type(h2) == IsoType::Horizontal);
    CHECK(h2.contains(span({e(0), e(1), e(3)})));

    // idempotence: any isotropic 3-subspace of V0 extends back to V0
    auto w = span({e(0), e(1), std::vector<Rat>{Rat(0), Rat(0), Rat(2), Rat(3), Rat(0), Rat(0), Rat(0), Rat(0)}});
    auto [v3, h3] = extend_isotropic_plane(w);
    CHECK(v3 == v0);
    CHECK(h3.contains(w));

    CHECK_THROWS_AS(extend_isotropic_plane(span({e(0), e(1)})), input_error);
}

TEST_CASE("reflections preserve the form") {
    Rng rng(5);
    for (int t = 0; t < 5; ++t) {
        std::vector<Rat> u(8);
        do {
            for (auto& c : u) c = Rat(rng.small_int());
        } while (q6_value(u).is_zero());
        auto m = reflection_matrix(u, Rat(1));
        auto g = gram8(Rat(1));
        CHECK(m.transpose() * g * m == g);
    }
}

TEST_CASE("random maximal isotropic sampling over Q") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        auto v = random_max_isotropic(IsoType::Vertical, seed, Rat(1));
        auto h = random_max_isotropic(IsoType::Horizontal, seed + 100, Rat(1));
        CHECK(v.ldim() == 4);
        CHECK(restrict_rank(v) == 0);
        CHECK(iso_type(v) == IsoType::Vertical);
        CHECK(iso_type(h) == IsoType::Horizontal);
        // same type: even linear intersection; cross type: odd
        auto v2 = random_max_isotropic(IsoType::Vertical, seed + 55, Rat(1));
        CHECK(intersection_ldim(v, v2) % 2 == 0);
        CHECK(intersection_ldim(v, h) % 2 == 1);
        // reproducibility
        CHECK(random_max_isotropic(IsoType::Vertical, seed, Rat(1)) == v);
    }
}

TEST_CASE("parity statistics over F_101") {
    Fp one(1, 101);
    auto v0 = ref_spaces::V0(one);
    auto h0 = ref_spaces::H0(one);
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto t = seed % 2 == 0 ? IsoType::Vertical : IsoType::Horizontal;
        auto u = random_max_isotropic(t, seed * 7 + 1, one);
        CHECK(iso_type(u) == t);
        std::size_t dv = intersection_ldim(u, v0);
        std::size_t dh = intersection_ldim(u, h0);
        CHECK((dv + dh) % 2 == 1);
    }
}

TEST_CASE("projective points normalize") {
    ProjPoint<Rat> p(std::vector<Rat>{Rat(0), Rat(2), Rat(4), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK(p[1] == Rat(1));
    CHECK(p[2] == Rat(2));
    CHECK_THROWS_AS(ProjPoint<Rat>(std::vector<Rat>(8, Rat(0))), input_error);
}
