#include "support.hpp"

#include <gtest/gtest.h>

using namespace kissing;
using namespace kissing::testing;

TEST(Encoding, SegmentPairLayout) {
    const LatticeSimplex p{LatticePoint({4, 2, 1}, 4), LatticePoint({0, 3, 4}, 4)};
    const LatticeSimplex q{LatticePoint({0, 0, 0}, 4), LatticePoint({3, 4, 4}, 4)};
    const XPoint x = encode_pair(p, q);
    EXPECT_EQ(to_string(x.coords()), "(-4,1,3,3,4,4,-4,-2,-1)");
    EXPECT_EQ(f_val(x), -1);
    EXPECT_EQ(g_val(x), 1050);
    EXPECT_EQ(sq_dist_affine_hulls(x).value, BigRational(BigInt(1), BigInt(1050)));
}

TEST(Encoding, PointTriangleLayoutAndSwap) {
    const LatticeSimplex pt{LatticePoint({1, 1, 1}, 1)};
    const LatticeSimplex tri{LatticePoint({1, 0, 0}, 1), LatticePoint({0, 1, 0}, 1), LatticePoint({0, 0, 1}, 1)};
    const XPoint x = encode_pair(pt, tri);
    EXPECT_EQ(to_string(x.coords()), "(-1,1,0,-1,0,1,0,-1,-1)");
    EXPECT_EQ(encode_pair(tri, pt).coords(), x.coords());
    EXPECT_EQ(sq_dist_affine_hulls(x).value, BigRational(BigInt(4), BigInt(3)));
}

TEST(Encoding, SharedStartGivesZeroTranslation) {
    const LatticeSimplex p{LatticePoint({1, 1, 1}, 3), LatticePoint({3, 2, 1}, 3)};
    const LatticeSimplex q{LatticePoint({1, 1, 1}, 3), LatticePoint({0, 3, 2}, 3)};
    const XPoint x = encode_pair(p, q);
    EXPECT_EQ(x[6], 0);
    EXPECT_EQ(x[7], 0);
    EXPECT_EQ(x[8], 0);
    EXPECT_EQ(f_val(x), 0);
    EXPECT_EQ(sq_dist_affine_hulls(x).value, BigRational(0));
}

TEST(Encoding, RejectsWrongDimensions) {
    const LatticeSimplex seg{LatticePoint({0, 0, 0}, 2), LatticePoint({1, 1, 1}, 2)};
    const LatticeSimplex pt{LatticePoint({2, 2, 2}, 2)};
    const LatticeSimplex seg2d{LatticePoint({0, 0}, 2), LatticePoint({1, 1}, 2)};
    EXPECT_THROW(encode_pair(seg, pt), std::invalid_argument);
    EXPECT_THROW(encode_pair(seg2d, seg2d), std::invalid_argument);
    EXPECT_THROW(XPoint(make_coords9({5, 0, 0, 0, 0, 0, 0, 0, 0}), BigInt(4)), std::invalid_argument);
    EXPECT_THROW(XPoint(make_coords9({0, 0, 0, 0, 0, 0, 0, 0, 0}), BigInt(0)), std::invalid_argument);
}

TEST(ModelIdentities, FAndGMatchDeterminantOracles) {
    Rng rng(201);
    for (long k = 1; k <= 8; ++k) {
        for (int i = 0; i < 2000; ++i) {
            const Coords9 c = random_coords(rng, k);
            const XPoint x(c, BigInt(k));
            ASSERT_EQ(f_val(x), -det_A_b(c)) << to_string(c);
            ASSERT_EQ(g_val(x), gram_det(c)) << to_string(c);
        }
    }
}

TEST(ModelIdentities, ComposedPolynomialsMatchPointwiseEvaluation) {
    Rng rng(203);
    for (int i = 0; i < 500; ++i) {
        const Coords9 c = random_coords(rng, 6);
        const auto polys = compose_phi(c);
        EXPECT_LE(polys.f.degree(), 3);
        EXPECT_LE(polys.g.degree(), 4);
        for (long k = 1; k <= 10; ++k) {
            // phi_k needs |phi_k(x)_i| <= k; skip coordinates that leave the box
            bool fits = true;
            const auto lin = phi_polys(c);
            for (std::size_t j = 0; j < 9; ++j) {
                fits = fits && abs(lin[j].eval(BigInt(k))) <= k;
            }
            if (!fits) {
                EXPECT_THROW(phi_apply(c, BigInt(k)), std::invalid_argument);
                continue;
            }
            const XPoint y = phi_apply(c, BigInt(k));
            EXPECT_EQ(polys.f.eval(BigInt(k)), f_val(y));
            EXPECT_EQ(polys.g.eval(BigInt(k)), g_val(y));
        }
    }
}

TEST(ModelIdentities, PhiCoordinates) {
    const Coords9 c = make_coords9({1, 2, 3, 0, 1, 2, 1, -1, 2});
    const XPoint y = phi_apply(c, BigInt(6));
    EXPECT_EQ(to_string(y.coords()), "(-5,4,3,6,5,4,-5,-1,2)");
    EXPECT_THROW(phi_apply(c, BigInt(0)), std::invalid_argument);
}

TEST(ModelIdentities, RowAndColumnSymmetries) {
    Rng rng(207);
    std::array<int, 3> perm{0, 1, 2};
    std::vector<std::array<int, 3>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i = 0; i < 2000; ++i) {
        const long k = rng.uniform(1, 8);
        const Coords9 c = random_coords(rng, k);
        const BigInt f = abs(f_expr(c));
        const BigInt g = g_expr(c);
        for (const auto& p : perms) {
            for (int mask = 0; mask < 8; ++mask) {
                const Coords9 y = negate_rows(permute_rows(c, p), mask);
                EXPECT_EQ(abs(f_expr(y)), f);
                EXPECT_EQ(g_expr(y), g);
            }
        }
        EXPECT_EQ(g_expr(negate_column(c, 0)), g);
        EXPECT_EQ(g_expr(negate_column(c, 1)), g);
    }
}

TEST(SetsYZ, GBoundOnY) {
    Rng rng(211);
    for (long k = 1; k <= 8; ++k) {
        const BigInt bound = 12 * pow_int(BigInt(k), 4);
        int seen = 0;
        for (int i = 0; i < 1500; ++i) {
            if (auto x = random_Y_point(rng, k)) {
                ++seen;
                EXPECT_TRUE(in_Y(*x));
                EXPECT_LE(g_val(*x), bound) << to_string(x->coords());
            }
        }
        EXPECT_GT(seen, 0);
    }
}

TEST(SetsYZ, MembershipExamples) {
    const XPoint star(make_coords9({-4, 1, 3, 3, 4, 4, -4, -2, -1}), BigInt(4));
    EXPECT_TRUE(in_Y(star));
    EXPECT_TRUE(in_Z(star));
    // x1 > 0 leaves both sets
    const XPoint pos(make_coords9({1, 1, 1, 1, 1, 1, 0, 0, 0}), BigInt(4));
    EXPECT_FALSE(in_Y(pos));
    EXPECT_FALSE(in_Z(pos));
    // |x1| = |x4| = k is excluded from Z only
    const XPoint corner(make_coords9({-2, 0, 0, 2, 0, 0, -2, 0, 0}), BigInt(2));
    EXPECT_FALSE(in_Z(corner));
    EXPECT_TRUE(in_Y(corner));
    // a box inequality |x2 - x8| <= k fails
    const XPoint box(make_coords9({0, 2, 0, 0, 0, 0, 0, -1, 0}), BigInt(2));
    EXPECT_FALSE(in_Y(box));
    EXPECT_TRUE(in_Z(box));
    const auto tag = classify(star);
    EXPECT_TRUE(tag.in_Y && tag.in_Z);
}

TEST(SetsYZ, EncodingsOfSegmentPairsSatisfyBoxInequalities) {
    // Every segment pair, after orienting the columns into the sign pattern,
    // lands in the box constraints of Y(k).
    Rng rng(213);
    for (int i = 0; i < 3000; ++i) {
        const long k = rng.uniform(1, 6);
        auto [a1, b1] = random_segment(rng, k);
        auto [a2, b2] = random_segment(rng, k);
        const XPoint x = encode_pair(segment(a1, b1, k), segment(a2, b2, k));
        for (std::size_t r = 0; r < 3; ++r) {
            EXPECT_LE(abs(x[r] - x[r + 6]), k);
            EXPECT_LE(abs(x[r + 3] + x[r + 6]), k);
            EXPECT_LE(abs(x[r] - x[r + 3] - x[r + 6]), k);
        }
    }
}
