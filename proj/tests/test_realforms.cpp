#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pvm/realforms.hpp"

using namespace pvm;

TEST(RealForms, Su22) {
    auto s = minimal_parabolic("su", {2, 2});
    EXPECT_EQ(s.family, RealFamily::SuNN);
    EXPECT_EQ(s.name, "su(2,2)");
    EXPECT_EQ(s.dim_a0, 2);
    EXPECT_EQ(s.dim_n0, 6);
    EXPECT_EQ(s.complex_type, LieType(Family::A, 3));
    EXPECT_TRUE(s.complex_subset.empty());
    EXPECT_EQ(s.m0_name(), "u(1)");
    EXPECT_TRUE(verify(s).all_passed());
}

TEST(RealForms, SuStar4) {
    auto s = minimal_parabolic("su*", {4});
    EXPECT_EQ(s.m0_name(), "su(2)+su(2)");
    EXPECT_EQ(s.dim_a0, 1);
    EXPECT_EQ(s.dim_n0, 4);
    EXPECT_EQ(s.complex_subset, ParabolicSubset({1, 3}));
    EXPECT_TRUE(verify(s).all_passed());
}

TEST(RealForms, So53) {
    // so(8) complexifies to D4, and m0 = so(2) is abelian, so P_S is the Borel.
    auto s = minimal_parabolic("so", {5, 3});
    EXPECT_EQ(s.m0_name(), "so(2)");
    EXPECT_EQ(s.dim_a0, 3);
    EXPECT_EQ(s.dim_n0, 12);
    EXPECT_EQ(s.complex_type, LieType(Family::D, 4));
    EXPECT_TRUE(s.complex_subset.empty());
    auto report = verify(s);
    EXPECT_TRUE(report.all_passed());
    EXPECT_EQ(report.parabolic.nilradical_dim(), 12u);
}

TEST(RealForms, MoreExamples) {
    auto sp32 = minimal_parabolic("sp", {3, 2});
    EXPECT_EQ(sp32.complex_type, LieType(Family::C, 5));
    EXPECT_EQ(sp32.complex_subset, ParabolicSubset({1, 3, 5}));
    EXPECT_EQ(sp32.dim_n0, 22);
    EXPECT_TRUE(verify(sp32).all_passed());

    auto sostar8 = minimal_parabolic("so*", {8});
    EXPECT_EQ(sostar8.complex_type, LieType(Family::D, 4));
    EXPECT_EQ(sostar8.complex_subset, ParabolicSubset({1, 3}));
    EXPECT_EQ(sostar8.dim_n0, 10);
    EXPECT_TRUE(verify(sostar8).all_passed());

    auto so74 = minimal_parabolic("so", {7, 4});
    EXPECT_EQ(so74.complex_type, LieType(Family::B, 5));
    EXPECT_EQ(so74.complex_subset, ParabolicSubset({5}));
    EXPECT_TRUE(verify(so74).all_passed());
}

TEST(RealForms, SplitForms) {
    for (auto [token, params, type] : std::vector<std::tuple<std::string, std::vector<int>, LieType>>{
             {"sl", {4}, LieType(Family::A, 3)},
             {"sp", {3}, LieType(Family::C, 3)},
             {"so", {4, 4}, LieType(Family::D, 4)},
             {"so", {4, 3}, LieType(Family::B, 3)}}) {
        auto s = minimal_parabolic(token, params);
        EXPECT_EQ(s.complex_type, type);
        EXPECT_TRUE(s.complex_subset.empty());
        EXPECT_TRUE(s.m0.empty());
        EXPECT_FALSE(s.n0_closed_form);
        EXPECT_EQ(static_cast<std::size_t>(s.dim_n0), expected_positive_root_count(type));
        EXPECT_EQ(s.dim_a0, type.rank());
        EXPECT_TRUE(verify(s).all_passed()) << s.name;
    }
}

TEST(RealForms, ClosedFormsAgainstHandWrittenTable) {
    auto cases = oracle::catalog_cases();
    EXPECT_GE(cases.size(), 100u);
    for (const auto& c : cases) {
        auto s = minimal_parabolic(c.token, c.params);
        auto pd = analyze(RootSystem(s.complex_type), s.complex_subset);
        EXPECT_EQ(static_cast<int>(pd.nilradical_dim()), c.dim_n0) << s.name;
        EXPECT_EQ(s.dim_n0, c.dim_n0) << s.name;
        EXPECT_EQ(pd.levi_type, c.levi) << s.name << ": " << to_string(pd.levi_type);
        EXPECT_EQ(s.m0_semisimple_types(), c.levi) << s.name;
        EXPECT_TRUE(verify(s).all_passed()) << s.name;
    }
}

TEST(RealForms, CatalogGridVerifies) {
    auto grid = catalog_grid(10);
    EXPECT_EQ(grid.size(), 196u);
    for (const auto& s : grid) {
        auto r = verify(s);
        EXPECT_TRUE(r.all_passed()) << s.name;
        EXPECT_LE(s.complex_type.rank(), 10);
    }
}

TEST(RealForms, SuPrPairs) {
    // the 28 pairs 1 <= r < p <= 8: a0 = r, and the index set is {r+1, ..., p-1}
    int count = 0;
    for (int p = 2; p <= 8; ++p)
        for (int r = 1; r < p; ++r) {
            auto s = minimal_parabolic("su", {p, r});
            EXPECT_EQ(s.dim_a0, r);
            EXPECT_EQ(s.complex_subset, ParabolicSubset::range(r + 1, p - 1));
            EXPECT_EQ(s.m0_abelian_count(), r);
            ++count;
        }
    EXPECT_EQ(count, 28);
}

TEST(RealForms, ConstraintErrors) {
    EXPECT_THROW(minimal_parabolic("su", {1, 2}), PreconditionError);
    EXPECT_THROW(minimal_parabolic("su", {1, 1}), PreconditionError);
    EXPECT_THROW(minimal_parabolic("so", {3, 5}), PreconditionError);
    EXPECT_THROW(minimal_parabolic("sp", {2, 3}), PreconditionError);
    EXPECT_THROW(minimal_parabolic("su*", {5}), PreconditionError);
    EXPECT_THROW(minimal_parabolic("so*", {2}), PreconditionError);
    EXPECT_THROW(minimal_parabolic("sl", {1}), PreconditionError);
    EXPECT_THROW(minimal_parabolic("su", {3}), ParseError);
    EXPECT_THROW(minimal_parabolic("e", {6}), ParseError);
    EXPECT_THROW(minimal_parabolic(RealFamily::SuPR, {3}), PreconditionError);
    try {
        minimal_parabolic("sp", {2, 3});
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("p >= r"), std::string::npos) << e.what();
    }
}

TEST(RealForms, VerificationCatchesBadData) {
    auto s = minimal_parabolic("su", {4, 1});
    s.dim_n0 += 1;
    auto r = verify(s);
    EXPECT_FALSE(r.all_passed());
    EXPECT_FALSE(r.checks[0].passed);

    auto t = minimal_parabolic("su*", {6});
    t.complex_subset = ParabolicSubset({1, 3});
    EXPECT_FALSE(verify(t).all_passed());
}
