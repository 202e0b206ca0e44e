#include <gtest/gtest.h>

#include <set>

#include "pvm/parabolic.hpp"

using namespace pvm;

namespace {

const RootSystem& a3() {
    static const RootSystem rs(LieType(Family::A, 3));
    return rs;
}

std::set<std::vector<int>> coeff_set(const std::vector<Root>& roots) {
    std::set<std::vector<int>> out;
    for (const auto& r : roots)
        out.insert(r.coeffs());
    return out;
}

std::vector<LieType> types(std::initializer_list<std::pair<Family, int>> list) {
    std::vector<LieType> out;
    for (auto [f, r] : list)
        out.emplace_back(f, r);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Parabolic, A3Examples) {
    auto p13 = analyze(a3(), ParabolicSubset({1, 3}));
    EXPECT_EQ(coeff_set(p13.levi_roots), (std::set<std::vector<int>>{{1, 0, 0}, {0, 0, 1}}));
    EXPECT_EQ(p13.nilradical_dim(), 4u);
    EXPECT_EQ(p13.levi_type, types({{Family::A, 1}, {Family::A, 1}}));
    EXPECT_EQ(p13.center_rank, 1);

    auto p2 = analyze(a3(), ParabolicSubset({2}));
    EXPECT_EQ(coeff_set(p2.levi_roots), (std::set<std::vector<int>>{{0, 1, 0}}));
    EXPECT_EQ(p2.nilradical_dim(), 5u);

    auto borel = analyze(a3(), ParabolicSubset{});
    EXPECT_EQ(borel.nilradical_roots, a3().positive_roots());
    EXPECT_TRUE(borel.levi_type.empty());
    EXPECT_EQ(borel.center_rank, 3);
}

TEST(Parabolic, A3EnumerationHasEightEntries) {
    auto all = enumerate_all(a3());
    ASSERT_EQ(all.size(), 8u);
    std::vector<std::string> subsets;
    std::vector<std::size_t> nil;
    for (const auto& pd : all) {
        subsets.push_back(to_string(pd.subset));
        nil.push_back(pd.nilradical_dim());
    }
    EXPECT_EQ(subsets, (std::vector<std::string>{"{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"}));
    EXPECT_EQ(nil, (std::vector<std::size_t>{6, 5, 5, 5, 3, 4, 3, 0}));
    EXPECT_EQ(to_string(all[4].levi_type), "A2");
    EXPECT_EQ(to_string(all[7].levi_type), "A3");
}

TEST(Parabolic, SmallRankEnumerations) {
    RootSystem a1(LieType(Family::A, 1));
    EXPECT_EQ(enumerate_all(a1).size(), 2u);

    // Brute force over the three roots a1, a2, a1+a2 of A2.
    RootSystem a2(LieType(Family::A, 2));
    std::vector<std::vector<int>> roots{{1, 0}, {0, 1}, {1, 1}};
    std::vector<std::size_t> expected;
    for (auto s : std::vector<std::vector<int>>{{}, {1}, {2}, {1, 2}}) {
        std::size_t n = 0;
        for (const auto& r : roots) {
            bool inside = true;
            for (int i = 0; i < 2; ++i)
                if (r[i] != 0 && std::find(s.begin(), s.end(), i + 1) == s.end())
                    inside = false;
            n += inside ? 0 : 1;
        }
        expected.push_back(n);
    }
    std::vector<std::size_t> got;
    for (const auto& pd : enumerate_all(a2))
        got.push_back(pd.nilradical_dim());
    EXPECT_EQ(got, expected);
    EXPECT_EQ(got, (std::vector<std::size_t>{3, 2, 2, 0}));
}

TEST(Parabolic, StructuralInvariants) {
    for (int l = 1; l <= 6; ++l) {
        for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
            if (f == Family::D && l < 2)
                continue;
            RootSystem rs(LieType(f, l));
            auto all = enumerate_all(rs);
            ASSERT_EQ(all.size(), std::size_t{1} << l);
            for (const auto& pd : all) {
                // disjoint union of Delta+
                auto levi = coeff_set(pd.levi_roots), nil = coeff_set(pd.nilradical_roots);
                EXPECT_EQ(levi.size() + nil.size(), rs.positive_roots().size());
                for (const auto& c : levi)
                    EXPECT_FALSE(nil.contains(c));
                // Levi roots have support in S, nilradical roots leave it
                for (const auto& r : pd.levi_roots)
                    for (int i : r.support())
                        EXPECT_TRUE(pd.subset.contains(i + 1));
                for (const auto& r : pd.nilradical_roots) {
                    auto sup = r.support();
                    EXPECT_TRUE(std::any_of(sup.begin(), sup.end(), [&](int i) { return !pd.subset.contains(i + 1); }));
                }
                // semisimple rank + center = rank, and the Levi type accounts for every Levi root
                EXPECT_EQ(semisimple_rank(pd.levi_type) + pd.center_rank, l);
                std::size_t count = 0;
                for (const auto& t : pd.levi_type)
                    count += expected_positive_root_count(t);
                EXPECT_EQ(count, pd.levi_dim()) << rs.lie_type().name() << " " << to_string(pd.subset);
                // Levi roots are closed under addition inside Delta+
                for (const auto& x : pd.levi_roots)
                    for (const auto& y : pd.levi_roots) {
                        std::vector<int> z = x.coeffs();
                        for (int i = 0; i < l; ++i)
                            z[i] += y[i];
                        if (rs.is_positive_root(Root(z)))
                            EXPECT_TRUE(levi.contains(z));
                    }
            }
            // larger S, smaller nilradical
            for (const auto& a : all)
                for (const auto& b : all) {
                    if (!std::includes(b.subset.indices().begin(), b.subset.indices().end(),
                                       a.subset.indices().begin(), a.subset.indices().end()))
                        continue;
                    auto na = coeff_set(a.nilradical_roots);
                    for (const auto& r : b.nilradical_roots)
                        EXPECT_TRUE(na.contains(r.coeffs()));
                }
        }
    }
}

TEST(Parabolic, LeviTypesOfNonSimplyLacedAndBranchedDiagrams) {
    RootSystem b4(LieType(Family::B, 4)), c4(LieType(Family::C, 4)), d5(LieType(Family::D, 5));
    EXPECT_EQ(analyze(b4, ParabolicSubset({3, 4})).levi_type, types({{Family::B, 2}}));
    EXPECT_EQ(analyze(c4, ParabolicSubset({3, 4})).levi_type, types({{Family::C, 2}}));
    EXPECT_EQ(analyze(b4, ParabolicSubset({1, 2, 4})).levi_type, types({{Family::A, 2}, {Family::A, 1}}));
    EXPECT_EQ(analyze(b4, ParabolicSubset({4})).levi_type, types({{Family::A, 1}}));
    EXPECT_EQ(analyze(c4, ParabolicSubset({4})).levi_type, types({{Family::A, 1}}));
    EXPECT_EQ(analyze(d5, ParabolicSubset({2, 3, 4, 5})).levi_type, types({{Family::D, 4}}));
    EXPECT_EQ(analyze(d5, ParabolicSubset({4, 5})).levi_type, types({{Family::A, 1}, {Family::A, 1}}));
    EXPECT_EQ(analyze(d5, ParabolicSubset({3, 4, 5})).levi_type, types({{Family::A, 3}}));
    EXPECT_EQ(analyze(d5, ParabolicSubset({1, 2, 3, 4})).levi_type, types({{Family::A, 4}}));
    EXPECT_EQ(to_string(analyze(d5, ParabolicSubset({1, 4, 5})).levi_type), "A1+A1+A1");
}

TEST(Parabolic, Dominance) {
    Rational half(1, 2);
    for (Rational d : {Rational(0), Rational(5, 3), Rational(-2)})
        EXPECT_TRUE(is_ps_dominant(Weight({1, 1 - d - 1, 1}), ParabolicSubset({1, 3})));
    for (int nu = 1; nu <= 4; ++nu)
        EXPECT_TRUE(is_ps_dominant(Weight({-7, nu - 1, -3}), ParabolicSubset({2})));
    EXPECT_FALSE(is_ps_dominant(Weight({0, -1, 0}), ParabolicSubset({2})));
    EXPECT_FALSE(is_ps_dominant(Weight({half, 0, 0}), ParabolicSubset({1})));
    EXPECT_EQ(dominance_violation(Weight({0, 0, -1}), ParabolicSubset({1, 3})), 3);
}

TEST(Parabolic, PvmReducibility) {
    auto hits = pvm_reducibility_set(a3(), ParabolicSubset({1, 3}), Weight::zero(3));
    ASSERT_EQ(hits.size(), 4u);
    std::vector<std::string> names;
    std::vector<Integer> ms;
    for (const auto& h : hits) {
        names.push_back(root_name(h.hit.beta));
        ms.push_back(h.hit.m);
    }
    EXPECT_EQ(names, (std::vector<std::string>{"a2", "a1+a2", "a2+a3", "a1+a2+a3"}));
    EXPECT_EQ(ms, (std::vector<Integer>{1, 2, 2, 3}));

    // S = J leaves nothing
    EXPECT_TRUE(pvm_reducibility_set(a3(), ParabolicSubset::full(3), Weight({2, 0, 1})).empty());

    // S = {} is the Verma case
    for (auto w : {Weight::zero(3), Weight({0, Rational(-1, 2), 0}), Weight({1, -3, 2})}) {
        auto pvm = pvm_reducibility_set(a3(), ParabolicSubset{}, w);
        auto verma = reducibility_set(a3(), w);
        ASSERT_EQ(pvm.size(), verma.size());
        for (std::size_t i = 0; i < pvm.size(); ++i) {
            EXPECT_EQ(pvm[i].hit, verma[i]);
            EXPECT_TRUE(pvm[i].target_dominant);
        }
    }
}

TEST(Parabolic, Errors) {
    EXPECT_THROW(analyze(a3(), ParabolicSubset({4})), PreconditionError);
    EXPECT_THROW(ParabolicSubset({0, 1}), PreconditionError);
    try {
        pvm_reducibility_set(a3(), ParabolicSubset({1, 3}), Weight({0, 0, Rational(-1, 2)}));
        FAIL() << "expected a precondition error";
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("index 3"), std::string::npos) << e.what();
    }
    EXPECT_EQ(ParabolicSubset({3, 1, 3}).indices(), (std::vector<int>{1, 3}));
    EXPECT_EQ(ParabolicSubset::range(1, 7, 2).indices(), (std::vector<int>{1, 3, 5, 7}));
    EXPECT_TRUE(ParabolicSubset::range(4, 3).empty());
}
