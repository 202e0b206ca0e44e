#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pvm/parabolic.hpp"
#include "pvm/rootsys.hpp"

namespace pvm {

enum class RealFamily {
    SlR,      // sl(n,R), split
    SoRR,     // so(r,r), split
    SoR1R,    // so(r+1,r), split
    SpR,      // sp(n,R), split
    SuNN,     // su(n,n)
    SuStar,   // su*(2n)
    SuPR,     // su(p,r), p > r
    SoPR,     // so(p,r), p > r+1
    SpPR,     // sp(p,r), p >= r
    SoStar,   // so*(2n)
};

// One summand of the compact-ish part m0, e.g. su(2) or u(1).
struct M0Component {
    enum class Kind { su, so, sp, u };
    Kind kind;
    int n;

    std::string name() const {
        switch (kind) {
        case Kind::su: return "su(" + std::to_string(n) + ")";
        case Kind::so: return "so(" + std::to_string(n) + ")";
        case Kind::sp: return "sp(" + std::to_string(n) + ")";
        case Kind::u: return "u(" + std::to_string(n) + ")";
        }
        return "?";
    }

    friend bool operator==(const M0Component&, const M0Component&) = default;
};

// Complexified simple factors of a compact summand, in A-normal form for the
// low-rank coincidences. Abelian summands return nothing.
inline std::vector<LieType> complexified_type(const M0Component& c) {
    using K = M0Component::Kind;
    switch (c.kind) {
    case K::u: return {};
    case K::su:
        if (c.n <= 1)
            return {};
        return {LieType(Family::A, c.n - 1)};
    case K::sp:
        if (c.n == 1)
            return {LieType(Family::A, 1)};
        return {LieType(Family::C, c.n)};
    case K::so:
        if (c.n <= 2)
            return {};
        if (c.n == 3)
            return {LieType(Family::A, 1)};
        if (c.n == 4)
            return {LieType(Family::A, 1), LieType(Family::A, 1)};
        if (c.n == 6)
            return {LieType(Family::A, 3)};
        if (c.n % 2 == 1)
            return {LieType(Family::B, (c.n - 1) / 2)};
        return {LieType(Family::D, c.n / 2)};
    }
    return {};
}

inline bool is_abelian(const M0Component& c) {
    return c.kind == M0Component::Kind::u || (c.kind == M0Component::Kind::so && c.n == 2);
}

struct RealFormSpec {
    RealFamily family;
    std::string name;
    std::vector<int> params;
    std::vector<M0Component> m0;
    int dim_a0 = 0;
    int dim_n0 = 0;
    LieType complex_type{Family::A, 1};
    ParabolicSubset complex_subset;
    // False when dim n0 is inferred from the split (Borel) property rather than
    // given by a closed form.
    bool n0_closed_form = true;

    std::vector<LieType> m0_semisimple_types() const {
        std::vector<LieType> out;
        for (const auto& c : m0)
            for (auto t : complexified_type(c))
                out.push_back(t);
        std::sort(out.begin(), out.end());
        return out;
    }

    int m0_abelian_count() const {
        return static_cast<int>(std::count_if(m0.begin(), m0.end(), is_abelian));
    }

    std::string m0_name() const {
        if (m0.empty())
            return "0";
        std::string out;
        for (std::size_t i = 0; i < m0.size(); ++i) {
            if (i)
                out += "+";
            out += m0[i].name();
        }
        return out;
    }
};

// Index sets of the complexified minimal parabolic for the generic families.
// so(p,r) with p - r = 2 has m0 = so(2), abelian, so the tail segment is empty.
inline ParabolicSubset su_pr_subset(int p, int r) { return ParabolicSubset::range(r + 1, p - 1); }

inline ParabolicSubset so_pr_subset(int p, int r) {
    if (p - r == 2)
        return {};
    return ParabolicSubset::range(r + 1, (p + r) / 2);
}

inline LieType so_complex_type(int p, int r) {
    int n = p + r;
    return n % 2 == 0 ? LieType(Family::D, n / 2) : LieType(Family::B, (n - 1) / 2);
}

namespace detail {

using M0 = std::vector<M0Component>;
using K = M0Component::Kind;

inline M0 repeat(M0Component c, int times) { return M0(static_cast<std::size_t>(std::max(times, 0)), c); }

inline M0 concat(M0 a, const M0& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline void require(bool ok, const std::string& rule) {
    if (!ok)
        throw PreconditionError(rule);
}

inline int split_rank_count(const LieType& t) { return static_cast<int>(expected_positive_root_count(t)); }

// One declarative record per family.
struct FamilyRecord {
    RealFamily family;
    const char* token;
    std::size_t arity;
    std::function<void(std::span<const int>)> validate;
    std::function<std::string(std::span<const int>)> name;
    std::function<LieType(std::span<const int>)> complex_type;
    std::function<M0(std::span<const int>)> m0;
    std::function<int(std::span<const int>)> dim_a0;
    std::function<std::optional<int>(std::span<const int>)> dim_n0; // nullopt: inferred from |Delta+|
    std::function<ParabolicSubset(std::span<const int>)> subset;
};

inline std::string s(int x) { return std::to_string(x); }

inline const std::vector<FamilyRecord>& family_records() {
    static const std::vector<FamilyRecord> records = {
        {RealFamily::SlR, "sl", 1,
         [](auto v) { require(v[0] >= 2, "sl(n,R) requires n >= 2"); },
         [](auto v) { return "sl(" + s(v[0]) + ",R)"; },
         [](auto v) { return LieType(Family::A, v[0] - 1); },
         [](auto) { return M0{}; },
         [](auto v) { return v[0] - 1; },
         [](auto) { return std::optional<int>{}; },
         [](auto) { return ParabolicSubset{}; }},
        {RealFamily::SoRR, "so", 2,
         [](auto v) { require(v[0] == v[1] && v[1] >= 2, "so(r,r) requires r >= 2"); },
         [](auto v) { return "so(" + s(v[0]) + "," + s(v[1]) + ")"; },
         [](auto v) { return LieType(Family::D, v[1]); },
         [](auto) { return M0{}; },
         [](auto v) { return v[1]; },
         [](auto) { return std::optional<int>{}; },
         [](auto) { return ParabolicSubset{}; }},
        {RealFamily::SoR1R, "so", 2,
         [](auto v) { require(v[0] == v[1] + 1 && v[1] >= 1, "so(r+1,r) requires r >= 1"); },
         [](auto v) { return "so(" + s(v[0]) + "," + s(v[1]) + ")"; },
         [](auto v) { return LieType(Family::B, v[1]); },
         [](auto) { return M0{}; },
         [](auto v) { return v[1]; },
         [](auto) { return std::optional<int>{}; },
         [](auto) { return ParabolicSubset{}; }},
        {RealFamily::SpR, "sp", 1,
         [](auto v) { require(v[0] >= 1, "sp(n,R) requires n >= 1"); },
         [](auto v) { return "sp(" + s(v[0]) + ",R)"; },
         [](auto v) { return LieType(Family::C, v[0]); },
         [](auto) { return M0{}; },
         [](auto v) { return v[0]; },
         [](auto) { return std::optional<int>{}; },
         [](auto) { return ParabolicSubset{}; }},
        {RealFamily::SuNN, "su", 2,
         [](auto v) { require(v[0] == v[1] && v[0] > 1, "su(n,n) requires n > 1"); },
         [](auto v) { return "su(" + s(v[0]) + "," + s(v[1]) + ")"; },
         [](auto v) { return LieType(Family::A, 2 * v[0] - 1); },
         [](auto v) { return repeat({K::u, 1}, v[0] - 1); },
         [](auto v) { return v[0]; },
         [](auto v) { return std::optional<int>(v[0] * (2 * v[0] - 1)); },
         [](auto) { return ParabolicSubset{}; }},
        {RealFamily::SuStar, "su*", 1,
         [](auto v) { require(v[0] % 2 == 0 && v[0] / 2 > 1, "su*(2n) requires an even argument 2n with n > 1"); },
         [](auto v) { return "su*(" + s(v[0]) + ")"; },
         [](auto v) { return LieType(Family::A, v[0] - 1); },
         [](auto v) { return repeat({K::su, 2}, v[0] / 2); },
         [](auto v) { return v[0] / 2 - 1; },
         [](auto v) { int n = v[0] / 2; return std::optional<int>(2 * n * (n - 1)); },
         [](auto v) { return ParabolicSubset::range(1, v[0] - 1, 2); }},
        {RealFamily::SuPR, "su", 2,
         [](auto v) { require(v[0] > v[1] && v[1] >= 1, "su(p,r) requires p > r >= 1"); },
         [](auto v) { return "su(" + s(v[0]) + "," + s(v[1]) + ")"; },
         [](auto v) { return LieType(Family::A, v[0] + v[1] - 1); },
         [](auto v) { return concat(M0{{K::su, v[0] - v[1]}}, repeat({K::u, 1}, v[1])); },
         [](auto v) { return v[1]; },
         [](auto v) { return std::optional<int>(v[1] * (2 * v[0] - 1)); },
         [](auto v) { return su_pr_subset(v[0], v[1]); }},
        {RealFamily::SoPR, "so", 2,
         [](auto v) { require(v[0] > v[1] + 1 && v[1] >= 1, "so(p,r) requires p > r+1 and r >= 1"); },
         [](auto v) { return "so(" + s(v[0]) + "," + s(v[1]) + ")"; },
         [](auto v) { return so_complex_type(v[0], v[1]); },
         [](auto v) { return M0{{K::so, v[0] - v[1]}}; },
         [](auto v) { return v[1]; },
         [](auto v) { return std::optional<int>(v[1] * (v[0] - 1)); },
         [](auto v) { return so_pr_subset(v[0], v[1]); }},
        {RealFamily::SpPR, "sp", 2,
         [](auto v) { require(v[0] >= v[1] && v[1] >= 1, "sp(p,r) requires p >= r >= 1"); },
         [](auto v) { return "sp(" + s(v[0]) + "," + s(v[1]) + ")"; },
         [](auto v) { return LieType(Family::C, v[0] + v[1]); },
         [](auto v) {
             M0 m = v[0] > v[1] ? M0{{K::sp, v[0] - v[1]}} : M0{};
             return concat(m, repeat({K::sp, 1}, v[1]));
         },
         [](auto v) { return v[1]; },
         [](auto v) { return std::optional<int>(v[1] * (4 * v[0] - 1)); },
         [](auto v) {
             auto odd = ParabolicSubset::range(1, 2 * v[1] - 1, 2);
             if (v[0] == v[1])
                 return odd;
             return odd.united(ParabolicSubset::range(2 * v[1] + 1, v[0] + v[1]));
         }},
        {RealFamily::SoStar, "so*", 1,
         [](auto v) { require(v[0] % 2 == 0 && v[0] / 2 >= 2, "so*(2n) requires an even argument 2n with n >= 2"); },
         [](auto v) { return "so*(" + s(v[0]) + ")"; },
         [](auto v) { return LieType(Family::D, v[0] / 2); },
         [](auto v) {
             int n = v[0] / 2, r = n / 2;
             M0 m = n % 2 == 0 ? M0{} : M0{{K::so, 2}};
             return concat(m, repeat({K::so, 3}, r));
         },
         [](auto v) { return v[0] / 2 / 2; },
         [](auto v) {
             int n = v[0] / 2, r = n / 2;
             return std::optional<int>(n % 2 == 0 ? r * (4 * r - 3) : r * (4 * r + 1));
         },
         [](auto v) {
             int n = v[0] / 2;
             return ParabolicSubset::range(1, n % 2 == 0 ? n - 1 : n - 2, 2);
         }},
    };
    return records;
}

inline const FamilyRecord& record_for(RealFamily f) {
    for (const auto& r : family_records())
        if (r.family == f)
            return r;
    throw InternalError("no catalog record for real family");
}

} // namespace detail

// Minimal-parabolic data of a classical real form and the parabolic subset S
// of the complexification with p0^C = P_S.
inline RealFormSpec minimal_parabolic(RealFamily family, std::vector<int> params) {
    const auto& rec = detail::record_for(family);
    if (params.size() != rec.arity)
        throw PreconditionError(std::string(rec.token) + " expects " + std::to_string(rec.arity) + " parameter(s)");
    rec.validate(params);
    RealFormSpec spec;
    spec.family = family;
    spec.name = rec.name(params);
    spec.params = params;
    spec.m0 = rec.m0(params);
    spec.dim_a0 = rec.dim_a0(params);
    spec.complex_type = rec.complex_type(params);
    spec.complex_subset = rec.subset(params);
    if (auto n0 = rec.dim_n0(params)) {
        spec.dim_n0 = *n0;
    } else {
        spec.dim_n0 = detail::split_rank_count(spec.complex_type);
        spec.n0_closed_form = false;
    }
    return spec;
}

// Resolves a family token and its parameters, e.g. ("su", {2, 2}) -> su(2,2),
// ("so", {4, 3}) -> so(r+1,r), ("sp", {3}) -> sp(3,R), ("su*", {4}) -> su*(4).
inline RealFormSpec minimal_parabolic(std::string_view token, std::vector<int> params) {
    auto pick = [&]() -> RealFamily {
        if (token == "sl" && params.size() == 1)
            return RealFamily::SlR;
        if (token == "su*" && params.size() == 1)
            return RealFamily::SuStar;
        if (token == "so*" && params.size() == 1)
            return RealFamily::SoStar;
        if (token == "sp" && params.size() == 1)
            return RealFamily::SpR;
        if (token == "sp" && params.size() == 2)
            return RealFamily::SpPR;
        if (token == "su" && params.size() == 2)
            return params[0] == params[1] ? RealFamily::SuNN : RealFamily::SuPR;
        if (token == "so" && params.size() == 2) {
            if (params[0] == params[1])
                return RealFamily::SoRR;
            if (params[0] == params[1] + 1)
                return RealFamily::SoR1R;
            return RealFamily::SoPR;
        }
        throw ParseError("unknown real form '" + std::string(token) + "' with " + std::to_string(params.size()) +
                         " parameter(s); expected sl n | sp n | su p r | so p r | sp p r | su* 2n | so* 2n");
    };
    RealFamily family = pick();
    return minimal_parabolic(family, std::move(params));
}

struct VerificationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    RealFormSpec spec;
    ParabolicData parabolic;
    std::vector<VerificationCheck> checks;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    }
};

// Cross-checks the closed-form data against the parabolic subalgebra P_S of
// the complexification.
inline VerificationReport verify(const RealFormSpec& spec) {
    RootSystem rs(spec.complex_type);
    VerificationReport report{spec, analyze(rs, spec.complex_subset), {}};
    const auto& pd = report.parabolic;

    {
        auto derived = static_cast<int>(pd.nilradical_dim());
        report.checks.push_back({"nilradical_dimension", derived == spec.dim_n0,
                                 "dim n0 = " + std::to_string(spec.dim_n0) + ", |Delta+(S)| = " +
                                     std::to_string(derived)});
    }
    {
        auto m0_types = spec.m0_semisimple_types();
        int abelian = spec.m0_abelian_count();
        bool types_match = m0_types == pd.levi_type;
        bool center_match = pd.center_rank == spec.dim_a0 + abelian;
        bool rank_match = spec.dim_a0 + semisimple_rank(m0_types) + abelian == rs.rank();
        report.checks.push_back(
            {"levi_type", types_match && center_match && rank_match,
             "m0^C semisimple = " + to_string(m0_types) + ", g_S = " + to_string(pd.levi_type) +
                 "; center rank " + std::to_string(pd.center_rank) + " vs dim a0 + abelian = " +
                 std::to_string(spec.dim_a0 + abelian) + "; rank " + std::to_string(rs.rank())});
    }
    {
        bool ok = true;
        std::string detail = "not a split-type family";
        switch (spec.family) {
        case RealFamily::SlR:
        case RealFamily::SpR:
            ok = spec.complex_subset.empty() && spec.m0.empty();
            detail = "split: S = " + to_string(spec.complex_subset) + ", m0 = " + spec.m0_name();
            break;
        case RealFamily::SoRR:
        case RealFamily::SoR1R: {
            auto generic = so_pr_subset(spec.params[0], spec.params[1]);
            ok = spec.complex_subset.empty() && spec.m0.empty() && generic.empty() &&
                 so_complex_type(spec.params[0], spec.params[1]) == spec.complex_type;
            detail = "split: generic so(p,r) subset = " + to_string(generic) + ", m0 = " + spec.m0_name();
            break;
        }
        case RealFamily::SuNN: {
            auto generic = su_pr_subset(spec.params[0], spec.params[1]);
            ok = spec.complex_subset.empty() && generic.empty();
            detail = "generic su(p,r) subset = " + to_string(generic);
            break;
        }
        default:
            break;
        }
        report.checks.push_back({"split_consistency", ok, detail});
    }
    return report;
}

// Every catalog instance whose complexification has rank <= max_rank, in
// family order then parameter order.
inline std::vector<RealFormSpec> catalog_grid(int max_rank) {
    std::vector<RealFormSpec> out;
    auto rank_ok = [&](const RealFormSpec& s) { return s.complex_type.rank() <= max_rank; };
    auto try_add = [&](RealFamily f, std::vector<int> params) {
        try {
            auto s = minimal_parabolic(f, std::move(params));
            if (rank_ok(s))
                out.push_back(std::move(s));
        } catch (const PreconditionError&) {
        }
    };
    const int big = 2 * max_rank + 2;
    for (int n = 2; n <= max_rank + 1; ++n)
        try_add(RealFamily::SlR, {n});
    for (int r = 2; r <= max_rank; ++r)
        try_add(RealFamily::SoRR, {r, r});
    for (int r = 1; r <= max_rank; ++r)
        try_add(RealFamily::SoR1R, {r + 1, r});
    for (int n = 1; n <= max_rank; ++n)
        try_add(RealFamily::SpR, {n});
    for (int n = 2; 2 * n - 1 <= max_rank; ++n)
        try_add(RealFamily::SuNN, {n, n});
    for (int n = 2; 2 * n - 1 <= max_rank; ++n)
        try_add(RealFamily::SuStar, {2 * n});
    for (int p = 2; p <= big; ++p)
        for (int r = 1; r < p; ++r)
            try_add(RealFamily::SuPR, {p, r});
    for (int p = 3; p <= big; ++p)
        for (int r = 1; r + 1 < p; ++r)
            try_add(RealFamily::SoPR, {p, r});
    for (int p = 1; p <= big; ++p)
        for (int r = 1; r <= p; ++r)
            try_add(RealFamily::SpPR, {p, r});
    for (int n = 2; n <= max_rank; ++n)
        try_add(RealFamily::SoStar, {2 * n});
    return out;
}

} // namespace pvm
