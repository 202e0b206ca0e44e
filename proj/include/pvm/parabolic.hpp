#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pvm/rootsys.hpp"
#include "pvm/weights.hpp"

namespace pvm {

// A set S of simple-root indices, 1-based as in the usual Dynkin numbering.
class ParabolicSubset {
public:
    ParabolicSubset() = default;
    explicit ParabolicSubset(std::vector<int> indices) : indices_(std::move(indices)) {
        std::sort(indices_.begin(), indices_.end());
        indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
        if (!indices_.empty() && indices_.front() < 1)
            throw PreconditionError("parabolic index " + std::to_string(indices_.front()) + " is below 1");
    }

    // {first, first+step, ..., <= last}; empty when first > last.
    static ParabolicSubset range(int first, int last, int step = 1) {
        std::vector<int> v;
        for (int i = first; i <= last; i += step)
            v.push_back(i);
        return ParabolicSubset(std::move(v));
    }

    static ParabolicSubset full(int rank) { return range(1, rank); }

    const std::vector<int>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    bool contains(int index) const { return std::binary_search(indices_.begin(), indices_.end(), index); }

    void check(int rank) const {
        if (!indices_.empty() && indices_.back() > rank)
            throw PreconditionError("parabolic index " + std::to_string(indices_.back()) +
                                    " exceeds rank " + std::to_string(rank));
    }

    // Support of a root lies inside S.
    bool covers(const Root& r) const {
        for (int i : r.support())
            if (!contains(i + 1))
                return false;
        return true;
    }

    ParabolicSubset united(const ParabolicSubset& other) const {
        std::vector<int> v = indices_;
        v.insert(v.end(), other.indices_.begin(), other.indices_.end());
        return ParabolicSubset(std::move(v));
    }

    friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;

private:
    std::vector<int> indices_;
};

inline std::string to_string(const ParabolicSubset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.indices().size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s.indices()[i]);
    }
    return out + "}";
}

// Dynkin types of the connected components of the subdiagram on `nodes`
// (1-based), sorted. Rank-1 components are A1; the orientation of a double
// bond decides between B and C; D2 and D3 shapes come out as A1+A1 and A3.
inline std::vector<LieType> classify_subdiagram(const RootSystem& rs, const ParabolicSubset& nodes) {
    nodes.check(rs.rank());
    std::vector<LieType> out;
    std::vector<bool> seen(static_cast<std::size_t>(rs.rank()), false);
    auto adjacent = [&](int i, int j) { return i != j && rs.cartan(i, j) != 0; };
    for (int start : nodes.indices()) {
        int s0 = start - 1;
        if (seen[s0])
            continue;
        std::vector<int> comp{s0};
        seen[s0] = true;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (int j : nodes.indices())
                if (!seen[j - 1] && adjacent(comp[k], j - 1)) {
                    seen[j - 1] = true;
                    comp.push_back(j - 1);
                }
        std::sort(comp.begin(), comp.end());
        const int n = static_cast<int>(comp.size());
        if (n == 1) {
            out.emplace_back(Family::A, 1);
            continue;
        }
        bool double_bond = false;
        bool branch = false;
        for (int i : comp) {
            int degree = 0;
            for (int j : comp) {
                if (!adjacent(i, j))
                    continue;
                ++degree;
                if (rs.cartan(i, j) * rs.cartan(j, i) == 2)
                    double_bond = true;
                else if (rs.cartan(i, j) * rs.cartan(j, i) != 1)
                    throw InternalError("unsupported bond in " + rs.lie_type().name());
            }
            if (degree >= 3)
                branch = true;
        }
        if (double_bond) {
            // The double bond sits at the end of the chain, between the two
            // highest-numbered nodes.
            int last = comp.back();
            int prev = comp[comp.size() - 2];
            bool last_short = rs.symmetrizer()[last] < rs.symmetrizer()[prev];
            out.emplace_back(last_short ? Family::B : Family::C, n);
        } else {
            out.emplace_back(branch ? Family::D : Family::A, n);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string to_string(const std::vector<LieType>& types) {
    if (types.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (i)
            out += "+";
        out += types[i].name();
    }
    return out;
}

inline int semisimple_rank(const std::vector<LieType>& types) {
    int r = 0;
    for (const auto& t : types)
        r += t.rank();
    return r;
}

struct ParabolicData {
    ParabolicSubset subset;
    std::vector<Root> levi_roots;       // Delta^S_+
    std::vector<Root> nilradical_roots; // Delta_+(S)
    std::vector<LieType> levi_type;
    int center_rank = 0;

    std::size_t levi_dim() const { return levi_roots.size(); }
    std::size_t nilradical_dim() const { return nilradical_roots.size(); }
};

// Splits Delta_+ by support into the Levi part (support inside S) and the
// nilradical part.
inline ParabolicData analyze(const RootSystem& rs, const ParabolicSubset& subset) {
    subset.check(rs.rank());
    ParabolicData data;
    data.subset = subset;
    for (const auto& beta : rs.positive_roots()) {
        if (subset.covers(beta))
            data.levi_roots.push_back(beta);
        else
            data.nilradical_roots.push_back(beta);
    }
    data.levi_type = classify_subdiagram(rs, subset);
    data.center_rank = rs.rank() - static_cast<int>(subset.size());
    return data;
}

// All 2^rank subsets ordered by size, then lexicographically.
inline std::vector<ParabolicSubset> all_subsets(int rank) {
    if (rank > 24)
        throw PreconditionError("refusing to enumerate 2^" + std::to_string(rank) + " subsets");
    std::vector<ParabolicSubset> out;
    for (std::uint32_t mask = 0; mask < (1u << rank); ++mask) {
        std::vector<int> v;
        for (int i = 0; i < rank; ++i)
            if (mask & (1u << i))
                v.push_back(i + 1);
        out.emplace_back(std::move(v));
    }
    std::stable_sort(out.begin(), out.end(), [](const ParabolicSubset& a, const ParabolicSubset& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.indices() < b.indices();
    });
    return out;
}

inline std::vector<ParabolicData> enumerate_all(const RootSystem& rs) {
    std::vector<ParabolicData> out;
    for (const auto& s : all_subsets(rs.rank()))
        out.push_back(analyze(rs, s));
    return out;
}

// First index i in S (1-based) with Lambda(h_i) not in {0, 1, 2, ...}.
inline std::optional<int> dominance_violation(const Weight& lambda, const ParabolicSubset& subset) {
    subset.check(lambda.rank());
    for (int i : subset.indices())
        if (!is_nonneg_integer(lambda[static_cast<std::size_t>(i - 1)]))
            return i;
    return std::nullopt;
}

// Membership of Lambda in P_S.
inline bool is_ps_dominant(const Weight& lambda, const ParabolicSubset& subset) {
    return !dominance_violation(lambda, subset).has_value();
}

struct PvmHit {
    ReducibilityHit hit;
    Weight target;
    bool target_dominant = false;
};

// Reducibility of the parabolic Verma module: the BGG hits restricted to
// Delta_+(S), each with its shifted weight and whether that stays in P_S.
inline std::vector<PvmHit> pvm_reducibility_set(const RootSystem& rs, const ParabolicSubset& subset,
                                                const Weight& lambda) {
    check_weight(rs, lambda);
    subset.check(rs.rank());
    if (auto bad = dominance_violation(lambda, subset))
        throw PreconditionError("weight " + to_string(lambda) + " is not P_S-dominant at index " +
                                std::to_string(*bad) + " (label " +
                                to_string(lambda[static_cast<std::size_t>(*bad - 1)]) + ")");
    std::vector<PvmHit> out;
    for (auto& hit : reducibility_set(rs, lambda)) {
        if (subset.covers(hit.beta))
            continue;
        Weight target = shift(rs, lambda, hit);
        bool dom = is_ps_dominant(target, subset);
        out.push_back({std::move(hit), std::move(target), dom});
    }
    return out;
}

} // namespace pvm
