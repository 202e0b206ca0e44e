#pragma once

#include <string>
#include <vector>

#include "pvm/rational.hpp"
#include "pvm/rootsys.hpp"

namespace pvm {

// A weight in Dynkin-label coordinates: labels[i] = Lambda(h_i).
// rho is never stored; it is the weight with every label equal to 1.
class Weight {
public:
    Weight() = default;
    explicit Weight(RationalVector labels) : labels_(std::move(labels)) {}

    static Weight zero(int rank) { return Weight(RationalVector(static_cast<std::size_t>(rank), 0)); }

    const RationalVector& labels() const { return labels_; }
    const Rational& operator[](std::size_t i) const { return labels_[i]; }
    int rank() const { return static_cast<int>(labels_.size()); }

    // Labels of Lambda + rho.
    RationalVector shifted_labels() const {
        RationalVector out = labels_;
        for (auto& x : out)
            x += 1;
        return out;
    }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend bool operator<(const Weight& a, const Weight& b) { return a.labels_ < b.labels_; }

private:
    RationalVector labels_;
};

inline std::string to_string(const Weight& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.labels().size(); ++i) {
        if (i)
            out += ",";
        out += to_string(w[i]);
    }
    return out + ")";
}

// A Verma-module embedding datum: (Lambda + rho, beta^vee) = m with m in {1, 2, ...}.
struct ReducibilityHit {
    Root beta;
    Integer m;

    friend bool operator==(const ReducibilityHit&, const ReducibilityHit&) = default;
};

inline void check_weight(const RootSystem& rs, const Weight& w) { rs.check_length(w.labels().size()); }

// Harish-Chandra parameter (Lambda + rho, beta^vee).
inline Rational hc_parameter(const RootSystem& rs, const Weight& lambda, const Root& beta) {
    check_weight(rs, lambda);
    rs.require_positive_root(beta);
    auto c = rs.coroot_in_simple_coroots(beta);
    Rational s = 0;
    for (int i = 0; i < rs.rank(); ++i)
        if (c[i] != 0)
            s += c[i] * (lambda[i] + 1);
    return s;
}

// (Lambda + rho, beta) with the symmetric form normalized so short roots have
// squared length 2. Agrees with hc_parameter whenever (beta, beta) = 2.
inline Rational raw_hc_parameter(const RootSystem& rs, const Weight& lambda, const Root& beta) {
    check_weight(rs, lambda);
    rs.require_positive_root(beta);
    Rational s = 0;
    for (int i = 0; i < rs.rank(); ++i)
        if (beta[i] != 0)
            s += beta[i] * rs.symmetrizer()[i] * (lambda[i] + 1);
    return s;
}

// All six (or |Delta+|) parameters in canonical root order.
inline RationalVector hc_parameters(const RootSystem& rs, const Weight& lambda) {
    RationalVector out;
    out.reserve(rs.positive_roots().size());
    for (const auto& beta : rs.positive_roots())
        out.push_back(hc_parameter(rs, lambda, beta));
    return out;
}

// Every positive root at which the Verma module V^Lambda is reducible.
// Empty exactly when V^Lambda is irreducible.
inline std::vector<ReducibilityHit> reducibility_set(const RootSystem& rs, const Weight& lambda) {
    std::vector<ReducibilityHit> hits;
    for (const auto& beta : rs.positive_roots()) {
        Rational m = hc_parameter(rs, lambda, beta);
        if (is_natural(m))
            hits.push_back({beta, numerator(m)});
    }
    return hits;
}

// Lambda - m beta in Dynkin labels.
inline Weight shift(const RootSystem& rs, const Weight& lambda, const ReducibilityHit& hit) {
    check_weight(rs, lambda);
    auto beta_labels = rs.root_labels(hit.beta);
    RationalVector out = lambda.labels();
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= Rational(hit.m * beta_labels[i]);
    return Weight(std::move(out));
}

inline bool is_dominant_integral(const Weight& w) {
    for (const auto& x : w.labels())
        if (!is_nonneg_integer(x))
            return false;
    return true;
}

} // namespace pvm
