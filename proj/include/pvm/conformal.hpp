#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "pvm/parabolic.hpp"
#include "pvm/rational.hpp"
#include "pvm/rootsys.hpp"
#include "pvm/weights.hpp"

// The conformal algebra su(2,2) ~ so(4,2), complexification sl(4) = A3.
namespace pvm::conformal {

inline const RootSystem& a3() {
    static const RootSystem rs(LieType(Family::A, 3));
    return rs;
}

// Harish-Chandra parameters in canonical A3 order:
// m1, m2, m3, m12, m23, m13.
using HcSix = std::array<Rational, 6>;

// ER signature [j1, j2; d] for the maximal non-cuspidal parabolic.
struct SignatureNC {
    Rational j1;
    Rational j2;
    Rational d;

    SignatureNC(Rational j1_, Rational j2_, Rational d_) : j1(std::move(j1_)), j2(std::move(j2_)), d(std::move(d_)) {
        if (!is_nonneg_integer(2 * j1) || !is_nonneg_integer(2 * j2))
            throw PreconditionError("j1 and j2 must be non-negative half-integers");
    }
};

// ER signature {n', k, eps, nu'} for the maximal cuspidal parabolic.
// eps only labels the discrete-series representation and enters no formula.
struct SignatureCusp {
    Integer n_prime;
    Integer k;
    int eps;
    Rational nu_prime;

    SignatureCusp(Integer n_prime_, Integer k_, int eps_, Rational nu_prime_)
        : n_prime(std::move(n_prime_)), k(std::move(k_)), eps(eps_), nu_prime(std::move(nu_prime_)) {
        if (eps != 1 && eps != -1)
            throw PreconditionError("eps must be +1 or -1");
        if (k < 0)
            throw PreconditionError("k must be non-negative");
        // Parity guard: with integral nu' the labels must be integral.
        if (is_integer(nu_prime)) {
            Rational s = Rational(k) - nu_prime + Rational(n_prime);
            if (numerator(s) % 2 != 0)
                throw PreconditionError("k - nu' + n' must be even when nu' is an integer");
        }
    }
};

// Positive integers (p, nu, n) labelling the integral cuspidal case.
struct CuspTriple {
    Integer p;
    Integer nu;
    Integer n;

    CuspTriple(Integer p_, Integer nu_, Integer n_) : p(std::move(p_)), nu(std::move(nu_)), n(std::move(n_)) {
        if (p <= 0 || nu <= 0 || n <= 0)
            throw PreconditionError("p, nu and n must be positive integers");
    }
};

inline ParabolicSubset noncuspidal_subset() { return ParabolicSubset({1, 3}); }
inline ParabolicSubset cuspidal_subset() { return ParabolicSubset({2}); }

inline Weight weight_nc(const SignatureNC& s) {
    return Weight({2 * s.j1, 1 - s.d - s.j1 - s.j2, 2 * s.j2});
}

inline HcSix hc_nc(const SignatureNC& s) {
    return {2 * s.j1 + 1,
            2 - s.d - s.j1 - s.j2,
            2 * s.j2 + 1,
            3 - s.d + s.j1 - s.j2,
            3 - s.d - s.j1 + s.j2,
            4 - s.d + s.j1 + s.j2};
}

// Dynkin labels (m1, m2, m3) of Lambda + rho.
inline std::array<Rational, 3> dynkin_cusp(const SignatureCusp& s) {
    Rational k(s.k), n(s.n_prime);
    return {(k - s.nu_prime + n) / 2, -k, (k - s.nu_prime - n) / 2};
}

// Companion parameters (m12, m23, m13).
inline std::array<Rational, 3> harish_chandra_cusp(const SignatureCusp& s) {
    Rational k(s.k), n(s.n_prime);
    auto m = dynkin_cusp(s);
    std::array<Rational, 3> out{(n - k - s.nu_prime) / 2, -(k + s.nu_prime + n) / 2, -s.nu_prime};
    if (out[0] != m[0] + m[1] || out[1] != m[1] + m[2] || out[2] != m[0] + m[1] + m[2])
        throw InternalError("cuspidal Harish-Chandra parameters are not additive");
    return out;
}

inline HcSix hc_cusp(const SignatureCusp& s) {
    auto m = dynkin_cusp(s);
    auto c = harish_chandra_cusp(s);
    return {m[0], m[1], m[2], c[0], c[1], c[2]};
}

inline Weight weight_cusp(const SignatureCusp& s) {
    auto m = dynkin_cusp(s);
    return Weight({m[0] - 1, m[1] - 1, m[2] - 1});
}

inline Weight weight_cusp_triple(const CuspTriple& t) {
    Rational p(t.p), nu(t.nu), n(t.n);
    return Weight({-p - nu - 1, nu - 1, -n - nu - 1});
}

// (m1, m2, m3, m12, m23, m13) = (-p-nu, nu, -n-nu, -p, -n, -p-n-nu).
inline HcSix hc_cusp_triple(const CuspTriple& t) {
    Rational p(t.p), nu(t.nu), n(t.n);
    return {-p - nu, nu, -n - nu, -p, -n, -p - n - nu};
}

inline HcSix hc_from_weight(const Weight& w) {
    const auto& rs = a3();
    HcSix out;
    for (std::size_t i = 0; i < 6; ++i)
        out[i] = hc_parameter(rs, w, rs.positive_roots()[i]);
    return out;
}

struct RealParabolicRow {
    std::string name;
    std::string m;        // real form of the m factor
    std::string m_complex;
    int m_abelian = 0;    // number of abelian summands of m
    int dim_a = 0;
    int dim_n = 0;
    std::string kind;     // minimal, maximal cuspidal, maximal noncuspidal
    bool cuspidal = false;
    ParabolicSubset subset;
    int derived_dim_n = 0;  // |Delta+(S)|
    int derived_dim_a = 0;  // center rank of P_S minus abelian summands of m
};

// The three non-conjugate parabolics of su(2,2) and their complexifications.
inline std::vector<RealParabolicRow> su22_parabolic_table() {
    std::vector<RealParabolicRow> rows = {
        {"p0", "so(2)", "so(2,C)", 1, 2, 6, "minimal", false, ParabolicSubset{}, 0, 0},
        {"p1", "so(2)+sl(2,R)", "so(2,C)+sl(2,C)", 1, 1, 5, "maximal cuspidal", true, cuspidal_subset(), 0, 0},
        {"p2", "so(3,1)", "so(4,C)", 0, 1, 4, "maximal noncuspidal", false, noncuspidal_subset(), 0, 0},
    };
    for (auto& r : rows) {
        auto pd = analyze(a3(), r.subset);
        r.derived_dim_n = static_cast<int>(pd.nilradical_dim());
        r.derived_dim_a = pd.center_rank - r.m_abelian;
    }
    return rows;
}

enum class BruhatCase { noncuspidal, cuspidal };

struct RootCompactness {
    std::vector<Root> compact;
    std::vector<Root> noncompact;
};

// m-compact vs non-compact positive roots of A3 for the two Bruhat decompositions.
inline RootCompactness root_compactness(BruhatCase c) {
    const auto& rs = a3();
    std::vector<Root> compact = c == BruhatCase::noncuspidal
                                    ? std::vector<Root>{rs.simple_root(0), rs.simple_root(2)}
                                    : std::vector<Root>{rs.simple_root(1)};
    RootCompactness out{compact, {}};
    for (const auto& beta : rs.positive_roots())
        if (std::find(compact.begin(), compact.end(), beta) == compact.end())
            out.noncompact.push_back(beta);
    return out;
}

} // namespace pvm::conformal
