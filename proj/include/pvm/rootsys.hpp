#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pvm/rational.hpp"

namespace pvm {

enum class Family { A, B, C, D };

inline char family_letter(Family f) {
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    }
    return '?';
}

// A classical Cartan type such as A3 or D4.
class LieType {
public:
    LieType(Family family, int rank) : family_(family), rank_(rank) {
        int min_rank = family == Family::D ? 2 : 1;
        if (rank < min_rank)
            throw PreconditionError(std::string("type ") + family_letter(family) +
                                    " requires rank >= " + std::to_string(min_rank) +
                                    ", got " + std::to_string(rank));
    }

    Family family() const { return family_; }
    int rank() const { return rank_; }
    std::string name() const { return family_letter(family_) + std::to_string(rank_); }

    friend auto operator<=>(const LieType&, const LieType&) = default;
    friend bool operator==(const LieType&, const LieType&) = default;

private:
    Family family_;
    int rank_;
};

// Parses strings of the form [ABCD][0-9]+.
inline LieType parse_lie_type(std::string_view text) {
    if (text.size() < 2)
        throw ParseError("malformed type '" + std::string(text) + "', expected e.g. A3");
    Family f;
    switch (text.front()) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    default: throw ParseError("unknown family in '" + std::string(text) + "', expected A, B, C or D");
    }
    auto digits = text.substr(1);
    if (digits.size() > 4 || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("malformed rank in '" + std::string(text) + "'");
    try {
        return LieType(f, std::stoi(std::string(digits)));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

// A root in the simple-root basis. Always all-nonnegative or all-nonpositive.
class Root {
public:
    explicit Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
        bool pos = std::any_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c > 0; });
        bool neg = std::any_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c < 0; });
        if (pos && neg)
            throw PreconditionError("mixed-sign vector is not a root");
        if (!pos && !neg)
            throw PreconditionError("zero vector is not a root");
    }

    static Root simple(int rank, int i) {
        std::vector<int> c(static_cast<std::size_t>(rank), 0);
        c[static_cast<std::size_t>(i)] = 1;
        return Root(std::move(c));
    }

    const std::vector<int>& coeffs() const { return coeffs_; }
    int rank() const { return static_cast<int>(coeffs_.size()); }
    int operator[](std::size_t i) const { return coeffs_[i]; }
    bool positive() const { return height() > 0; }
    int height() const {
        int h = 0;
        for (int c : coeffs_)
            h += c;
        return h;
    }
    Root operator-() const {
        std::vector<int> c = coeffs_;
        for (int& x : c)
            x = -x;
        return Root(std::move(c));
    }

    // Indices (0-based) with a non-zero coefficient.
    std::vector<int> support() const {
        std::vector<int> s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                s.push_back(static_cast<int>(i));
        return s;
    }

    friend bool operator==(const Root&, const Root&) = default;

private:
    std::vector<int> coeffs_;
};

// Canonical root order: height first, then coefficient vectors in
// decreasing lexicographic order, so the simple roots come out as a1, a2, ...
inline bool canonical_less(const Root& a, const Root& b) {
    if (a.height() != b.height())
        return a.height() < b.height();
    return a.coeffs() > b.coeffs();
}

// "a1+a2+2a3" style name.
inline std::string root_name(const Root& r) {
    std::string out;
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) {
        int c = r[i];
        if (c == 0)
            continue;
        if (c < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        int a = c < 0 ? -c : c;
        if (a != 1)
            out += std::to_string(a);
        out += "a" + std::to_string(i + 1);
    }
    return out;
}

using CartanMatrix = std::vector<std::vector<int>>;

namespace detail {

// Bourbaki numbering. cartan[i][j] = <a_j, a_i^vee>.
inline CartanMatrix classical_cartan(const LieType& t) {
    const int l = t.rank();
    CartanMatrix a(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(l), 0));
    for (int i = 0; i < l; ++i)
        a[i][i] = 2;
    auto link = [&](int i, int j) {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    switch (t.family()) {
    case Family::A:
        for (int i = 0; i + 1 < l; ++i)
            link(i, i + 1);
        break;
    case Family::B:
        for (int i = 0; i + 1 < l; ++i)
            link(i, i + 1);
        if (l >= 2)
            a[l - 1][l - 2] = -2;
        break;
    case Family::C:
        for (int i = 0; i + 1 < l; ++i)
            link(i, i + 1);
        if (l >= 2)
            a[l - 2][l - 1] = -2;
        break;
    case Family::D:
        for (int i = 0; i + 3 < l; ++i)
            link(i, i + 1);
        if (l >= 3) {
            link(l - 3, l - 2);
            link(l - 3, l - 1);
        }
        break;
    }
    return a;
}

inline std::vector<int> classical_symmetrizer(const LieType& t) {
    const int l = t.rank();
    std::vector<int> d(static_cast<std::size_t>(l), 1);
    if (l >= 2 && t.family() == Family::B)
        std::fill(d.begin(), d.end() - 1, 2);
    if (l >= 2 && t.family() == Family::C)
        d.back() = 2;
    return d;
}

} // namespace detail

// Immutable root datum of a classical type: Cartan matrix, symmetrizer and
// the positive roots in canonical order.
class RootSystem {
public:
    explicit RootSystem(LieType type)
        : type_(type), cartan_(detail::classical_cartan(type)),
          symmetrizer_(detail::classical_symmetrizer(type)) {
        generate_roots();
    }

    const LieType& lie_type() const { return type_; }
    int rank() const { return type_.rank(); }
    const CartanMatrix& cartan() const { return cartan_; }
    int cartan(int i, int j) const { return cartan_[i][j]; }
    const std::vector<int>& symmetrizer() const { return symmetrizer_; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    const Root& simple_root(int i) const { return positive_[static_cast<std::size_t>(i)]; }

    // Position of a positive root in canonical order.
    std::optional<std::size_t> index_of(const Root& r) const {
        auto it = index_.find(r.coeffs());
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    bool is_positive_root(const Root& r) const { return index_of(r).has_value(); }
    bool is_root(const Root& r) const { return is_positive_root(r) || is_positive_root(-r); }

    // Sum_ij x_i d_i a_ij y_j.
    Rational pairing(std::span<const Rational> x, std::span<const Rational> y) const {
        check_length(x.size());
        check_length(y.size());
        Rational s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (x[i] == 0)
                continue;
            Rational row = 0;
            for (int j = 0; j < rank(); ++j)
                row += cartan_[i][j] * y[j];
            s += x[i] * symmetrizer_[i] * row;
        }
        return s;
    }

    int pairing(const Root& x, const Root& y) const {
        check_length(x.coeffs().size());
        check_length(y.coeffs().size());
        int s = 0;
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j)
                s += x[i] * symmetrizer_[i] * cartan_[i][j] * y[j];
        return s;
    }

    // Coefficients of 2 beta / (beta, beta) in the simple-root basis.
    RationalVector coroot_coeffs(const Root& beta) const {
        require_root(beta);
        int norm = pairing(beta, beta);
        RationalVector out;
        out.reserve(beta.coeffs().size());
        for (int c : beta.coeffs())
            out.emplace_back(2 * c, norm);
        return out;
    }

    // Coefficients c_i with beta^vee = Sum c_i a_i^vee. Integers for every root.
    std::vector<int> coroot_in_simple_coroots(const Root& beta) const {
        require_root(beta);
        int half_norm = pairing(beta, beta) / 2;
        std::vector<int> out;
        for (int i = 0; i < rank(); ++i) {
            int num = symmetrizer_[i] * beta[i];
            if (num % half_norm != 0)
                throw InternalError("non-integral coroot coefficient for " + root_name(beta));
            out.push_back(num / half_norm);
        }
        return out;
    }

    // <beta, a_i^vee> = Sum_j beta_j a_ij, the Dynkin labels of a root.
    std::vector<int> root_labels(const Root& beta) const {
        check_length(beta.coeffs().size());
        std::vector<int> out(static_cast<std::size_t>(rank()), 0);
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j)
                out[i] += cartan_[i][j] * beta[j];
        return out;
    }

    void require_root(const Root& beta) const {
        check_length(beta.coeffs().size());
        if (!is_root(beta))
            throw PreconditionError(root_name(beta) + " is not a root of " + type_.name());
    }

    void require_positive_root(const Root& beta) const {
        check_length(beta.coeffs().size());
        if (!is_positive_root(beta))
            throw PreconditionError(root_name(beta) + " is not a positive root of " + type_.name());
    }

    void check_length(std::size_t n) const {
        if (n != static_cast<std::size_t>(rank()))
            throw PreconditionError("vector of length " + std::to_string(n) + " does not match rank " +
                                    std::to_string(rank()) + " of " + type_.name());
    }

private:
    // Level-by-level closure: beta + a_i is a root iff q - <beta, a_i^vee> > 0,
    // with q the largest k such that beta - k a_i is a root.
    void generate_roots() {
        const int l = rank();
        std::set<std::vector<int>> known;
        std::vector<std::vector<int>> level;
        for (int i = 0; i < l; ++i) {
            level.push_back(Root::simple(l, i).coeffs());
            known.insert(level.back());
        }
        std::vector<std::vector<int>> all = level;
        while (!level.empty()) {
            std::set<std::vector<int>> next;
            for (const auto& beta : level) {
                for (int i = 0; i < l; ++i) {
                    int q = 0;
                    std::vector<int> down = beta;
                    while (true) {
                        down[i] -= 1;
                        if (!known.contains(down))
                            break;
                        ++q;
                    }
                    int p = 0;
                    for (int j = 0; j < l; ++j)
                        p += cartan_[i][j] * beta[j];
                    if (q - p > 0) {
                        std::vector<int> up = beta;
                        up[i] += 1;
                        if (!known.contains(up))
                            next.insert(up);
                    }
                }
            }
            level.assign(next.begin(), next.end());
            for (const auto& r : level) {
                known.insert(r);
                all.push_back(r);
            }
        }
        positive_.reserve(all.size());
        for (auto& c : all)
            positive_.emplace_back(std::move(c));
        std::sort(positive_.begin(), positive_.end(), canonical_less);
        for (std::size_t k = 0; k < positive_.size(); ++k)
            index_.emplace(positive_[k].coeffs(), k);
    }

    LieType type_;
    CartanMatrix cartan_;
    std::vector<int> symmetrizer_;
    std::vector<Root> positive_;
    std::map<std::vector<int>, std::size_t> index_;
};

inline std::size_t expected_positive_root_count(const LieType& t) {
    auto l = static_cast<std::size_t>(t.rank());
    switch (t.family()) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    }
    return 0;
}

// |W|, saturating at the maximum of uint64.
inline std::uint64_t weyl_group_order(const LieType& t) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    auto mul = [](std::uint64_t a, std::uint64_t b) { return (b != 0 && a > cap / b) ? cap : a * b; };
    std::uint64_t fact = 1;
    const auto l = static_cast<std::uint64_t>(t.rank());
    switch (t.family()) {
    case Family::A:
        for (std::uint64_t k = 2; k <= l + 1; ++k)
            fact = mul(fact, k);
        return fact;
    case Family::B:
    case Family::C:
        for (std::uint64_t k = 2; k <= l; ++k)
            fact = mul(fact, k);
        for (std::uint64_t k = 0; k < l; ++k)
            fact = mul(fact, 2);
        return fact;
    case Family::D:
        for (std::uint64_t k = 2; k <= l; ++k)
            fact = mul(fact, k);
        for (std::uint64_t k = 0; k + 1 < l; ++k)
            fact = mul(fact, 2);
        return fact;
    }
    return 0;
}

} // namespace pvm
