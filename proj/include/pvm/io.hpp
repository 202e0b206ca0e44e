#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pvm/conformal.hpp"
#include "pvm/multiplet.hpp"
#include "pvm/parabolic.hpp"
#include "pvm/realforms.hpp"
#include "pvm/rootsys.hpp"
#include "pvm/weights.hpp"

// Serialization helpers. JSON objects are key-sorted (nlohmann's default
// std::map storage) and every rational is written as an "a/b" string.
namespace pvm::io {

using nlohmann::json;

inline constexpr int schema_version = 1;

inline json rationals(const RationalVector& v) {
    json a = json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

inline json to_json(const Weight& w) { return rationals(w.labels()); }

inline json to_json(const Root& r) { return json(r.coeffs()); }

inline json to_json(const ParabolicSubset& s) { return json(s.indices()); }

inline json to_json(const std::vector<LieType>& types) {
    json a = json::array();
    for (const auto& t : types)
        a.push_back(t.name());
    return a;
}

inline json roots_json(const std::vector<Root>& roots) {
    json a = json::array();
    for (const auto& r : roots)
        a.push_back(to_json(r));
    return a;
}

inline json to_json(const RootSystem& rs) {
    json roots = json::array();
    for (const auto& beta : rs.positive_roots())
        roots.push_back({{"coeffs", to_json(beta)},
                         {"height", beta.height()},
                         {"name", root_name(beta)},
                         {"norm", rs.pairing(beta, beta)},
                         {"coroot", rationals(rs.coroot_coeffs(beta))}});
    return {{"type", rs.lie_type().name()},
            {"rank", rs.rank()},
            {"cartan", rs.cartan()},
            {"symmetrizer", rs.symmetrizer()},
            {"positive_roots", roots}};
}

inline json to_json(const ParabolicData& pd) {
    return {{"subset", to_json(pd.subset)},
            {"levi_roots", roots_json(pd.levi_roots)},
            {"nilradical_roots", roots_json(pd.nilradical_roots)},
            {"levi_type", to_json(pd.levi_type)},
            {"levi_dim", pd.levi_dim()},
            {"nilradical_dim", pd.nilradical_dim()},
            {"center_rank", pd.center_rank}};
}

inline json to_json(const PvmHit& h) {
    return {{"beta", to_json(h.hit.beta)},
            {"beta_name", root_name(h.hit.beta)},
            {"m", h.hit.m.str()},
            {"target", to_json(h.target)},
            {"target_dominant", h.target_dominant}};
}

inline json to_json(const MultipletGraph& g) {
    json vertices = json::array();
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        json off = json::array();
        for (const auto& x : g.offsets[v])
            off.push_back(x.str());
        vertices.push_back({{"id", v}, {"labels", to_json(g.vertices[v])}, {"offset", off},
                            {"dropped", static_cast<bool>(g.dropped[v])}});
    }
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"beta", to_json(e.beta)}, {"m", e.m.str()}});
    return {{"seed", to_json(g.seed)}, {"subset", to_json(g.subset)}, {"vertices", vertices}, {"edges", edges}};
}

inline json to_json(const RealFormSpec& s) {
    json m0 = json::array();
    for (const auto& c : s.m0)
        m0.push_back(c.name());
    return {{"name", s.name},
            {"params", s.params},
            {"m0", m0},
            {"dim_a0", s.dim_a0},
            {"dim_n0", s.dim_n0},
            {"dim_n0_closed_form", s.n0_closed_form},
            {"complex_type", s.complex_type.name()},
            {"complex_subset", to_json(s.complex_subset)}};
}

inline json to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"all_passed", r.all_passed()}, {"checks", checks}, {"nilradical_dim", r.parabolic.nilradical_dim()},
            {"levi_type", to_json(r.parabolic.levi_type)}};
}

inline json to_json(const conformal::RealParabolicRow& r) {
    return {{"name", r.name},        {"m", r.m},
            {"m_complex", r.m_complex}, {"dim_a", r.dim_a},
            {"dim_n", r.dim_n},      {"kind", r.kind},
            {"cuspidal", r.cuspidal}, {"subset", to_json(r.subset)},
            {"derived_dim_n", r.derived_dim_n}, {"derived_dim_a", r.derived_dim_a}};
}

// Left-aligned text columns separated by two spaces.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string str() const {
        std::vector<std::size_t> width;
        for (const auto& row : rows_) {
            if (width.size() < row.size())
                width.resize(row.size(), 0);
            for (std::size_t i = 0; i < row.size(); ++i)
                width[i] = std::max(width[i], row[i].size());
        }
        std::ostringstream os;
        for (const auto& row : rows_) {
            std::string line;
            for (std::size_t i = 0; i < row.size(); ++i) {
                line += row[i];
                if (i + 1 < row.size())
                    line += std::string(width[i] - row[i].size() + 2, ' ');
            }
            os << line << "\n";
        }
        return os.str();
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

inline std::string coeffs_string(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

inline std::string rationals_string(const RationalVector& v) { return to_string(Weight(v)); }

inline std::string root_set_string(const std::vector<Root>& roots) {
    std::string out = "{";
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i)
            out += ", ";
        out += root_name(roots[i]);
    }
    return out + "}";
}

// LaTeX helpers for the table-emitting commands.
inline std::string latex_root(const Root& r) {
    std::string out;
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) {
        int c = r[i];
        if (c == 0)
            continue;
        if (!out.empty())
            out += "+";
        if (c != 1)
            out += std::to_string(c);
        out += "\\alpha_{" + std::to_string(i + 1) + "}";
    }
    return out;
}

inline std::string latex_root_set(const std::vector<Root>& roots) {
    if (roots.empty())
        return "\\emptyset";
    std::string out = "\\{";
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i)
            out += ", ";
        out += latex_root(roots[i]);
    }
    return out + "\\}";
}

inline std::string latex_subset(const ParabolicSubset& s) {
    if (s.empty())
        return "\\emptyset";
    std::string out;
    for (std::size_t i = 0; i < s.indices().size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s.indices()[i]);
    }
    return out;
}

} // namespace pvm::io
