#pragma once

#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pvm/conformal.hpp"
#include "pvm/io.hpp"
#include "pvm/multiplet.hpp"
#include "pvm/parabolic.hpp"
#include "pvm/realforms.hpp"
#include "pvm/rootsys.hpp"
#include "pvm/weights.hpp"

// Batch command-line front end. `run` is kept in the header so the test
// suites can drive it in-process.
namespace pvm::cli {

enum ExitCode : int {
    ok = 0,
    internal_failure = 1,
    usage = 2,
    precondition = 3,
    verification_mismatch = 4,
};

namespace detail {

using io::json;

struct Common {
    std::string format = "text";
    bool latex = false;
};

inline void emit_json(std::ostream& out, json body, const std::string& command) {
    body["schema_version"] = io::schema_version;
    body["command"] = command;
    out << body.dump(2) << "\n";
}

inline void require_format(const Common& c, bool dot_allowed) {
    if (c.format == "dot" && !dot_allowed)
        throw ParseError("--format dot is only valid for the multiplet command");
    if (c.latex && c.format != "text")
        throw ParseError("--latex cannot be combined with --format " + c.format);
}

inline ParabolicSubset parse_subset(const std::string& text) {
    if (text.empty() || text == "none")
        return {};
    std::vector<int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto q = parse_rational(item);
        if (!is_integer(q))
            throw ParseError("parabolic index '" + item + "' is not an integer");
        if (q < 1)
            throw ParseError("parabolic index '" + item + "' must be at least 1");
        v.push_back(numerator(q).convert_to<int>());
    }
    return ParabolicSubset(std::move(v));
}

inline std::vector<Integer> parse_integers(const std::string& text, std::size_t count, const std::string& what) {
    auto values = parse_rational_list(text);
    if (values.size() != count)
        throw ParseError(what + " expects " + std::to_string(count) + " comma-separated values");
    std::vector<Integer> out;
    for (const auto& q : values) {
        if (!is_integer(q))
            throw ParseError(what + " expects integers, got " + to_string(q));
        out.push_back(numerator(q));
    }
    return out;
}

inline Weight parse_weight(const RootSystem& rs, const std::string& text) {
    Weight w(parse_rational_list(text));
    if (w.rank() != rs.rank())
        throw ParseError("--labels has " + std::to_string(w.rank()) + " entries, " + rs.lie_type().name() +
                         " needs " + std::to_string(rs.rank()));
    return w;
}

// ---- roots ----------------------------------------------------------------

inline int cmd_roots(const Common& c, const std::string& type_text, std::ostream& out) {
    require_format(c, false);
    RootSystem rs(parse_lie_type(type_text));
    if (c.format == "json") {
        emit_json(out, io::to_json(rs), "roots");
        return ok;
    }
    if (c.latex) {
        out << "\\begin{tabular}{rlll}\n\\# & $\\beta$ & height & $\\beta^\\vee$ \\\\ \\hline\n";
        std::size_t k = 1;
        for (const auto& beta : rs.positive_roots())
            out << k++ << " & $" << io::latex_root(beta) << "$ & " << beta.height() << " & $"
                << io::rationals_string(rs.coroot_coeffs(beta)) << "$ \\\\\n";
        out << "\\end{tabular}\n";
        return ok;
    }
    out << rs.lie_type().name() << ": rank " << rs.rank() << ", " << rs.positive_roots().size()
        << " positive roots\n";
    io::TextTable t({"#", "root", "coeffs", "height", "(b,b)", "coroot"});
    std::size_t k = 1;
    for (const auto& beta : rs.positive_roots())
        t.add({std::to_string(k++), root_name(beta), io::coeffs_string(beta.coeffs()), std::to_string(beta.height()),
               std::to_string(rs.pairing(beta, beta)), io::rationals_string(rs.coroot_coeffs(beta))});
    out << t.str();
    return ok;
}

// ---- parabolics -----------------------------------------------------------

inline int cmd_parabolics(const Common& c, const std::string& type_text, std::ostream& out) {
    require_format(c, false);
    RootSystem rs(parse_lie_type(type_text));
    auto all = enumerate_all(rs);
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& pd : all)
            arr.push_back(io::to_json(pd));
        emit_json(out, {{"type", rs.lie_type().name()}, {"parabolics", arr}}, "parabolics");
        return ok;
    }
    if (c.latex) {
        out << "\\begin{tabular}{llllr}\n$S$ & $\\Delta^S_+$ & $\\mathfrak{g}_S$ & $|\\Delta_+(S)|$ & center \\\\ "
               "\\hline\n";
        for (const auto& pd : all)
            out << "$" << io::latex_subset(pd.subset) << "$ & $" << io::latex_root_set(pd.levi_roots) << "$ & "
                << to_string(pd.levi_type) << " & " << pd.nilradical_dim() << " & " << pd.center_rank << " \\\\\n";
        out << "\\end{tabular}\n";
        return ok;
    }
    out << rs.lie_type().name() << ": " << all.size() << " standard parabolic subalgebras\n";
    io::TextTable t({"S", "levi", "|Delta^S+|", "|Delta+(S)|", "center", "Delta^S+"});
    for (const auto& pd : all)
        t.add({to_string(pd.subset), to_string(pd.levi_type), std::to_string(pd.levi_dim()),
               std::to_string(pd.nilradical_dim()), std::to_string(pd.center_rank),
               io::root_set_string(pd.levi_roots)});
    out << t.str();
    return ok;
}

// ---- reduce ---------------------------------------------------------------

inline int cmd_reduce(const Common& c, const std::string& type_text, const std::string& labels,
                      const std::string& parabolic, std::ostream& out) {
    require_format(c, false);
    RootSystem rs(parse_lie_type(type_text));
    Weight w = parse_weight(rs, labels);
    ParabolicSubset s = parse_subset(parabolic);
    auto hits = pvm_reducibility_set(rs, s, w);
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& h : hits)
            arr.push_back(io::to_json(h));
        emit_json(out,
                  {{"type", rs.lie_type().name()},
                   {"weight", io::to_json(w)},
                   {"parabolic", io::to_json(s)},
                   {"reducible", !hits.empty()},
                   {"hits", arr}},
                  "reduce");
        return ok;
    }
    out << rs.lie_type().name() << "  weight " << to_string(w) << "  S = " << to_string(s) << "\n";
    io::TextTable t({"beta", "coeffs", "m", "target", "P_S-dominant"});
    for (const auto& h : hits)
        t.add({root_name(h.hit.beta), io::coeffs_string(h.hit.beta.coeffs()), h.hit.m.str(), to_string(h.target),
               h.target_dominant ? "yes" : "no"});
    out << t.str();
    if (hits.empty())
        out << "irreducible\n";
    else
        out << "reducible: " << hits.size() << " hit(s)\n";
    return ok;
}

// ---- multiplet ------------------------------------------------------------

inline int cmd_multiplet(const Common& c, const std::string& type_text, const std::string& labels,
                         const std::string& parabolic, bool include_dropped, std::optional<std::uint64_t> cap,
                         std::ostream& out) {
    require_format(c, true);
    RootSystem rs(parse_lie_type(type_text));
    Weight w = parse_weight(rs, labels);
    ParabolicSubset s = parse_subset(parabolic);
    MultipletOptions opts;
    opts.include_dropped = include_dropped;
    opts.cap = cap;
    auto g = build_multiplet(rs, s, w, opts);
    if (c.format == "dot") {
        out << to_dot(g);
        return ok;
    }
    if (c.format == "json") {
        json body = io::to_json(g);
        body["type"] = rs.lie_type().name();
        emit_json(out, body, "multiplet");
        return ok;
    }
    out << rs.lie_type().name() << " multiplet  seed " << to_string(w) << "  S = " << to_string(s) << "  "
        << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
    io::TextTable vt({"id", "labels", "depth"});
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        Integer depth = 0;
        for (const auto& x : g.offsets[v])
            depth += x;
        vt.add({std::to_string(v), to_string(g.vertices[v]) + (g.dropped[v] ? " (dropped)" : ""), depth.str()});
    }
    out << vt.str();
    io::TextTable et({"from", "to", "m", "beta"});
    for (const auto& e : g.edges)
        et.add({std::to_string(e.from), std::to_string(e.to), e.m.str(), root_name(e.beta)});
    out << et.str();
    return ok;
}

// ---- realform -------------------------------------------------------------

inline void print_spec(const RealFormSpec& s, std::ostream& out) {
    io::TextTable t({"field", "value"});
    t.add({"complexification", s.complex_type.name()});
    t.add({"m0", s.m0_name()});
    t.add({"dim a0", std::to_string(s.dim_a0)});
    t.add({"dim n0", std::to_string(s.dim_n0) + (s.n0_closed_form ? "" : " (|Delta+|, split)")});
    t.add({"S", to_string(s.complex_subset)});
    out << s.name << "\n" << t.str();
}

inline void print_report(const VerificationReport& r, std::ostream& out) {
    io::TextTable t({"check", "result", "detail"});
    for (const auto& c : r.checks)
        t.add({c.name, c.passed ? "pass" : "FAIL", c.detail});
    out << t.str();
}

inline std::string latex_real_row(const RealFormSpec& s) {
    std::ostringstream os;
    os << "$" << s.name << "$ & $" << s.m0_name() << "$ & " << s.dim_a0 << " & " << s.dim_n0 << " & $P_{"
       << io::latex_subset(s.complex_subset) << "}$ \\\\\n";
    return os.str();
}

inline int cmd_realform_grid(const Common& c, int max_rank, std::ostream& out) {
    if (max_rank < 1)
        throw PreconditionError("--grid needs a positive maximal rank");
    auto specs = catalog_grid(max_rank);
    // Cells are independent; results are collected in catalog order.
    std::vector<std::future<VerificationReport>> jobs;
    for (const auto& s : specs)
        jobs.push_back(std::async(std::launch::async, [s] { return verify(s); }));
    std::vector<VerificationReport> reports;
    for (auto& j : jobs)
        reports.push_back(j.get());
    bool all_ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.all_passed(); });

    if (c.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            json e = io::to_json(r.spec);
            e["verification"] = io::to_json(r);
            arr.push_back(e);
        }
        emit_json(out, {{"max_rank", max_rank}, {"instances", arr}, {"all_passed", all_ok}}, "realform");
    } else if (c.latex) {
        out << "\\begin{tabular}{llrrl}\n$\\mathfrak{g}_0$ & $\\mathfrak{m}_0$ & $\\dim\\mathfrak{a}_0$ & "
               "$\\dim\\mathfrak{n}_0$ & $\\mathfrak{p}_0^{\\mathbb{C}}$ \\\\ \\hline\n";
        for (const auto& r : reports)
            out << latex_real_row(r.spec);
        out << "\\end{tabular}\n";
    } else {
        io::TextTable t({"real form", "type", "m0", "dim a0", "dim n0", "S", "|Delta+(S)|", "checks"});
        for (const auto& r : reports)
            t.add({r.spec.name, r.spec.complex_type.name(), r.spec.m0_name(), std::to_string(r.spec.dim_a0),
                   std::to_string(r.spec.dim_n0), to_string(r.spec.complex_subset),
                   std::to_string(r.parabolic.nilradical_dim()), r.all_passed() ? "pass" : "FAIL"});
        out << t.str();
        out << reports.size() << " instances, " << (all_ok ? "all checks pass" : "MISMATCH") << "\n";
    }
    return all_ok ? ok : verification_mismatch;
}

inline int cmd_realform(const Common& c, const std::vector<std::string>& args, bool verify_flag,
                        std::optional<int> grid, std::ostream& out) {
    require_format(c, false);
    if (grid) {
        if (!args.empty())
            throw ParseError("--grid sweeps the whole catalog and takes no family arguments");
        return cmd_realform_grid(c, *grid, out);
    }
    if (args.empty())
        throw ParseError("realform needs a family, e.g. 'su 2 2', or --grid N");
    std::vector<int> params;
    for (std::size_t i = 1; i < args.size(); ++i) {
        auto q = parse_rational(args[i]);
        if (!is_integer(q))
            throw ParseError("real-form parameter '" + args[i] + "' is not an integer");
        params.push_back(numerator(q).convert_to<int>());
    }
    auto spec = minimal_parabolic(args[0], params);
    std::optional<VerificationReport> report;
    if (verify_flag)
        report = verify(spec);
    int code = report && !report->all_passed() ? verification_mismatch : ok;

    if (c.format == "json") {
        json body = io::to_json(spec);
        if (report)
            body["verification"] = io::to_json(*report);
        emit_json(out, body, "realform");
        return code;
    }
    if (c.latex) {
        out << latex_real_row(spec);
        return code;
    }
    print_spec(spec, out);
    if (report) {
        out << "verification (|Delta+(S)| = " << report->parabolic.nilradical_dim() << "):\n";
        print_report(*report, out);
    }
    return code;
}

// ---- conformal ------------------------------------------------------------

inline const std::array<const char*, 6> hc_names = {"m1", "m2", "m3", "m12", "m23", "m13"};

struct ConformalCase {
    std::string kind;
    json signature;
    std::string signature_text;
    Weight weight;
    conformal::HcSix closed_form;
    ParabolicSubset subset;
};

inline json hits_json(const std::vector<PvmHit>& hits) {
    json arr = json::array();
    for (const auto& h : hits)
        arr.push_back(io::to_json(h));
    return arr;
}

inline void emit_conformal_case(const Common& c, const ConformalCase& cc, json& body, std::ostream& out) {
    const auto& rs = conformal::a3();
    auto from_weight = conformal::hc_from_weight(cc.weight);
    if (from_weight != cc.closed_form)
        throw InternalError("closed-form Harish-Chandra parameters disagree with the weight");
    auto verma = pvm_reducibility_set(rs, ParabolicSubset{}, cc.weight);
    bool dominant = is_ps_dominant(cc.weight, cc.subset);
    std::vector<PvmHit> pvm;
    if (dominant)
        pvm = pvm_reducibility_set(rs, cc.subset, cc.weight);

    if (c.format == "json") {
        json hc = json::object();
        json per_root = json::array();
        for (std::size_t i = 0; i < 6; ++i) {
            hc[hc_names[i]] = to_string(cc.closed_form[i]);
            per_root.push_back({{"name", hc_names[i]},
                                {"beta", io::to_json(rs.positive_roots()[i])},
                                {"m", to_string(cc.closed_form[i])},
                                {"positive_integer", is_natural(cc.closed_form[i])}});
        }
        body["case"] = cc.kind;
        body["signature"] = cc.signature;
        body["weight"] = io::to_json(cc.weight);
        body["subset"] = io::to_json(cc.subset);
        body["hc"] = hc;
        body["roots"] = per_root;
        body["verdict"] = verma.empty() ? "irreducible" : "reducible";
        body["verma"] = {{"reducible", !verma.empty()}, {"hits", hits_json(verma)}};
        json p = {{"subset_dominant", dominant}};
        if (dominant) {
            p["reducible"] = !pvm.empty();
            p["hits"] = hits_json(pvm);
        }
        body["pvm"] = p;
        return;
    }
    out << cc.kind << " signature " << cc.signature_text << "\n";
    out << "weight " << to_string(cc.weight) << " over A3, PVM subset S = " << to_string(cc.subset)
        << (dominant ? "" : " (weight not P_S-dominant)") << "\n";
    io::TextTable t({"param", "root", "value", "in N"});
    for (std::size_t i = 0; i < 6; ++i)
        t.add({hc_names[i], root_name(rs.positive_roots()[i]), to_string(cc.closed_form[i]),
               is_natural(cc.closed_form[i]) ? "yes" : "no"});
    out << t.str();
    out << "verma: " << (verma.empty() ? "irreducible" : "reducible (" + std::to_string(verma.size()) + " hit(s))")
        << "\n";
    if (dominant)
        out << "pvm over S = " << to_string(cc.subset) << ": "
            << (pvm.empty() ? "irreducible" : "reducible (" + std::to_string(pvm.size()) + " hit(s))") << "\n";
}

inline void emit_table(const Common& c, json& body, std::ostream& out) {
    auto rows = conformal::su22_parabolic_table();
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back(io::to_json(r));
        body["table"] = arr;
        return;
    }
    if (c.latex) {
        out << "\\begin{tabular}{llrrll}\n & $\\mathfrak{m}$ & $\\dim\\mathfrak{a}$ & $\\dim\\mathfrak{n}$ & "
               "$\\mathfrak{p}^{\\mathbb{C}}$ & \\\\ \\hline\n";
        for (const auto& r : rows)
            out << "$\\mathfrak{" << r.name << "}$ & $" << r.m << "$ & " << r.dim_a << " & " << r.dim_n << " & $P_{"
                << io::latex_subset(r.subset) << "}$ & " << r.kind << " \\\\\n";
        out << "\\end{tabular}\n";
        return;
    }
    io::TextTable t({"parabolic", "m", "m^C", "dim a", "dim n", "kind", "S", "|Delta+(S)|"});
    for (const auto& r : rows)
        t.add({r.name, r.m, r.m_complex, std::to_string(r.dim_a), std::to_string(r.dim_n), r.kind,
               to_string(r.subset), std::to_string(r.derived_dim_n)});
    out << "su(2,2) parabolic subalgebras\n" << t.str();
}

inline int cmd_conformal(const Common& c, const std::string& signature, const std::string& cuspidal,
                         const std::string& triple, bool table, std::ostream& out) {
    require_format(c, false);
    int given = !signature.empty() + !cuspidal.empty() + !triple.empty();
    if (given > 1)
        throw ParseError("use only one of --signature, --cuspidal, --cusp-triple");
    if (given == 0 && !table)
        throw ParseError("conformal needs --signature, --cuspidal, --cusp-triple or --table");
    if (c.latex && given > 0)
        throw ParseError("--latex applies to --table only");

    std::optional<ConformalCase> cc;
    if (!signature.empty()) {
        auto v = parse_rational_list(signature);
        if (v.size() != 3)
            throw ParseError("--signature expects j1,j2,d");
        conformal::SignatureNC s(v[0], v[1], v[2]);
        cc = ConformalCase{"noncuspidal",
                           {{"j1", to_string(s.j1)}, {"j2", to_string(s.j2)}, {"d", to_string(s.d)}},
                           "[" + to_string(s.j1) + "," + to_string(s.j2) + ";" + to_string(s.d) + "]",
                           conformal::weight_nc(s), conformal::hc_nc(s), conformal::noncuspidal_subset()};
    } else if (!cuspidal.empty()) {
        auto v = parse_rational_list(cuspidal);
        if (v.size() != 4)
            throw ParseError("--cuspidal expects n',k,eps,nu'");
        for (std::size_t i = 0; i < 3; ++i)
            if (!is_integer(v[i]))
                throw ParseError("--cuspidal expects integral n', k and eps");
        conformal::SignatureCusp s(numerator(v[0]), numerator(v[1]), numerator(v[2]).convert_to<int>(), v[3]);
        cc = ConformalCase{"cuspidal",
                           {{"n_prime", s.n_prime.str()}, {"k", s.k.str()}, {"eps", s.eps},
                            {"nu_prime", to_string(s.nu_prime)}},
                           "{" + s.n_prime.str() + "," + s.k.str() + "," + std::to_string(s.eps) + "," +
                               to_string(s.nu_prime) + "}",
                           conformal::weight_cusp(s), conformal::hc_cusp(s), conformal::cuspidal_subset()};
    } else if (!triple.empty()) {
        auto v = parse_integers(triple, 3, "--cusp-triple");
        conformal::CuspTriple t(v[0], v[1], v[2]);
        cc = ConformalCase{"cusp-triple",
                           {{"p", t.p.str()}, {"nu", t.nu.str()}, {"n", t.n.str()}},
                           "(p,nu,n) = (" + t.p.str() + "," + t.nu.str() + "," + t.n.str() + ")",
                           conformal::weight_cusp_triple(t), conformal::hc_cusp_triple(t),
                           conformal::cuspidal_subset()};
    }

    json body = json::object();
    if (cc)
        emit_conformal_case(c, *cc, body, out);
    if (table) {
        if (cc && c.format == "text")
            out << "\n";
        emit_table(c, body, out);
    }
    if (c.format == "json")
        emit_json(out, body, "conformal");
    return ok;
}

} // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact root systems, parabolic Verma modules and minimal parabolics of classical real forms"};
    app.name("pvm");
    app.require_subcommand(1);

    detail::Common common;
    // dot is accepted by the parser everywhere and rejected per command, so
    // a misuse is reported before any computation.
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "Output format: text, json or dot")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_flag("--latex", common.latex, "Emit a LaTeX tabular instead of plain text");
    };

    std::string type_text, labels, parabolic;
    std::vector<std::string> realform_args;
    bool verify_flag = false, include_dropped = false, table = false;
    std::optional<int> grid;
    std::optional<std::uint64_t> cap;
    std::string signature, cuspidal, triple;

    auto* roots = app.add_subcommand("roots", "List the positive roots of a classical type");
    roots->add_option("type", type_text, "Type such as A3, B4, C3, D4")->required();
    add_common(roots);

    auto* parabolics = app.add_subcommand("parabolics", "Enumerate the standard parabolic subalgebras P_S");
    parabolics->add_option("type", type_text, "Type such as A3")->required();
    add_common(parabolics);

    auto* reduce = app.add_subcommand("reduce", "Reducibility of a (parabolic) Verma module");
    reduce->add_option("type", type_text, "Type such as A3")->required();
    reduce->add_option("--labels", labels, "Dynkin labels, e.g. 0,-1/2,0")->required()->allow_extra_args(false);
    reduce->add_option("--parabolic", parabolic, "Simple-root subset S, e.g. 1,3");
    add_common(reduce);

    auto* multiplet = app.add_subcommand("multiplet", "Embedding graph generated from a seed weight");
    multiplet->add_option("type", type_text, "Type such as A3")->required();
    multiplet->add_option("--labels", labels, "Dynkin labels of the seed")->required();
    multiplet->add_option("--parabolic", parabolic, "Simple-root subset S");
    multiplet->add_flag("--include-dropped", include_dropped, "Keep targets that leave P_S as dashed leaves");
    multiplet->add_option("--cap", cap, "Vertex bound (default |W| * |Delta+|)");
    add_common(multiplet);

    auto* realform = app.add_subcommand("realform", "Minimal parabolic of a classical real form");
    realform->add_option("family", realform_args, "sl n | sp n | su p r | so p r | sp p r | su* 2n | so* 2n");
    realform->add_flag("--verify", verify_flag, "Cross-check against the complexified parabolic");
    realform->add_option("--grid", grid, "Verify every catalog instance up to this complex rank");
    add_common(realform);

    auto* conf = app.add_subcommand("conformal", "su(2,2) signatures, weights and parabolic table");
    conf->add_option("--signature", signature, "j1,j2,d (maximal non-cuspidal case)");
    conf->add_option("--cuspidal", cuspidal, "n',k,eps,nu' (maximal cuspidal case)");
    conf->add_option("--cusp-triple", triple, "p,nu,n (integral cuspidal case)");
    conf->add_flag("--table", table, "Print the su(2,2) parabolic table");
    add_common(conf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "pvm: " << e.what() << "\n";
        return usage;
    }

    try {
        if (roots->parsed())
            return detail::cmd_roots(common, type_text, out);
        if (parabolics->parsed())
            return detail::cmd_parabolics(common, type_text, out);
        if (reduce->parsed())
            return detail::cmd_reduce(common, type_text, labels, parabolic, out);
        if (multiplet->parsed())
            return detail::cmd_multiplet(common, type_text, labels, parabolic, include_dropped, cap, out);
        if (realform->parsed())
            return detail::cmd_realform(common, realform_args, verify_flag, grid, out);
        if (conf->parsed())
            return detail::cmd_conformal(common, signature, cuspidal, triple, table, out);
    } catch (const ParseError& e) {
        err << "pvm: " << e.what() << "\n";
        return usage;
    } catch (const PreconditionError& e) {
        err << "pvm: " << e.what() << "\n";
        return precondition;
    } catch (const std::exception& e) {
        err << "pvm: internal error: " << e.what() << "\n";
        return internal_failure;
    }
    return usage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"pvm"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace pvm::cli
