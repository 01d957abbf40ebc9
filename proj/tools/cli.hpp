#pragma once

// The evencycle command line: generate, certify, vine, bounds, search, table.

#include "evencycle/evencycle.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace evencycle::cli {

enum ExitCode : int {
    Success = 0,
    VerdictFail = 1,
    Usage = 2,
    Budget = 3,
    SelfCertification = 4,
    InputError = 5,
};

inline const char* exit_code_help =
    "Exit codes:\n"
    "  0  success / all verdicts pass\n"
    "  1  a verdict failed (even cycle found, lemma violated, graph fails a precondition)\n"
    "  2  usage error (bad flags or unsupported parameters)\n"
    "  3  search budget exhausted (best incumbent still reported)\n"
    "  4  a construction failed its self-certification\n"
    "  5  input file unreadable or malformed\n";

struct Options {
    unsigned threads = 0;
    bool records = false;
    bool no_timing = false;
};

inline int exit_code_for(const Error& e) {
    switch (e.code()) {
    case ErrorCode::NotPrime:
    case ErrorCode::ReducibleModulus:
    case ErrorCode::UnsupportedOrder:
    case ErrorCode::WrongFieldOrder:
    case ErrorCode::TooFar:
    case ErrorCode::NotATheta:
    case ErrorCode::NotApplicable: return Usage;
    case ErrorCode::BudgetExceeded: return Budget;
    case ErrorCode::ConstructionFailure: return SelfCertification;
    case ErrorCode::ParseError:
    case ErrorCode::InvalidGraph: return InputError;
    case ErrorCode::ExplosionCeiling:
    case ErrorCode::DivisionByZero:
    case ErrorCode::Precondition:
    case ErrorCode::LemmaViolation: return VerdictFail;
    }
    return VerdictFail;
}

inline std::string forbidden_set(std::size_t k) {
    std::string s = "{";
    for (std::size_t l = 4; l <= 2 * k; l += 2) s += (l > 4 ? ", C" : "C") + std::to_string(l);
    return s + "}";
}

inline void emit(std::ostream& out, const Options& opt, const Record& rec, const std::string& text) {
    if (opt.records) out << format_records(rec);
    else out << text;
}

struct Construction {
    Graph graph;
    std::size_t k;
};

inline Construction build(const std::string& name, std::uint32_t q) {
    if (name == "er") return {erdos_renyi_polarity(q), 2};
    if (name == "pg2") return {incidence_pg2(q), 2};
    if (name == "w") return {incidence_w(q), 3};
    if (name == "w-polarity") return {polarity_w(q), 3};
    if (name == "hexagon") return {incidence_hexagon(q), 5};
    throw Error(ErrorCode::UnsupportedOrder, "unknown construction '" + name + "'");
}

inline std::string join(const VertexPath& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "-" : "") + std::to_string(p[i]);
    return s;
}

inline int cmd_generate(const std::string& name, std::uint32_t q, const std::string& out_path,
                        const std::string& format, const Options& opt, std::ostream& out) {
    const auto c = build(name, q);
    const Graph& g = c.graph;
    const auto st = degree_stats(g);
    const auto gir = girth(g, opt.threads);
    const auto cert = certify_no_even_cycles(g, c.k, opt.threads);
    if (!out_path.empty()) {
        write_text_file(out_path, format == "graph6" ? write_graph6(g) : write_edge_list(g));
        if (g.has_labels()) write_text_file(out_path + ".labels", write_labels(g));
    }
    const std::string girth_s = gir ? std::to_string(*gir) : "none";
    const std::string verdict = cert.pass ? "PASS" : "FAIL";
    Record rec{{"generate.construction", name},
               {"generate.q", std::to_string(q)},
               {"generate.n", std::to_string(g.vertex_count())},
               {"generate.m", std::to_string(g.edge_count())},
               {"generate.min_degree", std::to_string(st.min_degree)},
               {"generate.max_degree", std::to_string(st.max_degree)},
               {"generate.girth", girth_s},
               {"generate.k", std::to_string(c.k)},
               {"generate.no_even_cycle", cert.pass ? "true" : "false"}};
    if (!out_path.empty()) rec.emplace_back("generate.out", out_path);
    std::string text = name + " q=" + std::to_string(q) + "\n" + "vertices " + std::to_string(g.vertex_count()) +
                       "\nedges " + std::to_string(g.edge_count()) + "\nmin degree " + std::to_string(st.min_degree) +
                       "\nmax degree " + std::to_string(st.max_degree) + "\ngirth " + girth_s +
                       "\nno even cycle <= " + std::to_string(2 * c.k) + ": " + verdict + "\n";
    if (!out_path.empty()) text += "wrote " + out_path + "\n";
    emit(out, opt, rec, text);
    return cert.pass ? Success : VerdictFail;
}

inline int cmd_certify(const std::string& in, std::size_t k, const Options& opt, std::ostream& out) {
    const Graph g = read_graph_file(in);
    const auto cert = certify_no_even_cycles(g, k, opt.threads);
    Record rec{{"certify.n", std::to_string(g.vertex_count())},
               {"certify.m", std::to_string(g.edge_count())},
               {"certify.k", std::to_string(k)},
               {"certify.pass", cert.pass ? "true" : "false"}};
    std::string text = "vertices " + std::to_string(g.vertex_count()) + "\nedges " + std::to_string(g.edge_count()) +
                       "\nno even cycle <= " + std::to_string(2 * k) + ": " + (cert.pass ? "PASS" : "FAIL") + "\n";
    if (!cert.pass) {
        rec.emplace_back("certify.witness", join(cert.witness));
        rec.emplace_back("certify.witness_length", std::to_string(cert.witness.size()));
        text += "witness " + join(cert.witness) + " (length " + std::to_string(cert.witness.size()) + ")\n";
    }
    emit(out, opt, rec, text);
    return cert.pass ? Success : VerdictFail;
}

inline int cmd_vine(const std::string& in, Vertex u, Vertex v, std::size_t k, const Options& opt, std::ostream& out) {
    const Graph g = read_graph_file(in);
    if (!certify_no_even_cycles(g, k, opt.threads).pass)
        throw Error(ErrorCode::Precondition, "graph contains an even cycle of length <= " + std::to_string(2 * k));
    try {
        const auto cert = vine_decompose(g, u, v, k, Precheck::AlreadyCertified);
        out << (opt.records ? format_vine_records(cert) : format_vine_report(cert));
        return cert.all_checks_pass() ? Success : VerdictFail;
    } catch (const LemmaViolationError& e) {
        out << (opt.records ? format_vine_records(e.certificate()) : format_vine_report(e.certificate()));
        return VerdictFail;
    }
}

inline int cmd_bounds(std::optional<std::size_t> n, const std::string& in, std::size_t k, std::optional<std::size_t> m,
                      const Options& opt, std::ostream& out) {
    std::vector<BoundReport> reports;
    if (!in.empty()) {
        const Graph g = read_graph_file(in);
        reports = audit_proof_chain(g.vertex_count(), k, &g, opt.threads);
        const auto st = degree_stats(g);
        if (st.min_degree == st.max_degree) reports.push_back(regular_bound_report(g.vertex_count(), k, st.max_degree));
    } else {
        if (!n) throw Error(ErrorCode::UnsupportedOrder, "bounds needs --n or --in");
        if (*n < 1) throw Error(ErrorCode::UnsupportedOrder, "n must be at least 1");
        reports = audit_proof_chain(*n, k);
        reports.back() = theorem1_bound(*n, k, m);
        reports.push_back(regular_bound_report(*n, k));
    }
    out << (opt.records ? format_bound_records(reports) : format_bound_table(reports));
    for (const auto& r : reports)
        if (r.verdict == Verdict::False && !r.asserted && r.step != "iii.closed-form") return VerdictFail;
    return Success;
}

inline Record search_record(const SearchResult& r, const Options& opt) {
    Record rec{{"search.n", std::to_string(r.n)},
               {"search.k", std::to_string(r.k)},
               {"search.max_edges", std::to_string(r.max_edges)},
               {"search.optimal", r.optimal ? "true" : "false"},
               {"search.explored", std::to_string(r.explored)},
               {"search.witness_graph6", [&] {
                    auto s = write_graph6(r.witness);
                    s.pop_back();
                    return s;
                }()}};
    if (!opt.no_timing) rec.emplace_back("search.elapsed_ms", fixed(r.elapsed_ms, 1));
    return rec;
}

inline int cmd_search(std::size_t n, std::size_t k, const SearchBudget& budget, const std::string& out_path,
                      const Options& opt, std::ostream& out) {
    SearchResult r;
    int code = Success;
    try {
        r = ex_exact(n, k, budget, opt.threads);
    } catch (const BudgetExceededError& e) {
        r = e.incumbent();
        code = Budget;
    }
    if (!out_path.empty()) write_text_file(out_path, write_graph6(r.witness));
    std::string text = "ex(" + std::to_string(n) + ", " + forbidden_set(k) + ") " + (r.optimal ? "= " : ">= ") +
                       std::to_string(r.max_edges) + "\n";
    if (!r.optimal) text += "budget exhausted; value is a lower bound only\n";
    text += "explored " + std::to_string(r.explored) + "\n";
    auto w = write_graph6(r.witness);
    text += "witness " + w;
    if (!out_path.empty()) text += "wrote " + out_path + "\n";
    if (!opt.no_timing) text += "elapsed_ms " + fixed(r.elapsed_ms, 1) + "\n";
    emit(out, opt, search_record(r, opt), text);
    return code;
}

inline int cmd_table(std::size_t n_max, std::size_t k, const SearchBudget& budget, const Options& opt, std::ostream& out) {
    std::vector<SearchResult> rows;
    int code = Success;
    try {
        rows = ex_table(n_max, k, budget, opt.threads);
    } catch (const BudgetExceededError& e) {
        code = Budget;
        out << "budget exhausted at n=" << e.incumbent().n << "\n";
        // rows completed before the failing one
        for (std::size_t n = 1; n < e.incumbent().n; ++n) rows.push_back(ex_exact(n, k, budget, opt.threads));
        rows.push_back(e.incumbent());
    }
    Record rec;
    std::vector<std::vector<std::string>> cells;
    double total_ms = 0;
    for (const auto& r : rows) {
        const bool t1 = theorem1_holds(r.max_edges, r.n, k);
        const double ratio = 2.0 * static_cast<double>(r.max_edges) /
                             std::pow(static_cast<double>(r.n), 1.0 + 1.0 / static_cast<double>(k));
        const std::string p = "table." + std::to_string(r.n) + ".";
        rec.emplace_back(p + "max_edges", std::to_string(r.max_edges));
        rec.emplace_back(p + "optimal", r.optimal ? "true" : "false");
        rec.emplace_back(p + "theorem1", t1 ? "true" : "false");
        rec.emplace_back(p + "ratio", fixed(ratio));
        cells.push_back({std::to_string(r.n), std::to_string(r.max_edges) + (r.optimal ? "" : "+"), t1 ? "true" : "false",
                         fixed(ratio)});
        total_ms += r.elapsed_ms;
    }
    if (!opt.no_timing) rec.emplace_back("table.elapsed_ms", fixed(total_ms, 1));
    std::string text = "ex(n, " + forbidden_set(k) + ")\n" + format_table({"n", "ex", "theorem1", "2ex/n^(1+1/k)"}, cells);
    if (!opt.no_timing) text += "elapsed_ms " + fixed(total_ms, 1) + "\n";
    emit(out, opt, rec, text);
    return code;
}

/// Runs the CLI on argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Constructions, certificates and exact extremal numbers for graphs without short even cycles",
                 "evencycle"};
    app.footer(exit_code_help);
    app.require_subcommand(1);
    Options opt;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--threads", opt.threads, "worker threads (0 = all cores)");
        sub->add_flag("--records", opt.records, "key=value output");
        sub->add_flag("--no-timing", opt.no_timing, "omit timing lines");
    };

    std::string construction, out_path, format = "edgelist", in;
    std::uint32_t q = 0;
    std::size_t k = 2, n = 0, n_max = 0, m = 0;
    Vertex u = 0, v = 0;
    std::uint64_t budget_nodes = 0, budget_ms = 0;

    auto* gen = app.add_subcommand("generate", "build a construction and certify it");
    gen->add_option("construction", construction, "er | pg2 | w | w-polarity | hexagon")
        ->required()
        ->check(CLI::IsMember({"er", "pg2", "w", "w-polarity", "hexagon"}));
    gen->add_option("q", q, "order of the field")->required();
    gen->add_option("--out", out_path, "write the graph here (labels go to <out>.labels)");
    gen->add_option("--format", format, "edgelist | graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
    common(gen);

    auto* cert = app.add_subcommand("certify", "check a graph for even cycles of length <= 2k");
    cert->add_option("input", in, "edge list or graph6 file")->required();
    cert->add_option("--k", k, "forbid even cycles up to 2k")->required();
    common(cert);

    auto* vine = app.add_subcommand("vine", "vine decomposition of the short u-v paths");
    vine->add_option("input", in, "edge list or graph6 file")->required();
    vine->add_option("--u", u)->required();
    vine->add_option("--v", v)->required();
    vine->add_option("--k", k)->required();
    common(vine);

    auto* bnd = app.add_subcommand("bounds", "evaluate the edge and degree bounds");
    auto* n_opt = bnd->add_option("--n", n, "vertex count for symbolic evaluation");
    auto* m_opt = bnd->add_option("--m", m, "edge count to test against the edge bound");
    bnd->add_option("--in", in, "graph to measure");
    bnd->add_option("--k", k)->required();
    common(bnd);

    auto* srch = app.add_subcommand("search", "exact ex(n, {C4..C2k})");
    srch->add_option("--n", n)->required();
    srch->add_option("--k", k)->required();
    srch->add_option("--out", out_path, "write the witness as graph6");
    srch->add_option("--budget-nodes", budget_nodes, "node limit (default from EVENCYCLE_BUDGET_NODES)");
    srch->add_option("--budget-ms", budget_ms, "wall-clock limit in milliseconds");
    common(srch);

    auto* tbl = app.add_subcommand("table", "ex(n, {C4..C2k}) for n = 1..n-max");
    tbl->add_option("--n-max", n_max)->required();
    tbl->add_option("--k", k)->required();
    tbl->add_option("--budget-nodes", budget_nodes);
    tbl->add_option("--budget-ms", budget_ms);
    common(tbl);

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    for (auto& a : storage) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? Success : Usage;
    }

    try {
        if (k < 2) throw Error(ErrorCode::UnsupportedOrder, "--k must be at least 2");
        SearchBudget budget = SearchBudget::from_environment();
        if (budget_nodes) budget.max_nodes = budget_nodes;
        if (budget_ms) budget.max_millis = budget_ms;
        if (*gen) return cmd_generate(construction, q, out_path, format, opt, out);
        if (*cert) return cmd_certify(in, k, opt, out);
        if (*vine) return cmd_vine(in, u, v, k, opt, out);
        if (*bnd) {
            return cmd_bounds(n_opt->count() ? std::optional<std::size_t>(n) : std::nullopt, in, k,
                              m_opt->count() ? std::optional<std::size_t>(m) : std::nullopt, opt, out);
        }
        if (*srch) {
            if (n < 1 || n > SmallGraph::max_vertices) throw Error(ErrorCode::UnsupportedOrder, "--n must lie in 1..32");
            return cmd_search(n, k, budget, out_path, opt, out);
        }
        if (*tbl) {
            if (n_max < 1 || n_max > SmallGraph::max_vertices)
                throw Error(ErrorCode::UnsupportedOrder, "--n-max must lie in 1..32");
            return cmd_table(n_max, k, budget, opt, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return Usage;
}

} // namespace evencycle::cli
