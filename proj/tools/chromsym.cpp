// Command-line front end: expansions for named families or graph files,
// chromatic polynomial evaluation, and the verification suite.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chromsym/csf.hpp"
#include "chromsym/formulas.hpp"
#include "chromsym/graph.hpp"
#include "chromsym/json_io.hpp"
#include "chromsym/symfunc.hpp"
#include "chromsym/verify.hpp"

namespace {

using namespace chromsym;

struct FamilySpec {
    std::string kind;
    int a = 0, b = 0;
};

FamilySpec parse_family(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family spec needs a colon, e.g. lollipop:3,6");
    FamilySpec f;
    f.kind = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);
    try {
        if (f.kind == "lollipop") {
            auto comma = args.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("lollipop takes two arguments, e.g. lollipop:3,6");
            f.a = std::stoi(args.substr(0, comma));
            f.b = std::stoi(args.substr(comma + 1));
        } else if (f.kind == "complete" || f.kind == "path" || f.kind == "lariat") {
            f.a = std::stoi(args);
        } else {
            throw std::invalid_argument("unknown family '" + f.kind + "'");
        }
    } catch (const std::logic_error& e) {
        throw std::invalid_argument("bad family spec '" + spec + "': " + e.what());
    }
    return f;
}

Graph family_graph(const FamilySpec& f) {
    if (f.kind == "complete") return complete(f.a);
    if (f.kind == "path") return path(f.a);
    if (f.kind == "lollipop") return lollipop(f.a, f.b);
    return lariat(f.a);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
    return graph_from_json(j);
}

Graph resolve_source(const std::string& graph_path, const std::string& family) {
    if (graph_path.empty() == family.empty())
        throw std::invalid_argument("exactly one of --graph and --family is required");
    return graph_path.empty() ? family_graph(parse_family(family)) : load_graph_file(graph_path);
}

void print_human(const SymFunc& f) {
    if (f.is_zero()) {
        std::cout << "0\n";
        return;
    }
    for (const auto& [p, c] : f.terms()) {
        std::cout << rational_to_string(c) << "·" << basis_letter(f.basis()) << "[";
        const auto& parts = p.parts();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << parts[i];
        }
        std::cout << "]\n";
    }
}

// chi_{L_{m,n}} factored per the closed form, with path/complete cases
// normalized to an equivalent lollipop where one exists.
std::string symbolic_chrom_poly(const FamilySpec& f) {
    int m = -1, n = -1;
    if (f.kind == "lollipop") {
        m = f.a;
        n = f.b;
    } else if (f.kind == "lariat") {
        m = 3;
        n = f.a - 3;
        if (n < 0) throw std::invalid_argument("lariat argument must be >= 3");
    } else if (f.kind == "complete") {
        m = f.a;
        n = 0;
    } else {  // path:p = L_{2,p-2}
        m = 2;
        n = f.a - 2;
    }
    if (m < 2) {  // degenerate lollipop is a path on its vertex count
        int t = (m == 1) ? n + 1 : n;
        m = 2;
        n = t - 2;
    }
    if (n < 0) {  // paths on 0 or 1 vertices
        return (m + n <= 0) ? "1" : "x";
    }
    std::string s = "x(x-1)";
    if (n + 1 > 1) s += "^" + std::to_string(n + 1);
    for (int j = 2; j <= m - 1; ++j) s += "(x-" + std::to_string(j) + ")";
    return s;
}

std::vector<CheckReport> run_kdeletion(int max_vertices) {
    std::vector<CheckReport> out;
    std::mt19937 rng(20260823);
    for (int k = 3; k <= 6; ++k) {
        std::vector<int> cycle(k);
        for (int i = 0; i < k; ++i) cycle[i] = i;
        for (int j = k; j <= 7; ++j) out.push_back(check_k_deletion(complete(j), cycle));
        // plain k-cycle plus 0..2 random chords
        for (int chords = 0; chords <= 2; ++chords) {
            Graph g(k);
            for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
            std::vector<Edge> candidates;
            for (int u = 0; u < k; ++u)
                for (int v = u + 1; v < k; ++v)
                    if (!g.has_edge(u, v)) candidates.push_back({u, v});
            if (static_cast<int>(candidates.size()) < chords) continue;
            std::shuffle(candidates.begin(), candidates.end(), rng);
            for (int c = 0; c < chords; ++c) g.add_edge(candidates[c].first, candidates[c].second);
            out.push_back(check_k_deletion(g, cycle));
        }
        // lollipops whose clique contains the k-cycle
        for (int m = k; m <= 7; ++m)
            for (int n = 1; m + n <= max_vertices; ++n)
                out.push_back(check_k_deletion(lollipop(m, n), cycle));
    }
    return out;
}

std::vector<CheckReport> run_recurrence(int max_degree) {
    std::vector<CheckReport> out;
    for (int m = 2; m <= 6; ++m)
        for (int n = 0; n <= 6 && m + n <= max_degree; ++n) {
            SymFunc rhs = lollipop_recurrence_rhs(m, n);
            SymFunc engine = convert(chromatic_sym(lollipop(m, n)), Basis::E);
            out.push_back(make_report(
                "lollipop_recurrence", "m=" + std::to_string(m) + " n=" + std::to_string(n),
                rhs == engine, "residual " + (rhs - engine).to_string()));
        }
    return out;
}

std::vector<CheckReport> run_closed_forms(int max_degree) {
    std::vector<CheckReport> out;
    for (int m = 2; m <= 6; ++m)
        for (int n = 0; n <= 6 && m + n <= max_degree; ++n) {
            SymFunc via_p = lollipop_via_paths(m, n);
            SymFunc via_k = lollipop_via_completes(m, n);
            SymFunc engine = convert(chromatic_sym(lollipop(m, n)), Basis::E);
            bool ok = via_p == via_k && via_k == engine;
            out.push_back(make_report(
                "lollipop_closed_forms", "m=" + std::to_string(m) + " n=" + std::to_string(n),
                ok, "paths form " + via_p.to_string() + "; completes form " + via_k.to_string() +
                        "; engine " + engine.to_string()));
        }
    return out;
}

std::vector<CheckReport> run_positivity(int max_degree, bool schur) {
    std::vector<CheckReport> out;
    for (int m = 0; m <= max_degree; ++m)
        for (int n = 0; m + n <= max_degree; ++n) {
            SymFunc x = chromatic_sym(lollipop(m, n));
            bool ok = schur ? is_schur_positive(x) : is_e_positive(x);
            out.push_back(make_report(schur ? "schur_positive" : "e_positive",
                                      "m=" + std::to_string(m) + " n=" + std::to_string(n), ok,
                                      "negative coefficient in " +
                                          convert(x, schur ? Basis::S : Basis::E).to_string()));
        }
    return out;
}

std::vector<LollipopSet> standard_lollipop_sets(int degree) {
    LollipopSet a, b, c;
    for (int i = 1; i <= degree; ++i) {
        a.choices.emplace_back(i, 0);
        b.choices.emplace_back(i >= 2 ? 2 : i, i >= 2 ? i - 2 : 0);
        c.choices.emplace_back(i >= 3 ? 3 : i, i >= 3 ? i - 3 : 0);
    }
    return {a, b, c};
}

std::vector<CheckReport> run_basis(int degree, int sets) {
    std::vector<CheckReport> out;
    auto all = standard_lollipop_sets(degree);
    if (sets < 1 || sets > static_cast<int>(all.size()))
        throw std::invalid_argument("--sets must be between 1 and 3");
    all.resize(sets);
    for (int N = 1; N <= degree; ++N)
        for (const auto& set : all) out.push_back(basis_certificate(N, set));
    // the generator sequences must be pairwise distinct
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            bool distinct = false;
            for (int d = 1; d <= degree && !distinct; ++d) {
                auto [m1, n1] = all[i].at_degree(d);
                auto [m2, n2] = all[j].at_degree(d);
                distinct = lollipop_csf(m1, n1) != lollipop_csf(m2, n2);
            }
            out.push_back(make_report(
                "basis_generators_distinct",
                "sets=" + std::to_string(i) + "," + std::to_string(j), distinct,
                "identical generator sequences " + all[i].to_string()));
        }
    return out;
}

std::vector<CheckReport> run_lariat(int max_n) {
    std::vector<CheckReport> out;
    for (int n = 0; n <= max_n; ++n)
        for (auto& r : check_lariat_theorem(n)) out.push_back(std::move(r));
    return out;
}

int run_checks(const std::string& selector, int max_degree, int degree, int sets) {
    std::vector<CheckReport> reports;
    auto want = [&](const std::string& s) { return selector == "all" || selector == s; };
    bool matched = false;
    if (want("kdeletion")) { matched = true; auto r = run_kdeletion(8); reports.insert(reports.end(), r.begin(), r.end()); }
    if (want("recurrence")) { matched = true; auto r = run_recurrence(max_degree); reports.insert(reports.end(), r.begin(), r.end()); }
    if (want("closedforms")) { matched = true; auto r = run_closed_forms(max_degree); reports.insert(reports.end(), r.begin(), r.end()); }
    if (want("epositive")) { matched = true; auto r = run_positivity(max_degree, false); reports.insert(reports.end(), r.begin(), r.end()); }
    if (want("schurpositive")) { matched = true; auto r = run_positivity(max_degree, true); reports.insert(reports.end(), r.begin(), r.end()); }
    if (want("lariat")) { matched = true; auto r = run_lariat(6); reports.insert(reports.end(), r.begin(), r.end()); }
    if (want("basis")) { matched = true; auto r = run_basis(degree, sets); reports.insert(reports.end(), r.begin(), r.end()); }
    if (want("distinctness")) { matched = true; reports.push_back(check_lollipop_distinctness(max_degree)); }
    if (want("counterexample")) { matched = true; reports.push_back(counterexample_conjecture6()); }
    if (!matched) throw std::invalid_argument("unknown check selector '" + selector + "'");

    std::sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
        return std::tie(a.check, a.params) < std::tie(b.check, b.params);
    });
    bool any_fail = false;
    for (const CheckReport& r : reports) {
        std::cout << report_to_json(r).dump() << "\n";
        any_fail = any_fail || r.failed();
    }
    return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic symmetric functions of lollipop and lariat graphs"};
    app.require_subcommand(1);

    std::string graph_path, family, basis = "e", selector;
    bool as_json = false, symbolic = false;
    int at = -1, max_degree = 9, degree = 6, sets = 3;

    CLI::App* csf_cmd = app.add_subcommand("csf", "expand the chromatic symmetric function");
    csf_cmd->add_option("--graph", graph_path, "JSON graph file");
    csf_cmd->add_option("--family", family, "complete:m | path:n | lollipop:m,n | lariat:k");
    csf_cmd->add_option("--basis", basis, "target basis: m, e or s")->check(CLI::IsMember({"m", "e", "s"}));
    csf_cmd->add_flag("--json", as_json, "emit the JSON serialization");

    CLI::App* poly_cmd = app.add_subcommand("chrompoly", "evaluate the chromatic polynomial");
    poly_cmd->add_option("--graph", graph_path, "JSON graph file");
    poly_cmd->add_option("--family", family, "complete:m | path:n | lollipop:m,n | lariat:k");
    poly_cmd->add_option("--at", at, "number of colours")->check(CLI::NonNegativeNumber);
    poly_cmd->add_flag("--symbolic", symbolic, "print the factored lollipop form");

    CLI::App* check_cmd = app.add_subcommand("check", "run verification suites");
    check_cmd->add_option("selector", selector,
                          "kdeletion|recurrence|closedforms|epositive|schurpositive|"
                          "lariat|basis|distinctness|counterexample|all")
        ->required();
    check_cmd->add_option("--max-degree", max_degree, "largest vertex count for grid checks");
    check_cmd->add_option("--degree", degree, "largest degree for basis certificates");
    check_cmd->add_option("--sets", sets, "number of lollipop generator sets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (csf_cmd->parsed()) {
            Graph g = resolve_source(graph_path, family);
            SymFunc f = convert(chromatic_sym(g), basis_from_letter(basis[0]));
            if (as_json)
                std::cout << symfunc_to_json(f).dump() << "\n";
            else
                print_human(f);
            return 0;
        }
        if (poly_cmd->parsed()) {
            if (symbolic) {
                if (family.empty())
                    throw std::invalid_argument("--symbolic requires --family");
                std::cout << symbolic_chrom_poly(parse_family(family)) << "\n";
                return 0;
            }
            if (at < 0) throw std::invalid_argument("chrompoly needs --at or --symbolic");
            Graph g = resolve_source(graph_path, family);
            std::cout << chromatic_poly(g, at).str() << "\n";
            return 0;
        }
        return run_checks(selector, max_degree, degree, sets);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
