#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "chromsym/graph.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/symfunc.hpp"

namespace chromsym {

namespace detail {

// Ordered-choice correction between set partitions and monomials: a stable
// partition of type lambda contributes to m_lambda once per assignment of
// its equal-sized blocks to distinct variables, i.e. prod_i a_i! where a_i
// is the multiplicity of part i. All multiplicity bookkeeping lives here.
inline Int pattern_symmetry_factor(const Partition& lambda) {
    Int f = 1;
    for (const auto& [part, count] : lambda.multiplicities()) f *= factorial(count);
    return f;
}

// Number of distinct monomials of exponent type lambda in nvars variables.
inline Int monomial_orbit_size(const Partition& lambda, int nvars) {
    Int f = factorial(nvars) / factorial(nvars - lambda.length());
    return f / pattern_symmetry_factor(lambda);
}

}  // namespace detail

// Chromatic symmetric function via stable-partition enumeration: partitions
// of the vertex set into independent blocks, binned by block-size type.
inline SymFunc chromatic_sym(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return SymFunc::one(Basis::M);
    if (n > 63) throw std::invalid_argument("chromatic_sym: too many vertices");
    std::vector<std::uint64_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.first] |= std::uint64_t{1} << e.second;
        adj[e.second] |= std::uint64_t{1} << e.first;
    }
    std::map<Partition, Int, PartitionLess> counts;
    std::vector<std::uint64_t> members;    // one mask per block
    std::vector<std::uint64_t> conflicts;  // union of neighbours of members
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            std::vector<int> sizes;
            for (std::uint64_t m : members) {
                int s = 0;
                for (std::uint64_t x = m; x; x &= x - 1) ++s;
                sizes.push_back(s);
            }
            ++counts[Partition(sizes)];
            return;
        }
        std::uint64_t bit = std::uint64_t{1} << v;
        for (std::size_t b = 0; b < members.size(); ++b) {
            if (conflicts[b] & bit) continue;
            std::uint64_t old_conf = conflicts[b];
            members[b] |= bit;
            conflicts[b] |= adj[v];
            self(self, v + 1);
            members[b] &= ~bit;
            conflicts[b] = old_conf;
        }
        members.push_back(bit);
        conflicts.push_back(adj[v]);
        self(self, v + 1);
        members.pop_back();
        conflicts.pop_back();
    };
    rec(rec, 0);
    SymFunc f(n, Basis::M);
    for (const auto& [lambda, cnt] : counts)
        f.add_term(lambda, Rational(cnt * detail::pattern_symmetry_factor(lambda)));
    return f;
}

// Literal transcription of the definition as an oracle: enumerate all proper
// colourings with |V| colours and recover m-coefficients from pattern counts.
inline SymFunc brute_force_csf(const Graph& g, int oracle_limit = 10) {
    int n = g.vertex_count();
    if (n > oracle_limit)
        throw std::invalid_argument("brute_force_csf: graph exceeds oracle limit");
    if (n == 0) return SymFunc::one(Basis::M);
    std::vector<std::vector<int>> earlier(n);  // neighbours with smaller index
    for (const Edge& e : g.edges()) earlier[e.second].push_back(e.first);
    std::map<Partition, Int, PartitionLess> counts;
    std::vector<int> colour(n, 0), used(n + 1, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            std::vector<int> pattern;
            for (int c = 1; c <= n; ++c)
                if (used[c] > 0) pattern.push_back(used[c]);
            ++counts[Partition(pattern)];
            return;
        }
        for (int c = 1; c <= n; ++c) {
            bool ok = true;
            for (int u : earlier[v])
                if (colour[u] == c) { ok = false; break; }
            if (!ok) continue;
            colour[v] = c;
            ++used[c];
            self(self, v + 1);
            --used[c];
        }
    };
    rec(rec, 0);
    SymFunc f(n, Basis::M);
    for (const auto& [lambda, cnt] : counts) {
        Rational coeff = Rational(cnt) / Rational(detail::monomial_orbit_size(lambda, n));
        if (denominator(coeff) != 1)
            throw std::logic_error("brute_force_csf: non-integral coefficient");
        f.add_term(lambda, coeff);
    }
    return f;
}

namespace detail {

inline std::string graph_key(const Graph& g) {
    std::string s = std::to_string(g.vertex_count());
    for (const Edge& e : g.edges()) {
        s += ';';
        s += std::to_string(e.first);
        s += ',';
        s += std::to_string(e.second);
    }
    return s;
}

// Identify the endpoints of e, merging parallel edges and dropping the loop.
inline Graph contract_edge(const Graph& g, const Edge& e) {
    int u = e.first, v = e.second;
    Graph h(g.vertex_count() - 1);
    std::set<Edge> out;
    for (const Edge& f : g.edges()) {
        auto relabel = [&](int w) { return w == v ? u : (w > v ? w - 1 : w); };
        int a = relabel(f.first), b = relabel(f.second);
        if (a == b) continue;
        out.insert(make_edge(a, b));
    }
    for (const Edge& f : out) h.add_edge(f.first, f.second);
    return h;
}

inline Int deletion_contraction_rec(const Graph& g, int x,
                                    std::unordered_map<std::string, Int>& memo) {
    if (g.edge_count() == 0) {
        Int r = 1;
        for (int i = 0; i < g.vertex_count(); ++i) r *= x;
        return r;
    }
    std::string key = graph_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Edge e = *g.edges().begin();
    Int r = deletion_contraction_rec(delete_edges(g, {e}), x, memo) -
            deletion_contraction_rec(contract_edge(g, e), x, memo);
    memo.emplace(std::move(key), r);
    return r;
}

}  // namespace detail

// Chromatic polynomial value by recursive deletion-contraction. Contraction
// exists only inside this routine.
inline Int deletion_contraction_count(const Graph& g, int x) {
    if (x < 0) throw std::invalid_argument("negative colour count");
    std::unordered_map<std::string, Int> memo;
    return detail::deletion_contraction_rec(g, x, memo);
}

// Both evaluation paths must agree; disagreement is an internal failure.
inline Int chromatic_poly(const Graph& g, int x) {
    Rational via_sym = specialize_ones(chromatic_sym(g), x);
    Int via_dc = deletion_contraction_count(g, x);
    if (via_sym != via_dc)
        throw std::logic_error("chromatic_poly: specialization " + rational_to_string(via_sym) +
                               " disagrees with deletion-contraction " + via_dc.str() +
                               " on graph " + detail::graph_key(g) + " at x=" + std::to_string(x));
    return via_dc;
}

}  // namespace chromsym
