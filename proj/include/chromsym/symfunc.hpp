#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromsym/linalg.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/rational.hpp"

namespace chromsym {

enum class Basis { M, E, S };

inline char basis_letter(Basis b) {
    switch (b) {
        case Basis::M: return 'm';
        case Basis::E: return 'e';
        case Basis::S: return 's';
    }
    throw std::logic_error("bad basis");
}

inline Basis basis_from_letter(char c) {
    switch (c) {
        case 'm': return Basis::M;
        case 'e': return Basis::E;
        case 's': return Basis::S;
    }
    throw std::invalid_argument(std::string("unknown basis '") + c + "'");
}

// Homogeneous symmetric function of fixed degree: a basis tag plus a sparse
// map partition -> exact rational coefficient. Every key is a partition of
// exactly the degree; zero coefficients are never stored.
class SymFunc {
public:
    using Terms = std::map<Partition, Rational, PartitionLess>;

    SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {
        if (degree < 0) throw std::invalid_argument("negative degree");
    }

    static SymFunc zero(int degree, Basis basis) { return SymFunc(degree, basis); }

    static SymFunc one(Basis basis) {
        SymFunc f(0, basis);
        f.add_term(Partition(), 1);
        return f;
    }

    static SymFunc monomial(Basis basis, const Partition& p, const Rational& c = 1) {
        SymFunc f(p.weight(), basis);
        f.add_term(p, c);
        return f;
    }

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    SymFunc& add_term(const Partition& p, const Rational& c) {
        if (p.weight() != degree_)
            throw std::invalid_argument("term weight " + std::to_string(p.weight()) +
                                        " does not match degree " + std::to_string(degree_));
        if (c == 0) return *this;
        auto [it, inserted] = terms_.emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    friend SymFunc operator+(const SymFunc& f, const SymFunc& g) {
        if (f.degree_ != g.degree_ || f.basis_ != g.basis_)
            throw std::invalid_argument("add: degree/basis mismatch");
        SymFunc r = f;
        for (const auto& [p, c] : g.terms_) r.add_term(p, c);
        return r;
    }

    friend SymFunc operator-(const SymFunc& f, const SymFunc& g) {
        return f + Rational(-1) * g;
    }

    friend SymFunc operator*(const Rational& c, const SymFunc& f) {
        SymFunc r(f.degree_, f.basis_);
        if (c == 0) return r;
        for (const auto& [p, a] : f.terms_) r.terms_.emplace(p, c * a);
        return r;
    }

    bool operator==(const SymFunc& o) const {
        return degree_ == o.degree_ && basis_ == o.basis_ && terms_ == o.terms_;
    }
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [p, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += rational_to_string(c) + "*" + basis_letter(basis_) + p.to_string();
        }
        return s;
    }

private:
    int degree_;
    Basis basis_;
    Terms terms_;
};

inline SymFunc e_monomial(const Partition& p) { return SymFunc::monomial(Basis::E, p); }
inline SymFunc m_monomial(const Partition& p) { return SymFunc::monomial(Basis::M, p); }
inline SymFunc s_monomial(const Partition& p) { return SymFunc::monomial(Basis::S, p); }

namespace detail {

// Number of ways to split the exponent vector of nu slot-by-slot into a
// padded rearrangement of a plus a padded rearrangement of b. Weight
// accounting makes every completed assignment exhaust both multisets.
inline Int count_splits(const std::vector<int>& slots, std::size_t i,
                        std::map<int, int>& rem_a, std::map<int, int>& rem_b) {
    if (i == slots.size()) return 1;
    Int total = 0;
    int v = slots[i];
    if (auto it = rem_b.find(v); it != rem_b.end() && it->second > 0) {
        --it->second;
        total += count_splits(slots, i + 1, rem_a, rem_b);
        ++it->second;
    }
    for (auto& [x, cx] : rem_a) {
        if (cx == 0 || x > v) continue;
        int y = v - x;
        if (y == 0) {
            --cx;
            total += count_splits(slots, i + 1, rem_a, rem_b);
            ++cx;
        } else if (auto it = rem_b.find(y); it != rem_b.end() && it->second > 0) {
            --cx;
            --it->second;
            total += count_splits(slots, i + 1, rem_a, rem_b);
            ++it->second;
            ++cx;
        }
    }
    return total;
}

// Product rule in the monomial basis: the coefficient of m_nu in m_a * m_b
// counts pairs of padded rearrangements summing to nu's exponent vector.
inline std::map<Partition, Int, PartitionLess> m_product(const Partition& a,
                                                         const Partition& b) {
    std::map<Partition, Int, PartitionLess> out;
    int N = a.weight() + b.weight();
    for (const Partition& nu : partitions_of(N)) {
        if (nu.length() > a.length() + b.length()) continue;
        auto rem_a = a.multiplicities();
        auto rem_b = b.multiplicities();
        Int c = count_splits(nu.parts(), 0, rem_a, rem_b);
        if (c != 0) out.emplace(nu, c);
    }
    return out;
}

inline SymFunc m_multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc r(f.degree() + g.degree(), Basis::M);
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms())
            for (const auto& [nu, cnt] : m_product(a, b))
                r.add_term(nu, ca * cb * Rational(cnt));
    return r;
}

}  // namespace detail

// Jacobi-Trudi expansion of a Schur function into elementary symmetric
// functions: the lambda_1 x lambda_1 determinant with entries indexed by
// the transpose, where e_0 = 1 and negative indices give zero.
inline SymFunc schur_in_e(const Partition& lambda) {
    int N = lambda.weight();
    if (lambda.empty()) return SymFunc::one(Basis::E);
    int k = lambda.parts()[0];
    std::vector<int> tp(k, 0);
    {
        const Partition tr = lambda.transpose();
        for (std::size_t i = 0; i < tr.parts().size(); ++i) tp[i] = tr.parts()[i];
    }
    SymFunc out(N, Basis::E);
    std::vector<int> chosen;  // positive e-indices along the permutation
    // DFS over rows, choosing an unused column each time; prune entries that
    // are structurally zero or overshoot the total degree.
    auto rec = [&](auto&& self, int row, unsigned used, int sign, int weight) -> void {
        if (row == k) {
            out.add_term(Partition(chosen), sign);
            return;
        }
        for (int col = 0; col < k; ++col) {
            if (used & (1u << col)) continue;
            int idx = tp[row] - row + col;  // 0-based row/col cancel out
            if (idx < 0 || weight + idx > N) continue;
            int inversions = 0;
            for (int c = col + 1; c < k; ++c)
                if (used & (1u << c)) ++inversions;
            int s = (inversions % 2 == 0) ? sign : -sign;
            if (idx > 0) chosen.push_back(idx);
            self(self, row + 1, used | (1u << col), s, weight + idx);
            if (idx > 0) chosen.pop_back();
        }
    };
    rec(rec, 0, 0u, 1, 0);
    return out;
}

// Cached change-of-basis data at a fixed degree. Matrix convention:
// x_to_m[i][j] is the coefficient of m_{parts[j]} in the i-th basis element,
// with rows/columns in canonical partition order.
struct TransitionTable {
    int degree = 0;
    std::vector<Partition> parts;
    std::map<Partition, int, PartitionLess> index;
    detail::Matrix e_to_m, m_to_e, s_to_m, m_to_s;
};

namespace detail {

inline std::shared_ptr<const TransitionTable> build_transition_table(int N) {
    auto t = std::make_shared<TransitionTable>();
    t->degree = N;
    t->parts = partitions_of(N);
    std::size_t p = t->parts.size();
    for (std::size_t i = 0; i < p; ++i) t->index.emplace(t->parts[i], static_cast<int>(i));

    // e_lambda = product of m_{(1^k)} over the parts, multiplied out in M.
    t->e_to_m.assign(p, std::vector<Rational>(p, 0));
    for (std::size_t i = 0; i < p; ++i) {
        SymFunc prod = SymFunc::one(Basis::M);
        for (int part : t->parts[i].parts()) {
            std::vector<int> ones(part, 1);
            prod = m_multiply(prod, m_monomial(Partition(ones)));
        }
        for (const auto& [mu, c] : prod.terms()) t->e_to_m[i][t->index.at(mu)] = c;
    }
    t->m_to_e = invert(t->e_to_m);

    t->s_to_m.assign(p, std::vector<Rational>(p, 0));
    for (std::size_t i = 0; i < p; ++i) {
        SymFunc s = schur_in_e(t->parts[i]);
        for (const auto& [mu, c] : s.terms()) {
            std::size_t r = t->index.at(mu);
            for (std::size_t j = 0; j < p; ++j) t->s_to_m[i][j] += c * t->e_to_m[r][j];
        }
    }
    t->m_to_s = invert(t->s_to_m);
    return t;
}

}  // namespace detail

// Lazily built per degree; concurrent first-build may duplicate work but
// insertion is idempotent, so readers always see an identical table.
inline const TransitionTable& transition_table(int N) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const TransitionTable>> cache;
    {
        std::scoped_lock lk(mu);
        auto it = cache.find(N);
        if (it != cache.end()) return *it->second;
    }
    auto built = detail::build_transition_table(N);
    std::scoped_lock lk(mu);
    auto [it, inserted] = cache.emplace(N, std::move(built));
    return *it->second;
}

inline SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    const TransitionTable& t = transition_table(f.degree());
    std::size_t p = t.parts.size();

    // route through M
    std::vector<Rational> m_coeffs(p, 0);
    if (f.basis() == Basis::M) {
        for (const auto& [mu, c] : f.terms()) m_coeffs[t.index.at(mu)] = c;
    } else {
        const detail::Matrix& rows = (f.basis() == Basis::E) ? t.e_to_m : t.s_to_m;
        for (const auto& [lam, c] : f.terms()) {
            std::size_t i = t.index.at(lam);
            for (std::size_t j = 0; j < p; ++j) m_coeffs[j] += c * rows[i][j];
        }
    }

    SymFunc r(f.degree(), target);
    if (target == Basis::M) {
        for (std::size_t j = 0; j < p; ++j) r.add_term(t.parts[j], m_coeffs[j]);
        return r;
    }
    const detail::Matrix& inv = (target == Basis::E) ? t.m_to_e : t.m_to_s;
    for (std::size_t i = 0; i < p; ++i) {
        Rational c = 0;
        for (std::size_t j = 0; j < p; ++j)
            if (m_coeffs[j] != 0) c += m_coeffs[j] * inv[j][i];
        r.add_term(t.parts[i], c);
    }
    return r;
}

// Ring product. E-basis inputs multiply by partition concatenation; anything
// else is routed through the monomial-basis kernel.
inline SymFunc operator*(const SymFunc& f, const SymFunc& g) {
    if (f.basis() == Basis::E && g.basis() == Basis::E) {
        SymFunc r(f.degree() + g.degree(), Basis::E);
        for (const auto& [a, ca] : f.terms())
            for (const auto& [b, cb] : g.terms()) {
                std::vector<int> parts = a.parts();
                parts.insert(parts.end(), b.parts().begin(), b.parts().end());
                r.add_term(Partition(parts), ca * cb);
            }
        return r;
    }
    return detail::m_multiply(convert(f, Basis::M), convert(g, Basis::M));
}

inline bool is_e_positive(const SymFunc& f) {
    const SymFunc e = convert(f, Basis::E);
    for (const auto& [p, c] : e.terms())
        if (c < 0) return false;
    return true;
}

inline bool is_schur_positive(const SymFunc& f) {
    const SymFunc s = convert(f, Basis::S);
    for (const auto& [p, c] : s.terms())
        if (c < 0) return false;
    return true;
}

// Evaluate at x variables set to 1: e_lambda(1^x) = prod C(x, lambda_i).
inline Rational specialize_ones(const SymFunc& f, int x) {
    if (x < 0) throw std::invalid_argument("specialize_ones: negative x");
    Rational total = 0;
    const SymFunc e = convert(f, Basis::E);
    for (const auto& [lam, c] : e.terms()) {
        Int prod = 1;
        for (int p : lam.parts()) prod *= binomial(Int(x), p);
        total += c * Rational(prod);
    }
    return total;
}

// Equality as symmetric functions, independent of the bases the operands
// happen to be expressed in.
inline bool equivalent(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree()) return false;
    return convert(f, Basis::M) == convert(g, Basis::M);
}

}  // namespace chromsym
