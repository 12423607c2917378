#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromsym/csf.hpp"
#include "chromsym/graph.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/rational.hpp"
#include "chromsym/symfunc.hpp"

// Closed formulas for the named graph families, implemented independently of
// the enumeration engine so each side can verify the other.

namespace chromsym {

// X_{K_m} = m! e_m.
inline SymFunc complete_csf(int m) {
    if (m < 0) throw std::invalid_argument("complete_csf: negative m");
    if (m == 0) return SymFunc::one(Basis::E);
    return SymFunc::monomial(Basis::E, Partition({m}), Rational(factorial(m)));
}

// Wolfe's formula for the coefficient of e_lambda in X_{P_n}: a multinomial
// term plus one corrected term per part value present, with 0^0 = 1 and any
// multinomial with a negative entry equal to 0.
inline Int path_e_coeff(const Partition& lambda, int n) {
    if (lambda.weight() != n)
        throw std::invalid_argument("path_e_coeff: partition weight != n");
    if (n < 1) throw std::invalid_argument("path_e_coeff: n must be >= 1");
    auto mult = lambda.multiplicities();
    int total = lambda.length();  // a_1 + ... + a_n

    std::vector<int> entries;
    for (const auto& [j, aj] : mult) entries.push_back(aj);

    Int first = multinomial(total, entries);
    for (const auto& [j, aj] : mult) first *= ipow(j - 1, aj);

    Int second = 0;
    for (const auto& [i, ai] : mult) {
        std::vector<int> lowered;
        for (const auto& [j, aj] : mult) lowered.push_back(j == i ? aj - 1 : aj);
        Int t = multinomial(total - 1, lowered);
        for (const auto& [j, aj] : mult)
            if (j != i) t *= ipow(j - 1, aj);
        t *= ipow(i - 1, ai - 1);
        second += t;
    }
    return first + second;
}

// X_{P_n} assembled from the Wolfe coefficients over all lambda of n.
inline SymFunc path_csf(int n) {
    if (n < 0) throw std::invalid_argument("path_csf: negative n");
    if (n == 0) return SymFunc::one(Basis::E);
    SymFunc f(n, Basis::E);
    for (const Partition& lam : partitions_of(n)) {
        Int c = path_e_coeff(lam, n);
        if (c != 0) f.add_term(lam, Rational(c));
    }
    return f;
}

namespace detail {

// X_{L_{m,n}} by the recurrence, grounded in paths: L_{1,n} = P_{n+1} and
// L_{0,n} = P_n.
inline SymFunc lollipop_by_recurrence(int m, int n) {
    if (m == 0) return path_csf(n);
    if (m == 1) return path_csf(n + 1);
    SymFunc rhs = Rational(m - 1) * lollipop_by_recurrence(m - 1, n + 1);
    if (m > 2) rhs = rhs - Rational(m - 2) * (complete_csf(m - 1) * path_csf(n + 1));
    return rhs;
}

}  // namespace detail

// Right-hand side of X_{L_{m,n}} = (m-1) X_{L_{m-1,n+1}} - (m-2) X_{K_{m-1}} X_{P_{n+1}}.
inline SymFunc lollipop_recurrence_rhs(int m, int n) {
    if (m < 2 || n < 0) throw std::invalid_argument("lollipop_recurrence_rhs: need m >= 2, n >= 0");
    SymFunc rhs = Rational(m - 1) * detail::lollipop_by_recurrence(m - 1, n + 1);
    if (m > 2) rhs = rhs - Rational(m - 2) * (complete_csf(m - 1) * path_csf(n + 1));
    return rhs;
}

// X_{L_{m,n}} = (m-1)! ( X_{P_{n+m}} - sum_{i=1}^{m-2} (m-i-1)/(m-i)! X_{K_{m-i}} X_{P_{n+i}} ).
inline SymFunc lollipop_via_paths(int m, int n) {
    if (m < 2 || n < 0) throw std::invalid_argument("lollipop_via_paths: need m >= 2, n >= 0");
    SymFunc acc = path_csf(n + m);
    for (int i = 1; i <= m - 2; ++i) {
        Rational c(Int(m - i - 1), factorial(m - i));
        acc = acc - c * (complete_csf(m - i) * path_csf(n + i));
    }
    return Rational(factorial(m - 1)) * acc;
}

// X_{L_{m,n}} = (m-1)!/(m+n-1)! X_{K_{m+n}}
//             + sum_{i=0}^{n-1} (m+i-1)/(m(m+1)...(m+i)) X_{K_{m+i}} X_{P_{n-i}}.
// Every summand is e-positive, so this form is the constructive witness.
inline SymFunc lollipop_via_completes(int m, int n) {
    if (m < 2 || n < 0) throw std::invalid_argument("lollipop_via_completes: need m >= 2, n >= 0");
    SymFunc acc = Rational(factorial(m - 1), factorial(m + n - 1)) * complete_csf(m + n);
    Int rising = 1;  // m(m+1)...(m+i)
    for (int i = 0; i <= n - 1; ++i) {
        rising *= (m + i);
        Rational c(Int(m + i - 1), rising);
        acc = acc + c * (complete_csf(m + i) * path_csf(n - i));
    }
    return acc;
}

// Canonical entry point for X_{L_{m,n}}: the e-positive closed form, cross
// checked against the enumeration engine at desk scale.
inline SymFunc lollipop_csf(int m, int n, int engine_check_limit = 9) {
    if (m < 0 || n < 0) throw std::invalid_argument("lollipop_csf: negative argument");
    SymFunc f = (m >= 2) ? lollipop_via_completes(m, n)
                         : (m == 1 ? path_csf(n + 1) : path_csf(n));
    if (m + n <= engine_check_limit && !equivalent(f, chromatic_sym(lollipop(m, n))))
        throw std::logic_error("lollipop_csf: closed form disagrees with engine at m=" +
                               std::to_string(m) + ", n=" + std::to_string(n));
    return f;
}

// chi_{L_{m,n}}(x) = x (x-1)^{n+1} (x-2)...(x-(m-1)); the trailing product is
// empty for m = 2.
inline Int lollipop_chrom_poly(int m, int n, int x) {
    if (m < 2 || n < 0 || x < 0)
        throw std::invalid_argument("lollipop_chrom_poly: need m >= 2, n >= 0, x >= 0");
    Int r = x;
    for (int i = 0; i <= n; ++i) r *= (x - 1);
    for (int j = 2; j <= m - 1; ++j) r *= (x - j);
    return r;
}

// X_{L_{n+3}} = 2 X_{P_{n+3}} - 2 e_2 X_{P_{n+1}}.
inline SymFunc lariat_csf(int n) {
    if (n < 0) throw std::invalid_argument("lariat_csf: negative n");
    return Rational(2) * path_csf(n + 3) -
           Rational(2) * (e_monomial(Partition({2})) * path_csf(n + 1));
}

// Closed-form lariat coefficient claims: (3) e_{(n+1,2)} -> 4n,
// (4) e_{(n,2,1)} -> 2(n-1), (5) e_{(n-1,2,2)} -> 4(n-2). The claims are
// verified only where the named parts do not collide (n >= 2 / 3 / 4); below
// that the regime is flagged rather than silently asserted, and the named
// partition may not even exist.
struct LariatClaim {
    int part;                         // 3, 4 or 5
    std::optional<Partition> lambda;  // absent when a named part would be < 1
    Int value;
    bool collision_free;
};

inline LariatClaim lariat_coefficient_claim(int part, int n) {
    if (n < 0) throw std::invalid_argument("lariat_coefficient_claim: negative n");
    LariatClaim c{part, std::nullopt, 0, false};
    switch (part) {
        case 3:
            c.lambda = Partition({n + 1, 2});
            c.value = Int(4) * n;
            c.collision_free = n >= 2;
            break;
        case 4:
            if (n >= 1) c.lambda = Partition({n, 2, 1});
            c.value = Int(2) * (n - 1);
            c.collision_free = n >= 3;
            break;
        case 5:
            if (n >= 2) c.lambda = Partition({n - 1, 2, 2});
            c.value = Int(4) * (n - 2);
            c.collision_free = n >= 4;
            break;
        default:
            throw std::invalid_argument("lariat_coefficient_claim: part must be 3, 4 or 5");
    }
    return c;
}

}  // namespace chromsym
