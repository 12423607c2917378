#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chromsym {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Binomial coefficient C(n, k) for integer n >= 0; zero for k < 0 or k > n.
inline Int binomial(const Int& n, int k) {
    if (k < 0) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// Multinomial coefficient; zero if any entry is negative or the entries do
// not sum to total.
inline Int multinomial(int total, const std::vector<int>& ks) {
    if (total < 0) return 0;
    long long sum = 0;
    for (int k : ks) {
        if (k < 0) return 0;
        sum += k;
    }
    if (sum != total) return 0;
    Int r = factorial(total);
    for (int k : ks) r /= factorial(k);
    return r;
}

// Integer power with the convention 0^0 = 1.
inline Int ipow(int base, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    Int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

inline std::string rational_to_string(const Rational& q) {
    return q.str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(num, den);
}

}  // namespace chromsym
