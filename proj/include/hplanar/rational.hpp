#ifndef HPLANAR_RATIONAL_HPP
#define HPLANAR_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <string>

namespace hplanar {

// Exact rational arithmetic; all counting results are bit-exact.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q". Returns nullopt on malformed input.
inline std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) return std::nullopt;
    }
    auto slash = s.find('/');
    if (slash == 0 || slash == s.size() - 1) return std::nullopt;
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

inline std::string format_rational(const Rational& r) {
    Rational c = r;
    c.canonicalize();  // mpq_class(p, q) does not reduce on its own
    return c.get_str();
}

// Exact square root of a rational that is a perfect square; nullopt otherwise.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer num = r.get_num(), den = r.get_den();
    Integer sn, sd, rem;
    mpz_sqrtrem(sn.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t());
    if (rem != 0) return std::nullopt;
    mpz_sqrtrem(sd.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace hplanar

#endif
