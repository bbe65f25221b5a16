#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace halg {

/// Exact arbitrary-precision rational scalar. The whole library computes
/// over these; there is no floating point anywhere in the core.
using Rat = mpq_class;

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

/// Parses "p/q" or "p" with optional sign; throws on zero denominator.
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r(mpz_class(s));
            return r;
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw Error("rational literal with zero denominator: " + s);
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("invalid rational literal: " + s);
    }
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace halg
