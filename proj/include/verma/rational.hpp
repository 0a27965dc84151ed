#ifndef VERMA_RATIONAL_HPP
#define VERMA_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace verma {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A truncated computation was asked for coefficients it cannot certify.
class DepthExhausted : public Error {
public:
    using Error::Error;
};

/// A consistency check that can only fail through a bug in the engine.
class InternalError : public Error {
public:
    using Error::Error;
};

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p", "p/q" (surrounding blanks allowed).
inline Rational parse_rational(std::string_view text)
{
    std::size_t b = 0, e = text.size();
    while (b < e && (text[b] == ' ' || text[b] == '\t')) ++b;
    while (e > b && (text[e - 1] == ' ' || text[e - 1] == '\t')) --e;
    std::string s(text.substr(b, e - b));
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.front() == '+') s.erase(0, 1);
    auto valid = [](const std::string& part) {
        std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-')
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    Rational r;
    r.get_num() = Integer(num, 10);
    r.get_den() = Integer(den, 10);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_rational(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

/// Canonical text: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r)
{
    return r.get_str(10);
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_natural(const Rational& r) { return is_integer(r) && sgn(r) >= 0; }

inline long to_long(const Rational& r)
{
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw std::invalid_argument("rational " + to_string(r) + " is not a machine integer");
    return r.get_num().get_si();
}

/// <c>_p = c (c-1) ... (c-p+1).
inline Rational falling_factorial(const Rational& c, long p)
{
    Rational out(1);
    for (long i = 0; i < p; ++i) out *= c - i;
    return out;
}

inline Integer factorial(long n)
{
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

inline Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

inline std::string join_rationals(const std::vector<Rational>& v, std::string_view sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += to_string(v[i]);
    }
    return out;
}

}  // namespace verma

#endif  // VERMA_RATIONAL_HPP
