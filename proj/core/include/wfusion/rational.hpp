#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace wfusion {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

// Largest integer <= x.
inline Int rat_floor(const Rat& x)
{
    Int q = rat_num(x) / rat_den(x);
    if (q * rat_den(x) != rat_num(x) && rat_num(x) < 0)
        --q;
    return q;
}

// Representative of x mod 1 in [0, 1).
inline Rat mod1(const Rat& x)
{
    return x - Rat(rat_floor(x));
}

inline bool is_integer(const Rat& x) { return rat_den(x) == 1; }

inline std::string rat_str(const Rat& x)
{
    if (is_integer(x))
        return rat_num(x).str();
    return rat_num(x).str() + "/" + rat_den(x).str();
}

// Parses "p", "-p" or "p/q".  Returns nullopt on malformed input.
std::optional<Rat> parse_rational(const std::string& s);

inline double rat_double(const Rat& x)
{
    return static_cast<double>(x);
}

inline Int binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

} // namespace wfusion
