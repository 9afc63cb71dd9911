#ifndef BSDH_RATIONAL_HPP
#define BSDH_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bsdh {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "p/q" or "p"; used by every JSON dump.
inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

inline Rational parse_rational(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("not a rational: " + s);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw std::domain_error("rational is not a machine integer: " + q.get_str());
    return q.get_num().get_si();
}

} // namespace bsdh

#endif
