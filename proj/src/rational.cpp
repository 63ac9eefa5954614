#include "qgi/rational.hpp"

#include "qgi/errors.hpp"

namespace qgi {

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw InputError("parse_rational: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw InputError("parse_rational: bad rational literal '" + s + "'");
    }
}

long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw CapExceeded("integer out of long range: " + z.get_str());
    return z.get_si();
}

}  // namespace qgi
