#include "uniairy/precision.hpp"

#include <sstream>

namespace uniairy {

std::string to_string(const Real& x, unsigned sig_digits) {
    return x.str(sig_digits, std::ios_base::scientific);
}

std::string to_string(const Complex& z, unsigned sig_digits) {
    std::ostringstream os;
    os << to_string(z.re, sig_digits);
    if (!z.im.is_zero()) {
        os << (z.im < 0 ? "-" : "+") << to_string(abs(z.im), sig_digits) << "i";
    }
    return os.str();
}

} // namespace uniairy
