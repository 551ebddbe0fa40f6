#include "halpha/rational.hpp"

#include <cstdio>

namespace halpha {

std::string Rational::to_decimal(int places) const {
    if (num_ < 0)
        throw std::domain_error("to_decimal on a negative rational");
    std::int64_t scale = 1;
    for (int i = 0; i < places; ++i)
        scale *= 10;
    const std::int64_t scaled = num_ * scale;
    std::int64_t quotient = scaled / den_;
    const std::int64_t remainder = scaled % den_;
    if (2 * remainder >= den_) // half-up
        ++quotient;
    char buf[64];
    if (places == 0) {
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(quotient));
    } else {
        std::snprintf(buf, sizeof(buf), "%lld.%0*lld", static_cast<long long>(quotient / scale),
                      places, static_cast<long long>(quotient % scale));
    }
    return buf;
}

} // namespace halpha
