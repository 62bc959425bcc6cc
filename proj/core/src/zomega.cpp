#include "modpoly/zomega.hpp"

namespace modpoly {

ZOmega ZOmega::omega_power(int i) {
    i %= 3;
    if (i < 0) i += 3;
    switch (i) {
        case 0: return ZOmega(1, 0);
        case 1: return ZOmega(0, 1);
        default: return ZOmega(-1, -1); // w^2 = -1 - w
    }
}

std::string ZOmega::str() const {
    if (b_ == 0) return a_.get_str();
    std::string s = a_.get_str();
    if (b_ > 0) s += "+";
    s += b_.get_str() + "*w";
    return s;
}

} // namespace modpoly
