#include "pk/scalar.hpp"

namespace pk {

std::string rational_str(const Rational& q) {
    return q.get_str();
}

std::string Scalar::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rational_str(im_) + "*i";
    if (re_ == 0) return imag;
    std::string s = "(" + rational_str(re_);
    if (imag[0] == '-')
        s += "-" + imag.substr(1);
    else
        s += "+" + imag;
    return s + ")";
}

}  // namespace pk
