#include "gwp/gauss_rat.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "gwp/error.hpp"

namespace gwp {

GaussRat GaussRat::i_pow(long n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return GaussRat(1);
        case 1: return i();
        case 2: return GaussRat(-1);
        default: return -i();
    }
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    Rational n = o.norm_sq();
    if (n == 0) throw std::domain_error("GaussRat: division by zero");
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRat GaussRat::pow(long n) const {
    if (n < 0) {
        GaussRat inv = GaussRat(1) / *this;
        return inv.pow(-n);
    }
    GaussRat acc(1);
    GaussRat base = *this;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

namespace {

std::string rat_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace

std::string GaussRat::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (re_ != 0) s = rat_str(re_);
    if (im_ != 0) {
        if (!s.empty() && im_ > 0) s += "+";
        if (im_ == 1)
            s += "i";
        else if (im_ == -1)
            s += "-i";
        else
            s += rat_str(im_) + "i";
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& g) { return os << g.str(); }

namespace {

// Parses [sign] digits [/ digits] starting at pos; advances pos.
Rational parse_rational_part(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart) throw ParseError("expected number in '" + s + "'");
    std::string num = s.substr(start, pos - start);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t nstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == nstart) throw ParseError("expected denominator in '" + s + "'");
        std::string den = s.substr(nstart, pos - nstart);
        if (den == "0") throw ParseError("zero denominator in '" + s + "'");
        return Rational(boost::multiprecision::cpp_int(num), boost::multiprecision::cpp_int(den));
    }
    return Rational(boost::multiprecision::cpp_int(num));
}

}  // namespace

GaussRat parse_gauss_rat(const std::string& text) {
    if (text.empty()) throw ParseError("empty number");
    size_t pos = 0;
    Rational re = 0, im = 0;
    // Up to two signed parts; a part ending in 'i' is imaginary.
    for (int part = 0; part < 2 && pos < text.size(); ++part) {
        bool neg = false;
        Rational val;
        if (text[pos] == 'i' || ((text[pos] == '+' || text[pos] == '-') && pos + 1 < text.size() &&
                                 text[pos + 1] == 'i')) {
            // bare i / +i / -i
            neg = text[pos] == '-';
            pos += (text[pos] == 'i') ? 1 : 2;
            im += neg ? Rational(-1) : Rational(1);
            continue;
        }
        val = parse_rational_part(text, pos);
        if (pos < text.size() && text[pos] == 'i') {
            ++pos;
            im += val;
        } else {
            re += val;
        }
    }
    if (pos != text.size()) throw ParseError("trailing characters in number '" + text + "'");
    return GaussRat(re, im);
}

}  // namespace gwp
