#include "picmod/qz.hpp"

#include <numeric>

#include "picmod/errors.hpp"

namespace picmod {

QZ::QZ(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error("QZ: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

QZ QZ::parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return QZ(std::stoll(std::string(text)), 1);
        return QZ(std::stoll(std::string(text.substr(0, slash))),
                  std::stoll(std::string(text.substr(slash + 1))));
    } catch (const std::logic_error&) {
        throw ParseError("QZ: cannot parse rational '" + std::string(text) + "'");
    }
}

QZ QZ::operator+(const QZ& o) const {
    return QZ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QZ QZ::operator-(const QZ& o) const {
    return QZ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QZ QZ::operator-() const { return QZ(-num_, den_); }

QZ& QZ::operator+=(const QZ& o) { return *this = *this + o; }

QZ QZ::times(std::int64_t k) const { return QZ(num_ * k, den_); }

std::strong_ordering QZ::operator<=>(const QZ& o) const {
    return num_ * o.den_ <=> o.num_ * den_;
}

std::string QZ::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace picmod
