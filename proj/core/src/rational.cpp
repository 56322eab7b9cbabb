#include "sqcolor/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace sqcolor {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = g == 0 ? 0 : numerator / g;
    den_ = g == 0 ? 1 : denominator / g;
}

Rational Rational::operator+(const Rational& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

Rational Rational::operator-(const Rational& o) const {
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

Rational Rational::operator*(const Rational& o) const { return {num_ * o.num_, den_ * o.den_}; }

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return {num_ * o.den_, den_ * o.num_};
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    // Denominators are positive, so cross-multiplication preserves order.
    return static_cast<__int128>(num_) * o.den_ <=> static_cast<__int128>(o.num_) * den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sqcolor
