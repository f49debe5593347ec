#include "qk/rational.hpp"

#include "qk/error.hpp"

#include <charconv>
#include <numeric>

namespace qk {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw InvalidInput("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::int64_t Rational::floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) {
        --q;
    }
    return q;
}

std::string Rational::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size()) {
            throw InvalidInput("malformed rational '" + text + "'");
        }
        return v;
    };
    std::string_view sv(text);
    if (slash == std::string::npos) {
        return Rational(parse_int(sv));
    }
    return Rational(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

} // namespace qk
