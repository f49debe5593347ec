#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace qk {

/// Exact non-negative-denominator rational, always stored in lowest terms.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    /// Largest integer not exceeding the value.
    std::int64_t floor() const noexcept;
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "p/q", always with an explicit denominator.
    std::string to_string() const;
    static Rational parse(const std::string& text);

    friend Rational operator*(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Integer-vs-rational comparison used for every size bound check.
inline bool at_most(std::int64_t value, const Rational& bound) {
    return Rational(value) <= bound;
}

} // namespace qk
