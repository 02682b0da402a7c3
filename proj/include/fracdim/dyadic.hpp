#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "fracdim/errors.hpp"

namespace fracdim {

using BigInt = boost::multiprecision::cpp_int;

/// Exact dyadic rational numerator / 2^exponent.
///
/// Values are kept canonical: the numerator is odd or zero, and zero is stored
/// with exponent 0. Addition, subtraction, multiplication and comparison are
/// closed and never round. Halving is exact (exponent + 1), which is all the
/// midpoint constructions need.
class Dyadic {
public:
    /// Exponents are capped so hostile inputs cannot force huge shifts.
    static constexpr std::uint32_t kMaxExponent = 1u << 20;

    Dyadic() = default;
    Dyadic(long long value) : num_(value) {}
    Dyadic(BigInt numerator, std::uint32_t exponent);

    const BigInt& numerator() const { return num_; }
    std::uint32_t exponent() const { return exp_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_integer() const { return exp_ == 0; }

    Dyadic operator-() const;
    Dyadic operator+(const Dyadic& rhs) const;
    Dyadic operator-(const Dyadic& rhs) const;
    Dyadic operator*(const Dyadic& rhs) const;

    /// Exact division by two.
    Dyadic half() const;

    /// Three-way exact comparison: -1, 0, +1.
    int compare(const Dyadic& rhs) const;

    bool operator==(const Dyadic& rhs) const { return num_ == rhs.num_ && exp_ == rhs.exp_; }
    bool operator!=(const Dyadic& rhs) const { return !(*this == rhs); }
    bool operator<(const Dyadic& rhs) const { return compare(rhs) < 0; }
    bool operator<=(const Dyadic& rhs) const { return compare(rhs) <= 0; }
    bool operator>(const Dyadic& rhs) const { return compare(rhs) > 0; }
    bool operator>=(const Dyadic& rhs) const { return compare(rhs) >= 0; }

    /// Nearest double (rounds once, at the end).
    double to_double() const;

    /// "n" when integral, otherwise "n/2^e".
    std::string str() const;

    /// Strict parse of "<int>" or "<int>/2^<uint>"; nullopt on any deviation.
    static std::optional<Dyadic> parse(std::string_view text);

    /// floor(a / b) as an exact integer; b must be positive.
    static BigInt floor_quotient(const Dyadic& a, const Dyadic& b);
    /// ceil(a / b) as an exact integer; b must be positive.
    static BigInt ceil_quotient(const Dyadic& a, const Dyadic& b);

private:
    BigInt num_ = 0;
    std::uint32_t exp_ = 0;
};

/// Canonicalize a raw numerator/exponent pair. Idempotent; equal in value.
inline Dyadic scalar_normalize(const BigInt& numerator, std::uint32_t exponent) {
    return Dyadic(numerator, exponent);
}
inline Dyadic scalar_normalize(const Dyadic& value) {
    return Dyadic(value.numerator(), value.exponent());
}

enum class NumMode { exact, approx };

/// Comparison tolerance used by approximate-mode predicates.
constexpr double kApproxTol = 1e-12;

/// A scalar that is either an exact Dyadic or a binary64 double.
///
/// A computation runs entirely in one mode; arithmetic between mixed modes
/// throws ModeError rather than silently converting.
class Scalar {
public:
    Scalar() : value_(Dyadic()) {}
    Scalar(Dyadic exact) : value_(std::move(exact)) {}
    explicit Scalar(double approx) : value_(approx) {}

    static Scalar exact_int(long long v) { return Scalar(Dyadic(v)); }
    static Scalar approx(double v) { return Scalar(v); }

    NumMode mode() const { return value_.index() == 0 ? NumMode::exact : NumMode::approx; }
    bool is_exact() const { return mode() == NumMode::exact; }

    const Dyadic& dyadic() const;
    double approx_value() const;

    /// Value as a double regardless of mode.
    double to_double() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar half() const;

    /// Three-way compare; exact in exact mode, tolerance-banded (kApproxTol) in approx mode.
    int compare(const Scalar& rhs) const;

    bool operator==(const Scalar& rhs) const { return compare(rhs) == 0; }
    bool operator<(const Scalar& rhs) const { return compare(rhs) < 0; }
    bool operator<=(const Scalar& rhs) const { return compare(rhs) <= 0; }
    bool operator>(const Scalar& rhs) const { return compare(rhs) > 0; }
    bool operator>=(const Scalar& rhs) const { return compare(rhs) >= 0; }

    /// Exact dyadic string, or a decimal literal with 17 significant digits.
    std::string str() const;

private:
    const Dyadic* as_dyadic() const { return std::get_if<Dyadic>(&value_); }
    std::variant<Dyadic, double> value_;
};

/// Mode both operands must share; throws ModeError otherwise.
NumMode common_mode(const Scalar& a, const Scalar& b);

}  // namespace fracdim
