#include "fracdim/dyadic.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <charconv>

namespace fracdim {

namespace mp = boost::multiprecision;

Dyadic::Dyadic(BigInt numerator, std::uint32_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
    if (exp_ > kMaxExponent) {
        throw ValidationError("dyadic exponent " + std::to_string(exp_) + " exceeds cap");
    }
    if (num_.is_zero()) {
        exp_ = 0;
        return;
    }
    std::uint32_t tz = static_cast<std::uint32_t>(mp::lsb(abs(num_)));
    std::uint32_t shift = tz < exp_ ? tz : exp_;
    if (shift > 0) {
        num_ >>= shift;
        exp_ -= shift;
    }
}

Dyadic Dyadic::operator-() const {
    Dyadic r;
    r.num_ = -num_;
    r.exp_ = exp_;
    return r;
}

Dyadic Dyadic::operator+(const Dyadic& rhs) const {
    std::uint32_t e = exp_ > rhs.exp_ ? exp_ : rhs.exp_;
    BigInt n = (num_ << (e - exp_)) + (rhs.num_ << (e - rhs.exp_));
    return Dyadic(std::move(n), e);
}

Dyadic Dyadic::operator-(const Dyadic& rhs) const {
    std::uint32_t e = exp_ > rhs.exp_ ? exp_ : rhs.exp_;
    BigInt n = (num_ << (e - exp_)) - (rhs.num_ << (e - rhs.exp_));
    return Dyadic(std::move(n), e);
}

Dyadic Dyadic::operator*(const Dyadic& rhs) const {
    // odd * odd stays odd, so no re-normalization beyond the zero check
    return Dyadic(num_ * rhs.num_, exp_ + rhs.exp_);
}

Dyadic Dyadic::half() const {
    if (is_zero()) return Dyadic();
    return Dyadic(num_, exp_ + 1);
}

int Dyadic::compare(const Dyadic& rhs) const {
    int ls = num_.sign();
    int rs = rhs.num_.sign();
    if (ls != rs) return ls < rs ? -1 : 1;
    std::uint32_t e = exp_ > rhs.exp_ ? exp_ : rhs.exp_;
    BigInt l = num_ << (e - exp_);
    BigInt r = rhs.num_ << (e - rhs.exp_);
    return l.compare(r);
}

double Dyadic::to_double() const {
    return std::ldexp(num_.convert_to<double>(), -static_cast<int>(exp_));
}

std::string Dyadic::str() const {
    std::string s = num_.str();
    if (exp_ != 0) {
        s += "/2^";
        s += std::to_string(exp_);
    }
    return s;
}

std::optional<Dyadic> Dyadic::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '-') {
        neg = true;
        ++pos;
    }
    std::size_t digits_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_begin) return std::nullopt;
    BigInt num(std::string(text.substr(digits_begin, pos - digits_begin)));
    if (neg) num = -num;
    if (pos == text.size()) return Dyadic(std::move(num), 0);

    if (text.substr(pos, 3) != "/2^") return std::nullopt;
    pos += 3;
    std::size_t exp_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == exp_begin || pos != text.size()) return std::nullopt;
    unsigned long exp = 0;
    auto sub = text.substr(exp_begin);
    auto res = std::from_chars(sub.data(), sub.data() + sub.size(), exp);
    if (res.ec != std::errc() || res.ptr != sub.data() + sub.size()) return std::nullopt;
    if (exp > Dyadic::kMaxExponent) return std::nullopt;
    return Dyadic(std::move(num), static_cast<std::uint32_t>(exp));
}

BigInt Dyadic::floor_quotient(const Dyadic& a, const Dyadic& b) {
    if (!b.is_positive()) {
        throw DomainError("floor_quotient requires a positive divisor");
    }
    BigInt p = a.num_ << b.exp_;
    BigInt q = b.num_ << a.exp_;
    BigInt quot, rem;
    mp::divide_qr(p, q, quot, rem);
    if (!rem.is_zero() && p.sign() < 0) quot -= 1;
    return quot;
}

BigInt Dyadic::ceil_quotient(const Dyadic& a, const Dyadic& b) {
    return -floor_quotient(-a, b);
}

const Dyadic& Scalar::dyadic() const {
    const Dyadic* d = as_dyadic();
    if (!d) throw ModeError("exact value requested from an approx-mode scalar");
    return *d;
}

double Scalar::approx_value() const {
    const double* v = std::get_if<double>(&value_);
    if (!v) throw ModeError("approx value requested from an exact-mode scalar");
    return *v;
}

double Scalar::to_double() const {
    if (const Dyadic* d = as_dyadic()) return d->to_double();
    return std::get<double>(value_);
}

NumMode common_mode(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode()) {
        throw ModeError("mixed exact/approx scalars in one computation");
    }
    return a.mode();
}

Scalar Scalar::operator-() const {
    if (const Dyadic* d = as_dyadic()) return Scalar(-*d);
    return Scalar(-std::get<double>(value_));
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    if (common_mode(*this, rhs) == NumMode::exact) return Scalar(dyadic() + rhs.dyadic());
    return Scalar(approx_value() + rhs.approx_value());
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    if (common_mode(*this, rhs) == NumMode::exact) return Scalar(dyadic() - rhs.dyadic());
    return Scalar(approx_value() - rhs.approx_value());
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    if (common_mode(*this, rhs) == NumMode::exact) return Scalar(dyadic() * rhs.dyadic());
    return Scalar(approx_value() * rhs.approx_value());
}

Scalar Scalar::half() const {
    if (const Dyadic* d = as_dyadic()) return Scalar(d->half());
    return Scalar(0.5 * std::get<double>(value_));
}

int Scalar::compare(const Scalar& rhs) const {
    if (common_mode(*this, rhs) == NumMode::exact) return dyadic().compare(rhs.dyadic());
    double diff = approx_value() - rhs.approx_value();
    if (diff < -kApproxTol) return -1;
    if (diff > kApproxTol) return 1;
    return 0;
}

std::string Scalar::str() const {
    if (const Dyadic* d = as_dyadic()) return d->str();
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(value_));
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
        s += ".0";
    }
    return s;
}

}  // namespace fracdim
