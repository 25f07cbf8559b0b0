#include "crossbi/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace crossbi {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

Scalar FieldSpec::zero() const { return Scalar(*this, mpq_class(0)); }

Scalar FieldSpec::one() const { return Scalar(*this, mpq_class(1)); }

Scalar FieldSpec::from_int(long v) const {
    Scalar s(*this, mpq_class(v));
    s.reduce();
    return s;
}

Scalar FieldSpec::from_fraction(long num, long den) const {
    if (den == 0)
        throw std::domain_error("zero denominator");
    return from_int(num) / from_int(den);
}

Scalar FieldSpec::parse(std::string_view text) const {
    std::string t(text);
    auto slash = t.find('/');
    auto parse_int = [&](const std::string &s) {
        if (s.empty())
            throw std::invalid_argument("malformed scalar '" + t + "'");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size())
            throw std::invalid_argument("malformed scalar '" + t + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed scalar '" + t + "'");
        return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
    };
    if (slash == std::string::npos) {
        Scalar s(*this, mpq_class(parse_int(t)));
        s.reduce();
        return s;
    }
    mpz_class num = parse_int(t.substr(0, slash));
    mpz_class den = parse_int(t.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + t + "'");
    Scalar n(*this, mpq_class(num));
    Scalar d(*this, mpq_class(den));
    n.reduce();
    d.reduce();
    return n / d;
}

std::string FieldSpec::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

void Scalar::reduce() {
    const auto p = field_.characteristic();
    if (p == 0) {
        value_.canonicalize();
        return;
    }
    mpz_class num = value_.get_num() % p;
    if (num < 0)
        num += p;
    mpz_class den = value_.get_den() % p;
    if (den != 1) {
        if (den == 0)
            throw std::domain_error("denominator divisible by the characteristic");
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
        num = (num * inv) % p;
    }
    value_ = mpq_class(num);
}

Scalar Scalar::operator-() const {
    Scalar r(field_, -value_);
    if (!field_.is_rational())
        r.reduce();
    return r;
}

Scalar &Scalar::operator+=(const Scalar &o) {
    value_ += o.value_;
    if (!field_.is_rational() && value_ >= field_.characteristic())
        value_ -= field_.characteristic();
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
    value_ -= o.value_;
    if (!field_.is_rational() && value_ < 0)
        value_ += field_.characteristic();
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
    value_ *= o.value_;
    if (!field_.is_rational())
        reduce();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw std::domain_error("division by zero");
    if (field_.is_rational())
        return Scalar(field_, 1 / value_);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), mpz_class(field_.characteristic()).get_mpz_t());
    return Scalar(field_, mpq_class(inv));
}

Scalar &Scalar::operator/=(const Scalar &o) { return *this *= o.inverse(); }

void Scalar::add_product(const Scalar &b, const Scalar &c) {
    if (field_.is_rational()) {
        value_ += b.value_ * c.value_;
        return;
    }
    *this += b * c;
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

} // namespace crossbi
