#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace crossbi {

class Scalar;

// The ground field: either the rationals or Z/p for a prime p.
class FieldSpec {
  public:
    enum class Kind { Rationals, PrimeField };

    FieldSpec() = default;
    static FieldSpec rationals() { return FieldSpec{}; }
    // Throws std::invalid_argument when p is not prime.
    static FieldSpec prime(std::uint32_t p);

    Kind kind() const { return p_ == 0 ? Kind::Rationals : Kind::PrimeField; }
    bool is_rational() const { return p_ == 0; }
    // 0 for the rationals.
    std::uint32_t characteristic() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_fraction(long num, long den) const;
    // Accepts "3", "-2", "3/7". Throws std::invalid_argument.
    Scalar parse(std::string_view text) const;

    // "Q" or "F5".
    std::string name() const;

    friend bool operator==(const FieldSpec &a, const FieldSpec &b) { return a.p_ == b.p_; }

  private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// Exact field element. Rationals are kept reduced with positive denominator;
// residues are kept in 0..p-1, so equality is structural.
class Scalar {
  public:
    Scalar() = default;

    const FieldSpec &field() const { return field_; }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }

    Scalar operator-() const;
    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    // Throws std::domain_error on division by zero.
    Scalar &operator/=(const Scalar &o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
    friend bool operator==(const Scalar &a, const Scalar &b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

    // a += b * c without a temporary when the field is Q.
    void add_product(const Scalar &b, const Scalar &c);

    std::string to_string() const;
    const mpq_class &raw() const { return value_; }

  private:
    friend class FieldSpec;
    Scalar(FieldSpec f, mpq_class v) : field_(f), value_(std::move(v)) {}
    void reduce();

    FieldSpec field_;
    mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace crossbi
