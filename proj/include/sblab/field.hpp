#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "sblab/errors.hpp"

namespace sblab {

enum class FieldKind { Rational, PrimeField };

// Coefficient field descriptor: Q, or F_p with p prime (p < 2^31).
struct FieldDesc {
    FieldKind kind = FieldKind::Rational;
    std::uint32_t p = 0;  // modulus, 0 for Q

    static FieldDesc rational() { return FieldDesc{FieldKind::Rational, 0}; }
    static FieldDesc prime_field(std::uint32_t p);

    bool operator==(const FieldDesc& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldDesc& o) const { return !(*this == o); }

    std::string to_string() const;
};

bool is_prime_u32(std::uint32_t n);

// Exact field element. Rationals are kept in lowest terms with positive
// denominator (mpq invariant); F_p values are canonical representatives in [0, p).
class Coefficient {
  public:
    Coefficient() : field_(FieldDesc::rational()) {}

    static Coefficient zero(const FieldDesc& f);
    static Coefficient one(const FieldDesc& f);
    // Builds num/den in the field (for F_p: num * den^{-1} mod p).
    static Coefficient from_rational(const FieldDesc& f, const mpz_class& num,
                                     const mpz_class& den = 1);
    static Coefficient from_int(const FieldDesc& f, long v) { return from_rational(f, v); }

    const FieldDesc& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Coefficient operator+(const Coefficient& o) const;
    Coefficient operator-(const Coefficient& o) const;
    Coefficient operator*(const Coefficient& o) const;
    Coefficient operator/(const Coefficient& o) const;
    Coefficient operator-() const;
    Coefficient inverse() const;

    bool operator==(const Coefficient& o) const;
    bool operator!=(const Coefficient& o) const { return !(*this == o); }

    // Rational value; valid only for FieldKind::Rational.
    const mpq_class& rational() const;
    // Canonical representative in [0, p); valid only for FieldKind::PrimeField.
    std::uint64_t residue() const;

    // Canonical rendering: "p/q" (or "p") for Q, decimal representative for F_p.
    std::string to_string() const;

  private:
    Coefficient(const FieldDesc& f, mpq_class q) : field_(f), q_(std::move(q)) {}
    Coefficient(const FieldDesc& f, std::uint64_t r) : field_(f), r_(r) {}
    void check_same_field(const Coefficient& o) const;

    FieldDesc field_;
    mpq_class q_;          // used for Q
    std::uint64_t r_ = 0;  // used for F_p
};

}  // namespace sblab
