#include "sblab/field.hpp"

namespace sblab {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldDesc FieldDesc::prime_field(std::uint32_t p) {
    if (p >= (1u << 31)) throw input_error("prime field modulus must be < 2^31");
    if (!is_prime_u32(p)) throw input_error("modulus " + std::to_string(p) + " is not prime");
    return FieldDesc{FieldKind::PrimeField, p};
}

std::string FieldDesc::to_string() const {
    return kind == FieldKind::Rational ? "Q" : "Fp " + std::to_string(p);
}

namespace {

std::uint64_t mod_pos(const mpz_class& v, std::uint32_t p) {
    mpz_class r = v % p;
    if (r < 0) r += p;
    return r.get_ui();
}

// Extended Euclid; p prime and a nonzero mod p.
std::uint64_t mod_inverse(std::uint64_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw input_error("no inverse: " + std::to_string(a) + " mod " + std::to_string(p));
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Coefficient Coefficient::zero(const FieldDesc& f) {
    return f.kind == FieldKind::Rational ? Coefficient(f, mpq_class(0))
                                         : Coefficient(f, std::uint64_t(0));
}

Coefficient Coefficient::one(const FieldDesc& f) {
    return f.kind == FieldKind::Rational ? Coefficient(f, mpq_class(1))
                                         : Coefficient(f, std::uint64_t(1));
}

Coefficient Coefficient::from_rational(const FieldDesc& f, const mpz_class& num,
                                       const mpz_class& den) {
    if (den == 0) throw input_error("zero denominator in coefficient");
    if (f.kind == FieldKind::Rational) {
        mpq_class q(num, den);
        q.canonicalize();
        return Coefficient(f, std::move(q));
    }
    std::uint64_t n = mod_pos(num, f.p);
    std::uint64_t d = mod_pos(den, f.p);
    if (d == 0)
        throw input_error("denominator divisible by field characteristic " + std::to_string(f.p));
    return Coefficient(f, n * mod_inverse(d, f.p) % f.p);
}

bool Coefficient::is_zero() const {
    return field_.kind == FieldKind::Rational ? q_ == 0 : r_ == 0;
}

bool Coefficient::is_one() const {
    return field_.kind == FieldKind::Rational ? q_ == 1 : r_ == 1;
}

void Coefficient::check_same_field(const Coefficient& o) const {
    if (field_ != o.field_)
        throw dimension_error("coefficient field mismatch: " + field_.to_string() + " vs " +
                              o.field_.to_string());
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
    check_same_field(o);
    if (field_.kind == FieldKind::Rational) return Coefficient(field_, mpq_class(q_ + o.q_));
    return Coefficient(field_, (r_ + o.r_) % field_.p);
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
    check_same_field(o);
    if (field_.kind == FieldKind::Rational) return Coefficient(field_, mpq_class(q_ - o.q_));
    return Coefficient(field_, (r_ + field_.p - o.r_) % field_.p);
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
    check_same_field(o);
    if (field_.kind == FieldKind::Rational) return Coefficient(field_, mpq_class(q_ * o.q_));
    return Coefficient(field_, r_ * o.r_ % field_.p);  // p < 2^31, product fits in 64 bits
}

Coefficient Coefficient::operator/(const Coefficient& o) const { return *this * o.inverse(); }

Coefficient Coefficient::operator-() const {
    if (field_.kind == FieldKind::Rational) return Coefficient(field_, mpq_class(-q_));
    return Coefficient(field_, r_ == 0 ? 0 : field_.p - r_);
}

Coefficient Coefficient::inverse() const {
    if (is_zero()) throw input_error("division by zero coefficient");
    if (field_.kind == FieldKind::Rational) return Coefficient(field_, mpq_class(1 / q_));
    return Coefficient(field_, mod_inverse(r_, field_.p));
}

bool Coefficient::operator==(const Coefficient& o) const {
    if (field_ != o.field_) return false;
    return field_.kind == FieldKind::Rational ? q_ == o.q_ : r_ == o.r_;
}

const mpq_class& Coefficient::rational() const {
    if (field_.kind != FieldKind::Rational) throw internal_error("rational() on F_p coefficient");
    return q_;
}

std::uint64_t Coefficient::residue() const {
    if (field_.kind != FieldKind::PrimeField) throw internal_error("residue() on Q coefficient");
    return r_;
}

std::string Coefficient::to_string() const {
    return field_.kind == FieldKind::Rational ? q_.get_str() : std::to_string(r_);
}

}  // namespace sblab
