#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sblab/exponent.hpp"
#include "sblab/field.hpp"

namespace sblab {

// Ambient ring data: number of variables and coefficient field. Variable
// names are presentation metadata and live with the problem spec, not here.
struct RingContext {
    int vars = 0;
    FieldDesc field;

    bool operator==(const RingContext& o) const { return vars == o.vars && field == o.field; }
    bool operator!=(const RingContext& o) const { return !(*this == o); }
};

struct Term {
    Exponent exp;
    Coefficient coef;
};

// Sparse exact multivariate polynomial. Terms are kept sorted ascending by
// deg-lex with no zero coefficients, so the initial term of the local order
// is terms().front() and of the global order terms().back().
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RingContext ctx) : ctx_(std::move(ctx)) {}
    // Normalizes: merges duplicate exponents, drops zeros, sorts.
    Polynomial(RingContext ctx, std::vector<Term> terms);

    static Polynomial zero(const RingContext& ctx) { return Polynomial(ctx); }
    static Polynomial monomial(const RingContext& ctx, const Exponent& e, const Coefficient& c);
    static Polynomial constant(const RingContext& ctx, const Coefficient& c);

    const RingContext& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // Max total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.back().exp.degree(); }
    bool is_homogeneous() const;
    bool is_monomial() const { return terms_.size() == 1; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const Coefficient& c) const;
    // Multiplication by the single term c * x^e.
    Polynomial times_term(const Exponent& e, const Coefficient& c) const;

    // The homogeneous slice of given degree.
    Polynomial slice(int deg) const;
    // Drops all terms of total degree > cutoff.
    Polynomial truncated(int cutoff) const;

    // Over Q: divides by the gcd of numerators over the lcm of denominators
    // and fixes the sign so the first stored coefficient is positive.
    // Over F_p: scales the first stored coefficient to 1.
    Polynomial content_normalized() const;

    std::string to_string(const std::vector<std::string>& names) const;
    std::string to_string() const;  // default variable names

  private:
    void check_context(const Polynomial& o) const;

    RingContext ctx_;
    std::vector<Term> terms_;
};

// ord(f): minimal term degree, empty for the zero polynomial (sup convention).
std::optional<int> order_of(const Polynomial& f);

// Homogeneous polynomial together with its degree.
struct HomogeneousForm {
    Polynomial poly;
    int form_degree = 0;

    HomogeneousForm() = default;
    // Validates homogeneity of nonzero input.
    explicit HomogeneousForm(Polynomial p);
};

// Sum of the terms of f of degree ord(f); rejects zero input.
HomogeneousForm leading_form(const Polynomial& f);

// The exponent of the initial term of f under ord (minimal for local kinds,
// maximal for global kinds); rejects zero input.
const Exponent& initial_exp(const Polynomial& f, const MonomialOrder& ord);
const Term& initial_term(const Polynomial& f, const MonomialOrder& ord);

// deg(f) - deg(initial term of f); the Mora division control quantity.
int ecart(const Polynomial& f, const MonomialOrder& ord);

// "x", "y", "z" for s <= 3, else "x1".."xs".
std::vector<std::string> default_var_names(int s);

}  // namespace sblab
