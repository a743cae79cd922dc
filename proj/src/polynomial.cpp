#include "sblab/polynomial.hpp"

#include <algorithm>
#include <map>

namespace sblab {

namespace {
struct DegLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        return deg_lex_compare(a, b) == Ordering::Less;
    }
};
}  // namespace

Polynomial::Polynomial(RingContext ctx, std::vector<Term> terms) : ctx_(std::move(ctx)) {
    std::map<Exponent, Coefficient, DegLexLess> acc;
    for (auto& t : terms) {
        if (t.exp.size() != ctx_.vars)
            throw dimension_error("term exponent length does not match ring context");
        if (t.coef.field() != ctx_.field)
            throw dimension_error("term coefficient field does not match ring context");
        auto it = acc.find(t.exp);
        if (it == acc.end())
            acc.emplace(std::move(t.exp), std::move(t.coef));
        else
            it->second = it->second + t.coef;
    }
    terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) terms_.push_back(Term{e, c});
}

Polynomial Polynomial::monomial(const RingContext& ctx, const Exponent& e, const Coefficient& c) {
    return Polynomial(ctx, {Term{e, c}});
}

Polynomial Polynomial::constant(const RingContext& ctx, const Coefficient& c) {
    return monomial(ctx, Exponent::zero(ctx.vars), c);
}

bool Polynomial::is_homogeneous() const {
    return terms_.empty() || terms_.front().exp.degree() == terms_.back().exp.degree();
}

void Polynomial::check_context(const Polynomial& o) const {
    if (ctx_ != o.ctx_) throw dimension_error("ring context mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    check_context(o);
    Polynomial r(ctx_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        Ordering c = deg_lex_compare(terms_[i].exp, o.terms_[j].exp);
        if (c == Ordering::Less) {
            r.terms_.push_back(terms_[i++]);
        } else if (c == Ordering::Greater) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Coefficient sum = terms_[i].coef + o.terms_[j].coef;
            if (!sum.is_zero()) r.terms_.push_back(Term{terms_[i].exp, std::move(sum)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.exp, -t.coef});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_context(o);
    if (is_zero() || o.is_zero()) return zero(ctx_);
    std::map<Exponent, Coefficient, DegLexLess> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Exponent e = a.exp + b.exp;
            Coefficient c = a.coef * b.coef;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(std::move(e), std::move(c));
            else
                it->second = it->second + c;
        }
    }
    Polynomial r(ctx_);
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.terms_.push_back(Term{e, c});
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ctx_ != o.ctx_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
    if (c.is_zero()) return zero(ctx_);
    Polynomial r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.exp, t.coef * c});
    return r;
}

Polynomial Polynomial::times_term(const Exponent& e, const Coefficient& c) const {
    if (c.is_zero()) return zero(ctx_);
    Polynomial r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.exp + e, t.coef * c});
    return r;  // shifting by a fixed exponent preserves deg-lex order
}

Polynomial Polynomial::slice(int deg) const {
    Polynomial r(ctx_);
    for (const auto& t : terms_)
        if (t.exp.degree() == deg) r.terms_.push_back(t);
    return r;
}

Polynomial Polynomial::truncated(int cutoff) const {
    Polynomial r(ctx_);
    for (const auto& t : terms_) {
        if (t.exp.degree() > cutoff) break;  // ascending deg-lex
        r.terms_.push_back(t);
    }
    return r;
}

Polynomial Polynomial::content_normalized() const {
    if (is_zero()) return *this;
    if (ctx_.field.kind == FieldKind::PrimeField) {
        return scaled(terms_.front().coef.inverse());
    }
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        const mpq_class& q = t.coef.rational();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    mpq_class factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (terms_.front().coef.rational() < 0) factor = -factor;
    return scaled(Coefficient::from_rational(ctx_.field, factor.get_num(), factor.get_den()));
}

std::optional<int> order_of(const Polynomial& f) {
    if (f.is_zero()) return std::nullopt;
    return f.terms().front().exp.degree();
}

HomogeneousForm::HomogeneousForm(Polynomial p) : poly(std::move(p)) {
    if (poly.is_zero()) {
        form_degree = 0;
        return;
    }
    if (!poly.is_homogeneous()) throw input_error("polynomial is not homogeneous");
    form_degree = poly.degree();
}

HomogeneousForm leading_form(const Polynomial& f) {
    if (f.is_zero()) throw input_error("leading form of the zero polynomial is undefined");
    int d = f.terms().front().exp.degree();
    return HomogeneousForm(f.slice(d));
}

const Term& initial_term(const Polynomial& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw input_error("initial term of the zero polynomial is undefined");
    if (f.context().vars != ord.variable_count)
        throw dimension_error("order variable count does not match polynomial");
    switch (ord.kind) {
        case OrderKind::LocalDegLex: return f.terms().front();
        case OrderKind::GlobalDegLex: return f.terms().back();
        default: break;
    }
    const Term* best = &f.terms().front();
    for (const auto& t : f.terms())
        if (initial_precedes(t.exp, best->exp, ord)) best = &t;
    return *best;
}

const Exponent& initial_exp(const Polynomial& f, const MonomialOrder& ord) {
    return initial_term(f, ord).exp;
}

int ecart(const Polynomial& f, const MonomialOrder& ord) {
    return f.degree() - initial_term(f, ord).exp.degree();
}

std::vector<std::string> default_var_names(int s) {
    static const char* xyz[] = {"x", "y", "z"};
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i)
        names.push_back(s <= 3 ? xyz[i] : "x" + std::to_string(i + 1));
    return names;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    if (static_cast<int>(names.size()) != ctx_.vars)
        throw dimension_error("variable name list does not match ring context");
    std::string out;
    // Descending deg-lex, the usual reading order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Term& t = *it;
        std::string c = t.coef.to_string();
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c = c.substr(1);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        for (int i = 0; i < ctx_.vars; ++i) {
            int e = t.exp[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[static_cast<std::size_t>(i)];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += c;
        } else if (c == "1") {
            out += mono;
        } else {
            out += c + "*" + mono;
        }
    }
    return out;
}

std::string Polynomial::to_string() const { return to_string(default_var_names(ctx_.vars)); }

}  // namespace sblab
