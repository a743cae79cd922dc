#include "sblab/exponent.hpp"

#include <numeric>

namespace sblab {

Exponent::Exponent(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int e : parts_)
        if (e < 0) throw input_error("negative exponent");
    degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Exponent Exponent::unit(int s, int i) {
    std::vector<int> v(s, 0);
    v[static_cast<std::size_t>(i)] = 1;
    return Exponent(std::move(v));
}

namespace {
void check_len(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size())
        throw dimension_error("exponent length mismatch: " + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()));
}
}  // namespace

Exponent Exponent::operator+(const Exponent& o) const {
    check_len(*this, o);
    std::vector<int> v(parts_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.parts_[i];
    return Exponent(std::move(v));
}

Exponent Exponent::operator-(const Exponent& o) const {
    check_len(*this, o);
    std::vector<int> v(parts_);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] -= o.parts_[i];
        if (v[i] < 0) throw internal_error("exponent subtraction below zero");
    }
    return Exponent(std::move(v));
}

std::string Exponent::to_string() const {
    std::string s = "(";
    for (int i = 0; i < size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[static_cast<std::size_t>(i)]);
    }
    return s + ")";
}

bool divides(const Exponent& a, const Exponent& b) {
    check_len(a, b);
    for (int i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent lcm_exp(const Exponent& a, const Exponent& b) {
    check_len(a, b);
    std::vector<int> v(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) v[static_cast<std::size_t>(i)] = std::max(a[i], b[i]);
    return Exponent(std::move(v));
}

std::string MonomialOrder::to_string() const {
    switch (kind) {
        case OrderKind::LocalDegLex: return "local-deglex";
        case OrderKind::GlobalDegLex: return "global-deglex";
        case OrderKind::ElimLocalDegLex: return "elim-local-deglex";
        case OrderKind::ElimGlobalDegLex: return "elim-global-deglex";
    }
    return "?";
}

Ordering deg_lex_compare(const Exponent& a, const Exponent& b) {
    check_len(a, b);
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? Ordering::Less : Ordering::Greater;
    for (int i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? Ordering::Less : Ordering::Greater;
    return Ordering::Equal;
}

namespace {
// Compares the non-elimination tail (indices 1..s-1) by deg-lex.
Ordering tail_deg_lex(const Exponent& a, const Exponent& b) {
    int da = a.degree() - a[0];
    int db = b.degree() - b[0];
    if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
    for (int i = 1; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? Ordering::Less : Ordering::Greater;
    return Ordering::Equal;
}
}  // namespace

Ordering compare_exp(const Exponent& a, const Exponent& b, const MonomialOrder& ord) {
    if (a.size() != ord.variable_count || b.size() != ord.variable_count)
        throw dimension_error("exponent length does not match order's variable count");
    switch (ord.kind) {
        case OrderKind::LocalDegLex:
        case OrderKind::GlobalDegLex: return deg_lex_compare(a, b);
        case OrderKind::ElimLocalDegLex:
        case OrderKind::ElimGlobalDegLex:
            if (a[0] != b[0]) return a[0] < b[0] ? Ordering::Less : Ordering::Greater;
            return tail_deg_lex(a, b);
    }
    return Ordering::Equal;
}

bool initial_precedes(const Exponent& a, const Exponent& b, const MonomialOrder& ord) {
    switch (ord.kind) {
        case OrderKind::LocalDegLex: return deg_lex_compare(a, b) == Ordering::Less;
        case OrderKind::GlobalDegLex: return deg_lex_compare(a, b) == Ordering::Greater;
        case OrderKind::ElimLocalDegLex:
            if (a[0] != b[0]) return a[0] > b[0];  // higher elimination power leads
            return tail_deg_lex(a, b) == Ordering::Less;
        case OrderKind::ElimGlobalDegLex:
            if (a[0] != b[0]) return a[0] > b[0];
            return tail_deg_lex(a, b) == Ordering::Greater;
    }
    return false;
}

}  // namespace sblab
