#pragma once

#include <string>
#include <vector>

#include "sblab/errors.hpp"

namespace sblab {

// A monomial exponent vector in N^s. The total degree is cached.
class Exponent {
  public:
    Exponent() = default;
    explicit Exponent(std::vector<int> parts);
    static Exponent zero(int s) { return Exponent(std::vector<int>(s, 0)); }
    static Exponent unit(int s, int i);

    int size() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }

    Exponent operator+(const Exponent& o) const;
    // Componentwise difference; requires o <= *this componentwise.
    Exponent operator-(const Exponent& o) const;
    bool operator==(const Exponent& o) const { return parts_ == o.parts_; }
    bool operator!=(const Exponent& o) const { return parts_ != o.parts_; }

    std::string to_string() const;

  private:
    std::vector<int> parts_;
    int degree_ = 0;
};

// Componentwise a <= b, i.e. x^a divides x^b.
bool divides(const Exponent& a, const Exponent& b);
// Componentwise maximum.
Exponent lcm_exp(const Exponent& a, const Exponent& b);

enum class Ordering { Less, Equal, Greater };

// Total orders on exponents. Both public kinds compare (|a|, a_1, ..., a_s)
// lexicographically; they differ in which term of a polynomial is the
// distinguished (initial) one: the minimal exponent for LocalDegLex, the
// maximal one for GlobalDegLex.
//
// The Elim* kinds serve ideal intersection in an extended ring whose first
// variable is the auxiliary elimination variable: its degree is compared
// first (larger power greater), then the remaining variables under the base
// kind. Their initial term follows the base kind's convention on the tail
// while the elimination variable stays dominant.
enum class OrderKind { LocalDegLex, GlobalDegLex, ElimLocalDegLex, ElimGlobalDegLex };

struct MonomialOrder {
    OrderKind kind = OrderKind::LocalDegLex;
    int variable_count = 0;

    static MonomialOrder local(int s) { return {OrderKind::LocalDegLex, s}; }
    static MonomialOrder global(int s) { return {OrderKind::GlobalDegLex, s}; }
    // Extended-ring orders; `s` counts all variables including the leading
    // elimination variable (index 0).
    static MonomialOrder elim_local(int s) { return {OrderKind::ElimLocalDegLex, s}; }
    static MonomialOrder elim_global(int s) { return {OrderKind::ElimGlobalDegLex, s}; }

    bool is_local_kind() const {
        return kind == OrderKind::LocalDegLex || kind == OrderKind::ElimLocalDegLex;
    }
    bool is_elimination() const {
        return kind == OrderKind::ElimLocalDegLex || kind == OrderKind::ElimGlobalDegLex;
    }
    std::string to_string() const;
};

// Degree-then-lex comparison of (|a|, a_1, ..., a_s); both public order kinds.
Ordering deg_lex_compare(const Exponent& a, const Exponent& b);

// The order relation of `ord` (Elim kinds compare the elimination variable
// first). Throws a dimension error on length mismatch.
Ordering compare_exp(const Exponent& a, const Exponent& b, const MonomialOrder& ord);

// True when `a` is selected over `b` as the initial exponent under `ord`
// (strict; equal exponents yield false).
bool initial_precedes(const Exponent& a, const Exponent& b, const MonomialOrder& ord);

}  // namespace sblab
