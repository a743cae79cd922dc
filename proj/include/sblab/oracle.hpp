#pragma once

#include <vector>

#include "sblab/polynomial.hpp"

namespace sblab {

// Degree-truncated linear-algebra ground truth, independent of the division
// and completion machinery: ideal slices are spanned by shifted generators
// and decided by exact row reduction (fraction-free over Q, modular over F_p).

// All exponents of total degree exactly d (s variables), deg-lex ascending.
std::vector<Exponent> exponents_of_degree(int s, int d);
// All exponents of total degree <= d, deg-lex ascending.
std::vector<Exponent> exponents_up_to_degree(int s, int d);

// Exact membership of a homogeneous f in the graded ideal generated by gens:
// f must lie in the span of { x^g * h : h in gens, |g| + deg h = deg f }.
bool homog_member(const HomogeneousForm& f, const std::vector<HomogeneousForm>& gens);

// Semi-decision for f in I + m^D: true iff f is congruent mod m^D to a
// combination sum q_i g_i with bounded multipliers. Rejects D below the
// safety margin deg f + max generator degree.
bool truncated_member(const Polynomial& f, const std::vector<Polynomial>& gens, int degree_bound);

struct StaircaseResult {
    // Minimal generators (componentwise divisibility) of the observed set of
    // initial exponents, split at the certification threshold.
    std::vector<Exponent> certified;    // degree <= degree_bound - margin
    std::vector<Exponent> provisional;  // closer to the truncation than the margin allows
    int degree_bound = 0;
    int margin = 0;

    std::vector<Exponent> all() const;
};

// Brute-force staircase of the ideal generated by gens under the paper's
// local order, up to the degree bound: order-sorted elimination of the
// spanning set { x^g * g_i : |g| + deg g_i <= degree_bound }; pivot columns
// are initial exponents. Pivots of degree <= degree_bound - margin are
// certified (the margin defaults to max generator degree + 1).
StaircaseResult staircase(const std::vector<Polynomial>& gens, int degree_bound);

}  // namespace sblab
