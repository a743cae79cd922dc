#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sblab/polynomial.hpp"

namespace sblab {

// A parsed problem file: the ambient ring, the coefficient field, and the
// generator lists for I, J and (optionally) a. J defaults to (0); a defaults
// to the maximal ideal m = (x_1, ..., x_s) and is left empty here, with
// `a_generators()` materializing the default.
struct ProblemSpec {
    std::vector<std::string> variables;
    RingContext context;
    std::vector<Polynomial> generators_i;
    std::vector<Polynomial> generators_j;
    std::optional<std::vector<Polynomial>> generators_a;

    std::vector<Polynomial> a_generators() const;
};

// Parses one polynomial in the given ring context. The grammar is the
// polynomial sublanguage of problem files: signed sums of terms, "*"
// products, "^" exponents, integer or rational coefficients.
Polynomial parse_polynomial(const std::string& text, const RingContext& ctx,
                            const std::vector<std::string>& variables);

// Parses a full problem file:
//   problem  := ringDecl fieldDecl idealDecl+
//   ringDecl := "ring" "(" name ("," name)* ")"
//   fieldDecl:= "field" ("Q" | "Fp" prime)
//   idealDecl:= ("I"|"J"|"a") "=" "[" poly ("," poly)* "]"
// "#" starts a line comment. Generators must be nonzero with ord >= 1.
ProblemSpec parse_problem(const std::string& text);

ProblemSpec load_problem_file(const std::string& path);

}  // namespace sblab
