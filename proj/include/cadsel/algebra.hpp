// Resultants, discriminants, and the projection operator behind the sotd
// heuristic: coefficients + discriminants + pairwise resultants, with the
// output set normalized (constants removed, integer content divided out,
// sign canonicalized, duplicates merged).
#pragma once

#include "cadsel/ordering.hpp"
#include "cadsel/polynomial.hpp"
#include "cadsel/problem.hpp"

#include <vector>

namespace cadsel {

// Determinant of the Sylvester matrix of p and q with respect to v, by
// fraction-free (Bareiss) elimination over the integer polynomial ring.
// Convention: deg_v(q) = 0 gives q^deg_v(p), symmetrically for p.
// Throws if both arguments are zero.
Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t v);

// (-1)^(d(d-1)/2) * res_v(p, dp/dv) / lc_v(p), d = deg_v(p) >= 2.
// The division is exact by construction; an inexact division aborts.
Polynomial discriminant(const Polynomial& p, std::size_t v);

// Divide by integer content, make the leading coefficient positive.
Polynomial normalize_polynomial(const Polynomial& p);

// Drop constants, normalize each polynomial, dedupe, sort canonically.
std::vector<Polynomial> normalize_set(std::vector<Polynomial> polys);

// One projection step eliminating v. Polynomials constant in v pass
// through; the rest contribute coefficients, discriminants (deg >= 2),
// and pairwise resultants. Output is normalized and never mentions v.
std::vector<Polynomial> project_step(const std::vector<Polynomial>& polys, std::size_t v);

struct ProjectionLevel {
    int eliminated = -1;  // -1 for the input level
    std::vector<Polynomial> polys;
};

// Level 0 is the normalized input; level i+1 projects away ordering[i].
// Runs the n-1 elimination steps, stopping early when the set becomes
// empty or mentions at most one variable.
std::vector<ProjectionLevel> full_projection(const ProblemInstance& problem,
                                             const Ordering& ordering);

}  // namespace cadsel
