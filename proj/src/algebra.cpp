#include "cadsel/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cadsel {

namespace {

// Sylvester matrix of p (degree m in v) and q (degree l in v): l rows of
// p's coefficients followed by m rows of q's, leading coefficient first.
std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& p, const Polynomial& q,
                                                      std::size_t v) {
    const std::size_t n = p.nvars();
    auto pc = p.coefficients_in(v);  // index = power of v
    auto qc = q.coefficients_in(v);
    const std::size_t m = pc.size() - 1;
    const std::size_t l = qc.size() - 1;
    const std::size_t dim = m + l;
    std::vector<std::vector<Polynomial>> mat(dim, std::vector<Polynomial>(dim, Polynomial(n)));
    for (std::size_t r = 0; r < l; ++r)
        for (std::size_t k = 0; k <= m; ++k) mat[r][r + k] = pc[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= l; ++k) mat[l + r][r + k] = qc[l - k];
    return mat;
}

// Fraction-free determinant; every division is exact in the polynomial ring.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m, std::size_t nvars) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(nvars, 1);
    int sign = 1;
    Polynomial prev = Polynomial::constant(nvars, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Polynomial(nvars);  // zero column, det = 0
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto quot = num.divided_exactly_by(prev);
                if (!quot)
                    throw std::logic_error("fraction-free elimination produced an inexact division");
                m[i][j] = std::move(*quot);
            }
            m[i][k] = Polynomial(nvars);
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t v) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("resultant: arity mismatch");
    if (v >= p.nvars()) throw std::out_of_range("variable index out of range");
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("resultant of two zero polynomials");
    const std::uint32_t dp = p.degree_in(v);
    const std::uint32_t dq = q.degree_in(v);
    if (dq == 0) return q.pow(dp);
    if (dp == 0) return p.pow(dq);
    return bareiss_determinant(sylvester_matrix(p, q, v), p.nvars());
}

Polynomial discriminant(const Polynomial& p, std::size_t v) {
    const std::uint32_t d = p.degree_in(v);
    if (d < 2)
        throw std::invalid_argument("discriminant requires degree >= 2 in the variable");
    Polynomial res = resultant(p, p.derivative(v), v);
    auto quot = res.divided_exactly_by(p.leading_coefficient_in(v));
    if (!quot)
        throw std::logic_error("discriminant: division by the leading coefficient was inexact");
    bool negate = ((static_cast<std::uint64_t>(d) * (d - 1)) / 2) % 2 == 1;
    return negate ? -*quot : *quot;
}

Polynomial normalize_polynomial(const Polynomial& p) { return p.primitive_part(); }

std::vector<Polynomial> normalize_set(std::vector<Polynomial> polys) {
    std::vector<Polynomial> out;
    for (auto& p : polys) {
        if (p.is_constant()) continue;
        out.push_back(normalize_polynomial(p));
    }
    std::sort(out.begin(), out.end(), Polynomial::canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Polynomial> project_step(const std::vector<Polynomial>& polys, std::size_t v) {
    std::vector<Polynomial> image;
    std::vector<const Polynomial*> active;  // deg_v >= 1
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        if (p.degree_in(v) == 0) {
            image.push_back(p);
            continue;
        }
        active.push_back(&p);
        for (auto& c : p.coefficients_in(v)) image.push_back(std::move(c));
        if (p.degree_in(v) >= 2) image.push_back(discriminant(p, v));
    }
    for (std::size_t i = 0; i < active.size(); ++i)
        for (std::size_t j = i + 1; j < active.size(); ++j)
            image.push_back(resultant(*active[i], *active[j], v));
    return normalize_set(std::move(image));
}

std::vector<ProjectionLevel> full_projection(const ProblemInstance& problem,
                                             const Ordering& ordering) {
    const std::size_t n = problem.nvars();
    std::vector<bool> used(n, false);
    if (ordering.sequence.size() != n)
        throw std::invalid_argument("ordering length does not match variable count");
    for (std::size_t v : ordering.sequence) {
        if (v >= n || used[v])
            throw std::invalid_argument("ordering is not a permutation of the variables");
        used[v] = true;
    }

    auto mentions_at_most_one_variable = [](const std::vector<Polynomial>& set) {
        std::set<std::size_t> vars;
        for (const auto& p : set)
            for (std::size_t v : p.variables_mentioned()) vars.insert(v);
        return vars.size() <= 1;
    };

    std::vector<ProjectionLevel> levels;
    levels.push_back({-1, normalize_set(problem.polys)});
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto& current = levels.back().polys;
        if (current.empty() || mentions_at_most_one_variable(current)) break;
        auto next = project_step(current, ordering.sequence[i]);
        levels.push_back({static_cast<int>(ordering.sequence[i]), std::move(next)});
    }
    return levels;
}

}  // namespace cadsel
