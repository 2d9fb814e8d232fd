#pragma once

#include "algebra.hpp"

#include <utility>
#include <vector>

namespace jjcoh {

// A representation pi of an algebra on a module of dimension m, stored as
// one explicit m x m action matrix per basis vector.
struct Representation {
    Algebra algebra;
    std::size_t module_dim = 0;
    std::vector<Matrix> action; // action[i] = pi(e_i)
};

struct RepresentationCheck {
    bool ok = true;
    std::vector<std::pair<std::size_t, std::size_t>> violations; // basis pairs (i, j)
};

// pi(e_i e_j) = -pi(e_i)pi(e_j) - pi(e_j)pi(e_i) on all basis pairs.
inline RepresentationCheck check_representation(const Representation& r)
{
    std::size_t n = r.algebra.dim();
    if (r.action.size() != n)
        throw dimension_error("one action matrix per basis vector is required");
    for (const Matrix& m : r.action)
        if (m.rows() != r.module_dim || m.cols() != r.module_dim)
            throw dimension_error("action matrix has wrong shape");
    RepresentationCheck out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Matrix lhs(r.module_dim, r.module_dim);
            for (std::size_t k = 0; k < n; ++k)
                if (r.algebra.c(i, j, k) != 0)
                    lhs = lhs + r.action[k].scaled(r.algebra.c(i, j, k));
            Matrix rhs = (r.action[i] * r.action[j] + r.action[j] * r.action[i]).scaled(-1);
            if (!(lhs == rhs)) {
                out.ok = false;
                out.violations.emplace_back(i, j);
            }
        }
    return out;
}

inline Representation adjoint(const Algebra& a)
{
    Representation r;
    r.algebra = a;
    r.module_dim = a.dim();
    for (std::size_t i = 0; i < a.dim(); ++i)
        r.action.push_back(a.left_multiplication(i));
    return r;
}

inline Representation trivial(const Algebra& a, std::size_t m = 1)
{
    Representation r;
    r.algebra = a;
    r.module_dim = m;
    r.action.assign(a.dim(), Matrix(m, m));
    return r;
}

// {m in M : pi(x) m = 0 for all x}.
inline SubspaceBasis module_invariants(const Representation& r)
{
    if (r.algebra.dim() == 0)
        return SubspaceBasis::full(r.module_dim);
    Matrix stacked = r.action[0];
    for (std::size_t i = 1; i < r.action.size(); ++i)
        stacked = Matrix::vstack(stacked, r.action[i]);
    return nullspace(stacked);
}

} // namespace jjcoh
