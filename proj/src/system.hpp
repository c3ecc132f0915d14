#pragma once

#include <memory>
#include <string>
#include <vector>

#include "group.hpp"
#include "numerics.hpp"

namespace xprod {

enum class AlgebraKind { full, diagonal };

// A concrete *-algebra A on H = C^dim together with a unitary-implemented
// action of a finite group. Immutable after construction; the membership
// machinery (orthonormal span + least-squares solver) is cached up front.
struct DynamicalSystem {
    GroupTable group;
    int dim = 0; // dimension of H
    AlgebraKind kind = AlgebraKind::full;
    int blocks = 1;    // diagonal: block count (full: 1)
    int block_dim = 0; // diagonal: block size (full: dim)
    std::vector<CMatrix> basis;
    std::vector<CMatrix> unitaries; // indexed by group element

    // Cached: stacked basis (dim^2 x m), its pseudo-inverse (m x dim^2) and an
    // orthonormal column span (dim^2 x m).
    CMatrix basis_stack;
    CMatrix basis_pinv;
    CMatrix basis_ortho;
};

using SystemPtr = std::shared_ptr<const DynamicalSystem>;

struct SystemAuditEntry {
    std::string invariant;
    bool pass = false;
    double slack = 0.0; // tol - residual for residual checks
    double tol = 0.0;
    std::string context;
};

// Re-checks every type invariant; usable on deliberately corrupted copies.
std::vector<SystemAuditEntry> audit_system(const DynamicalSystem& ds);

// A = M_d (matrix-unit basis); throws action_violation naming the failed
// invariant and the offending (g,h) when the unitaries do not implement a
// group action.
SystemPtr make_full_system(GroupTable group, int d, std::vector<CMatrix> unitaries);

// ell_inf(G, M_d) on C^(|G| d) with the left-translation block shift.
SystemPtr make_diagonal_system(const GroupTable& group, int d);
SystemPtr make_diagonal_system(int n, int d); // cyclic group C_n

std::vector<CMatrix> make_trivial_unitaries(const GroupTable& group, int d);

// U_g = W (P_g (x) I_copies) W* with P_g the left-regular permutation
// representation and W a seeded product of Householder reflections. The
// homomorphism property holds by construction.
std::vector<CMatrix> make_regular_conjugated_unitaries(const GroupTable& group, int copies,
                                                       std::uint64_t seed);

// alpha_g(A) = U_g A U_g*.
CMatrix act(const DynamicalSystem& ds, int g, const CMatrix& a);

struct Membership {
    std::vector<cplx> coords;
    double residual = 0.0;
};

// Least-squares coordinates of M in span(basis) plus the Frobenius residual.
Membership project_membership(const DynamicalSystem& ds, const CMatrix& m);

// Orthogonal projection of M onto span(basis).
CMatrix project_to_algebra(const DynamicalSystem& ds, const CMatrix& m);

inline bool in_algebra(const DynamicalSystem& ds, const CMatrix& m) {
    return project_membership(ds, m).residual <= 1e-9 * (1.0 + frobenius_norm(m));
}

} // namespace xprod
