// Cohomology of the cyclic group Z/p with coefficients in a finite
// dimensional module, computed from the period-two resolution with maps
// multiplication by g-1 and by the norm 1 + g + ... + g^(p-1), and the
// E2-page dimension grid H^s(G, H^q(A, k)).

#ifndef HOMCOH_LHS_HPP
#define HOMCOH_LHS_HPP

#include "barcoh.hpp"

namespace homcoh::lhs {

using barcoh::BarComplex;
using ff::Fp;

struct GModule {
    std::size_t dim = 0;
    std::vector<Fp> mat;  // row-major action of the generator g

    Fp at(std::size_t r, std::size_t c) const { return mat[r * dim + c]; }
};

// Throws unless mat^p = identity.
void validate_gmodule(const ff::PrimeField& f, const GModule& m);

// dim H^n(Z/p, M): ker(g-1) in degree 0, then ker N / im(g-1) and
// ker(g-1) / im N alternating.
std::uint32_t cyclic_cohomology(const ff::PrimeField& f, const GModule& m, std::uint32_t n);

// Action of g on H^q(A, k) in a chosen cocycle basis.
GModule g_module_of_cohomology(const BarComplex& cx, const algebras::GroupAction& act,
                               std::uint32_t q);

struct E2Page {
    std::vector<std::vector<std::uint32_t>> dim;  // dim[s][q], s <= S, q <= Q
};

E2Page e2_page(const ff::PrimeField& f, const std::vector<GModule>& coeffs, std::uint32_t S);

struct Convergence {
    std::uint32_t n = 0;
    std::uint32_t smash_dim = 0;  // dim H^n(A # kG, k), bar oracle
    std::uint32_t e2_sum = 0;     // sum of E2 dimensions on the diagonal
    bool ok = false;              // smash_dim <= e2_sum
};

Convergence convergence_check(const E2Page& page, std::uint32_t n, std::uint32_t smash_dim);

}  // namespace homcoh::lhs

#endif
