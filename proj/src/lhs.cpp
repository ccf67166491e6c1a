#include "lhs.hpp"

namespace homcoh::lhs {

namespace {

std::vector<Fp> mat_mul(const ff::PrimeField& f, const std::vector<Fp>& a,
                        const std::vector<Fp>& b, std::size_t n) {
    std::vector<Fp> c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Fp aik = a[i * n + k];
            if (!aik) continue;
            for (std::size_t j = 0; j < n; ++j)
                c[i * n + j] = f.add(c[i * n + j], f.mul(aik, b[k * n + j]));
        }
    return c;
}

std::vector<Fp> identity(std::size_t n) {
    std::vector<Fp> m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}

}  // namespace

void validate_gmodule(const ff::PrimeField& f, const GModule& m) {
    if (m.mat.size() != m.dim * m.dim) throw std::invalid_argument("GModule: shape mismatch");
    std::vector<Fp> pw = identity(m.dim);
    for (std::uint32_t i = 0; i < f.modulus(); ++i) pw = mat_mul(f, pw, m.mat, m.dim);
    if (pw != identity(m.dim))
        throw std::invalid_argument("GModule: generator action is not of order dividing p");
}

std::uint32_t cyclic_cohomology(const ff::PrimeField& f, const GModule& m, std::uint32_t n) {
    validate_gmodule(f, m);
    const std::size_t d = m.dim;
    if (d == 0) return 0;

    std::vector<Fp> t = m.mat;  // g - 1
    for (std::size_t i = 0; i < d; ++i) t[i * d + i] = f.sub(t[i * d + i], 1);
    std::vector<Fp> norm(d * d, 0), pw = identity(d);
    for (std::uint32_t k = 0; k < f.modulus(); ++k) {
        for (std::size_t i = 0; i < d * d; ++i) norm[i] = f.add(norm[i], pw[i]);
        pw = mat_mul(f, pw, m.mat, d);
    }

    auto rank_of = [&](const std::vector<Fp>& mm) {
        return ff::FMatrix::from_rows(f, d, d, mm).rank();
    };
    const std::size_t rank_t = rank_of(t);
    const std::size_t rank_norm = rank_of(norm);

    if (n == 0) return static_cast<std::uint32_t>(d - rank_t);  // ker(g-1)
    if (n % 2 == 1) return static_cast<std::uint32_t>(d - rank_norm - rank_t);
    return static_cast<std::uint32_t>(d - rank_t - rank_norm);
}

GModule g_module_of_cohomology(const BarComplex& cx, const algebras::GroupAction& act,
                               std::uint32_t q) {
    auto mat = cx.action_matrix_on_classes(q, act);
    GModule m;
    m.dim = mat.size();
    for (const auto& row : mat) m.mat.insert(m.mat.end(), row.begin(), row.end());
    return m;
}

E2Page e2_page(const ff::PrimeField& f, const std::vector<GModule>& coeffs, std::uint32_t S) {
    E2Page page;
    page.dim.assign(S + 1, std::vector<std::uint32_t>(coeffs.size(), 0));
    for (std::uint32_t s = 0; s <= S; ++s)
        for (std::size_t q = 0; q < coeffs.size(); ++q)
            page.dim[s][q] = cyclic_cohomology(f, coeffs[q], s);
    return page;
}

Convergence convergence_check(const E2Page& page, std::uint32_t n, std::uint32_t smash_dim) {
    Convergence c;
    c.n = n;
    c.smash_dim = smash_dim;
    for (std::uint32_t s = 0; s <= n; ++s) {
        std::uint32_t q = n - s;
        if (s >= page.dim.size() || q >= page.dim[s].size())
            throw std::invalid_argument("convergence_check: page too small");
        c.e2_sum += page.dim[s][q];
    }
    c.ok = c.smash_dim <= c.e2_sum;
    return c;
}

}  // namespace homcoh::lhs
