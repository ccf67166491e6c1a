// Exact linear algebra over a prime field F_p.
//
// Matrices are assembled once and then treated as immutable; rank, kernel
// and membership queries are pure. Elimination is column-incremental with
// the pivot always taken at the first nonzero row, so results are
// reproducible bit for bit. Storage switches from dense to sparse columns
// above a configurable entry-count threshold.

#ifndef HOMCOH_FF_HPP
#define HOMCOH_FF_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace homcoh::ff {

using Fp = std::uint32_t;  // residue in [0, p)

class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    Fp add(Fp a, Fp b) const {
        Fp s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + p_ - b; }
    Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
    Fp mul(Fp a, Fp b) const {
        return static_cast<Fp>((std::uint64_t(a) * b) % p_);
    }
    Fp inv(Fp a) const;
    Fp pow(Fp a, std::uint64_t e) const;
    Fp half() const { return inv2_; }  // 1/2, defined since p is odd
    Fp from_int(std::int64_t v) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
    Fp inv2_;
};

bool is_odd_prime(std::uint32_t p);

struct Triplet {
    std::uint32_t row;
    std::uint32_t col;
    Fp val;
};

class FMatrix {
public:
    // Entry-count threshold above which sparse storage is used.
    static constexpr std::size_t kSparseThreshold = 1000000;

    FMatrix(const PrimeField& f, std::size_t rows, std::size_t cols);

    static FMatrix from_rows(const PrimeField& f, std::size_t rows,
                             std::size_t cols, const std::vector<Fp>& row_major);
    static FMatrix from_triplets(const PrimeField& f, std::size_t rows,
                                 std::size_t cols,
                                 const std::vector<Triplet>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool sparse() const { return sparse_; }

    // Accumulates into (r, c). Assembly only; not thread safe.
    void add_at(std::size_t r, std::size_t c, Fp v);
    Fp at(std::size_t r, std::size_t c) const;

    std::size_t rank() const;
    std::size_t nullity() const { return cols_ - rank(); }

    // Basis of { x : M x = 0 }, one vector per non-pivot column.
    std::vector<std::vector<Fp>> kernel_basis() const;

    // Solves M x = rhs; nullopt when rhs is outside the column span.
    std::optional<std::vector<Fp>> solve(const std::vector<Fp>& rhs) const;

    std::vector<Fp> apply(const std::vector<Fp>& x) const;  // M x

private:
    using SparseCol = std::vector<std::pair<std::uint32_t, Fp>>;  // sorted by row

    SparseCol column(std::size_t c) const;

    struct EchelonResult {
        std::size_t rank = 0;
        std::vector<std::vector<Fp>> kernel;
        std::optional<std::vector<Fp>> solution;
        bool solvable = false;
    };
    EchelonResult eliminate(bool want_kernel, const std::vector<Fp>* rhs) const;

    PrimeField field_;
    std::size_t rows_ = 0, cols_ = 0;
    bool sparse_ = false;
    std::vector<Fp> dense_;          // column-major when !sparse_
    std::vector<SparseCol> cols_sp_;  // when sparse_
};

// Incremental span of dense vectors; used to pick cocycle representatives
// complementing a coboundary space.
class SpanBuilder {
public:
    SpanBuilder(const PrimeField& f, std::size_t dim) : field_(f), dim_(dim) {}

    // Returns true when v enlarged the span.
    bool add(std::vector<Fp> v);
    bool contains(std::vector<Fp> v) const;
    std::size_t rank() const { return pivots_.size(); }

private:
    bool reduce(std::vector<Fp>& v) const;  // true when reduced to zero

    PrimeField field_;
    std::size_t dim_;
    std::vector<std::pair<std::size_t, std::vector<Fp>>> pivots_;  // (pivot row, vec)
};

}  // namespace homcoh::ff

#endif
