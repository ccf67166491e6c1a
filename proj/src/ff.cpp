#include "ff.hpp"

#include <algorithm>
#include <cassert>

namespace homcoh::ff {

bool is_odd_prime(std::uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint32_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_odd_prime(p) || p > 65536)
        throw std::invalid_argument("PrimeField: modulus must be an odd prime <= 2^16, got " +
                                    std::to_string(p));
    inv2_ = inv(2 % p_);
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const {
    Fp r = 1 % p_;
    Fp base = a % p_;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Fp PrimeField::inv(Fp a) const {
    if (a == 0) throw std::invalid_argument("PrimeField::inv(0)");
    return pow(a, p_ - 2);
}

Fp PrimeField::from_int(std::int64_t v) const {
    std::int64_t m = v % std::int64_t(p_);
    if (m < 0) m += p_;
    return static_cast<Fp>(m);
}

FMatrix::FMatrix(const PrimeField& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
    sparse_ = rows * cols > kSparseThreshold;
    if (sparse_)
        cols_sp_.resize(cols);
    else
        dense_.assign(rows * cols, 0);
}

FMatrix FMatrix::from_rows(const PrimeField& f, std::size_t rows, std::size_t cols,
                           const std::vector<Fp>& row_major) {
    if (row_major.size() != rows * cols)
        throw std::invalid_argument("FMatrix::from_rows: size mismatch");
    FMatrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (row_major[r * cols + c] % f.modulus())
                m.add_at(r, c, row_major[r * cols + c] % f.modulus());
    return m;
}

FMatrix FMatrix::from_triplets(const PrimeField& f, std::size_t rows, std::size_t cols,
                               const std::vector<Triplet>& entries) {
    FMatrix m(f, rows, cols);
    for (const auto& t : entries) m.add_at(t.row, t.col, t.val);
    return m;
}

void FMatrix::add_at(std::size_t r, std::size_t c, Fp v) {
    if (r >= rows_ || c >= cols_) throw std::invalid_argument("FMatrix::add_at: out of range");
    v %= field_.modulus();
    if (v == 0) return;
    if (!sparse_) {
        Fp& e = dense_[c * rows_ + r];
        e = field_.add(e, v);
        return;
    }
    auto& col = cols_sp_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& p, std::size_t row) { return p.first < row; });
    if (it != col.end() && it->first == r) {
        it->second = field_.add(it->second, v);
        if (it->second == 0) col.erase(it);
    } else {
        col.insert(it, {static_cast<std::uint32_t>(r), v});
    }
}

Fp FMatrix::at(std::size_t r, std::size_t c) const {
    if (!sparse_) return dense_[c * rows_ + r];
    const auto& col = cols_sp_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& p, std::size_t row) { return p.first < row; });
    return (it != col.end() && it->first == r) ? it->second : 0;
}

FMatrix::SparseCol FMatrix::column(std::size_t c) const {
    if (sparse_) return cols_sp_[c];
    SparseCol out;
    for (std::size_t r = 0; r < rows_; ++r)
        if (Fp v = dense_[c * rows_ + r]) out.push_back({static_cast<std::uint32_t>(r), v});
    return out;
}

namespace {

// c -= f * pivot, both sorted by row.
void axpy_sub(const PrimeField& fld, std::vector<std::pair<std::uint32_t, Fp>>& c, Fp f,
              const std::vector<std::pair<std::uint32_t, Fp>>& pivot) {
    std::vector<std::pair<std::uint32_t, Fp>> out;
    out.reserve(c.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < c.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < c.size() && c[i].first < pivot[j].first)) {
            out.push_back(c[i++]);
        } else if (i == c.size() || pivot[j].first < c[i].first) {
            out.push_back({pivot[j].first, fld.neg(fld.mul(f, pivot[j].second))});
            ++j;
        } else {
            Fp v = fld.sub(c[i].second, fld.mul(f, pivot[j].second));
            if (v) out.push_back({c[i].first, v});
            ++i;
            ++j;
        }
    }
    c = std::move(out);
}

void scale(const PrimeField& fld, std::vector<std::pair<std::uint32_t, Fp>>& c, Fp f) {
    for (auto& e : c) e.second = fld.mul(e.second, f);
}

}  // namespace

// Column-incremental echelon. Pivot rule: a reduced column becomes a pivot at
// its first nonzero row. Expressions over the original columns are tracked so
// kernel vectors and membership certificates come out of the same pass.
FMatrix::EchelonResult FMatrix::eliminate(bool want_kernel, const std::vector<Fp>* rhs) const {
    EchelonResult res;
    const bool track = want_kernel || rhs != nullptr;

    std::vector<SparseCol> pivot_cols;
    std::vector<SparseCol> pivot_exprs;              // over original column indices
    std::vector<std::int64_t> pivot_at(rows_, -1);   // row -> pivot index

    auto reduce = [&](SparseCol& c, SparseCol& expr, bool record_expr) -> bool {
        // Returns true when c reduced to zero.
        while (!c.empty()) {
            std::uint32_t r = c.front().first;
            std::int64_t pi = pivot_at[r];
            if (pi < 0) return false;
            Fp f = c.front().second;  // pivot col is normalized with 1 at its row
            axpy_sub(field_, c, f, pivot_cols[pi]);
            if (record_expr) axpy_sub(field_, expr, f, pivot_exprs[pi]);
        }
        return true;
    };

    for (std::size_t j = 0; j < cols_; ++j) {
        SparseCol c = column(j);
        SparseCol expr = {{static_cast<std::uint32_t>(j), 1}};
        if (reduce(c, expr, track)) {
            if (want_kernel) {
                std::vector<Fp> v(cols_, 0);
                for (const auto& e : expr) v[e.first] = e.second;
                res.kernel.push_back(std::move(v));
            }
            continue;
        }
        Fp lead = c.front().second;
        Fp il = field_.inv(lead);
        scale(field_, c, il);
        if (track) scale(field_, expr, il);
        pivot_at[c.front().first] = static_cast<std::int64_t>(pivot_cols.size());
        pivot_cols.push_back(std::move(c));
        if (track) pivot_exprs.push_back(std::move(expr));
        ++res.rank;
    }

    if (rhs) {
        if (rhs->size() != rows_) throw std::invalid_argument("FMatrix::solve: length mismatch");
        SparseCol c;
        for (std::size_t r = 0; r < rows_; ++r)
            if ((*rhs)[r] % field_.modulus())
                c.push_back({static_cast<std::uint32_t>(r), (*rhs)[r] % field_.modulus()});
        // rhs = sum f_i * pivot_i; pivot expressions give original-column coords.
        std::vector<Fp> x(cols_, 0);
        bool ok = true;
        while (!c.empty()) {
            std::uint32_t r = c.front().first;
            std::int64_t pi = pivot_at[r];
            if (pi < 0) {
                ok = false;
                break;
            }
            Fp f = c.front().second;
            axpy_sub(field_, c, f, pivot_cols[pi]);
            for (const auto& e : pivot_exprs[pi]) x[e.first] = field_.add(x[e.first], field_.mul(f, e.second));
        }
        res.solvable = ok;
        if (ok) res.solution = std::move(x);
    }
    return res;
}

std::size_t FMatrix::rank() const { return eliminate(false, nullptr).rank; }

std::vector<std::vector<Fp>> FMatrix::kernel_basis() const {
    return eliminate(true, nullptr).kernel;
}

std::optional<std::vector<Fp>> FMatrix::solve(const std::vector<Fp>& rhs) const {
    auto res = eliminate(false, &rhs);
    if (!res.solvable) return std::nullopt;
    return res.solution;
}

std::vector<Fp> FMatrix::apply(const std::vector<Fp>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("FMatrix::apply: length mismatch");
    std::vector<Fp> y(rows_, 0);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (x[j] == 0) continue;
        for (const auto& [r, v] : column(j)) y[r] = field_.add(y[r], field_.mul(x[j], v));
    }
    return y;
}

bool SpanBuilder::reduce(std::vector<Fp>& v) const {
    for (const auto& [prow, pvec] : pivots_) {
        Fp f = v[prow];
        if (f == 0) continue;
        for (std::size_t i = 0; i < dim_; ++i) v[i] = field_.sub(v[i], field_.mul(f, pvec[i]));
    }
    return std::all_of(v.begin(), v.end(), [](Fp x) { return x == 0; });
}

bool SpanBuilder::add(std::vector<Fp> v) {
    if (v.size() != dim_) throw std::invalid_argument("SpanBuilder::add: length mismatch");
    if (reduce(v)) return false;
    std::size_t prow = 0;
    while (v[prow] == 0) ++prow;
    Fp il = field_.inv(v[prow]);
    for (auto& x : v) x = field_.mul(x, il);
    pivots_.push_back({prow, std::move(v)});
    return true;
}

bool SpanBuilder::contains(std::vector<Fp> v) const {
    if (v.size() != dim_) throw std::invalid_argument("SpanBuilder::contains: length mismatch");
    return reduce(v);
}

}  // namespace homcoh::ff
