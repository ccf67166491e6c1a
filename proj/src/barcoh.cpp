#include "barcoh.hpp"

#include <algorithm>
#include <cassert>

namespace homcoh::barcoh {

BarComplex::BarComplex(const QuotientAlgebra* alg, std::uint64_t budget_mb)
    : alg_(alg), budget_mb_(budget_mb) {
    if (alg_->basis().empty() || !alg_->basis()[0].empty())
        throw std::logic_error("BarComplex: basis must start with the unit word");
    for (std::uint32_t i = 1; i < alg_->dim(); ++i) {
        pos_index_[alg_->basis()[i]] = static_cast<std::uint32_t>(pos_words_.size());
        pos_words_.push_back(alg_->basis()[i]);
        pos_to_alg_.push_back(i);
    }
    // Products of positive basis words never meet the unit (eps multiplies),
    // so the co-multiplication table closes on positive words.
    copairs_.resize(pos_words_.size());
    for (std::uint32_t u = 0; u < pos_words_.size(); ++u)
        for (std::uint32_t v = 0; v < pos_words_.size(); ++v) {
            for (const auto& [k, c] : alg_->mul(pos_to_alg_[u], pos_to_alg_[v])) {
                if (k == 0)
                    throw std::logic_error("BarComplex: positive product hit the unit");
                copairs_[k - 1].push_back({u, v, c});
            }
        }
}

std::uint64_t BarComplex::encode(const std::vector<std::uint32_t>& tuple) const {
    const std::uint64_t D = pos_words_.size();
    std::uint64_t key = 0;
    for (auto t : tuple) {
        if (key > (~std::uint64_t(0) - t) / D)
            throw BudgetError("bar: tuple space exceeds key width");
        key = key * D + t;
    }
    return key;
}

std::vector<std::uint32_t> BarComplex::decode(std::uint64_t key, std::uint32_t degree) const {
    const std::uint64_t D = pos_words_.size();
    std::vector<std::uint32_t> t(degree);
    for (std::uint32_t i = degree; i-- > 0;) {
        t[i] = static_cast<std::uint32_t>(key % D);
        key /= D;
    }
    return t;
}

std::uint32_t BarComplex::pos_index(const Word& w) const {
    auto it = pos_index_.find(w);
    if (it == pos_index_.end()) throw std::invalid_argument("BarComplex: not a positive basis word");
    return it->second;
}

Cochain BarComplex::dual_word(const Word& w) const {
    Cochain f{1, {}};
    f.vals[encode({pos_index(w)})] = 1;
    return f;
}

Cochain BarComplex::dual_tuple(const std::vector<Word>& t) const {
    Cochain f{static_cast<std::uint32_t>(t.size()), {}};
    std::vector<std::uint32_t> idx;
    for (const auto& w : t) idx.push_back(pos_index(w));
    f.vals[encode(idx)] = 1;
    return f;
}

void BarComplex::add_value(Cochain& f, const std::vector<Word>& t, Fp c) const {
    if (t.size() != f.degree) throw std::invalid_argument("add_value: degree mismatch");
    std::vector<std::uint32_t> idx;
    for (const auto& w : t) idx.push_back(pos_index(w));
    const auto& fld = alg_->ctx()->field;
    std::uint64_t key = encode(idx);
    Fp v = fld.add(f.vals.count(key) ? f.vals[key] : 0, fld.from_int(c));
    if (v)
        f.vals[key] = v;
    else
        f.vals.erase(key);
}

Fp BarComplex::value(const Cochain& f, const std::vector<Word>& t) const {
    std::vector<std::uint32_t> idx;
    for (const auto& w : t) idx.push_back(pos_index(w));
    auto it = f.vals.find(encode(idx));
    return it == f.vals.end() ? 0 : it->second;
}

Cochain BarComplex::add(const Cochain& f, const Cochain& g) const {
    if (f.degree != g.degree) throw std::invalid_argument("cochain add: degree mismatch");
    const auto& fld = alg_->ctx()->field;
    Cochain r = f;
    for (const auto& [k, c] : g.vals) {
        Fp v = fld.add(r.vals.count(k) ? r.vals[k] : 0, c);
        if (v)
            r.vals[k] = v;
        else
            r.vals.erase(k);
    }
    return r;
}

Cochain BarComplex::sub(const Cochain& f, const Cochain& g) const {
    return add(f, scale(g, alg_->ctx()->field.neg(1)));
}

Cochain BarComplex::scale(const Cochain& f, Fp c) const {
    const auto& fld = alg_->ctx()->field;
    Cochain r{f.degree, {}};
    c = c % fld.modulus();
    if (c == 0) return r;
    for (const auto& [k, v] : f.vals) r.vals[k] = fld.mul(v, c);
    return r;
}

Cochain BarComplex::differential(const Cochain& f) const {
    const auto& fld = alg_->ctx()->field;
    Cochain out{f.degree + 1, {}};
    if (f.degree == 0) return out;  // reduced complex
    for (const auto& [key, c] : f.vals) {
        auto t = decode(key, f.degree);
        for (std::uint32_t i = 0; i < f.degree; ++i) {
            // contraction at slot i expands back through the copairs of t[i]
            Fp sign_c = (i % 2 == 0) ? fld.neg(c) : c;  // (-1)^(i+1)
            for (const auto& [u, v, cw] : copairs_[t[i]]) {
                std::vector<std::uint32_t> y;
                y.reserve(f.degree + 1);
                y.insert(y.end(), t.begin(), t.begin() + i);
                y.push_back(u);
                y.push_back(v);
                y.insert(y.end(), t.begin() + i + 1, t.end());
                std::uint64_t yk = encode(y);
                Fp val = fld.add(out.vals.count(yk) ? out.vals[yk] : 0, fld.mul(sign_c, cw));
                if (val)
                    out.vals[yk] = val;
                else
                    out.vals.erase(yk);
            }
        }
    }
    return out;
}

Cochain BarComplex::cup(const Cochain& f, const Cochain& g) const {
    const auto& fld = alg_->ctx()->field;
    const std::uint64_t D = pos_words_.size();
    std::uint64_t shift = 1;
    for (std::uint32_t i = 0; i < g.degree; ++i) shift *= D;
    Cochain out{f.degree + g.degree, {}};
    for (const auto& [fk, fc] : f.vals)
        for (const auto& [gk, gc] : g.vals) {
            std::uint64_t key = fk * shift + gk;
            Fp val = fld.add(out.vals.count(key) ? out.vals[key] : 0, fld.mul(fc, gc));
            if (val)
                out.vals[key] = val;
            else
                out.vals.erase(key);
        }
    return out;
}

Cochain BarComplex::group_transform(const Cochain& f, const GroupAction& act) const {
    const auto& fld = alg_->ctx()->field;
    // sigma = inverse automorphism; row(w)[u] = coeff of w in sigma(u).
    std::vector<std::vector<std::pair<std::uint32_t, Fp>>> row(pos_words_.size());
    for (std::uint32_t u = 0; u < pos_words_.size(); ++u) {
        FreeElement img = algebras::apply_action_pow(
            act, FreeElement::monomial(alg_->ctx(), pos_words_[u]), act.order - 1);
        for (const auto& [i, c] : alg_->expand(img)) {
            if (i == 0) throw std::logic_error("group_transform: action does not preserve eps");
            row[i - 1].push_back({u, c});
        }
    }
    Cochain out{f.degree, {}};
    for (const auto& [key, c] : f.vals) {
        auto t = decode(key, f.degree);
        std::vector<std::pair<std::vector<std::uint32_t>, Fp>> parts{{{}, c}};
        for (std::uint32_t i = 0; i < f.degree; ++i) {
            std::vector<std::pair<std::vector<std::uint32_t>, Fp>> next;
            for (const auto& [pfx, pc] : parts)
                for (const auto& [u, cu] : row[t[i]]) {
                    auto np = pfx;
                    np.push_back(u);
                    next.push_back({std::move(np), fld.mul(pc, cu)});
                }
            parts = std::move(next);
        }
        for (const auto& [tuple, pc] : parts) {
            std::uint64_t k = encode(tuple);
            Fp val = fld.add(out.vals.count(k) ? out.vals[k] : 0, pc);
            if (val)
                out.vals[k] = val;
            else
                out.vals.erase(k);
        }
    }
    return out;
}

void BarComplex::check_budget(std::uint32_t n) const {
    // Dense-equivalent estimate for the degree-n differential matrix.
    long double d = static_cast<long double>(pos_words_.size());
    long double bytes = 4.0L;
    for (std::uint32_t i = 0; i < 2 * n + 1; ++i) bytes *= d;
    if (bytes >= static_cast<long double>(budget_mb_) * 1024.0L * 1024.0L)
        throw BudgetError("bar: differential matrix in degree " + std::to_string(n) +
                          " exceeds the " + std::to_string(budget_mb_) + " MB budget");
}

const ff::FMatrix& BarComplex::delta_matrix(std::uint32_t n) const {
    std::lock_guard lk(mat_mu_);
    auto it = mats_.find(n);
    if (it != mats_.end()) return it->second;
    check_budget(n);
    const std::uint64_t D = pos_words_.size();
    std::uint64_t cols = 1, rows = D;
    for (std::uint32_t i = 0; i < n; ++i) {
        cols *= D;
        rows *= D;
    }
    if (n == 0) rows = D;  // Hom(k) -> Hom(J): the zero map
    ff::FMatrix m(alg_->ctx()->field, n == 0 ? D : rows, n == 0 ? 1 : cols);
    if (n > 0) {
        for (std::uint64_t col = 0; col < cols; ++col) {
            Cochain e{n, {{col, 1}}};
            Cochain de = differential(e);
            for (const auto& [rk, c] : de.vals) m.add_at(rk, col, c);
        }
    }
    return mats_.emplace(n, std::move(m)).first->second;
}

std::uint32_t BarComplex::ext_dim(std::uint32_t n) const {
    if (n == 0) return 1;
    const ff::FMatrix& dn = delta_matrix(n);
    const ff::FMatrix& dprev = delta_matrix(n - 1);
    std::size_t cocycles = dn.nullity();
    std::size_t coboundaries = dprev.rank();  // delta(0) is the zero map
    return static_cast<std::uint32_t>(cocycles - coboundaries);
}

std::vector<Fp> BarComplex::to_vector(const Cochain& f) const {
    std::uint64_t dim = 1;
    for (std::uint32_t i = 0; i < f.degree; ++i) dim *= pos_words_.size();
    std::vector<Fp> v(dim, 0);
    for (const auto& [k, c] : f.vals) v[k] = c;
    return v;
}

Cochain BarComplex::from_vector(std::uint32_t degree, const std::vector<Fp>& v) const {
    Cochain f{degree, {}};
    for (std::uint64_t k = 0; k < v.size(); ++k)
        if (v[k] % alg_->ctx()->field.modulus())
            f.vals[k] = v[k] % alg_->ctx()->field.modulus();
    return f;
}

std::optional<Cochain> BarComplex::coboundary_witness(const Cochain& f) const {
    if (f.degree == 0) return f.is_zero() ? std::optional<Cochain>(zero(0)) : std::nullopt;
    const ff::FMatrix& m = delta_matrix(f.degree - 1);
    auto x = m.solve(to_vector(f));
    if (!x) return std::nullopt;
    return from_vector(f.degree - 1, *x);
}

std::vector<Cochain> BarComplex::cohomology_reps(std::uint32_t q) const {
    if (q == 0) return {Cochain{0, {{0, 1}}}};
    const ff::FMatrix& dq = delta_matrix(q);
    auto kernel = dq.kernel_basis();
    ff::SpanBuilder span(alg_->ctx()->field, dq.cols());
    if (q >= 1) {
        const ff::FMatrix& dprev = delta_matrix(q - 1);
        for (std::size_t j = 0; j < dprev.cols(); ++j) {
            std::vector<Fp> col(dprev.rows(), 0);
            for (std::size_t r = 0; r < dprev.rows(); ++r) col[r] = dprev.at(r, j);
            span.add(std::move(col));
        }
    }
    std::vector<Cochain> reps;
    for (auto& v : kernel)
        if (span.add(v)) reps.push_back(from_vector(q, v));
    return reps;
}

std::vector<std::vector<Fp>> BarComplex::action_matrix_on_classes(
    std::uint32_t q, const GroupAction& act, const std::vector<Cochain>* reps_in) const {
    const auto& fld = alg_->ctx()->field;
    if (q == 0) return {{1}};
    std::vector<Cochain> reps = reps_in ? *reps_in : cohomology_reps(q);
    const std::size_t d = reps.size();
    const ff::FMatrix& dprev = delta_matrix(q - 1);
    const std::size_t rows = dprev.rows();

    // [ coboundaries | representatives ] x = g . rep
    ff::FMatrix m(fld, rows, dprev.cols() + d);
    for (std::size_t j = 0; j < dprev.cols(); ++j)
        for (std::size_t r = 0; r < rows; ++r)
            if (Fp v = dprev.at(r, j)) m.add_at(r, j, v);
    for (std::size_t i = 0; i < d; ++i)
        for (const auto& [k, c] : reps[i].vals) m.add_at(k, dprev.cols() + i, c);

    std::vector<std::vector<Fp>> mat(d, std::vector<Fp>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
        Cochain g = group_transform(reps[i], act);
        auto x = m.solve(to_vector(g));
        if (!x) throw std::logic_error("action_matrix_on_classes: image leaves the span");
        for (std::size_t r = 0; r < d; ++r) mat[r][i] = (*x)[dprev.cols() + r];
    }
    return mat;
}

Cochain xi_cochain(const BarComplex& cx, const NormalFormEngine& b_engine, char which) {
    const auto& alg = cx.algebra();
    const std::uint32_t p = alg.ctx()->field.modulus();
    const Gen target_gen = which == 'a' ? 0 : 1;
    const Word target(p, target_gen);
    Cochain f = cx.zero(2);
    const auto& pw = cx.positive_words();
    for (std::uint32_t r = 0; r < pw.size(); ++r)
        for (std::uint32_t s = 0; s < pw.size(); ++s) {
            if (pw[r].size() + pw[s].size() != p) continue;  // graded: only these can hit
            FreeElement prod = b_engine.nf_word(pw[r] + pw[s]);
            Fp c = prod.coeff(target);
            if (c) f.vals[cx.encode({r, s})] = c;
        }
    return f;
}

namespace {

// Arithmetic in B # kG, elements keyed by (normal word of B, group exponent).
struct BSmash {
    const NormalFormEngine* b;
    const GroupAction* act;  // action of g on B
    std::uint32_t p;
    mutable std::map<std::pair<std::uint32_t, Word>, FreeElement> twist_cache;

    using Elem = std::map<std::pair<Word, std::uint32_t>, Fp>;

    const FreeElement& twist(std::uint32_t k, const Word& w) const {
        auto key = std::make_pair(k, w);
        auto it = twist_cache.find(key);
        if (it != twist_cache.end()) return it->second;
        FreeElement img = algebras::apply_action_pow(
            *act, FreeElement::monomial(b->ctx(), w), k);
        return twist_cache.emplace(key, b->nf(img)).first->second;
    }

    Elem mul(const Elem& x, const Elem& y) const {
        const auto& fld = b->ctx()->field;
        Elem out;
        for (const auto& [ku, cu] : x)
            for (const auto& [kv, cv] : y) {
                const auto& [u, gu] = ku;
                const auto& [v, gv] = kv;
                const FreeElement& tv = twist(gu, v);
                for (const auto& [z, cz] : tv.terms()) {
                    FreeElement prod = b->nf_word(u + z);
                    Fp c = fld.mul(fld.mul(cu, cv), cz);
                    for (const auto& [y2, cy] : prod.terms()) {
                        Fp& slot = out[{y2, (gu + gv) % p}];
                        slot = fld.add(slot, fld.mul(c, cy));
                    }
                }
            }
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }
};

}  // namespace

Cochain xi_cochain_smash(const BarComplex& smash_cx, const NormalFormEngine& b_engine,
                         const GroupAction& act_on_b, char which) {
    const auto& smash = smash_cx.algebra();
    const auto& fld = smash.ctx()->field;
    const std::uint32_t p = fld.modulus();
    const Gen h = static_cast<Gen>(smash.ctx()->order.ngens - 1);
    const Gen target_gen = which == 'a' ? 0 : 1;
    const Word target(p, target_gen);

    BSmash bs{&b_engine, &act_on_b, p, {}};

    // Binomials mod p for expanding (g-1)^l.
    std::vector<std::vector<Fp>> binom(p + 1, std::vector<Fp>(p + 1, 0));
    for (std::uint32_t i = 0; i <= p; ++i) {
        binom[i][0] = 1;
        for (std::uint32_t j = 1; j <= i; ++j)
            binom[i][j] = fld.add(binom[i - 1][j - 1], j <= i - 1 ? binom[i - 1][j] : 0);
    }

    // Lift of a smash basis word a^i b^j h^l into B # kG.
    auto lift = [&](const Word& w) {
        std::size_t cut = w.size();
        while (cut > 0 && w[cut - 1] == h) --cut;
        Word ab = w.substr(0, cut);
        if (ab.find(h) != Word::npos)
            throw std::logic_error("xi_cochain_smash: unexpected basis word shape");
        std::uint32_t l = static_cast<std::uint32_t>(w.size() - cut);
        BSmash::Elem e;
        for (std::uint32_t m2 = 0; m2 <= l; ++m2) {
            Fp c = binom[l][m2];
            if ((l - m2) % 2 == 1) c = fld.neg(c);
            if (c) e[{ab, m2}] = c;
        }
        return e;
    };

    Cochain f = smash_cx.zero(2);
    const auto& pw = smash_cx.positive_words();
    auto ab_degree = [&](const Word& w) {
        std::size_t d = 0;
        for (Gen g : w)
            if (g != h) ++d;
        return d;
    };
    for (std::uint32_t r = 0; r < pw.size(); ++r)
        for (std::uint32_t s = 0; s < pw.size(); ++s) {
            if (ab_degree(pw[r]) + ab_degree(pw[s]) != p) continue;
            BSmash::Elem prod = bs.mul(lift(pw[r]), lift(pw[s]));
            Fp c = 0;
            for (const auto& [key, v] : prod)
                if (key.first == target) c = fld.add(c, v);  // eps of every g^k is 1
            if (c) f.vals[smash_cx.encode({r, s})] = c;
        }
    return f;
}

Cochain restrict_cochain(const BarComplex& smash_cx, const BarComplex& a_cx, const Cochain& f) {
    Cochain out = a_cx.zero(f.degree);
    // Map a-side positive words into the smash index space.
    std::vector<std::int64_t> smash_to_a(smash_cx.positive_dim(), -1);
    for (std::uint32_t i = 0; i < a_cx.positive_dim(); ++i)
        smash_to_a[smash_cx.pos_index(a_cx.positive_words()[i])] = i;
    for (const auto& [key, c] : f.vals) {
        auto t = smash_cx.decode(key, f.degree);
        std::vector<std::uint32_t> at(t.size());
        bool ok = true;
        for (std::size_t i = 0; i < t.size() && ok; ++i) {
            if (smash_to_a[t[i]] < 0)
                ok = false;
            else
                at[i] = static_cast<std::uint32_t>(smash_to_a[t[i]]);
        }
        if (ok) out.vals[a_cx.encode(at)] = c;
    }
    return out;
}

bool hilbert_free_basis_identity(std::uint32_t N) {
    for (std::uint32_t n = 0; n <= N; ++n) {
        std::uint64_t count = 0;
        for (std::uint32_t l = 0; l <= 1; ++l)
            for (std::uint32_t m = 0; m <= 1; ++m) {
                if (l + m > n) continue;
                std::uint32_t rest = n - l - m;
                if (rest % 2) continue;
                count += rest / 2 + 1;  // pairs (i, j) with i + j = rest/2
            }
        if (count != n + 1) return false;
    }
    return true;
}

}  // namespace homcoh::barcoh
