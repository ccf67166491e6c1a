#include "algebras.hpp"

#include <algorithm>
#include <stdexcept>

namespace homcoh::algebras {

NormalFormEngine::NormalFormEngine(Presentation pres, std::uint64_t degree_cap)
    : pres_(std::move(pres)) {
    gb_ = freealg::complete(pres_, degree_cap);
    if (!gb_.confirmed())
        throw std::runtime_error("NormalFormEngine: completion hit the degree cap");
}

FreeElement NormalFormEngine::nf_word(const Word& w) const {
    {
        std::shared_lock lk(cache_->mu);
        auto it = cache_->map.find(w);
        if (it != cache_->map.end()) return it->second;
    }
    FreeElement r = freealg::normal_form(FreeElement::monomial(ctx(), w), gb_);
    std::unique_lock lk(cache_->mu);
    return cache_->map.emplace(w, std::move(r)).first->second;
}

FreeElement NormalFormEngine::nf(const FreeElement& f) const {
    FreeElement out(ctx());
    for (const auto& [w, c] : f.terms()) {
        FreeElement part = nf_word(w);
        for (const auto& [u, cu] : part.terms()) out.add_term(u, ctx()->field.mul(c, cu));
    }
    return out;
}

bool is_central(const FreeElement& x, const NormalFormEngine& eng) {
    const auto& ctx = eng.ctx();
    for (std::size_t g = 0; g < ctx->order.ngens; ++g) {
        Word gw(1, static_cast<Gen>(g));
        FreeElement comm = x.right_mul(gw) - x.left_mul(gw);
        if (!eng.nf(comm).is_zero()) return false;
    }
    return true;
}

QuotientAlgebra::QuotientAlgebra(Presentation pres, std::uint64_t degree_cap,
                                 std::uint64_t max_dim)
    : eng_(std::make_shared<const NormalFormEngine>(std::move(pres), degree_cap)) {
    // Normal words are closed under subwords, so the first empty length ends
    // the enumeration; running past max_dim words means not finite.
    const auto& gb = eng_->gb();
    std::vector<Word> level{Word{}};
    basis_.push_back(Word{});
    std::uint64_t len = 0;
    while (!level.empty()) {
        ++len;
        std::vector<Word> next;
        for (const auto& w : level)
            for (std::size_t g = 0; g < ctx()->order.ngens; ++g) {
                Word c = w;
                c.push_back(static_cast<Gen>(g));
                if (!gb.tipset.suffix_tip(c)) next.push_back(std::move(c));
            }
        basis_.insert(basis_.end(), next.begin(), next.end());
        if (basis_.size() > max_dim)
            throw std::runtime_error("QuotientAlgebra: basis exceeds max_dim; not finite dimensional?");
        level = std::move(next);
    }
    std::sort(basis_.begin(), basis_.end(),
              [&](const Word& u, const Word& v) { return ctx()->order.compare(u, v) < 0; });
    for (std::uint32_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;

    // The augmentation must kill every relation, else it is not an algebra map.
    for (const auto& r : eng_->presentation().relations) {
        Fp e = 0;
        for (const auto& [w, c] : r.terms())
            e = ctx()->field.add(e, ctx()->field.mul(c, ctx()->eps_word(w)));
        if (e != 0) throw std::invalid_argument("QuotientAlgebra: augmentation does not vanish on a relation");
    }
}

std::uint32_t QuotientAlgebra::index_of(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("QuotientAlgebra: word not in basis");
    return it->second;
}

SparseVec QuotientAlgebra::expand(const FreeElement& f) const {
    FreeElement r = eng_->nf(f);
    SparseVec out;
    for (const auto& [w, c] : r.terms()) out.push_back({index_of(w), c});
    std::sort(out.begin(), out.end());
    return out;
}

SparseVec QuotientAlgebra::mul(std::uint32_t i, std::uint32_t j) const {
    std::uint64_t key = (std::uint64_t(i) << 32) | j;
    {
        std::shared_lock lk(mul_cache_->mu);
        auto it = mul_cache_->map.find(key);
        if (it != mul_cache_->map.end()) return it->second;
    }
    SparseVec v = expand(FreeElement::monomial(ctx(), basis_[i] + basis_[j]));
    std::unique_lock lk(mul_cache_->mu);
    return mul_cache_->map.emplace(key, std::move(v)).first->second;
}

SparseVec QuotientAlgebra::mul_elements(const SparseVec& x, const SparseVec& y) const {
    std::map<std::uint32_t, Fp> acc;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) {
            Fp c = ctx()->field.mul(ci, cj);
            for (const auto& [k, ck] : mul(i, j)) {
                Fp& slot = acc[k];
                slot = ctx()->field.add(slot, ctx()->field.mul(c, ck));
            }
        }
    SparseVec out;
    for (const auto& [k, c] : acc)
        if (c) out.push_back({k, c});
    return out;
}

Fp QuotientAlgebra::eps_of(const SparseVec& x) const {
    Fp e = 0;
    for (const auto& [i, c] : x) e = ctx()->field.add(e, ctx()->field.mul(c, eps(i)));
    return e;
}

FreeElement apply_action_word(const GroupAction& act, const CtxPtr& ctx, const Word& w) {
    FreeElement r = FreeElement::monomial(ctx, Word{});
    for (Gen g : w) r = r * act.gen_images[g];
    return r;
}

FreeElement apply_action(const GroupAction& act, const FreeElement& f) {
    FreeElement out(f.ctx());
    for (const auto& [w, c] : f.terms()) out = out + apply_action_word(act, f.ctx(), w).scaled(c);
    return out;
}

FreeElement apply_action_pow(const GroupAction& act, const FreeElement& f, std::uint32_t k) {
    FreeElement r = f;
    for (std::uint32_t i = 0; i < k; ++i) r = apply_action(act, r);
    return r;
}

ActionReport validate_action(const QuotientAlgebra& alg, const GroupAction& act) {
    ActionReport rep;
    const auto& ctx = alg.ctx();
    const auto& eng = alg.engine();

    rep.respects_relations = true;
    for (const auto& r : alg.engine().presentation().relations)
        if (!eng.nf(apply_action(act, r)).is_zero()) rep.respects_relations = false;

    rep.has_order_n = true;
    for (std::size_t g = 0; g < ctx->order.ngens; ++g) {
        FreeElement x = FreeElement::monomial(ctx, Word(1, static_cast<Gen>(g)));
        FreeElement gx = apply_action_pow(act, x, act.order);
        if (!eng.nf(gx - x).is_zero()) rep.has_order_n = false;
    }

    rep.preserves_augmentation = true;
    for (std::size_t g = 0; g < ctx->order.ngens; ++g) {
        Fp e = 0;
        for (const auto& [w, c] : act.gen_images[g].terms())
            e = ctx->field.add(e, ctx->field.mul(c, ctx->eps_word(w)));
        if (e != ctx->gen_eps[g]) rep.preserves_augmentation = false;
    }
    return rep;
}

CtxPtr context_ab(std::uint32_t p) {
    freealg::MonomialOrder ord;
    ord.kind = freealg::MonomialOrder::Kind::weighted_lex;
    ord.ngens = 2;
    ord.weights = {{0, 1}, {1, 0}};  // deg(a) = (0,1), deg(b) = (1,0)
    ord.prec_rank = {1, 0};          // b above a in the word-lex tie break
    return freealg::make_context(ff::PrimeField(p), ord, {"a", "b"}, {0, 0});
}

namespace {

FreeElement rel_ba_ab_half_a2(const CtxPtr& ctx, bool with_half) {
    const Gen a = 0, b = 1;
    FreeElement r(ctx);
    r.add_term(Word{b, a}, 1);
    r.add_term(Word{a, b}, ctx->field.neg(1));
    if (with_half) r.add_term(Word{a, a}, ctx->field.neg(ctx->field.half()));
    return r;
}

FreeElement power_relation(const CtxPtr& ctx, Gen g, std::uint32_t p) {
    return FreeElement::monomial(ctx, Word(p, g));
}

}  // namespace

Presentation presentation_B(std::uint32_t p) {
    CtxPtr ctx = context_ab(p);
    return Presentation{ctx, {rel_ba_ab_half_a2(ctx, true)}};
}

Presentation presentation_A(std::uint32_t p) {
    CtxPtr ctx = context_ab(p);
    return Presentation{
        ctx, {rel_ba_ab_half_a2(ctx, true), power_relation(ctx, 0, p), power_relation(ctx, 1, p)}};
}

Presentation presentation_grA(std::uint32_t p) {
    CtxPtr ctx = context_ab(p);
    return Presentation{
        ctx, {rel_ba_ab_half_a2(ctx, false), power_relation(ctx, 0, p), power_relation(ctx, 1, p)}};
}

NormalFormEngine build_B(std::uint32_t p) { return NormalFormEngine(presentation_B(p), 16); }

QuotientAlgebra build_A(std::uint32_t p) {
    QuotientAlgebra alg(presentation_A(p), 4 * std::uint64_t(p), std::uint64_t(p) * p);
    if (alg.dim() != std::uint64_t(p) * p) throw std::runtime_error("build_A: unexpected dimension");
    return alg;
}

QuotientAlgebra build_grA(std::uint32_t p) {
    QuotientAlgebra alg(presentation_grA(p), 4 * std::uint64_t(p), std::uint64_t(p) * p);
    if (alg.dim() != std::uint64_t(p) * p) throw std::runtime_error("build_grA: unexpected dimension");
    return alg;
}

GroupAction standard_action(const CtxPtr& ctx, std::uint32_t p) {
    const Gen a = 0, b = 1;
    GroupAction act;
    act.order = p;
    act.gen_images.push_back(FreeElement::monomial(ctx, Word{a}));
    FreeElement gb(ctx);
    gb.add_term(Word{b}, 1);
    gb.add_term(Word{a}, ctx->field.neg(1));
    act.gen_images.push_back(gb);
    return act;
}

Presentation smash_presentation(const QuotientAlgebra& alg, const GroupAction& act,
                                const std::string& h_name) {
    const auto& old = alg.ctx();
    const std::uint32_t p = old->field.modulus();
    if (act.order != p)
        throw std::invalid_argument("smash_presentation: group order must equal the characteristic");
    if (!validate_action(alg, act).ok())
        throw std::invalid_argument("smash_presentation: action does not validate");

    const std::size_t n_old = old->order.ngens;
    freealg::MonomialOrder ord;
    ord.kind = freealg::MonomialOrder::Kind::deglex;
    ord.ngens = n_old + 1;
    ord.weights.assign(n_old + 1, {1});
    // h gets top precedence; the old generators keep their relative order.
    ord.prec_rank.resize(n_old + 1);
    for (std::size_t g = 0; g < n_old; ++g) ord.prec_rank[g] = old->order.prec_rank[g] + 1;
    ord.prec_rank[n_old] = 0;

    std::vector<std::string> names = old->gen_names;
    names.push_back(h_name);
    std::vector<Fp> eps = old->gen_eps;
    eps.push_back(0);
    CtxPtr ctx = freealg::make_context(old->field, ord, names, eps);

    auto port = [&](const FreeElement& f) {
        FreeElement r(ctx);
        for (const auto& [w, c] : f.terms()) r.add_term(w, c);  // indices are unchanged
        return r;
    };

    Presentation pres;
    pres.ctx = ctx;
    for (const auto& r : alg.engine().presentation().relations) pres.relations.push_back(port(r));

    const Gen h = static_cast<Gen>(n_old);
    pres.relations.push_back(FreeElement::monomial(ctx, Word(p, h)));  // (g-1)^p = 0
    FreeElement h_plus_1(ctx);
    h_plus_1.add_term(Word{h}, 1);
    h_plus_1.add_term(Word{}, 1);
    for (std::size_t g = 0; g < n_old; ++g) {
        Word x(1, static_cast<Gen>(g));
        FreeElement delta = port(act.gen_images[g]) - FreeElement::monomial(ctx, x);
        FreeElement rel = FreeElement::monomial(ctx, Word{h} + x) -
                          FreeElement::monomial(ctx, x + Word{h}) - delta * h_plus_1;
        pres.relations.push_back(rel);
    }
    return pres;
}

QuotientAlgebra build_smash(const QuotientAlgebra& alg, const GroupAction& act) {
    const std::uint32_t p = alg.ctx()->field.modulus();
    std::uint64_t want = std::uint64_t(alg.dim()) * act.order;
    QuotientAlgebra sm(smash_presentation(alg, act), 6 * std::uint64_t(p), want);
    if (sm.dim() != want) throw std::runtime_error("build_smash: unexpected dimension");
    return sm;
}

QuotientAlgebra build_smash(std::uint32_t p) {
    QuotientAlgebra a = build_A(p);
    return build_smash(a, standard_action(a.ctx(), p));
}

GroupAction smash_conjugation_action(const QuotientAlgebra& smash, std::uint32_t p) {
    const auto& ctx = smash.ctx();
    const Gen a = 0, b = 1, h = 2;
    GroupAction act;
    act.order = p;
    act.gen_images.push_back(FreeElement::monomial(ctx, Word{a}));
    FreeElement gb(ctx);
    gb.add_term(Word{b}, 1);
    gb.add_term(Word{a}, ctx->field.neg(1));
    act.gen_images.push_back(gb);
    act.gen_images.push_back(FreeElement::monomial(ctx, Word{h}));
    return act;
}

bool embedded_copy_matches(const QuotientAlgebra& smash, const QuotientAlgebra& a) {
    const Gen h = static_cast<Gen>(smash.ctx()->order.ngens - 1);
    // Basis words without h must biject with a's basis and multiply identically.
    std::vector<Word> hfree;
    for (const auto& w : smash.basis())
        if (w.find(h) == Word::npos) hfree.push_back(w);
    if (hfree.size() != a.dim()) return false;
    for (const auto& w : hfree)
        a.index_of(w);  // throws if missing
    for (const auto& u : hfree)
        for (const auto& v : hfree) {
            SparseVec in_smash = smash.mul(smash.index_of(u), smash.index_of(v));
            SparseVec in_a = a.mul(a.index_of(u), a.index_of(v));
            // The two bases are sorted by different orders; compare via words.
            std::map<Word, Fp> ws, wa;
            for (const auto& [i, c] : in_smash) ws[smash.basis()[i]] = c;
            for (const auto& [i, c] : in_a) wa[a.basis()[i]] = c;
            if (ws != wa) return false;
        }
    return true;
}

}  // namespace homcoh::algebras
