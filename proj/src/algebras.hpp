// Finite-dimensional augmented quotient algebras from confirmed Groebner
// presentations, the example families A_p / B_p / gr A_p, group actions by
// automorphisms, and the smash-product presentation on h = g - 1.

#ifndef HOMCOH_ALGEBRAS_HPP
#define HOMCOH_ALGEBRAS_HPP

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "freealg.hpp"

namespace homcoh::algebras {

using freealg::CtxPtr;
using freealg::FreeElement;
using freealg::Gen;
using freealg::GroebnerBasis;
using freealg::Presentation;
using freealg::Word;
using ff::Fp;

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ull;
        for (auto g : w) h = (h ^ g) * 1099511628211ull;
        return h;
    }
};

// Confirmed-basis reduction engine with a per-word normal form cache.
// Suitable for infinite-dimensional algebras such as B_p, where only
// normal-form access is available.
class NormalFormEngine {
public:
    NormalFormEngine(Presentation pres, std::uint64_t degree_cap);

    const Presentation& presentation() const { return pres_; }
    const GroebnerBasis& gb() const { return gb_; }
    const CtxPtr& ctx() const { return pres_.ctx; }

    FreeElement nf_word(const Word& w) const;  // cached
    FreeElement nf(const FreeElement& f) const;

private:
    struct Cache {
        std::shared_mutex mu;
        std::unordered_map<Word, FreeElement, WordHash> map;
    };

    Presentation pres_;
    GroebnerBasis gb_;
    std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

// x*g_i - g_i*x reduces to zero for every generator g_i.
bool is_central(const FreeElement& x, const NormalFormEngine& eng);

// Sparse vector over the algebra basis, sorted by index.
using SparseVec = std::vector<std::pair<std::uint32_t, Fp>>;

class QuotientAlgebra {
public:
    // Fails when the normal-word basis is not finite (or exceeds max_dim).
    QuotientAlgebra(Presentation pres, std::uint64_t degree_cap, std::uint64_t max_dim);

    const NormalFormEngine& engine() const { return *eng_; }
    std::shared_ptr<const NormalFormEngine> engine_ptr() const { return eng_; }
    const CtxPtr& ctx() const { return eng_->ctx(); }
    const GroebnerBasis& gb() const { return eng_->gb(); }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<Word>& basis() const { return basis_; }  // ascending, basis()[0] = 1
    std::uint32_t index_of(const Word& w) const;
    Fp eps(std::uint32_t idx) const { return ctx()->eps_word(basis_[idx]); }

    // Structure constants for basis_[i] * basis_[j]; cached, idempotent fill.
    SparseVec mul(std::uint32_t i, std::uint32_t j) const;
    SparseVec expand(const FreeElement& f) const;  // normal form in basis coords
    SparseVec mul_elements(const SparseVec& x, const SparseVec& y) const;
    Fp eps_of(const SparseVec& x) const;

private:
    struct MulCache {
        std::shared_mutex mu;
        std::unordered_map<std::uint64_t, SparseVec> map;
    };

    std::shared_ptr<const NormalFormEngine> eng_;
    std::vector<Word> basis_;
    std::unordered_map<Word, std::uint32_t, WordHash> index_;
    std::unique_ptr<MulCache> mul_cache_ = std::make_unique<MulCache>();
};

struct GroupAction {
    std::uint32_t order = 1;                 // cyclic group order
    std::vector<FreeElement> gen_images;     // image of each algebra generator
};

struct ActionReport {
    bool respects_relations = false;
    bool has_order_n = false;
    bool preserves_augmentation = false;
    bool ok() const { return respects_relations && has_order_n && preserves_augmentation; }
};

// Substitutes generator images; no reduction.
FreeElement apply_action(const GroupAction& act, const FreeElement& f);
FreeElement apply_action_word(const GroupAction& act, const CtxPtr& ctx, const Word& w);
// k-th power of the action applied to f (k >= 0).
FreeElement apply_action_pow(const GroupAction& act, const FreeElement& f, std::uint32_t k);

ActionReport validate_action(const QuotientAlgebra& alg, const GroupAction& act);

// --- Example families -------------------------------------------------------

// Shared two-generator context: deg(a) = (0,1), deg(b) = (1,0), degrees
// compared lexicographically, word-lex tie break with b > a.
CtxPtr context_ab(std::uint32_t p);

Presentation presentation_B(std::uint32_t p);     // ba = ab + a^2/2
Presentation presentation_A(std::uint32_t p);     // + a^p = b^p = 0
Presentation presentation_grA(std::uint32_t p);   // ba = ab, a^p = b^p = 0

NormalFormEngine build_B(std::uint32_t p);
QuotientAlgebra build_A(std::uint32_t p);
QuotientAlgebra build_grA(std::uint32_t p);

// g(a) = a, g(b) = b - a, order p.
GroupAction standard_action(const CtxPtr& ctx_ab, std::uint32_t p);

// Presentation of alg # k<g> on generators {old gens, h}, h = g - 1:
// old relations, h^p, and h*x - x*h - (g(x) - x)*(h + 1) per generator.
// Order: deglex with h above the old generators, all weights 1.
Presentation smash_presentation(const QuotientAlgebra& alg, const GroupAction& act,
                                const std::string& h_name = "h");

QuotientAlgebra build_smash(const QuotientAlgebra& alg, const GroupAction& act);
QuotientAlgebra build_smash(std::uint32_t p);  // A_p with the standard action

// Conjugation by g on the smash algebra: a -> a, b -> b - a, h -> h.
GroupAction smash_conjugation_action(const QuotientAlgebra& smash, std::uint32_t p);

// The h-free part of the smash basis multiplies exactly like A.
bool embedded_copy_matches(const QuotientAlgebra& smash, const QuotientAlgebra& a);

}  // namespace homcoh::algebras

#endif
