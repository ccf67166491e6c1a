// Reduced-bar-complex cochains over a finite-dimensional augmented algebra:
// differentials, cup products, group actions, coboundary membership, and the
// explicit degree-2 classes picking the a^p / b^p coefficient of products.
//
// Degree-n cochains are finitely supported functions on n-tuples of
// positive-degree basis words; the differential is the alternating sum of
// interior multiplications. Products of positive elements stay positive
// because the augmentation is multiplicative, so the complex is well defined
// on tuples of positive words.

#ifndef HOMCOH_BARCOH_HPP
#define HOMCOH_BARCOH_HPP

#include <map>
#include <mutex>
#include <optional>

#include "algebras.hpp"
#include "errors.hpp"

namespace homcoh::barcoh {

using algebras::GroupAction;
using algebras::NormalFormEngine;
using algebras::QuotientAlgebra;
using freealg::FreeElement;
using freealg::Gen;
using freealg::Word;
using ff::Fp;

struct Cochain {
    std::uint32_t degree = 0;
    std::map<std::uint64_t, Fp> vals;  // mixed-radix keys over positive words

    bool is_zero() const { return vals.empty(); }
    bool operator==(const Cochain& o) const { return degree == o.degree && vals == o.vals; }
};

class BarComplex {
public:
    explicit BarComplex(const QuotientAlgebra* alg, std::uint64_t budget_mb = 512);

    const QuotientAlgebra& algebra() const { return *alg_; }
    std::size_t positive_dim() const { return pos_words_.size(); }
    const std::vector<Word>& positive_words() const { return pos_words_; }

    std::uint64_t encode(const std::vector<std::uint32_t>& tuple) const;
    std::vector<std::uint32_t> decode(std::uint64_t key, std::uint32_t degree) const;
    std::uint32_t pos_index(const Word& w) const;

    Cochain zero(std::uint32_t degree) const { return Cochain{degree, {}}; }
    Cochain dual_word(const Word& w) const;                 // degree 1
    Cochain dual_tuple(const std::vector<Word>& t) const;   // degree |t|
    void add_value(Cochain& f, const std::vector<Word>& t, Fp c) const;
    Fp value(const Cochain& f, const std::vector<Word>& t) const;

    Cochain add(const Cochain& f, const Cochain& g) const;
    Cochain sub(const Cochain& f, const Cochain& g) const;
    Cochain scale(const Cochain& f, Fp c) const;

    Cochain differential(const Cochain& f) const;
    Cochain cup(const Cochain& f, const Cochain& g) const;

    // Diagonal action via the inverse automorphism on every argument.
    Cochain group_transform(const Cochain& f, const GroupAction& act) const;

    // dim H^n from bar differential ranks; throws BudgetError when the
    // dense-equivalent matrix estimate exceeds the budget.
    std::uint32_t ext_dim(std::uint32_t n) const;

    bool is_cocycle(const Cochain& f) const { return differential(f).is_zero(); }
    std::optional<Cochain> coboundary_witness(const Cochain& f) const;
    bool is_coboundary(const Cochain& f) const { return coboundary_witness(f).has_value(); }

    // Cocycle representatives of H^q complementing the coboundary span.
    std::vector<Cochain> cohomology_reps(std::uint32_t q) const;

    // Matrix of the action on H^q in the given representative basis
    // (column i = coordinates of g . reps[i]); reps default to
    // cohomology_reps(q). Throws when a transformed class leaves the span.
    std::vector<std::vector<Fp>> action_matrix_on_classes(
        std::uint32_t q, const GroupAction& act,
        const std::vector<Cochain>* reps = nullptr) const;

    std::vector<Fp> to_vector(const Cochain& f) const;
    Cochain from_vector(std::uint32_t degree, const std::vector<Fp>& v) const;

private:
    const ff::FMatrix& delta_matrix(std::uint32_t n) const;  // cached
    void check_budget(std::uint32_t n) const;                // for delta_matrix(n)

    const QuotientAlgebra* alg_;
    std::uint64_t budget_mb_;
    std::vector<Word> pos_words_;                       // basis minus the unit
    std::vector<std::uint32_t> pos_to_alg_;
    std::unordered_map<Word, std::uint32_t, algebras::WordHash> pos_index_;
    // copairs[w]: (u, v, coeff of w in u*v), all positive indices
    std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, Fp>>> copairs_;
    mutable std::mutex mat_mu_;
    mutable std::map<std::uint32_t, ff::FMatrix> mats_;
};

// Degree-2 cochain on A_p: the coefficient of a^p (which = 'a') or b^p
// (which = 'b') in the product of the canonical lifts, computed in B.
Cochain xi_cochain(const BarComplex& cx, const NormalFormEngine& b_engine, char which);

// The same class extended to the smash product: coefficient of a^p or b^p in
// the group-degree-zero-augmented component of products computed in B # kG.
Cochain xi_cochain_smash(const BarComplex& smash_cx, const NormalFormEngine& b_engine,
                         const GroupAction& act_on_b, char which);

// Precomposition with the embedding of the h-free part.
Cochain restrict_cochain(const BarComplex& smash_cx, const BarComplex& a_cx, const Cochain& f);

// #{(i,j,l,m) : 2(i+j)+l+m = n, l,m in {0,1}} == n+1 for all n <= N.
bool hilbert_free_basis_identity(std::uint32_t N);

}  // namespace homcoh::barcoh

#endif
