// Words in a free algebra, admissible monomial orders, linear combinations,
// two-sided reduction and overlap completion.
//
// A word is a string of generator indices; the empty word is the unit
// monomial. Orders compare ZZ^d-degree vectors lexicographically first
// (weighted_lex) or total weighted degree first (deglex), with word-lex on
// generator precedence as the tie break. Both are total, compatible with
// concatenation, and admit no infinite descending runs within a bounded
// word length, which is all reduction needs here.

#ifndef HOMCOH_FREEALG_HPP
#define HOMCOH_FREEALG_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ff.hpp"

namespace homcoh::freealg {

using ff::Fp;
using Gen = std::uint8_t;
using Word = std::basic_string<Gen>;

struct MonomialOrder {
    enum class Kind { weighted_lex, deglex };

    Kind kind = Kind::deglex;
    std::size_t ngens = 0;
    std::vector<std::vector<std::uint32_t>> weights;  // per generator, d components
    std::vector<std::uint32_t> prec_rank;             // smaller rank = bigger letter

    void validate() const;

    std::vector<std::uint64_t> degree(const Word& w) const;
    std::uint64_t total_degree(const Word& w) const;

    // -1, 0, +1 for u < v, u == v, u > v.
    int compare(const Word& u, const Word& v) const;
    bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }
};

struct Context {
    ff::PrimeField field;
    MonomialOrder order;
    std::vector<std::string> gen_names;
    std::vector<Fp> gen_eps;  // augmentation of each generator

    Gen gen_index(const std::string& name) const;
    Fp eps_word(const Word& w) const;  // product of generator augmentations
};
using CtxPtr = std::shared_ptr<const Context>;

CtxPtr make_context(ff::PrimeField field, MonomialOrder order,
                    std::vector<std::string> names, std::vector<Fp> eps);

struct WordLess {
    const MonomialOrder* ord = nullptr;
    bool operator()(const Word& u, const Word& v) const { return ord->compare(u, v) < 0; }
};

class FreeElement {
public:
    FreeElement() = default;
    explicit FreeElement(CtxPtr ctx) : ctx_(std::move(ctx)), terms_(WordLess{&ctx_->order}) {}
    static FreeElement monomial(CtxPtr ctx, const Word& w, Fp c = 1);

    const CtxPtr& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Word, Fp, WordLess>& terms() const { return terms_; }

    Fp coeff(const Word& w) const;
    const Word& leading_word() const;  // throws on zero
    Fp leading_coeff() const;

    void add_term(const Word& w, Fp c);

    FreeElement operator+(const FreeElement& o) const;
    FreeElement operator-(const FreeElement& o) const;
    FreeElement scaled(Fp c) const;
    FreeElement operator*(const FreeElement& o) const;  // free product
    FreeElement left_mul(const Word& w) const;
    FreeElement right_mul(const Word& w) const;

    bool operator==(const FreeElement& o) const { return terms_ == o.terms_; }

private:
    CtxPtr ctx_;
    std::map<Word, Fp, WordLess> terms_;
};

// Occurrence scanning over a fixed tip set. Plain scanning for small sets,
// Aho-Corasick above kAutomatonThreshold.
class TipSet {
public:
    static constexpr std::size_t kAutomatonThreshold = 8;

    TipSet() = default;
    explicit TipSet(std::vector<Word> tips);

    const std::vector<Word>& tips() const { return tips_; }
    bool empty() const { return tips_.empty(); }

    // Leftmost occurrence by start position: (start, tip index).
    std::optional<std::pair<std::size_t, std::uint32_t>> first_occurrence(const Word& w) const;
    bool contains_tip(const Word& w) const { return first_occurrence(w).has_value(); }
    // Any occurrence whose one-past-end position lies in [lo, hi)?
    bool any_occurrence_ending_in(const Word& w, std::size_t lo, std::size_t hi) const;
    // Tip equal to a suffix of w, if any (at most one by inter-reduction).
    std::optional<std::uint32_t> suffix_tip(const Word& w) const;

private:
    struct Node {
        std::map<Gen, std::uint32_t> next;
        std::uint32_t fail = 0;
        std::int32_t out = -1;           // tip ending here (tips are an antichain)
        std::uint32_t out_len = 0;
    };
    void build_automaton();
    template <class F>
    void scan(const Word& w, F&& on_hit) const;  // on_hit(end_exclusive, tip) -> bool stop

    std::vector<Word> tips_;
    bool use_automaton_ = false;
    std::vector<Node> nodes_;
};

struct Presentation {
    CtxPtr ctx;
    std::vector<FreeElement> relations;
};

struct CompletionStats {
    std::size_t pairs = 0;            // overlap pairs examined in the final pass
    std::size_t zero_reductions = 0;  // of which reduced to zero
    std::size_t added = 0;            // relations added over the whole run
};

struct GroebnerBasis {
    enum class Status { confirmed, degree_capped };

    CtxPtr ctx;
    std::vector<FreeElement> relations;  // monic, inter-reduced
    std::vector<Word> tips;              // leading words, parallel to relations
    TipSet tipset;
    Status status = Status::confirmed;
    CompletionStats stats;

    bool confirmed() const { return status == Status::confirmed; }
};

struct RewriteStep {
    Word left;
    std::uint32_t rel;
    Word right;
    Fp coeff;
};

// Two-sided normal form; idempotent and linear. When cert is non-null it
// receives steps with input - output = sum coeff * left * relation * right.
FreeElement normal_form(const FreeElement& f, const GroebnerBasis& gb,
                        std::vector<RewriteStep>* cert = nullptr);

GroebnerBasis complete(const Presentation& pres, std::uint64_t degree_cap);

// All tip-free words of length <= max_len, sorted by the monomial order.
std::vector<Word> normal_words(const GroebnerBasis& gb, std::uint64_t max_len);

// Every relation with a length-2 tip rewrites it into strictly smaller terms.
bool is_pbw(const GroebnerBasis& gb);

std::string render_word(const Context& ctx, const Word& w);
std::string render_element(const FreeElement& f);  // balanced signs, leading first

}  // namespace homcoh::freealg

#endif
