// Anick's resolution of the trivial module over an augmented algebra with a
// confirmed Groebner basis, for left modules with chains read left to right.
//
// n-chains are words carrying n-1 obstruction occurrences: the first is a
// prefix, the last a suffix, consecutive ones share at least one letter and
// non-consecutive ones are disjoint, and no obstruction occurrence ends
// earlier than the designated one inside each extension block. Such words
// are exactly the paths of length n from the unit vertex in a finite graph
// whose vertices are the generators and the proper suffixes of obstructions.
//
// The differential and the contracting homotopy are built together, degree
// by degree: d_n(1[w]) = L - h_{n-2}(d_{n-1}(L)) where L marks the unique
// (n-1)-chain suffix of w, and h peels leading terms through chain-suffix
// lifts. Exactness holds by construction; the combinatorial facts the
// construction relies on (existence and uniqueness of chain suffixes) are
// asserted at run time.

#ifndef HOMCOH_ANICK_HPP
#define HOMCOH_ANICK_HPP

#include <map>
#include <optional>
#include <vector>

#include "algebras.hpp"

namespace homcoh::anick {

using algebras::NormalFormEngine;
using freealg::FreeElement;
using freealg::Gen;
using freealg::Word;
using ff::Fp;

class ChainGraph {
public:
    ChainGraph(const freealg::TipSet& tips, std::size_t ngens,
               const freealg::MonomialOrder* ord);

    // Chain words of homological degree n, sorted by the monomial order.
    std::vector<Word> chains(std::size_t n) const;

private:
    bool edge_allowed(const Word& r, const Word& s) const;

    const freealg::TipSet* tips_;
    const freealg::MonomialOrder* ord_;
    std::size_t ngens_;
    std::vector<Word> vertices_;                 // generators then tip suffixes
    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<std::uint32_t> start_;           // generator vertices
};

// Element of A (x) kC_n: marked monomials keyed by (full word, chain index)
// where full = coefficient word + chain word. Within a fixed degree two
// distinct chains are never suffixes of the same word, so the full word
// determines the marking; the comparator falls back to the chain index only
// to stay a strict weak order.
struct MarkedKey {
    Word full;
    std::uint32_t chain;
    bool operator==(const MarkedKey& o) const { return full == o.full && chain == o.chain; }
};

struct MarkedLess {
    const freealg::MonomialOrder* ord;
    bool operator()(const MarkedKey& x, const MarkedKey& y) const {
        int c = ord->compare(x.full, y.full);
        if (c != 0) return c < 0;
        return x.chain < y.chain;
    }
};

using ResElement = std::map<MarkedKey, Fp, MarkedLess>;

struct ExtDims {
    std::vector<std::uint32_t> dims;  // dims[n] = dim H^n, n = 0..N
    std::vector<bool> minimal;        // per degree
    bool minimal_through(std::size_t n) const {
        for (std::size_t i = 0; i <= n; ++i)
            if (!minimal[i]) return false;
        return true;
    }
};

class Resolution {
public:
    explicit Resolution(std::shared_ptr<const NormalFormEngine> eng);

    void extend(std::size_t N);  // build chains and differentials through degree N

    std::size_t built_through() const { return chains_.size() - 1; }
    const std::vector<Word>& chain_set(std::size_t n) const { return chains_.at(n); }
    std::vector<std::uint64_t> chain_degrees(std::size_t n) const;  // word lengths

    // d_n(1 [x] w), n >= 1.
    const ResElement& differential(std::size_t n, std::size_t chain_idx) const;

    // d_n applied to an arbitrary element of A (x) kC_n.
    ResElement apply_differential(std::size_t n, const ResElement& x) const;

    // Requires the resolution built through N+1.
    ExtDims ext_dims(std::size_t N) const;

    // Scalar matrix of d_n over the algebra basis; rows index A (x) kC_{n-1},
    // columns A (x) kC_n, flattened as basis_index * |C| + chain_index.
    ff::FMatrix scalar_matrix(std::size_t n, const algebras::QuotientAlgebra& alg) const;

    const NormalFormEngine& engine() const { return *eng_; }

private:
    ResElement d_of_chain(std::size_t n, const Word& w);
    ResElement homotopy(std::size_t n, ResElement z);
    // Unique member of C_n that is a suffix of w, if any.
    std::optional<std::uint32_t> chain_suffix(std::size_t n, const Word& w) const;
    ResElement make_element(std::initializer_list<std::pair<MarkedKey, Fp>> terms) const;

    std::shared_ptr<const NormalFormEngine> eng_;
    ChainGraph graph_;
    std::vector<std::vector<Word>> chains_;            // per degree
    std::vector<std::map<Word, std::uint32_t>> chain_index_;
    std::vector<std::vector<ResElement>> d_;           // d_[n][chain]
};

// Closed-form chain sets for the two-generator truncated families with tips
// {b a, a^p, b^p}: used as an oracle against the graph enumeration.
std::vector<Word> closed_form_chains(std::uint32_t p, std::size_t n);

// Chain words only, without building differentials.
std::vector<Word> chain_words(const NormalFormEngine& eng, std::size_t n);

}  // namespace homcoh::anick

#endif
