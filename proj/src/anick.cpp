#include "anick.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace homcoh::anick {

ChainGraph::ChainGraph(const freealg::TipSet& tips, std::size_t ngens,
                       const freealg::MonomialOrder* ord)
    : tips_(&tips), ord_(ord), ngens_(ngens) {
    std::map<Word, std::uint32_t> seen;
    auto vertex = [&](const Word& w) {
        auto it = seen.find(w);
        if (it != seen.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(vertices_.size());
        seen.emplace(w, id);
        vertices_.push_back(w);
        return id;
    };
    for (std::size_t g = 0; g < ngens_; ++g) start_.push_back(vertex(Word(1, static_cast<Gen>(g))));
    for (const auto& t : tips.tips())
        for (std::size_t k = 1; k < t.size(); ++k) vertex(t.substr(k));

    adj_.resize(vertices_.size());
    for (std::uint32_t u = 0; u < vertices_.size(); ++u)
        for (std::uint32_t v = 0; v < vertices_.size(); ++v)
            if (edge_allowed(vertices_[u], vertices_[v])) adj_[u].push_back(v);
}

bool ChainGraph::edge_allowed(const Word& r, const Word& s) const {
    // Designated obstruction: a tip equal to (nonempty suffix of r) + s.
    bool found = false;
    for (const auto& t : tips_->tips()) {
        if (t.size() <= s.size() || t.size() > r.size() + s.size()) continue;
        if (t.compare(t.size() - s.size(), s.size(), s) != 0) continue;
        std::size_t rlen = t.size() - s.size();
        if (r.compare(r.size() - rlen, rlen, t, 0, rlen) != 0) continue;
        found = true;
        break;
    }
    if (!found) return false;
    // The designated obstruction must be the first to complete within the new
    // block: nothing may end strictly inside it.
    Word rs = r + s;
    return !tips_->any_occurrence_ending_in(rs, r.size() + 1, rs.size());
}

std::vector<Word> ChainGraph::chains(std::size_t n) const {
    if (n == 0) return {Word{}};
    std::vector<Word> out;
    if (n == 1) {
        for (auto v : start_) out.push_back(vertices_[v]);
    } else {
        std::set<Word> words;
        // Iterative DFS over paths of length n from the unit vertex.
        struct Frame {
            std::uint32_t vertex;
            std::size_t depth;
            Word word;
        };
        std::vector<Frame> stack;
        for (auto v : start_) stack.push_back({v, 1, vertices_[v]});
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            if (f.depth == n) {
                if (!words.insert(f.word).second)
                    throw std::logic_error("anick: duplicate chain word");
                continue;
            }
            for (auto t : adj_[f.vertex]) stack.push_back({t, f.depth + 1, f.word + vertices_[t]});
        }
        out.assign(words.begin(), words.end());
    }
    std::sort(out.begin(), out.end(),
              [&](const Word& u, const Word& v) { return ord_->compare(u, v) < 0; });
    return out;
}

std::vector<Word> chain_words(const NormalFormEngine& eng, std::size_t n) {
    ChainGraph g(eng.gb().tipset, eng.ctx()->order.ngens, &eng.ctx()->order);
    return g.chains(n);
}

std::vector<Word> closed_form_chains(std::uint32_t p, std::size_t n) {
    const Gen a = 0, b = 1;
    auto word = [&](std::size_t nb, std::size_t na) { return Word(nb, b) + Word(na, a); };
    std::vector<Word> out;
    if (n == 0) {
        out.push_back(Word{});
    } else if (n % 2 == 1) {
        std::size_t m = (n + 1) / 2;
        for (std::size_t k = 0; k < m; ++k) {
            out.push_back(word(k * p, (m - 1 - k) * p + 1));
            out.push_back(word(k * p + 1, (m - 1 - k) * p));
        }
    } else {
        std::size_t m = n / 2;
        out.push_back(word(m * p, 0));
        for (std::size_t k = 0; k < m; ++k) {
            out.push_back(word(k * p, (m - k) * p));
            out.push_back(word(k * p + 1, (m - 1 - k) * p + 1));
        }
    }
    return out;
}

Resolution::Resolution(std::shared_ptr<const NormalFormEngine> eng)
    : eng_(std::move(eng)),
      graph_(eng_->gb().tipset, eng_->ctx()->order.ngens, &eng_->ctx()->order) {
    for (const auto& t : eng_->gb().tips)
        if (t.size() < 2)
            throw std::invalid_argument("anick: single-letter obstruction; drop the redundant generator");
    chains_.push_back({Word{}});
    chain_index_.push_back({{Word{}, 0}});
    d_.emplace_back();  // no d_0
}

std::vector<std::uint64_t> Resolution::chain_degrees(std::size_t n) const {
    std::vector<std::uint64_t> d;
    for (const auto& w : chains_.at(n)) d.push_back(w.size());
    return d;
}

const ResElement& Resolution::differential(std::size_t n, std::size_t chain_idx) const {
    return d_.at(n).at(chain_idx);
}

std::optional<std::uint32_t> Resolution::chain_suffix(std::size_t n, const Word& w) const {
    std::optional<std::uint32_t> found;
    const auto& cs = chains_.at(n);
    for (std::uint32_t i = 0; i < cs.size(); ++i) {
        const Word& c = cs[i];
        if (c.size() > w.size()) continue;
        if (w.compare(w.size() - c.size(), c.size(), c) != 0) continue;
        if (found) throw std::logic_error("anick: two chains are suffixes of one word");
        found = i;
    }
    return found;
}

void Resolution::extend(std::size_t N) {
    for (std::size_t n = chains_.size(); n <= N; ++n) {
        chains_.push_back(graph_.chains(n));
        chain_index_.emplace_back();
        for (std::uint32_t i = 0; i < chains_[n].size(); ++i)
            chain_index_[n].emplace(chains_[n][i], i);
        d_.emplace_back();
        d_[n].reserve(chains_[n].size());
        for (const auto& w : chains_[n]) d_[n].push_back(d_of_chain(n, w));
    }
}

ResElement Resolution::apply_differential(std::size_t n, const ResElement& x) const {
    const auto& ctx = eng_->ctx();
    ResElement out(MarkedLess{&ctx->order});
    for (const auto& [key, c] : x) {
        const Word& w = chains_[n][key.chain];
        Word u = key.full.substr(0, key.full.size() - w.size());
        for (const auto& [key2, c2] : d_[n][key.chain]) {
            const Word& w2 = chains_[n - 1][key2.chain];
            Word u2 = key2.full.substr(0, key2.full.size() - w2.size());
            FreeElement prod = eng_->nf_word(u + u2);
            Fp cc = ctx->field.mul(c, c2);
            for (const auto& [z, cz] : prod.terms()) {
                MarkedKey k{z + w2, key2.chain};
                Fp add = ctx->field.mul(cc, cz);
                auto [it, fresh] = out.emplace(std::move(k), add);
                if (!fresh) {
                    it->second = ctx->field.add(it->second, add);
                    if (it->second == 0) out.erase(it);
                }
            }
        }
    }
    return out;
}

ResElement Resolution::homotopy(std::size_t n, ResElement z) {
    const auto& ctx = eng_->ctx();
    ResElement out(MarkedLess{&ctx->order});
    std::size_t guard = 0;
    while (!z.empty()) {
        if (++guard > 2000000) throw std::logic_error("anick: homotopy failed to terminate");
        auto it = std::prev(z.end());
        MarkedKey lead = it->first;
        Fp c = it->second;
        if (it != z.begin() && std::prev(it)->first.full == lead.full)
            throw std::logic_error("anick: ambiguous marking in homotopy");

        auto lift = chain_suffix(n + 1, lead.full);
        if (!lift)
            throw std::logic_error("anick: kernel leading word admits no chain lift");
        const Word& wplus = chains_[n + 1][*lift];
        const Word& wcur = chains_[n][lead.chain];
        if (wplus.size() <= wcur.size() || chain_suffix(n, wplus) != lead.chain)
            throw std::logic_error("anick: chain lift does not refine the marking");
        Word vplus = lead.full.substr(0, lead.full.size() - wplus.size());
        if (eng_->gb().tipset.contains_tip(vplus))
            throw std::logic_error("anick: chain lift has a reducible coefficient");

        MarkedKey up{lead.full, *lift};
        auto [jt, fresh] = out.emplace(up, c);
        if (!fresh) jt->second = ctx->field.add(jt->second, c);

        ResElement one(MarkedLess{&ctx->order});
        one.emplace(up, 1);
        ResElement dd = apply_differential(n + 1, one);
        for (const auto& [k, v] : dd) {
            Fp delta = ctx->field.neg(ctx->field.mul(c, v));
            auto [kt, f2] = z.emplace(k, delta);
            if (!f2) {
                kt->second = ctx->field.add(kt->second, delta);
                if (kt->second == 0) z.erase(kt);
            }
        }
        if (!z.empty()) {
            const MarkedKey& nl = std::prev(z.end())->first;
            if (ctx->order.compare(nl.full, lead.full) >= 0)
                throw std::logic_error("anick: homotopy leading term failed to decrease");
        }
    }
    return out;
}

ResElement Resolution::d_of_chain(std::size_t n, const Word& w) {
    const auto& ctx = eng_->ctx();
    if (n == 1) {
        ResElement r(MarkedLess{&ctx->order});
        r.emplace(MarkedKey{w, 0}, 1);
        return r;
    }
    auto suf = chain_suffix(n - 1, w);
    if (!suf) throw std::logic_error("anick: chain without lower chain suffix");
    Word v = w.substr(0, w.size() - chains_[n - 1][*suf].size());
    if (eng_->gb().tipset.contains_tip(v))
        throw std::logic_error("anick: chain prefix coefficient is reducible");

    ResElement L(MarkedLess{&ctx->order});
    L.emplace(MarkedKey{w, *suf}, 1);
    ResElement dL = apply_differential(n - 1, L);
    if (dL.empty()) return L;
    ResElement corr = homotopy(n - 2, std::move(dL));
    ResElement r = L;
    for (const auto& [k, c] : corr) {
        Fp delta = ctx->field.neg(c);
        auto [it, fresh] = r.emplace(k, delta);
        if (!fresh) {
            it->second = ctx->field.add(it->second, delta);
            if (it->second == 0) r.erase(it);
        }
    }
    return r;
}

ExtDims Resolution::ext_dims(std::size_t N) const {
    if (built_through() < N + 1)
        throw std::invalid_argument("ext_dims: resolution not built far enough");
    const auto& ctx = eng_->ctx();

    // eps-matrix of d_n: entry (chain of C_{n-1}, chain of C_n).
    auto eps_matrix = [&](std::size_t n) {
        std::vector<ff::Triplet> trip;
        for (std::uint32_t ci = 0; ci < chains_[n].size(); ++ci)
            for (const auto& [key, c] : d_[n][ci]) {
                const Word& w2 = chains_[n - 1][key.chain];
                Word u = key.full.substr(0, key.full.size() - w2.size());
                Fp e = ctx->eps_word(u);
                if (e) trip.push_back({key.chain, ci, ctx->field.mul(e, c)});
            }
        return ff::FMatrix::from_triplets(ctx->field, chains_[n - 1].size(), chains_[n].size(),
                                          trip);
    };

    ExtDims out;
    std::vector<std::size_t> rank(N + 2, 0);
    std::vector<bool> zero(N + 2, true);
    for (std::size_t n = 1; n <= N + 1; ++n) {
        ff::FMatrix e = eps_matrix(n);
        rank[n] = e.rank();
        zero[n] = rank[n] == 0;
        // rank 0 iff the matrix has no entries at all
    }
    for (std::size_t n = 0; n <= N; ++n) {
        std::size_t prev = n == 0 ? 0 : rank[n];
        out.dims.push_back(static_cast<std::uint32_t>(chains_[n].size() - rank[n + 1] - prev));
        out.minimal.push_back((n == 0 || zero[n]) && zero[n + 1]);
    }
    return out;
}

ff::FMatrix Resolution::scalar_matrix(std::size_t n, const algebras::QuotientAlgebra& alg) const {
    const auto& ctx = eng_->ctx();
    const std::size_t dim = alg.dim();
    const std::size_t rows = dim * chains_[n - 1].size();
    const std::size_t cols = dim * chains_[n].size();
    std::vector<ff::Triplet> trip;
    for (std::uint32_t vi = 0; vi < dim; ++vi)
        for (std::uint32_t ci = 0; ci < chains_[n].size(); ++ci) {
            ResElement x(MarkedLess{&ctx->order});
            x.emplace(MarkedKey{alg.basis()[vi] + chains_[n][ci], ci}, 1);
            ResElement dx = apply_differential(n, x);
            std::uint32_t col = vi * static_cast<std::uint32_t>(chains_[n].size()) + ci;
            for (const auto& [key, c] : dx) {
                const Word& w2 = chains_[n - 1][key.chain];
                Word u = key.full.substr(0, key.full.size() - w2.size());
                std::uint32_t row =
                    alg.index_of(u) * static_cast<std::uint32_t>(chains_[n - 1].size()) + key.chain;
                trip.push_back({row, col, c});
            }
        }
    return ff::FMatrix::from_triplets(ctx->field, rows, cols, trip);
}

}  // namespace homcoh::anick
