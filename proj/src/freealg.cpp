#include "freealg.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace homcoh::freealg {

void MonomialOrder::validate() const {
    if (ngens == 0 || ngens > 250) throw std::invalid_argument("order: bad generator count");
    if (weights.size() != ngens || prec_rank.size() != ngens)
        throw std::invalid_argument("order: weight/precedence size mismatch");
    const std::size_t d = weights[0].size();
    if (d == 0) throw std::invalid_argument("order: empty weight vector");
    std::vector<bool> seen(ngens, false);
    for (std::size_t g = 0; g < ngens; ++g) {
        if (weights[g].size() != d) throw std::invalid_argument("order: ragged weights");
        std::uint64_t tot = 0;
        for (auto w : weights[g]) tot += w;
        if (tot == 0) throw std::invalid_argument("order: zero-weight generator");
        if (prec_rank[g] >= ngens || seen[prec_rank[g]])
            throw std::invalid_argument("order: precedence is not a permutation");
        seen[prec_rank[g]] = true;
    }
}

std::vector<std::uint64_t> MonomialOrder::degree(const Word& w) const {
    std::vector<std::uint64_t> d(weights[0].size(), 0);
    for (Gen g : w)
        for (std::size_t i = 0; i < d.size(); ++i) d[i] += weights[g][i];
    return d;
}

std::uint64_t MonomialOrder::total_degree(const Word& w) const {
    std::uint64_t t = 0;
    for (Gen g : w)
        for (auto x : weights[g]) t += x;
    return t;
}

int MonomialOrder::compare(const Word& u, const Word& v) const {
    if (u == v) return 0;
    if (kind == Kind::weighted_lex) {
        auto du = degree(u), dv = degree(v);
        if (du != dv) return du < dv ? -1 : 1;  // lexicographic on degree vectors
    } else {
        auto tu = total_degree(u), tv = total_degree(v);
        if (tu != tv) return tu < tv ? -1 : 1;
    }
    // Word-lex tie break: higher-precedence letter wins; a proper prefix loses.
    std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] != v[i]) return prec_rank[u[i]] > prec_rank[v[i]] ? -1 : 1;
    }
    return u.size() < v.size() ? -1 : 1;
}

Gen Context::gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < gen_names.size(); ++i)
        if (gen_names[i] == name) return static_cast<Gen>(i);
    throw std::invalid_argument("unknown generator '" + name + "'");
}

Fp Context::eps_word(const Word& w) const {
    Fp e = 1;
    for (Gen g : w) e = field.mul(e, gen_eps[g]);
    return e;
}

CtxPtr make_context(ff::PrimeField field, MonomialOrder order, std::vector<std::string> names,
                    std::vector<Fp> eps) {
    order.validate();
    if (names.size() != order.ngens || eps.size() != order.ngens)
        throw std::invalid_argument("context: name/eps count mismatch");
    Context c{field, std::move(order), std::move(names), std::move(eps)};
    return std::make_shared<const Context>(std::move(c));
}

FreeElement FreeElement::monomial(CtxPtr ctx, const Word& w, Fp c) {
    FreeElement e(std::move(ctx));
    e.add_term(w, c);
    return e;
}

Fp FreeElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

const Word& FreeElement::leading_word() const {
    if (terms_.empty()) throw std::logic_error("leading_word of zero element");
    return terms_.rbegin()->first;
}

Fp FreeElement::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of zero element");
    return terms_.rbegin()->second;
}

void FreeElement::add_term(const Word& w, Fp c) {
    c = c % ctx_->field.modulus();
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second = ctx_->field.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
    FreeElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
    FreeElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, ctx_->field.neg(c));
    return r;
}

FreeElement FreeElement::scaled(Fp c) const {
    FreeElement r(ctx_);
    for (const auto& [w, v] : terms_) r.add_term(w, ctx_->field.mul(v, c));
    return r;
}

FreeElement FreeElement::operator*(const FreeElement& o) const {
    FreeElement r(ctx_);
    for (const auto& [u, cu] : terms_)
        for (const auto& [v, cv] : o.terms_) r.add_term(u + v, ctx_->field.mul(cu, cv));
    return r;
}

FreeElement FreeElement::left_mul(const Word& w) const {
    FreeElement r(ctx_);
    for (const auto& [u, c] : terms_) r.add_term(w + u, c);
    return r;
}

FreeElement FreeElement::right_mul(const Word& w) const {
    FreeElement r(ctx_);
    for (const auto& [u, c] : terms_) r.add_term(u + w, c);
    return r;
}

TipSet::TipSet(std::vector<Word> tips) : tips_(std::move(tips)) {
    for (const auto& t : tips_)
        if (t.empty()) throw std::invalid_argument("TipSet: empty tip");
    use_automaton_ = tips_.size() > kAutomatonThreshold;
    if (use_automaton_) build_automaton();
}

void TipSet::build_automaton() {
    nodes_.assign(1, Node{});
    for (std::uint32_t i = 0; i < tips_.size(); ++i) {
        std::uint32_t s = 0;
        for (Gen g : tips_[i]) {
            auto it = nodes_[s].next.find(g);
            if (it == nodes_[s].next.end()) {
                nodes_[s].next[g] = static_cast<std::uint32_t>(nodes_.size());
                s = static_cast<std::uint32_t>(nodes_.size());
                nodes_.push_back(Node{});
            } else {
                s = it->second;
            }
        }
        nodes_[s].out = static_cast<std::int32_t>(i);
        nodes_[s].out_len = static_cast<std::uint32_t>(tips_[i].size());
    }
    // BFS failure links. Tips form an antichain, so at most one output per
    // node: a shorter tip ending at the same position would be a subword.
    std::deque<std::uint32_t> q;
    for (auto& [g, s] : nodes_[0].next) q.push_back(s);
    while (!q.empty()) {
        std::uint32_t s = q.front();
        q.pop_front();
        for (auto& [g, t] : nodes_[s].next) {
            std::uint32_t f = nodes_[s].fail;
            while (f && !nodes_[f].next.count(g)) f = nodes_[f].fail;
            auto it = nodes_[f].next.find(g);
            nodes_[t].fail = (it != nodes_[f].next.end() && it->second != t) ? it->second : 0;
            if (nodes_[t].out < 0 && nodes_[nodes_[t].fail].out >= 0) {
                nodes_[t].out = nodes_[nodes_[t].fail].out;
                nodes_[t].out_len = nodes_[nodes_[t].fail].out_len;
            }
            q.push_back(t);
        }
    }
}

template <class F>
void TipSet::scan(const Word& w, F&& on_hit) const {
    if (use_automaton_) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            Gen g = w[i];
            while (s && !nodes_[s].next.count(g)) s = nodes_[s].fail;
            auto it = nodes_[s].next.find(g);
            s = it != nodes_[s].next.end() ? it->second : 0;
            if (nodes_[s].out >= 0)
                if (on_hit(i + 1, static_cast<std::uint32_t>(nodes_[s].out))) return;
        }
        return;
    }
    for (std::size_t end = 1; end <= w.size(); ++end)
        for (std::uint32_t t = 0; t < tips_.size(); ++t) {
            const Word& tip = tips_[t];
            if (tip.size() > end) continue;
            if (w.compare(end - tip.size(), tip.size(), tip) == 0)
                if (on_hit(end, t)) return;
        }
}

std::optional<std::pair<std::size_t, std::uint32_t>> TipSet::first_occurrence(
    const Word& w) const {
    std::optional<std::pair<std::size_t, std::uint32_t>> best;
    scan(w, [&](std::size_t end, std::uint32_t tip) {
        std::size_t start = end - tips_[tip].size();
        if (!best || start < best->first) best = {{start, tip}};
        return false;
    });
    return best;
}

bool TipSet::any_occurrence_ending_in(const Word& w, std::size_t lo, std::size_t hi) const {
    bool found = false;
    scan(w, [&](std::size_t end, std::uint32_t) {
        if (end >= lo && end < hi) {
            found = true;
            return true;
        }
        return end >= hi;  // ends are visited in increasing order
    });
    return found;
}

std::optional<std::uint32_t> TipSet::suffix_tip(const Word& w) const {
    for (std::uint32_t t = 0; t < tips_.size(); ++t) {
        const Word& tip = tips_[t];
        if (tip.size() <= w.size() && w.compare(w.size() - tip.size(), tip.size(), tip) == 0)
            return t;
    }
    return std::nullopt;
}

FreeElement normal_form(const FreeElement& f, const GroebnerBasis& gb,
                        std::vector<RewriteStep>* cert) {
    const auto& ctx = *f.ctx();
    FreeElement out(f.ctx());
    // Worklist keyed by word, processed largest first; rewrites only produce
    // strictly smaller words, so each word is handled once.
    std::map<Word, Fp, WordLess> work(WordLess{&ctx.order});
    for (const auto& [w, c] : f.terms()) work.emplace(w, c);

    while (!work.empty()) {
        auto it = std::prev(work.end());
        Word w = it->first;
        Fp c = it->second;
        work.erase(it);
        if (c == 0) continue;
        auto occ = gb.tipset.first_occurrence(w);
        if (!occ) {
            out.add_term(w, c);
            continue;
        }
        auto [start, tip_idx] = *occ;
        const Word& tip = gb.tips[tip_idx];
        Word left = w.substr(0, start);
        Word right = w.substr(start + tip.size());
        // c * left*tip*right -> c * left*(tip - rel)*right
        const FreeElement& rel = gb.relations[tip_idx];
        for (const auto& [u, cu] : rel.terms()) {
            if (u == tip) continue;
            Word nw = left + u + right;
            Fp delta = ctx.field.neg(ctx.field.mul(c, cu));
            auto [jt, fresh] = work.emplace(nw, delta);
            if (!fresh) {
                jt->second = ctx.field.add(jt->second, delta);
                if (jt->second == 0) work.erase(jt);
            }
        }
        if (cert) cert->push_back({left, tip_idx, right, c});
    }
    return out;
}

namespace {

FreeElement monicized(const FreeElement& f) {
    Fp lc = f.leading_coeff();
    if (lc == 1) return f;
    return f.scaled(f.ctx()->field.inv(lc));
}

void rebuild_tipset(GroebnerBasis& gb) {
    gb.tips.clear();
    for (const auto& r : gb.relations) gb.tips.push_back(r.leading_word());
    gb.tipset = TipSet(gb.tips);
}

// Reduce every relation against the others until stable; drops zeros.
void inter_reduce(GroebnerBasis& gb) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gb.relations.size(); ++i) {
            GroebnerBasis rest;
            rest.ctx = gb.ctx;
            for (std::size_t j = 0; j < gb.relations.size(); ++j)
                if (j != i) rest.relations.push_back(gb.relations[j]);
            rebuild_tipset(rest);
            FreeElement r = normal_form(gb.relations[i], rest);
            if (!(r == gb.relations[i])) {
                changed = true;
                if (r.is_zero()) {
                    gb.relations.erase(gb.relations.begin() + i);
                } else {
                    gb.relations[i] = monicized(r);
                }
                break;
            }
        }
    }
    std::sort(gb.relations.begin(), gb.relations.end(),
              [&](const FreeElement& x, const FreeElement& y) {
                  return gb.ctx->order.compare(x.leading_word(), y.leading_word()) < 0;
              });
    rebuild_tipset(gb);
}

struct Overlap {
    std::uint64_t degree;
    Word word;
    std::size_t i, j, k;  // suffix of tip_i of length k == prefix of tip_j
};

std::vector<Overlap> overlaps(const GroebnerBasis& gb) {
    std::vector<Overlap> out;
    for (std::size_t i = 0; i < gb.tips.size(); ++i)
        for (std::size_t j = 0; j < gb.tips.size(); ++j) {
            const Word& ti = gb.tips[i];
            const Word& tj = gb.tips[j];
            std::size_t kmax = std::min(ti.size(), tj.size()) - 1;
            for (std::size_t k = 1; k <= kmax; ++k) {
                if (ti.compare(ti.size() - k, k, tj, 0, k) != 0) continue;
                Word w = ti + tj.substr(k);
                out.push_back({gb.ctx->order.total_degree(w), std::move(w), i, j, k});
            }
        }
    std::sort(out.begin(), out.end(), [&](const Overlap& a, const Overlap& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        int c = gb.ctx->order.compare(a.word, b.word);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    return out;
}

}  // namespace

GroebnerBasis complete(const Presentation& pres, std::uint64_t degree_cap) {
    GroebnerBasis gb;
    gb.ctx = pres.ctx;
    for (const auto& r : pres.relations) {
        if (r.is_zero()) throw std::invalid_argument("complete: zero relation");
        if (gb.ctx->order.total_degree(r.leading_word()) > degree_cap)
            throw std::invalid_argument("complete: degree cap below a relation degree");
        gb.relations.push_back(monicized(r));
    }
    inter_reduce(gb);

    bool capped = false;
    bool stable = false;
    std::size_t guard = 0;
    while (!stable) {
        if (++guard > 10000) throw std::runtime_error("complete: runaway completion");
        stable = true;
        auto pairs = overlaps(gb);
        gb.stats.pairs = pairs.size();
        gb.stats.zero_reductions = 0;
        for (const auto& ov : pairs) {
            if (ov.degree > degree_cap) {
                capped = true;
                continue;
            }
            const FreeElement& fi = gb.relations[ov.i];
            const FreeElement& fj = gb.relations[ov.j];
            // Overlap word reduced two ways; the S-element is the difference.
            Word suffix = gb.tips[ov.j].substr(ov.k);
            Word prefix = gb.tips[ov.i].substr(0, gb.tips[ov.i].size() - ov.k);
            FreeElement via_i = (FreeElement::monomial(gb.ctx, gb.tips[ov.i]) - fi).right_mul(suffix);
            FreeElement via_j = (FreeElement::monomial(gb.ctx, gb.tips[ov.j]) - fj).left_mul(prefix);
            FreeElement s = normal_form(via_i - via_j, gb);
            if (s.is_zero()) {
                ++gb.stats.zero_reductions;
                continue;
            }
            if (gb.ctx->order.total_degree(s.leading_word()) >= degree_cap) capped = true;
            gb.relations.push_back(monicized(s));
            ++gb.stats.added;
            inter_reduce(gb);
            stable = false;
            break;
        }
    }
    gb.status = capped ? GroebnerBasis::Status::degree_capped : GroebnerBasis::Status::confirmed;
    return gb;
}

std::vector<Word> normal_words(const GroebnerBasis& gb, std::uint64_t max_len) {
    std::vector<Word> all;
    std::vector<Word> level{Word{}};
    all.push_back(Word{});
    const std::size_t ngens = gb.ctx->order.ngens;
    for (std::uint64_t len = 1; len <= max_len && !level.empty(); ++len) {
        std::vector<Word> next;
        for (const auto& w : level)
            for (std::size_t g = 0; g < ngens; ++g) {
                Word c = w;
                c.push_back(static_cast<Gen>(g));
                // w is tip free, so any new occurrence ends at the last letter.
                if (!gb.tipset.suffix_tip(c)) next.push_back(std::move(c));
            }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    std::sort(all.begin(), all.end(),
              [&](const Word& u, const Word& v) { return gb.ctx->order.compare(u, v) < 0; });
    return all;
}

bool is_pbw(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.relations.size(); ++i) {
        if (gb.tips[i].size() != 2) continue;
        for (const auto& [w, c] : gb.relations[i].terms()) {
            if (w == gb.tips[i]) continue;
            if (gb.ctx->order.compare(w, gb.tips[i]) >= 0) return false;
        }
    }
    return true;
}

std::string render_word(const Context& ctx, const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) os << "*";
        os << ctx.gen_names[w[i]];
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

std::string render_element(const FreeElement& f) {
    if (f.is_zero()) return "0";
    const auto& ctx = *f.ctx();
    const Fp p = ctx.field.modulus();
    std::ostringstream os;
    bool first = true;
    // Leading term first, balanced coefficients: c > p/2 prints as -(p-c).
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        Fp c = it->second;
        bool negative = c > p / 2;
        Fp mag = negative ? p - c : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (mag != 1 || it->first.empty()) {
            os << mag;
            if (!it->first.empty()) os << "*";
        }
        if (!it->first.empty()) os << render_word(ctx, it->first);
        first = false;
    }
    return os.str();
}

}  // namespace homcoh::freealg
