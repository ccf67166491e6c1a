#include "suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "presentation_io.hpp"

namespace homcoh::suites {

using algebras::GroupAction;
using algebras::NormalFormEngine;
using algebras::QuotientAlgebra;
using barcoh::BarComplex;
using barcoh::Cochain;
using freealg::FreeElement;
using freealg::Gen;
using freealg::Word;
using ff::Fp;
using report::Check;
using report::Provenance;

namespace {

std::string dims_str(const std::vector<std::uint32_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::string set_str(const freealg::Context& ctx, const std::vector<Word>& ws) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < ws.size(); ++i)
        os << (i ? ", " : "") << freealg::render_word(ctx, ws[i]);
    os << "}";
    return os.str();
}

std::string sorted_multiset_str(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::string matrix_str(const std::vector<std::vector<Fp>>& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < m.size(); ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < m[r].size(); ++c) os << (c ? "," : "") << m[r][c];
        os << "]";
    }
    os << "]";
    return os.str();
}

// Built-on-demand shared state for one verification run.
struct Workspace {
    Options opt;

    std::shared_ptr<const NormalFormEngine> B;
    std::shared_ptr<const QuotientAlgebra> A, grA, smash;
    std::shared_ptr<anick::Resolution> resA, resGr, resSm;
    std::shared_ptr<BarComplex> barA, barGr, barSm;
    GroupAction actA;        // standard action over A's context
    GroupAction actB;        // the same action over B's context
    GroupAction actConj;     // conjugation on the smash algebra

    explicit Workspace(const Options& o) : opt(o) {}

    std::uint32_t p() const { return opt.p; }

    const NormalFormEngine& engB() {
        if (!B) B = std::make_shared<const NormalFormEngine>(algebras::presentation_B(p()), 16);
        return *B;
    }
    const QuotientAlgebra& algA() {
        if (!A) {
            A = std::make_shared<const QuotientAlgebra>(algebras::presentation_A(p()),
                                                        4 * std::uint64_t(p()),
                                                        std::uint64_t(p()) * p());
            actA = algebras::standard_action(A->ctx(), p());
        }
        return *A;
    }
    const QuotientAlgebra& algGr() {
        if (!grA)
            grA = std::make_shared<const QuotientAlgebra>(algebras::presentation_grA(p()),
                                                          4 * std::uint64_t(p()),
                                                          std::uint64_t(p()) * p());
        return *grA;
    }
    const QuotientAlgebra& algSmash() {
        algA();
        if (!smash) {
            smash = std::make_shared<const QuotientAlgebra>(
                algebras::smash_presentation(*A, actA), 6 * std::uint64_t(p()),
                std::uint64_t(p()) * p() * p());
            actConj = algebras::smash_conjugation_action(*smash, p());
        }
        return *smash;
    }
    anick::Resolution& resolutionA(std::size_t N) {
        algA();
        if (!resA) resA = std::make_shared<anick::Resolution>(A->engine_ptr());
        resA->extend(N);
        return *resA;
    }
    anick::Resolution& resolutionGr(std::size_t N) {
        algGr();
        if (!resGr) resGr = std::make_shared<anick::Resolution>(grA->engine_ptr());
        resGr->extend(N);
        return *resGr;
    }
    anick::Resolution& resolutionSmash(std::size_t N) {
        algSmash();
        if (!resSm) resSm = std::make_shared<anick::Resolution>(smash->engine_ptr());
        resSm->extend(N);
        return *resSm;
    }
    const BarComplex& barForA() {
        algA();
        if (!barA) barA = std::make_shared<BarComplex>(A.get(), opt.budget_mb);
        return *barA;
    }
    const BarComplex& barForGr() {
        algGr();
        if (!barGr) barGr = std::make_shared<BarComplex>(grA.get(), opt.budget_mb);
        return *barGr;
    }
    const BarComplex& barForSmash() {
        algSmash();
        if (!barSm) barSm = std::make_shared<BarComplex>(smash.get(), opt.budget_mb);
        return *barSm;
    }
    const GroupAction& actionOnB() {
        engB();
        if (actB.gen_images.empty()) actB = algebras::standard_action(B->ctx(), p());
        return actB;
    }
};

using CheckFn = std::function<Check()>;

struct Collector {
    std::vector<std::pair<std::string, std::vector<CheckFn>>> suites;
    std::vector<CheckFn>* current = nullptr;

    void start(const std::string& name) {
        suites.push_back({name, {}});
        current = &suites.back().second;
    }
    void add(CheckFn fn) { current->push_back(std::move(fn)); }
};

Check guarded(const CheckFn& fn) {
    try {
        return fn();
    } catch (const BudgetError& e) {
        return report::make_skipped("(budget-refused)", Provenance::derived, "", e.what());
    } catch (const std::exception& e) {
        return report::make_check("(internal-error)", Provenance::derived, "", e.what(), false);
    }
}

Cochain random_cochain(const BarComplex& cx, std::uint32_t degree, std::size_t terms,
                       std::mt19937_64& rng) {
    const std::uint64_t D = cx.positive_dim();
    const std::uint32_t p = cx.algebra().ctx()->field.modulus();
    Cochain f = cx.zero(degree);
    for (std::size_t i = 0; i < terms; ++i) {
        std::vector<std::uint32_t> t(degree);
        for (auto& x : t) x = static_cast<std::uint32_t>(rng() % D);
        Fp c = static_cast<Fp>(1 + rng() % (p - 1));
        f.vals[cx.encode(t)] = c;
    }
    return f;
}

lhs::GModule random_gmodule(const ff::PrimeField& f, std::size_t dim, std::mt19937_64& rng) {
    // Jordan blocks of size <= p for the eigenvalue 1, conjugated by a random
    // invertible matrix; any such action has order dividing p.
    const std::uint32_t p = f.modulus();
    std::vector<Fp> j(dim * dim, 0);
    std::size_t at = 0;
    while (at < dim) {
        std::size_t block = 1 + rng() % std::min<std::size_t>(p, dim - at);
        for (std::size_t i = 0; i < block; ++i) {
            j[(at + i) * dim + (at + i)] = 1;
            if (i + 1 < block) j[(at + i) * dim + (at + i + 1)] = 1;
        }
        at += block;
    }
    while (true) {
        std::vector<Fp> s(dim * dim);
        for (auto& x : s) x = static_cast<Fp>(rng() % p);
        ff::FMatrix sm = ff::FMatrix::from_rows(f, dim, dim, s);
        if (sm.rank() != dim) continue;
        // m = s j s^-1 via solving s m = j s column by column
        std::vector<Fp> js(dim * dim, 0);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) {
                Fp acc = 0;
                for (std::size_t k = 0; k < dim; ++k)
                    acc = f.add(acc, f.mul(j[r * dim + k], s[k * dim + c]));
                js[r * dim + c] = acc;
            }
        std::vector<Fp> m(dim * dim, 0);
        bool ok = true;
        for (std::size_t c = 0; c < dim && ok; ++c) {
            std::vector<Fp> rhs(dim);
            for (std::size_t r = 0; r < dim; ++r) rhs[r] = js[r * dim + c];
            auto x = sm.solve(rhs);
            if (!x) {
                ok = false;
                break;
            }
            for (std::size_t r = 0; r < dim; ++r) m[r * dim + c] = (*x)[r];
        }
        if (!ok) continue;
        return lhs::GModule{dim, std::move(m)};
    }
}

// ---------------------------------------------------------------------------

void add_groebner(Workspace& ws, Collector& col) {
    col.start("groebner");
    const std::uint32_t p = ws.p();

    col.add([&ws, p]() {
        auto gb = freealg::complete(algebras::presentation_B(p), 16);
        const auto& ctx = *gb.ctx;
        bool pass = gb.confirmed() && gb.tips.size() == 1 &&
                    freealg::render_word(ctx, gb.tips[0]) == "b*a" && gb.stats.pairs == 0;
        std::ostringstream got;
        got << set_str(ctx, gb.tips) << (gb.confirmed() ? " confirmed" : " capped") << ", pairs="
            << gb.stats.pairs;
        return report::make_check("B completion: one relation, tip b*a, no overlaps",
                                  Provenance::paper, "{b*a} confirmed, pairs=0", got.str(), pass);
    });

    col.add([&ws]() {
        const auto& ctx = ws.engB().ctx();
        Word a2(2, 0), ab{0, 1};
        bool pass = ctx->order.compare(a2, ab) < 0;
        return report::make_check("order places a^2 below a*b", Provenance::paper, "a^2 < a*b",
                                  pass ? "a^2 < a*b" : "a^2 >= a*b", pass);
    });

    col.add([&ws]() {
        bool pass = freealg::is_pbw(ws.engB().gb());
        return report::make_check("B rewrites its length-2 tip into smaller terms",
                                  Provenance::paper, "pbw", pass ? "pbw" : "not pbw", pass);
    });

    col.add([&ws, p]() {
        const auto& gb = ws.algA().gb();
        const auto& ctx = *gb.ctx;
        std::vector<std::string> tips;
        for (const auto& t : gb.tips) tips.push_back(freealg::render_word(ctx, t));
        std::sort(tips.begin(), tips.end());
        std::vector<std::string> want = {"a^" + std::to_string(p), "b^" + std::to_string(p),
                                         "b*a"};
        std::sort(want.begin(), want.end());
        bool pass = gb.confirmed() && tips == want;
        std::ostringstream exp, got;
        for (const auto& t : want) exp << t << " ";
        for (const auto& t : tips) got << t << " ";
        return report::make_check("A completion: tips exactly b*a, a^p, b^p", Provenance::derived,
                                  exp.str(), got.str() + (gb.confirmed() ? "confirmed" : "capped"),
                                  pass);
    });

    col.add([&ws]() {
        const auto& eng = ws.engB();
        const auto& ctx = eng.ctx();
        FreeElement got = eng.nf_word(Word{1, 0});  // b a
        FreeElement want(ctx);
        want.add_term(Word{0, 1}, 1);
        want.add_term(Word{0, 0}, ctx->field.half());
        return report::make_check("B: b*a normalizes to a*b + (1/2)a^2", Provenance::paper,
                                  freealg::render_element(want), freealg::render_element(got),
                                  got == want);
    });

    col.add([&ws, p]() {
        const auto& eng = ws.engB();
        FreeElement got = eng.nf_word(Word(1, 1) + Word(p, 0));  // b a^p
        FreeElement want = FreeElement::monomial(eng.ctx(), Word(p, 0) + Word(1, 1));
        return report::make_check("B: b*a^p normalizes to a^p*b", Provenance::derived,
                                  freealg::render_element(want), freealg::render_element(got),
                                  got == want);
    });

    col.add([&ws, p]() {
        bool pass = algebras::is_central(
            FreeElement::monomial(ws.engB().ctx(), Word(p, 0)), ws.engB());
        return report::make_check("a^p is central in B", Provenance::paper, "central",
                                  pass ? "central" : "not central", pass);
    });
    col.add([&ws, p]() {
        bool pass = algebras::is_central(
            FreeElement::monomial(ws.engB().ctx(), Word(p, 1)), ws.engB());
        return report::make_check("b^p is central in B", Provenance::paper, "central",
                                  pass ? "central" : "not central", pass);
    });
    col.add([&ws]() {
        bool central = algebras::is_central(
            FreeElement::monomial(ws.engB().ctx(), Word(1, 1)), ws.engB());
        return report::make_check("b is not central in B", Provenance::derived, "not central",
                                  central ? "central" : "not central", !central);
    });

    col.add([&ws]() {
        auto words = freealg::normal_words(ws.engB().gb(), 10);
        std::vector<std::size_t> by_len(11, 0);
        for (const auto& w : words) ++by_len[w.size()];
        bool pass = true;
        for (std::size_t n = 0; n <= 10; ++n) pass = pass && by_len[n] == n + 1;
        std::vector<std::uint32_t> got(by_len.begin(), by_len.end());
        return report::make_check("B has n+1 normal words in each degree n <= 10",
                                  Provenance::derived, "1,2,3,4,5,6,7,8,9,10,11", dims_str(got),
                                  pass);
    });

    col.add([&ws, p]() {
        std::size_t d = ws.algA().dim();
        return report::make_check("A has dimension p^2", Provenance::derived,
                                  std::to_string(std::uint64_t(p) * p), std::to_string(d),
                                  d == std::uint64_t(p) * p);
    });

    col.add([&ws, p]() {
        const auto& a = ws.algA();
        std::mt19937_64 rng(ws.opt.seed ^ 0x9e3779b97f4a7c15ull);
        bool pass = true;
        auto check_pair = [&](std::uint32_t i, std::uint32_t j) {
            Fp lhs = a.eps_of(a.mul(i, j));
            Fp rhs = a.ctx()->field.mul(a.eps(i), a.eps(j));
            if (lhs != rhs) pass = false;
        };
        if (p == 3) {
            for (std::uint32_t i = 0; i < a.dim(); ++i)
                for (std::uint32_t j = 0; j < a.dim(); ++j) check_pair(i, j);
        } else {
            for (int k = 0; k < 2000; ++k)
                check_pair(rng() % a.dim(), rng() % a.dim());
        }
        return report::make_check("augmentation is multiplicative on A", Provenance::trivial,
                                  "multiplicative", pass ? "multiplicative" : "violated", pass);
    });

    col.add([&ws]() {
        const auto& a = ws.algA();
        std::mt19937_64 rng(ws.opt.seed ^ 0xa5a5a5a5ull);
        bool pass = true;
        for (int k = 0; k < 200; ++k) {
            std::uint32_t i = rng() % a.dim(), j = rng() % a.dim(), l = rng() % a.dim();
            auto left = a.mul_elements(a.mul(i, j), {{l, 1}});
            auto right = a.mul_elements({{i, 1}}, a.mul(j, l));
            if (left != right) pass = false;
        }
        return report::make_check("associativity on 200 random basis triples of A",
                                  Provenance::derived, "associative",
                                  pass ? "associative" : "violated", pass);
    });
}

void add_anick(Workspace& ws, Collector& col) {
    col.start("anick");
    const std::uint32_t p = ws.p();
    const std::size_t N = ws.opt.max_degree;
    ws.resolutionA(std::max<std::size_t>(N + 1, 5));
    ws.resolutionGr(N + 1);
    ws.resolutionSmash(3);

    col.add([&ws, p, N]() {
        const auto& res = *ws.resA;
        bool pass = true;
        for (std::size_t n = 0; n <= N; ++n) {
            auto got = res.chain_set(n);
            auto want = anick::closed_form_chains(p, n);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            if (got != want) pass = false;
        }
        return report::make_check("A chain sets equal the closed forms through degree " +
                                      std::to_string(N),
                                  Provenance::paper, "match", pass ? "match" : "mismatch", pass);
    });

    col.add([&ws, N]() {
        const auto& res = *ws.resA;
        std::vector<std::uint32_t> got, want;
        bool pass = true;
        for (std::size_t n = 0; n <= N; ++n) {
            got.push_back(static_cast<std::uint32_t>(res.chain_set(n).size()));
            want.push_back(static_cast<std::uint32_t>(n + 1));
            if (got.back() != want.back()) pass = false;
        }
        return report::make_check("A has n+1 chains in degree n", Provenance::paper,
                                  dims_str(want), dims_str(got), pass);
    });

    col.add([&ws, p, N]() {
        const auto& res = *ws.resA;
        bool pass = true;
        std::ostringstream exp, got;
        for (std::size_t n = 1; n <= N; ++n) {
            std::vector<std::uint64_t> want;
            if (n % 2 == 1) {
                std::size_t m = (n + 1) / 2;
                want.assign(n + 1, (m - 1) * p + 1);
            } else {
                std::size_t m = n / 2;
                want.assign(m + 1, m * p);
                want.insert(want.end(), m, (m - 1) * p + 2);
            }
            auto have = res.chain_degrees(n);
            if (sorted_multiset_str(want) != sorted_multiset_str(have)) pass = false;
            if (n <= 4) {
                exp << "n" << n << ":" << sorted_multiset_str(want) << " ";
                got << "n" << n << ":" << sorted_multiset_str(have) << " ";
            }
        }
        return report::make_check("A chain degrees follow (m-1)p+1 and mp,(m-1)p+2",
                                  Provenance::paper, exp.str(), got.str(), pass);
    });

    col.add([&ws, N]() {
        const auto& res = *ws.resA;
        bool pass = true;
        for (std::size_t n = 1; n <= N; ++n) {
            auto lower = res.chain_degrees(n - 1);
            auto upper = res.chain_degrees(n);
            for (auto d1 : lower)
                for (auto d2 : upper)
                    if (d1 == d2) pass = false;
        }
        return report::make_check("consecutive chain degree sets are disjoint", Provenance::paper,
                                  "disjoint", pass ? "disjoint" : "overlap", pass);
    });

    col.add([&ws, N]() {
        auto dims = ws.resA->ext_dims(N);
        bool pass = dims.minimal_through(N);
        return report::make_check("A resolution minimal through degree " + std::to_string(N),
                                  Provenance::paper, "minimal", pass ? "minimal" : "not minimal",
                                  pass);
    });

    col.add([&ws, N]() {
        auto dims = ws.resA->ext_dims(N);
        std::vector<std::uint32_t> want;
        for (std::size_t n = 0; n <= N; ++n) want.push_back(static_cast<std::uint32_t>(n + 1));
        return report::make_check("dim H^n(A) = n+1 for n <= " + std::to_string(N),
                                  Provenance::paper, dims_str(want), dims_str(dims.dims),
                                  dims.dims == want);
    });

    col.add([&ws, N]() {
        auto da = ws.resA->ext_dims(N);
        auto dg = ws.resGr->ext_dims(N);
        return report::make_check("gr A has the same cohomology dimensions as A",
                                  Provenance::derived, dims_str(da.dims), dims_str(dg.dims),
                                  da.dims == dg.dims);
    });

    col.add([&ws, N]() {
        const auto& res = *ws.resA;
        bool pass = true;
        for (std::size_t n = 2; n <= N + 1; ++n)
            for (std::size_t ci = 0; ci < res.chain_set(n).size(); ++ci)
                if (!res.apply_differential(n - 1, res.differential(n, ci)).empty()) pass = false;
        return report::make_check("d o d = 0 on the A resolution", Provenance::derived, "0",
                                  pass ? "0" : "nonzero", pass);
    });

    col.add([&ws, p]() -> Check {
        if (p != 3)
            return report::make_skipped("scalar exactness through degree 4",
                                        Provenance::derived, "homology only in degree 0",
                                        "run with --p 3");
        const auto& res = *ws.resA;
        const auto& a = ws.algA();
        std::vector<std::size_t> ranks(6, 0), nulls(6, 0);
        for (std::size_t n = 1; n <= 5; ++n) {
            auto m = res.scalar_matrix(n, a);
            ranks[n] = m.rank();
            nulls[n] = m.nullity();
        }
        bool pass = (a.dim() - ranks[1]) == 1;
        for (std::size_t n = 1; n <= 4; ++n)
            if (nulls[n] != ranks[n + 1]) pass = false;
        return report::make_check("scalar exactness through degree 4", Provenance::derived,
                                  "homology only in degree 0, dim 1",
                                  pass ? "exact" : "homology leak", pass);
    });

    col.add([&ws]() {
        auto dims = ws.resSm->ext_dims(2);
        bool pass = dims.dims.size() >= 2 && dims.dims[0] == 1 && dims.dims[1] == 2 &&
                    !dims.minimal[1];
        std::ostringstream got;
        got << dims.dims[0] << "," << dims.dims[1] << (dims.minimal[1] ? " minimal" : " not minimal");
        return report::make_check("smash resolution: dims 1,2 in degrees 0,1 and not minimal",
                                  Provenance::derived, "1,2 not minimal", got.str(), pass);
    });
}

void add_bar(Workspace& ws, Collector& col) {
    col.start("bar");
    const std::uint32_t p = ws.p();
    ws.barForA();
    ws.barForGr();
    ws.algSmash();
    ws.resolutionA(4);
    if (p == 3) ws.barForSmash();

    col.add([&ws]() {
        const auto& cx = *ws.barA;
        std::vector<std::uint32_t> got, want;
        std::uint32_t n = 0;
        for (; n <= 3; ++n) {
            try {
                got.push_back(cx.ext_dim(n));
            } catch (const BudgetError&) {
                break;
            }
            want.push_back(n + 1);
        }
        auto anick_dims = ws.resA->ext_dims(3);
        bool pass = !got.empty() && got == want;
        for (std::size_t i = 0; i < got.size(); ++i)
            if (got[i] != anick_dims.dims[i]) pass = false;
        return report::make_check("bar oracle matches the resolution dims (n <= " +
                                      std::to_string(n - 1) + ")",
                                  Provenance::paper, dims_str(want), dims_str(got), pass);
    });

    col.add([&ws]() {
        const auto& cx = *ws.barA;
        std::mt19937_64 rng(ws.opt.seed ^ 0xbeefull);
        bool pass = true;
        for (std::uint32_t deg = 1; deg <= 2; ++deg)
            for (int k = 0; k < 5; ++k) {
                Cochain f = random_cochain(cx, deg, 6, rng);
                if (!cx.differential(cx.differential(f)).is_zero()) pass = false;
            }
        return report::make_check("bar differential squares to zero on random cochains",
                                  Provenance::derived, "0", pass ? "0" : "nonzero", pass);
    });

    col.add([&ws]() {
        auto rep = algebras::validate_action(ws.algA(), ws.actA);
        std::ostringstream got;
        got << "relations=" << (rep.respects_relations ? "ok" : "bad")
            << " order=" << (rep.has_order_n ? "ok" : "bad")
            << " eps=" << (rep.preserves_augmentation ? "ok" : "bad");
        return report::make_check("the action g(a)=a, g(b)=b-a validates on A", Provenance::paper,
                                  "relations=ok order=ok eps=ok", got.str(), rep.ok());
    });

    col.add([&ws, p]() {
        std::size_t d = ws.algSmash().dim();
        std::uint64_t want = std::uint64_t(p) * p * p;
        return report::make_check("smash product has dimension p^3", Provenance::derived,
                                  std::to_string(want), std::to_string(d), d == want);
    });

    col.add([&ws]() {
        bool pass = algebras::embedded_copy_matches(ws.algSmash(), ws.algA());
        return report::make_check("h-free part of the smash multiplies exactly like A",
                                  Provenance::derived, "identical", pass ? "identical" : "differs",
                                  pass);
    });

    col.add([&ws, p]() -> Check {
        if (p != 3)
            return report::make_skipped("smash bar oracle: dim H^1 = 2", Provenance::derived, "2",
                                        "run with --p 3");
        std::uint32_t d = ws.barSm->ext_dim(1);
        return report::make_check("smash bar oracle: dim H^1 = 2", Provenance::derived, "2",
                                  std::to_string(d), d == 2);
    });

    col.add([&ws]() {
        const auto& ca = *ws.barA;
        const auto& cg = *ws.barGr;
        std::vector<std::uint32_t> da, dg;
        for (std::uint32_t n = 0; n <= 3; ++n) {
            try {
                std::uint32_t x = ca.ext_dim(n);
                std::uint32_t y = cg.ext_dim(n);
                da.push_back(x);
                dg.push_back(y);
            } catch (const BudgetError&) {
                break;
            }
        }
        return report::make_check("bar oracle: gr A dims equal A dims", Provenance::derived,
                                  dims_str(da), dims_str(dg), !da.empty() && da == dg);
    });
}

void add_classes(Workspace& ws, Collector& col) {
    col.start("classes");
    const std::uint32_t p = ws.p();
    ws.barForA();
    ws.engB();
    ws.actionOnB();
    if (p == 3) ws.barForSmash();

    auto xi = [&ws](char which) {
        return barcoh::xi_cochain(*ws.barA, *ws.B, which);
    };
    auto eta = [&ws](Gen g) { return ws.barA->dual_word(Word(1, g)); };

    col.add([&ws, xi]() {
        bool pass = ws.barA->is_cocycle(xi('a')) && ws.barA->is_cocycle(xi('b'));
        return report::make_check("xi_a and xi_b are cocycles", Provenance::paper, "cocycles",
                                  pass ? "cocycles" : "not cocycles", pass);
    });

    col.add([&ws, xi]() {
        bool ca = ws.barA->is_coboundary(xi('a'));
        bool cb = ws.barA->is_coboundary(xi('b'));
        return report::make_check("xi_a and xi_b are not coboundaries", Provenance::paper,
                                  "not coboundaries",
                                  (ca || cb) ? "coboundary found" : "not coboundaries",
                                  !ca && !cb);
    });

    col.add([&ws, xi]() {
        const auto& cx = *ws.barA;
        Cochain f = xi('a');
        Cochain g = cx.group_transform(f, ws.actA);
        Cochain diff = cx.sub(g, f);
        std::ostringstream got;
        if (diff.is_zero())
            got << "equal";
        else
            got << "differs on " << diff.vals.size() << " pairs";
        return report::make_check("g.xi_a equals xi_a as a cochain", Provenance::paper, "equal",
                                  got.str(), diff.is_zero());
    });

    col.add([&ws, xi]() {
        const auto& cx = *ws.barA;
        Cochain f = xi('b');
        Cochain diff = cx.sub(cx.group_transform(f, ws.actA), f);
        return report::make_check("g.xi_b equals xi_b as a cochain", Provenance::paper, "equal",
                                  diff.is_zero() ? "equal"
                                                 : "differs on " + std::to_string(diff.vals.size()) +
                                                       " pairs",
                                  diff.is_zero());
    });

    col.add([&ws, xi]() {
        const auto& cx = *ws.barA;
        bool pa = cx.is_coboundary(cx.sub(cx.group_transform(xi('a'), ws.actA), xi('a')));
        bool pb = cx.is_coboundary(cx.sub(cx.group_transform(xi('b'), ws.actA), xi('b')));
        return report::make_check("classes of xi_a and xi_b are fixed by g", Provenance::derived,
                                  "fixed", pa && pb ? "fixed" : "moved", pa && pb);
    });

    col.add([&ws, xi]() -> Check {
        const auto& cx = *ws.barA;
        Cochain comm = cx.sub(cx.cup(xi('a'), xi('b')), cx.cup(xi('b'), xi('a')));
        bool pass;
        try {
            pass = cx.is_coboundary(comm);
        } catch (const BudgetError& e) {
            return report::make_skipped("cup commutator of xi_a and xi_b is a coboundary",
                                        Provenance::paper, "coboundary", e.what());
        }
        return report::make_check("cup commutator of xi_a and xi_b is a coboundary",
                                  Provenance::paper, "coboundary",
                                  pass ? "coboundary" : "not a coboundary", pass);
    });

    col.add([&ws, eta]() {
        const auto& cx = *ws.barA;
        const auto& fld = cx.algebra().ctx()->field;
        Cochain f = cx.sub(cx.cup(eta(0), eta(0)),
                           cx.scale(cx.cup(eta(0), eta(1)), fld.half()));
        bool pass = cx.is_coboundary(f);
        return report::make_check("eta_a^2 - (1/2) eta_a eta_b is a coboundary", Provenance::paper,
                                  "coboundary", pass ? "coboundary" : "not a coboundary", pass);
    });
    col.add([&ws, eta]() {
        const auto& cx = *ws.barA;
        bool pass = cx.is_coboundary(cx.cup(eta(1), eta(1)));
        return report::make_check("eta_b^2 is a coboundary", Provenance::paper, "coboundary",
                                  pass ? "coboundary" : "not a coboundary", pass);
    });
    col.add([&ws, eta]() {
        const auto& cx = *ws.barA;
        Cochain f = cx.add(cx.cup(eta(1), eta(0)), cx.cup(eta(0), eta(1)));
        bool pass = cx.is_coboundary(f);
        return report::make_check("eta_b eta_a + eta_a eta_b is a coboundary", Provenance::paper,
                                  "coboundary", pass ? "coboundary" : "not a coboundary", pass);
    });

    col.add([&ws, xi, p]() {
        const auto& cx = *ws.barA;
        Word a(1, 0), b(1, 1), a_top(p - 1, 0), b_top(p - 1, 1);
        Fp v1 = cx.value(xi('a'), {a_top, a});
        Fp v2 = cx.value(xi('a'), {b, a});
        Fp v3 = cx.value(xi('b'), {b_top, b});
        Fp v4 = cx.value(xi('b'), {a, b});
        std::ostringstream got;
        got << v1 << "," << v2 << "," << v3 << "," << v4;
        bool pass = v1 == 1 && v2 == 0 && v3 == 1 && v4 == 0;
        return report::make_check("xi values on a^(p-1)(x)a, b(x)a, b^(p-1)(x)b, a(x)b",
                                  Provenance::trivial, "1,0,1,0", got.str(), pass);
    });

    col.add([&ws, xi, p]() -> Check {
        if (p != 3)
            return report::make_skipped("smash extensions restrict to xi_a and xi_b",
                                        Provenance::paper, "restrict equal", "run with --p 3");
        const auto& sm = *ws.barSm;
        const auto& ca = *ws.barA;
        Cochain xa = barcoh::xi_cochain_smash(sm, *ws.B, ws.actB, 'a');
        Cochain xb = barcoh::xi_cochain_smash(sm, *ws.B, ws.actB, 'b');
        bool pass = barcoh::restrict_cochain(sm, ca, xa) == xi('a') &&
                    barcoh::restrict_cochain(sm, ca, xb) == xi('b');
        return report::make_check("smash extensions restrict to xi_a and xi_b", Provenance::paper,
                                  "restrict equal", pass ? "restrict equal" : "differ", pass);
    });

    col.add([&ws, p]() -> Check {
        if (p != 3)
            return report::make_skipped("smash extensions are cocycles", Provenance::derived,
                                        "cocycles", "run with --p 3");
        const auto& sm = *ws.barSm;
        Cochain xa = barcoh::xi_cochain_smash(sm, *ws.B, ws.actB, 'a');
        Cochain xb = barcoh::xi_cochain_smash(sm, *ws.B, ws.actB, 'b');
        bool pass = sm.is_cocycle(xa) && sm.is_cocycle(xb);
        return report::make_check("smash extensions are cocycles", Provenance::derived, "cocycles",
                                  pass ? "cocycles" : "not cocycles", pass);
    });

    col.add([&ws, p]() -> Check {
        if (p != 3)
            return report::make_skipped("dual of h restricts to zero", Provenance::trivial, "0",
                                        "run with --p 3");
        const auto& sm = *ws.barSm;
        const Gen h = static_cast<Gen>(ws.smash->ctx()->order.ngens - 1);
        Cochain f = barcoh::restrict_cochain(sm, *ws.barA, sm.dual_word(Word(1, h)));
        return report::make_check("dual of h restricts to zero", Provenance::trivial, "0",
                                  f.is_zero() ? "0" : "nonzero", f.is_zero());
    });

    col.add([&ws]() {
        const auto& cx = *ws.barA;
        const auto& fld = cx.algebra().ctx()->field;
        std::mt19937_64 rng(ws.opt.seed ^ 0x1e1bull);
        bool pass = true;
        for (int k = 0; k < 6; ++k) {
            std::uint32_t m = 1 + k % 2;  // |f| in {1, 2}
            Cochain f = random_cochain(cx, m, 5, rng);
            Cochain g = random_cochain(cx, 1, 5, rng);
            Cochain lhs = cx.differential(cx.cup(f, g));
            Cochain rhs = cx.add(cx.cup(cx.differential(f), g),
                                 cx.scale(cx.cup(f, cx.differential(g)),
                                          m % 2 ? fld.neg(1) : 1));
            if (!(lhs == rhs)) pass = false;
        }
        return report::make_check("cup product satisfies the Leibniz rule", Provenance::derived,
                                  "leibniz", pass ? "leibniz" : "violated", pass);
    });

    col.add([&ws, p]() -> Check {
        if (p != 3)
            return report::make_skipped("restriction is multiplicative", Provenance::derived,
                                        "multiplicative", "run with --p 3");
        const auto& sm = *ws.barSm;
        const auto& ca = *ws.barA;
        std::mt19937_64 rng(ws.opt.seed ^ 0x7e57ull);
        bool pass = true;
        for (int k = 0; k < 5; ++k) {
            Cochain f = random_cochain(sm, 1, 6, rng);
            Cochain g = random_cochain(sm, 1, 6, rng);
            Cochain lhs = barcoh::restrict_cochain(sm, ca, sm.cup(f, g));
            Cochain rhs = ca.cup(barcoh::restrict_cochain(sm, ca, f),
                                 barcoh::restrict_cochain(sm, ca, g));
            if (!(lhs == rhs)) pass = false;
        }
        return report::make_check("restriction is multiplicative", Provenance::derived,
                                  "multiplicative", pass ? "multiplicative" : "violated", pass);
    });

    col.add([]() {
        bool pass = barcoh::hilbert_free_basis_identity(50);
        return report::make_check(
            "free-module count 2(i+j)+l+m = n gives n+1 for n <= 50", Provenance::derived,
            "n+1 for all n", pass ? "n+1 for all n" : "mismatch", pass);
    });
}

void add_action(Workspace& ws, Collector& col) {
    col.start("action");
    const std::uint32_t p = ws.p();
    ws.barForA();
    if (p == 3) ws.barForSmash();

    col.add([&ws]() {
        const auto& cx = *ws.barA;
        std::vector<Cochain> reps = {cx.dual_word(Word(1, 0)), cx.dual_word(Word(1, 1))};
        auto m = cx.action_matrix_on_classes(1, ws.actA, &reps);
        std::string want = "[[1,0],[1,1]]";
        std::string got = matrix_str(m);
        return report::make_check("matrix of g on H^1 in the basis (eta_a, eta_b)",
                                  Provenance::paper, want, got, got == want);
    });

    col.add([&ws]() {
        const auto& cx = *ws.barA;
        Cochain eb = cx.dual_word(Word(1, 1));
        Cochain g = cx.group_transform(eb, ws.actA);
        return report::make_check("g fixes eta_b exactly", Provenance::paper, "fixed",
                                  g == eb ? "fixed" : "moved", g == eb);
    });

    col.add([&ws]() {
        const auto& cx = *ws.barA;
        Cochain f = cx.cup(cx.dual_word(Word(1, 0)), cx.dual_word(Word(1, 1)));
        Cochain moved = cx.sub(cx.group_transform(f, ws.actA), f);
        bool pass = cx.is_coboundary(moved);
        return report::make_check("class of eta_a eta_b is fixed by g", Provenance::paper, "fixed",
                                  pass ? "fixed" : "moved", pass);
    });

    col.add([&ws, p]() -> Check {
        if (p != 3)
            return report::make_skipped("conjugation acts trivially on smash classes (deg <= 2)",
                                        Provenance::derived, "trivial", "run with --p 3");
        const auto& sm = *ws.barSm;
        bool pass = true;
        for (std::uint32_t q = 1; q <= 2; ++q) {
            auto reps = sm.cohomology_reps(q);
            for (const auto& r : reps) {
                Cochain moved = sm.sub(sm.group_transform(r, ws.actConj), r);
                if (!sm.is_coboundary(moved)) pass = false;
            }
        }
        return report::make_check("conjugation acts trivially on smash classes (deg <= 2)",
                                  Provenance::derived, "trivial", pass ? "trivial" : "nontrivial",
                                  pass);
    });
}

void add_lhs(Workspace& ws, Collector& col) {
    col.start("lhs");
    const std::uint32_t p = ws.p();
    const ff::PrimeField field(p);
    ws.barForA();
    if (p == 3) ws.barForSmash();

    col.add([field]() {
        lhs::GModule k{1, {1}};
        bool pass = true;
        std::vector<std::uint32_t> got;
        for (std::uint32_t s = 0; s <= 4; ++s) {
            got.push_back(lhs::cyclic_cohomology(field, k, s));
            if (got.back() != 1) pass = false;
        }
        return report::make_check("H^s(Z/p, k) = 1 for s <= 4", Provenance::trivial, "1,1,1,1,1",
                                  dims_str(got), pass);
    });

    col.add([field, p]() {
        lhs::GModule reg{p, std::vector<Fp>(std::size_t(p) * p, 0)};
        for (std::uint32_t i = 0; i < p; ++i) reg.mat[((i + 1) % p) * p + i] = 1;  // cyclic shift
        std::vector<std::uint32_t> got;
        bool pass = true;
        for (std::uint32_t s = 0; s <= 4; ++s) {
            got.push_back(lhs::cyclic_cohomology(field, reg, s));
            if (got.back() != (s == 0 ? 1u : 0u)) pass = false;
        }
        return report::make_check("H^s(Z/p, kG) vanishes above degree 0", Provenance::trivial,
                                  "1,0,0,0,0", dims_str(got), pass);
    });

    col.add([&ws, field]() {
        auto m = lhs::g_module_of_cohomology(*ws.barA, ws.actA, 1);
        std::uint32_t got = lhs::cyclic_cohomology(field, m, 0);
        return report::make_check("H^0(Z/p, H^1(A)) = 1 (invariants of the unipotent action)",
                                  Provenance::derived, "1", std::to_string(got), got == 1);
    });

    col.add([&ws, field]() -> Check {
        std::vector<lhs::GModule> coeffs;
        try {
            for (std::uint32_t q = 0; q <= 2; ++q)
                coeffs.push_back(lhs::g_module_of_cohomology(*ws.barA, ws.actA, q));
        } catch (const BudgetError& e) {
            return report::make_skipped("E2 grid for s,q <= 2", Provenance::derived,
                                        "s0:1,1,3;s1:1,1,3;s2:1,1,3", e.what());
        }
        auto page = lhs::e2_page(field, coeffs, 2);
        std::ostringstream got;
        bool pass = true;
        for (std::uint32_t s = 0; s <= 2; ++s) {
            got << (s ? ";" : "") << "s" << s << ":";
            for (std::uint32_t q = 0; q <= 2; ++q) {
                got << (q ? "," : "") << page.dim[s][q];
                std::uint32_t want = q == 2 ? 3 : 1;
                if (page.dim[s][q] != want) pass = false;
            }
        }
        return report::make_check("E2 grid for s,q <= 2", Provenance::derived,
                                  "s0:1,1,3;s1:1,1,3;s2:1,1,3", got.str(), pass);
    });

    col.add([&ws, field, p]() -> Check {
        if (p != 3)
            return report::make_skipped("spectral bound in total degrees <= 2",
                                        Provenance::derived, "dim H^n(smash) <= E2 sum",
                                        "run with --p 3");
        std::vector<lhs::GModule> coeffs;
        for (std::uint32_t q = 0; q <= 2; ++q)
            coeffs.push_back(lhs::g_module_of_cohomology(*ws.barA, ws.actA, q));
        auto page = lhs::e2_page(field, coeffs, 2);
        std::ostringstream got;
        bool pass = true;
        for (std::uint32_t n = 0; n <= 2; ++n) {
            auto conv = lhs::convergence_check(page, n, ws.barSm->ext_dim(n));
            got << (n ? "; " : "") << "n" << n << ": " << conv.smash_dim << " <= " << conv.e2_sum;
            if (!conv.ok) pass = false;
            if (n == 0 && !(conv.smash_dim == 1 && conv.e2_sum == 1)) pass = false;
            if (n == 1 && !(conv.smash_dim == 2 && conv.e2_sum == 2)) pass = false;
        }
        return report::make_check("spectral bound in total degrees <= 2 (equality at n = 1)",
                                  Provenance::derived, "n0: 1 <= 1; n1: 2 <= 2; n2: bound holds",
                                  got.str(), pass);
    });

    col.add([&ws, field]() {
        std::mt19937_64 rng(ws.opt.seed ^ 0x9d0dull);
        bool pass = true;
        for (int k = 0; k < 4; ++k) {
            auto m = random_gmodule(field, 2 + rng() % 4, rng);
            for (std::uint32_t n = 1; n <= 4; ++n)
                if (lhs::cyclic_cohomology(field, m, n) != lhs::cyclic_cohomology(field, m, n + 2))
                    pass = false;
        }
        return report::make_check("cyclic group cohomology has period two", Provenance::derived,
                                  "periodic", pass ? "periodic" : "aperiodic", pass);
    });

    col.add([&ws, field]() {
        std::mt19937_64 rng(ws.opt.seed ^ 0xf1b0ull);
        bool pass = true;
        for (int k = 0; k < 4; ++k) {
            auto m = random_gmodule(field, 2 + rng() % 4, rng);
            std::vector<Fp> t = m.mat;
            for (std::size_t i = 0; i < m.dim; ++i) t[i * m.dim + i] = field.sub(t[i * m.dim + i], 1);
            std::size_t rank_t = ff::FMatrix::from_rows(field, m.dim, m.dim, t).rank();
            if (lhs::cyclic_cohomology(field, m, 0) + rank_t != m.dim) pass = false;
        }
        return report::make_check("dim H^0 plus rank(g-1) equals dim M", Provenance::trivial,
                                  "holds", pass ? "holds" : "violated", pass);
    });
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"groebner", "anick", "bar", "classes",
                                                   "action",   "lhs",   "all"};
    return names;
}

report::Report run(const Options& opt) {
    if (!ff::is_odd_prime(opt.p))
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(opt.p));
    if (std::find(suite_names().begin(), suite_names().end(), opt.suite) == suite_names().end())
        throw std::invalid_argument("unknown suite '" + opt.suite + "'");
    if (opt.max_degree < 2 || opt.max_degree > 16)
        throw std::invalid_argument("max_degree must lie in [2, 16]");

    Workspace ws(opt);
    Collector col;
    bool all = opt.suite == "all";
    if (all || opt.suite == "groebner") add_groebner(ws, col);
    if (all || opt.suite == "anick") add_anick(ws, col);
    if (all || opt.suite == "bar") add_bar(ws, col);
    if (all || opt.suite == "classes") add_classes(ws, col);
    if (all || opt.suite == "action") add_action(ws, col);
    if (all || opt.suite == "lhs") add_lhs(ws, col);

    report::Report rep;
    rep.meta.version = kVersion;
    rep.meta.p = opt.p;
    rep.meta.suite = opt.suite;
    rep.meta.max_degree = opt.max_degree;
    rep.meta.budget_mb = opt.budget_mb;
    rep.meta.jobs = opt.jobs;
    rep.meta.seed = opt.seed;
    rep.meta.strict = opt.strict;

    for (auto& [name, fns] : col.suites) {
        report::Suite suite;
        suite.name = name;
        suite.checks.resize(fns.size());
        if (opt.jobs <= 1) {
            for (std::size_t i = 0; i < fns.size(); ++i) suite.checks[i] = guarded(fns[i]);
        } else {
            std::atomic<std::size_t> next{0};
            auto worker = [&]() {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= fns.size()) return;
                    suite.checks[i] = guarded(fns[i]);
                }
            };
            std::vector<std::thread> pool;
            for (std::uint32_t t = 0; t < std::min<std::uint32_t>(opt.jobs, fns.size()); ++t)
                pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        rep.suites.push_back(std::move(suite));
    }
    return rep;
}

namespace {

std::shared_ptr<const NormalFormEngine> engine_for(const std::string& family, std::uint32_t p) {
    if (family == "B") return std::make_shared<const NormalFormEngine>(algebras::presentation_B(p), 16);
    if (family == "A")
        return std::make_shared<const QuotientAlgebra>(algebras::presentation_A(p), 4 * std::uint64_t(p),
                                                       std::uint64_t(p) * p)
            ->engine_ptr();
    if (family == "grA")
        return std::make_shared<const QuotientAlgebra>(algebras::presentation_grA(p),
                                                       4 * std::uint64_t(p), std::uint64_t(p) * p)
            ->engine_ptr();
    if (family == "smash") {
        auto a = algebras::build_A(p);
        auto sm = algebras::build_smash(a, algebras::standard_action(a.ctx(), p));
        return sm.engine_ptr();
    }
    throw std::invalid_argument("unknown family '" + family + "' (expected A, B, grA or smash)");
}

}  // namespace

std::vector<Word> chain_set(const std::string& family, std::uint32_t p, std::size_t n) {
    if (!ff::is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (n > 24) throw std::invalid_argument("chain degree too large");
    auto eng = engine_for(family, p);
    return anick::chain_words(*eng, n);
}

std::string chain_set_rendered(const std::string& family, std::uint32_t p, std::size_t n) {
    auto eng = engine_for(family, p);
    auto words = anick::chain_words(*eng, n);
    return set_str(*eng->ctx(), words);
}

std::vector<std::uint32_t> anick_ext_dims(const std::string& family, std::uint32_t p,
                                          std::size_t max_n) {
    if (!ff::is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (max_n > 16) throw std::invalid_argument("max degree too large");
    auto eng = engine_for(family, p);
    anick::Resolution res(eng);
    res.extend(max_n + 1);
    return res.ext_dims(max_n).dims;
}

std::uint32_t bar_ext_dim(const std::string& family, std::uint32_t p, std::uint32_t n,
                          std::uint64_t budget_mb) {
    if (!ff::is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (family == "B") throw std::invalid_argument("bar oracle needs a finite dimensional algebra");
    QuotientAlgebra alg = family == "A"     ? algebras::build_A(p)
                          : family == "grA" ? algebras::build_grA(p)
                          : family == "smash"
                              ? algebras::build_smash(p)
                              : throw std::invalid_argument("unknown family '" + family + "'");
    BarComplex cx(&alg, budget_mb);
    return cx.ext_dim(n);
}

std::string export_presentation(const std::string& family, std::uint32_t p) {
    if (!ff::is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (family == "A") return io::serialize_presentation(algebras::presentation_A(p));
    if (family == "B") return io::serialize_presentation(algebras::presentation_B(p));
    if (family == "grA") return io::serialize_presentation(algebras::presentation_grA(p));
    if (family == "smash") {
        auto a = algebras::build_A(p);
        return io::serialize_presentation(
            algebras::smash_presentation(a, algebras::standard_action(a.ctx(), p)));
    }
    throw std::invalid_argument("unknown family '" + family + "' (expected A, B, grA or smash)");
}

}  // namespace homcoh::suites
