#include "presentation_io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace homcoh::io {

using freealg::CtxPtr;
using freealg::FreeElement;
using freealg::Word;

namespace {

struct Token {
    enum class Kind { ident, number, symbol, end };
    Kind kind = Kind::end;
    std::string text;
    std::uint64_t value = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    bool accept_symbol(char c) {
        if (tok_.kind == Token::Kind::symbol && tok_.text[0] == c) {
            advance();
            return true;
        }
        return false;
    }
    void expect_symbol(char c) {
        if (!accept_symbol(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = pos_;
            std::uint64_t v = 0;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) {
                v = v * 10 + (s_[j] - '0');
                if (v > (1ull << 40)) fail("number too large");
                ++j;
            }
            tok_ = {Token::Kind::number, s_.substr(pos_, j - pos_), v};
            pos_ = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = pos_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Token::Kind::ident, s_.substr(pos_, j - pos_), 0};
            pos_ = j;
        } else if (std::string("+-*/^()").find(c) != std::string::npos) {
            tok_ = {Token::Kind::symbol, std::string(1, c), 0};
            ++pos_;
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    Token tok_;
};

class ExprParser {
public:
    ExprParser(const CtxPtr& ctx, Lexer& lex) : ctx_(ctx), lex_(lex) {}

    FreeElement expr() {
        bool neg = lex_.accept_symbol('-');
        FreeElement acc = term();
        if (neg) acc = acc.scaled(ctx_->field.neg(1));
        while (true) {
            if (lex_.accept_symbol('+'))
                acc = acc + term();
            else if (lex_.accept_symbol('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

private:
    FreeElement term() {
        FreeElement acc = factor();
        while (true) {
            if (lex_.accept_symbol('*')) {
                acc = acc * factor();
            } else if (lex_.accept_symbol('/')) {
                Token t = lex_.take();
                if (t.kind != Token::Kind::number) lex_.fail("expected an integer divisor");
                acc = acc.scaled(ctx_->field.inv(ctx_->field.from_int(t.value)));
            } else {
                return acc;
            }
        }
    }

    FreeElement factor() {
        FreeElement base = atom();
        if (lex_.accept_symbol('^')) {
            Token t = lex_.take();
            if (t.kind != Token::Kind::number) lex_.fail("expected an integer exponent");
            FreeElement r = FreeElement::monomial(ctx_, Word{});
            for (std::uint64_t i = 0; i < t.value; ++i) r = r * base;
            return r;
        }
        return base;
    }

    FreeElement atom() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::number) {
            std::uint64_t v = lex_.take().value;
            return FreeElement::monomial(ctx_, Word{}, ctx_->field.from_int(v));
        }
        if (t.kind == Token::Kind::ident) {
            std::string name = lex_.take().text;
            return FreeElement::monomial(ctx_, Word(1, ctx_->gen_index(name)));
        }
        if (t.kind == Token::Kind::symbol && t.text[0] == '(') {
            lex_.take();
            FreeElement inner = expr();
            lex_.expect_symbol(')');
            return inner;
        }
        lex_.fail("expected a scalar, generator or parenthesis");
    }

    const CtxPtr& ctx_;
    Lexer& lex_;
};

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

}  // namespace

FreeElement parse_expression(const CtxPtr& ctx, const std::string& text) {
    Lexer lex(text);
    ExprParser p(ctx, lex);
    FreeElement e = p.expr();
    if (lex.peek().kind != Token::Kind::end) lex.fail("trailing input after expression");
    return e;
}

freealg::Presentation parse_presentation(const std::string& text) {
    std::optional<std::uint32_t> field;
    std::optional<freealg::MonomialOrder::Kind> kind;
    std::vector<std::string> names;
    std::vector<std::vector<std::uint32_t>> weights;
    std::vector<std::string> precedence;
    std::vector<std::string> relation_lines;

    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        auto bad = [&](const std::string& m) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + m);
        };
        if (toks[0] == "field") {
            if (toks.size() != 2) bad("field takes one integer");
            field = static_cast<std::uint32_t>(std::stoul(toks[1]));
        } else if (toks[0] == "order") {
            if (toks.size() != 2) bad("order takes one keyword");
            if (toks[1] == "weightedlex")
                kind = freealg::MonomialOrder::Kind::weighted_lex;
            else if (toks[1] == "deglex")
                kind = freealg::MonomialOrder::Kind::deglex;
            else
                bad("unknown order '" + toks[1] + "'");
        } else if (toks[0] == "generator") {
            if (toks.size() < 3) bad("generator takes a name and a weight vector");
            names.push_back(toks[1]);
            std::vector<std::uint32_t> w;
            for (std::size_t i = 2; i < toks.size(); ++i)
                w.push_back(static_cast<std::uint32_t>(std::stoul(toks[i])));
            weights.push_back(std::move(w));
        } else if (toks[0] == "precedence") {
            precedence.assign(toks.begin() + 1, toks.end());
        } else if (toks[0] == "relation") {
            auto pos = line.find("relation");
            relation_lines.push_back(line.substr(pos + 8));
        } else {
            bad("unknown directive '" + toks[0] + "'");
        }
    }

    if (!field) throw std::invalid_argument("presentation: missing field line");
    if (!kind) throw std::invalid_argument("presentation: missing order line");
    if (names.empty()) throw std::invalid_argument("presentation: no generators");
    if (precedence.size() != names.size())
        throw std::invalid_argument("presentation: precedence must list every generator");

    freealg::MonomialOrder ord;
    ord.kind = *kind;
    ord.ngens = names.size();
    ord.weights = weights;
    ord.prec_rank.assign(names.size(), 0);
    for (std::size_t g = 0; g < names.size(); ++g) {
        auto it = std::find(precedence.begin(), precedence.end(), names[g]);
        if (it == precedence.end())
            throw std::invalid_argument("presentation: generator '" + names[g] +
                                        "' missing from precedence");
        ord.prec_rank[g] = static_cast<std::uint32_t>(it - precedence.begin());
    }

    CtxPtr ctx = freealg::make_context(ff::PrimeField(*field), ord, names,
                                       std::vector<ff::Fp>(names.size(), 0));
    freealg::Presentation pres;
    pres.ctx = ctx;
    for (const auto& rl : relation_lines) {
        FreeElement e = parse_expression(ctx, rl);
        if (e.is_zero()) throw std::invalid_argument("presentation: zero relation");
        pres.relations.push_back(std::move(e));
    }
    return pres;
}

std::string serialize_presentation(const freealg::Presentation& pres) {
    const auto& ctx = *pres.ctx;
    std::ostringstream os;
    os << "field " << ctx.field.modulus() << "\n";
    os << "order "
       << (ctx.order.kind == freealg::MonomialOrder::Kind::weighted_lex ? "weightedlex" : "deglex")
       << "\n";
    for (std::size_t g = 0; g < ctx.order.ngens; ++g) {
        os << "generator " << ctx.gen_names[g];
        for (auto w : ctx.order.weights[g]) os << " " << w;
        os << "\n";
    }
    os << "precedence";
    std::vector<std::size_t> by_rank(ctx.order.ngens);
    for (std::size_t g = 0; g < ctx.order.ngens; ++g) by_rank[ctx.order.prec_rank[g]] = g;
    for (auto g : by_rank) os << " " << ctx.gen_names[g];
    os << "\n";
    for (const auto& r : pres.relations) os << "relation " << freealg::render_element(r) << "\n";
    return os.str();
}

}  // namespace homcoh::io
