#include "expsolve/parser.hpp"

#include "expsolve/printer.hpp"

#include <cctype>
#include <map>

namespace expsolve {

namespace {

enum class Tok { Number, Ident, Prime, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t start;
    std::size_t end;
};

constexpr unsigned kMaxSmallInt = 10000;

/// Polynomial in f, f', ... with ExpPolynomial coefficients. Keys are trimmed
/// exponent vectors; the empty key is the f-free part.
using Key = std::vector<unsigned>;
using Value = std::map<Key, ExpPolynomial>;

Value constant(const ExpPolynomial& x) {
    Value v;
    if (!x.is_zero())
        v.emplace(Key{}, x);
    return v;
}

void accumulate(Value& v, const Key& k, const ExpPolynomial& x) {
    auto [it, inserted] = v.try_emplace(k, x);
    if (!inserted) {
        it->second += x;
        if (it->second.is_zero())
            v.erase(it);
    }
}

Value add(Value a, const Value& b, bool subtract) {
    for (const auto& [k, x] : b)
        accumulate(a, k, subtract ? -x : x);
    return a;
}

Value multiply(const Value& a, const Value& b) {
    Value out;
    for (const auto& [ka, xa] : a)
        for (const auto& [kb, xb] : b) {
            Key k(std::max(ka.size(), kb.size()), 0);
            for (std::size_t i = 0; i < ka.size(); ++i)
                k[i] += ka[i];
            for (std::size_t i = 0; i < kb.size(); ++i)
                k[i] += kb[i];
            accumulate(out, k, xa * xb);
        }
    return out;
}

bool f_free(const Value& v) { return v.empty() || (v.size() == 1 && v.begin()->first.empty()); }

ExpPolynomial as_exp(const Value& v) { return v.empty() ? ExpPolynomial() : v.begin()->second; }

/// r when x is a plain rational function (no exponentials, no units).
std::optional<RationalFunction> as_rational(const ExpPolynomial& x) {
    if (x.is_zero())
        return RationalFunction();
    if (x.size() != 1 || !x.terms().begin()->first.is_zero())
        return std::nullopt;
    const auto single = x.terms().begin()->second.single_term();
    if (!single || single->first != 0)
        return std::nullopt;
    return single->second;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) { lex(); }

    Value expression() {
        Value acc;
        bool first = true;
        while (true) {
            bool negate = false;
            if (first) {
                if (peek().kind == Tok::Plus || peek().kind == Tok::Minus)
                    negate = next().kind == Tok::Minus;
            } else {
                if (peek().kind != Tok::Plus && peek().kind != Tok::Minus)
                    break;
                const Token op = next();
                negate = op.kind == Tok::Minus;
                if (!starts_factor(peek().kind))
                    throw SyntaxError("expected a term after '" + op.text + "'", span(op.start, op.end));
            }
            acc = add(std::move(acc), term(), negate);
            first = false;
        }
        return acc;
    }

    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }

    Token expect(Tok kind, const std::string& what) {
        if (peek().kind != kind)
            throw SyntaxError("expected " + what + found(), span(peek().start, peek().end));
        return next();
    }

    SourceSpan span(std::size_t start, std::size_t end) const {
        SourceSpan s{start, std::max(start, end), 1, 1};
        for (std::size_t i = 0; i < start && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++s.line;
                s.column = 1;
            } else {
                ++s.column;
            }
        }
        return s;
    }

    std::size_t text_size() const { return text_.size(); }
    std::size_t previous_end() const { return pos_ == 0 ? 0 : tokens_[pos_ - 1].end; }

    std::string found() const {
        return peek().kind == Tok::End ? ", found end of input" : ", found '" + peek().text + "'";
    }

private:
    static bool starts_factor(Tok k) { return k == Tok::Number || k == Tok::Ident || k == Tok::LParen; }

    Value term() {
        if (!starts_factor(peek().kind))
            throw SyntaxError("expected a term" + found(), span(peek().start, peek().end));
        bool numeric = peek().kind == Tok::Number;
        Value acc = factor();
        while (true) {
            const Tok k = peek().kind;
            if (k == Tok::Star) {
                const Token op = next();
                if (!starts_factor(peek().kind))
                    throw SyntaxError("expected a factor after '*'", span(op.start, op.end));
                numeric = peek().kind == Tok::Number;
                acc = multiply(acc, factor());
            } else if (k == Tok::Slash) {
                const Token op = next();
                if (!starts_factor(peek().kind))
                    throw SyntaxError("expected a factor after '/'", span(op.start, op.end));
                const std::size_t start = peek().start;
                numeric = peek().kind == Tok::Number;
                const Value divisor = factor();
                acc = multiply(acc, invert(divisor, span(start, previous_end())));
            } else if (numeric && (k == Tok::Ident || k == Tok::LParen)) {
                numeric = false;
                acc = multiply(acc, factor());
            } else {
                break;
            }
        }
        return acc;
    }

    Value invert(const Value& v, const SourceSpan& where) {
        if (!f_free(v))
            throw ShapeError("division by an expression containing f", where);
        const ExpPolynomial x = as_exp(v);
        if (x.is_zero())
            throw SyntaxError("division by zero", where);
        if (x.size() != 1 || x.terms().begin()->second.size() != 1)
            throw ShapeError("division by a sum of exponential terms", where);
        const auto& [g, coeff] = *x.terms().begin();
        const auto single = *coeff.single_term();
        return constant(ExpPolynomial::term(CoefficientSum(single.second.inverse(), -single.first), -g));
    }

    Value factor() {
        Value base = atom();
        if (peek().kind == Tok::Caret) {
            next();
            const unsigned e = small_int("an exponent");
            Value out = constant(ExpPolynomial(1));
            for (unsigned i = 0; i < e; ++i)
                out = multiply(out, base);
            return out;
        }
        return base;
    }

    unsigned small_int(const std::string& what) {
        const Token t = expect(Tok::Number, what);
        if (t.text.size() > 5 || std::stoul(t.text) > kMaxSmallInt)
            throw SyntaxError(what + " is too large", span(t.start, t.end));
        return static_cast<unsigned>(std::stoul(t.text));
    }

    Value atom() {
        const Token t = next();
        switch (t.kind) {
        case Tok::Number: {
            Integer value(t.text);
            return constant(ExpPolynomial(RationalFunction(Polynomial(Rational(value)))));
        }
        case Tok::LParen: {
            Value inner = expression();
            expect(Tok::RParen, "')'");
            return inner;
        }
        case Tok::Ident:
            if (t.text == "z")
                return constant(ExpPolynomial(Polynomial::z()));
            if (t.text == "f")
                return derivative_atom();
            if (t.text == "exp")
                return exponential();
            throw SyntaxError("unknown identifier '" + t.text + "'", span(t.start, t.end));
        default:
            throw SyntaxError("unexpected '" + t.text + "'", span(t.start, t.end));
        }
    }

    Value derivative_atom() {
        unsigned order = 0;
        if (peek().kind == Tok::Caret && tokens_[pos_ + 1].kind == Tok::LParen) {
            next();
            next();
            order = small_int("a derivative order");
            expect(Tok::RParen, "')'");
        } else {
            while (peek().kind == Tok::Prime) {
                next();
                ++order;
            }
        }
        Key k(order + 1, 0);
        k[order] = 1;
        Value v;
        v.emplace(std::move(k), ExpPolynomial(1));
        return v;
    }

    Value exponential() {
        expect(Tok::LParen, "'(' after exp");
        const std::size_t start = peek().start;
        const Value arg = expression();
        const SourceSpan where = span(start, previous_end());
        expect(Tok::RParen, "')'");
        if (!f_free(arg))
            throw NonPolynomialExponent("exp argument depends on f", where);
        const auto r = as_rational(as_exp(arg));
        if (!r || !r->is_polynomial())
            throw NonPolynomialExponent("exp argument is not a polynomial in z", where);
        return constant(ExpPolynomial::term(CoefficientSum(RationalFunction(1)), r->num()));
    }

    void lex() {
        std::size_t i = 0;
        while (i < text_.size()) {
            const char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i])))
                    ++i;
                tokens_.push_back({Tok::Number, std::string(text_.substr(start, i - start)), start, i});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                // Identifiers are single letters except "exp", so "zf" style input is rejected later.
                if (text_.substr(i, 3) == "exp") {
                    i += 3;
                } else {
                    ++i;
                }
                tokens_.push_back({Tok::Ident, std::string(text_.substr(start, i - start)), start, i});
                continue;
            }
            Tok kind;
            switch (c) {
            case '\'': kind = Tok::Prime; break;
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '=': kind = Tok::Equals; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", span(start, start + 1));
            }
            ++i;
            tokens_.push_back({kind, std::string(1, c), start, i});
        }
        tokens_.push_back({Tok::End, "", text_.size(), text_.size()});
    }

    std::string_view text_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

template <class F>
auto guarded(Parser& p, F&& body) {
    try {
        return body();
    } catch (const DivisionByZero& e) {
        throw SyntaxError(e.what(), p.span(0, p.text_size()));
    }
}

std::vector<RhsTerm> rhs_terms(const ExpPolynomial& x, const SourceSpan& where) {
    std::vector<RhsTerm> out;
    for (const auto& [g, coeff] : x.terms()) {
        if (g.is_zero())
            throw ShapeError("right-hand side has a term without a non-constant exp factor", where);
        for (const auto& [unit, r] : coeff.terms())
            out.push_back({r, g + Polynomial(unit)});
    }
    return out;
}

} // namespace

EquationSpec parse_equation(std::string_view text) {
    Parser p(text);
    return guarded(p, [&] {
        const std::size_t lhs_start = p.peek().start;
        const Value lhs = p.expression();
        const SourceSpan lhs_span = p.span(lhs_start, p.previous_end());
        p.expect(Tok::Equals, "'='");
        const std::size_t rhs_start = p.peek().start;
        const Value rhs = p.expression();
        const SourceSpan rhs_span = p.span(rhs_start, p.previous_end());
        if (p.peek().kind != Tok::End)
            throw SyntaxError("unexpected input after the right-hand side" + p.found(), p.span(p.peek().start, p.peek().end));

        if (!f_free(rhs))
            throw ShapeError("right-hand side depends on f", rhs_span);

        unsigned n = 0;
        for (const auto& [k, x] : lhs)
            if (k.size() == 1)
                n = std::max(n, k[0]);
        if (n < 2)
            throw ShapeError("left-hand side needs a pure power f^n with n >= 2", lhs_span);

        std::vector<DiffMonomial> monomials;
        for (const auto& [k, x] : lhs) {
            const auto r = as_rational(x);
            if (!r)
                throw ShapeError("left-hand coefficient " + print_canonical(x) + " is not a rational function", lhs_span);
            if (k.size() == 1 && k[0] == n) {
                if (*r != RationalFunction(1))
                    throw ShapeError("f^" + std::to_string(n) + " must have coefficient 1", lhs_span);
                continue;
            }
            monomials.push_back({*r, k});
        }

        try {
            return EquationSpec(n, Rational(0), DiffPolynomial(std::move(monomials)), rhs_terms(as_exp(rhs), rhs_span));
        } catch (const InvalidSpec& e) {
            throw ShapeError(e.what(), p.span(0, p.text_size()));
        }
    });
}

ExpPolynomial parse_function(std::string_view text) {
    Parser p(text);
    return guarded(p, [&] {
        const Value v = p.expression();
        if (p.peek().kind != Tok::End)
            throw SyntaxError("unexpected input" + p.found(), p.span(p.peek().start, p.peek().end));
        if (!f_free(v))
            throw ShapeError("a function expression cannot mention f", p.span(0, p.text_size()));
        return as_exp(v);
    });
}

} // namespace expsolve
