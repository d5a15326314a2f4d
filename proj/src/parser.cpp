#include "pk/parser.hpp"

#include <cctype>
#include <vector>

namespace pk {

namespace {

enum class Tok { number, name, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;  // 1-based column
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t pos = i + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::number, s.substr(i, j - i), pos});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Tok::name, s.substr(i, j - i), pos});
            i = j;
        } else {
            Tok k;
            switch (c) {
                case '+': k = Tok::plus; break;
                case '-': k = Tok::minus; break;
                case '*': k = Tok::star; break;
                case '^': k = Tok::caret; break;
                case '/': k = Tok::slash; break;
                case '(': k = Tok::lparen; break;
                case ')': k = Tok::rparen; break;
                default:
                    throw parse_error("unexpected character", pos, std::string(1, c));
            }
            out.push_back({k, std::string(1, c), pos});
            ++i;
        }
    }
    out.push_back({Tok::end, "<end>", s.size() + 1});
    return out;
}

class Parser {
  public:
    Parser(const std::string& text, RingPtr ring) : toks_(lex(text)), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial p = expr();
        if (peek().kind != Tok::end)
            throw parse_error("trailing input after expression", peek().pos, peek().text);
        return p;
    }

  private:
    const Token& peek() const { return toks_[at_]; }
    Token take() { return toks_[at_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++at_;
        return true;
    }

    Polynomial expr() {
        bool neg = false;
        if (accept(Tok::minus))
            neg = true;
        else
            accept(Tok::plus);
        Polynomial p = term();
        if (neg) p = -p;
        for (;;) {
            if (accept(Tok::plus))
                p += term();
            else if (accept(Tok::minus))
                p -= term();
            else
                return p;
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (accept(Tok::star)) p = p * factor();
        return p;
    }

    Polynomial factor() {
        Polynomial p = primary();
        if (accept(Tok::caret)) {
            const Token& t = peek();
            if (t.kind != Tok::number)
                throw parse_error("exponent is not a nonnegative integer", t.pos, t.text);
            take();
            p = p.pow(std::stoi(t.text));
        }
        return p;
    }

    Polynomial primary() {
        Token t = take();
        switch (t.kind) {
            case Tok::number: {
                Rational q(t.text);
                if (peek().kind == Tok::slash) {
                    take();
                    const Token& d = peek();
                    if (d.kind != Tok::number)
                        throw parse_error("malformed rational literal", d.pos, d.text);
                    take();
                    Rational den(d.text);
                    if (den == 0) throw parse_error("zero denominator", d.pos, d.text);
                    q /= den;
                }
                q.canonicalize();
                return Polynomial::constant(ring_, Scalar(q));
            }
            case Tok::name: {
                if (ring_->gaussian() && t.text == "i")
                    return Polynomial::constant(ring_, Scalar::i());
                if (auto idx = ring_->index_of(t.text))
                    return Polynomial::variable(ring_, *idx);
                throw parse_error("unknown identifier", t.pos, t.text);
            }
            case Tok::lparen: {
                Polynomial p = expr();
                if (!accept(Tok::rparen))
                    throw parse_error("expected ')'", peek().pos, peek().text);
                return p;
            }
            default:
                throw parse_error("expected a number, name, or '('", t.pos, t.text);
        }
    }

    std::vector<Token> toks_;
    RingPtr ring_;
    std::size_t at_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

}  // namespace pk
