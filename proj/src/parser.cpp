#include "polyreach/parser.hpp"

#include <cctype>
#include <vector>

namespace polyreach {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      message_(message),
      position_(position) {}

bool is_identifier(std::string_view s) noexcept {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

namespace {

enum class Tok {
    Ident,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Box,
    Diamond,
    Pi,
    Gamma,
    True,
    False,
    LParen,
    RParen,
    Comma,
    End
};

struct Token {
    Tok type;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view in) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto starts = [&](std::string_view s) { return in.substr(i, s.size()) == s; };
    while (i < in.size()) {
        unsigned char c = static_cast<unsigned char>(in[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isalpha(c)) {
            while (i < in.size() &&
                   (std::isalnum(static_cast<unsigned char>(in[i])) || in[i] == '_'))
                ++i;
            std::string word(in.substr(start, i - start));
            Tok t = Tok::Ident;
            if (word == "gamma") t = Tok::Gamma;
            else if (word == "pi") t = Tok::Pi;
            else if (word == "T") t = Tok::True;
            else if (word == "F") t = Tok::False;
            out.push_back({t, std::move(word), start});
            continue;
        }
        if (starts(Formula::kTruthAtom))
            throw ParseError("reserved atom '" + std::string(Formula::kTruthAtom) + "' is not allowed",
                             start);
        if (starts("<->")) {
            out.push_back({Tok::Iff, "<->", start});
            i += 3;
        } else if (starts("->")) {
            out.push_back({Tok::Implies, "->", start});
            i += 2;
        } else if (starts("[]")) {
            out.push_back({Tok::Box, "[]", start});
            i += 2;
        } else if (starts("<>")) {
            out.push_back({Tok::Diamond, "<>", start});
            i += 2;
        } else {
            Tok t;
            switch (c) {
            case '~': t = Tok::Not; break;
            case '&': t = Tok::And; break;
            case '|': t = Tok::Or; break;
            case '(': t = Tok::LParen; break;
            case ')': t = Tok::RParen; break;
            case ',': t = Tok::Comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + in[i] + "'", start);
            }
            out.push_back({t, std::string(1, in[i]), start});
            ++i;
        }
    }
    out.push_back({Tok::End, "", in.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    Formula run() {
        Formula f = parse_iff();
        if (peek().type == Tok::RParen) throw ParseError("unbalanced ')'", peek().pos);
        if (peek().type != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    bool accept(Tok t) {
        if (peek().type != t) return false;
        ++pos_;
        return true;
    }

    void expect(Tok t, const char* what) {
        if (accept(t)) return;
        if (t == Tok::RParen && peek().type == Tok::End)
            throw ParseError("unbalanced '(': expected ')'", peek().pos);
        throw ParseError(std::string("expected ") + what, peek().pos);
    }

    Formula parse_iff() {
        Formula f = parse_implies();
        while (accept(Tok::Iff)) f = equivalence(f, parse_implies());
        return f;
    }

    Formula parse_implies() {
        Formula f = parse_or();
        if (accept(Tok::Implies)) return implication(f, parse_implies());
        return f;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (accept(Tok::Or)) f = disjunction(f, parse_and());
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (accept(Tok::And)) f = Formula::conjunction(f, parse_unary());
        return f;
    }

    Formula parse_unary() {
        if (accept(Tok::Not)) return Formula::negation(parse_unary());
        if (accept(Tok::Box)) return Formula::box(parse_unary());
        if (accept(Tok::Diamond)) return diamond(parse_unary());
        if (accept(Tok::Pi)) return global_box(parse_unary());
        return parse_primary();
    }

    Formula parse_primary() {
        const Token& t = peek();
        switch (t.type) {
        case Tok::Ident:
            return Formula::atom(next().text);
        case Tok::True:
            next();
            return top();
        case Tok::False:
            next();
            return bottom();
        case Tok::Gamma: {
            next();
            expect(Tok::LParen, "'(' after gamma");
            Formula a = parse_iff();
            expect(Tok::Comma, "',' in gamma(f, g)");
            Formula b = parse_iff();
            expect(Tok::RParen, "')'");
            return Formula::reach(a, b);
        }
        case Tok::LParen: {
            next();
            Formula f = parse_iff();
            expect(Tok::RParen, "')'");
            return f;
        }
        case Tok::RParen:
            throw ParseError("unbalanced ')'", t.pos);
        case Tok::End:
            throw ParseError("unexpected end of input", t.pos);
        default:
            throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

void print(const Formula& f, std::string& out);

void print_unary_operand(const Formula& f, std::string& out) {
    if (f.kind() == Kind::And && !is_bottom(f)) {
        out += '(';
        print(f, out);
        out += ')';
    } else {
        print(f, out);
    }
}

void print(const Formula& f, std::string& out) {
    if (is_top(f)) {
        out += 'T';
        return;
    }
    if (is_bottom(f)) {
        out += 'F';
        return;
    }
    switch (f.kind()) {
    case Kind::Atom:
        out += f.name();
        return;
    case Kind::Not:
        out += '~';
        print_unary_operand(f.child(), out);
        return;
    case Kind::Box:
        out += "[]";
        print_unary_operand(f.child(), out);
        return;
    case Kind::Reach:
        out += "gamma(";
        print(f.left(), out);
        out += ", ";
        print(f.right(), out);
        out += ')';
        return;
    case Kind::And:
        // & is parsed left associative: only a right-nested conjunction needs parentheses.
        print(f.left(), out);
        out += " & ";
        print_unary_operand(f.right(), out);
        return;
    }
}

} // namespace

Formula parse_formula(std::string_view text) { return Parser(text).run(); }

std::string to_string(const Formula& f) {
    std::string out;
    print(f, out);
    return out;
}

} // namespace polyreach
