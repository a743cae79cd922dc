#include "sblab/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sblab {

std::vector<Polynomial> ProblemSpec::a_generators() const {
    if (generators_a) return *generators_a;
    std::vector<Polynomial> gens;
    for (int i = 0; i < context.vars; ++i)
        gens.push_back(Polynomial::monomial(context, Exponent::unit(context.vars, i),
                                            Coefficient::one(context.field)));
    return gens;
}

namespace {

enum class Tok { Ident, Integer, LParen, RParen, LBracket, RBracket, Comma, Equal, Plus, Minus, Star, Slash, Caret, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }
    Token next() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        skip_ws_and_comments();
        current_.line = line_;
        current_.col = col_;
        if (pos_ >= text_.size()) {
            current_.kind = Tok::End;
            current_.text = "<end of input>";
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                bump();
            current_.kind = Tok::Ident;
            current_.text = text_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                bump();
            current_.kind = Tok::Integer;
            current_.text = text_.substr(start, pos_ - start);
            return;
        }
        bump();
        current_.text = std::string(1, c);
        switch (c) {
            case '(': current_.kind = Tok::LParen; return;
            case ')': current_.kind = Tok::RParen; return;
            case '[': current_.kind = Tok::LBracket; return;
            case ']': current_.kind = Tok::RBracket; return;
            case ',': current_.kind = Tok::Comma; return;
            case '=': current_.kind = Tok::Equal; return;
            case '+': current_.kind = Tok::Plus; return;
            case '-': current_.kind = Tok::Minus; return;
            case '*': current_.kind = Tok::Star; return;
            case '/': current_.kind = Tok::Slash; return;
            case '^': current_.kind = Tok::Caret; return;
            default: throw ParseError(current_.line, current_.col, "unexpected character '" + current_.text + "'");
        }
    }

    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_{};
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ProblemSpec parse_problem() {
        ProblemSpec spec;
        parse_ring_decl(spec);
        parse_field_decl(spec);
        bool seen_i = false, seen_j = false, seen_a = false;
        while (lex_.peek().kind != Tok::End) {
            Token name = expect(Tok::Ident, "ideal section name (I, J or a)");
            std::vector<Polynomial>* target = nullptr;
            if (name.text == "I") {
                if (seen_i) throw ParseError(name.line, name.col, "duplicate section I");
                seen_i = true;
                target = &spec.generators_i;
            } else if (name.text == "J") {
                if (seen_j) throw ParseError(name.line, name.col, "duplicate section J");
                seen_j = true;
                target = &spec.generators_j;
            } else if (name.text == "a") {
                if (seen_a) throw ParseError(name.line, name.col, "duplicate section a");
                seen_a = true;
                spec.generators_a.emplace();
                target = &*spec.generators_a;
            } else {
                throw ParseError(name.line, name.col,
                                 "unknown section '" + name.text + "' (expected I, J or a)");
            }
            expect(Tok::Equal, "'='");
            expect(Tok::LBracket, "'['");
            while (true) {
                Token at = lex_.peek();
                Polynomial g = parse_poly(spec);
                validate_generator(g, at);
                target->push_back(std::move(g));
                if (lex_.peek().kind == Tok::Comma) {
                    lex_.next();
                    continue;
                }
                break;
            }
            expect(Tok::RBracket, "']'");
        }
        if (!seen_i) {
            Token t = lex_.peek();
            throw ParseError(t.line, t.col, "missing required section I");
        }
        return spec;
    }

    Polynomial parse_single_polynomial(const RingContext& ctx,
                                       const std::vector<std::string>& variables) {
        ProblemSpec spec;
        spec.context = ctx;
        spec.variables = variables;
        Polynomial p = parse_poly(spec);
        Token t = lex_.peek();
        if (t.kind != Tok::End)
            throw ParseError(t.line, t.col, "trailing input after polynomial: '" + t.text + "'");
        return p;
    }

  private:
    Token expect(Tok kind, const std::string& what) {
        Token t = lex_.next();
        if (t.kind != kind)
            throw ParseError(t.line, t.col, "expected " + what + ", found '" + t.text + "'");
        return t;
    }

    void parse_ring_decl(ProblemSpec& spec) {
        Token kw = expect(Tok::Ident, "'ring'");
        if (kw.text != "ring") throw ParseError(kw.line, kw.col, "problem must start with 'ring'");
        expect(Tok::LParen, "'('");
        while (true) {
            Token name = expect(Tok::Ident, "variable name");
            for (const auto& v : spec.variables)
                if (v == name.text)
                    throw ParseError(name.line, name.col, "duplicate variable '" + name.text + "'");
            spec.variables.push_back(name.text);
            if (lex_.peek().kind == Tok::Comma) {
                lex_.next();
                continue;
            }
            break;
        }
        expect(Tok::RParen, "')'");
        spec.context.vars = static_cast<int>(spec.variables.size());
    }

    void parse_field_decl(ProblemSpec& spec) {
        Token kw = expect(Tok::Ident, "'field'");
        if (kw.text != "field") throw ParseError(kw.line, kw.col, "expected 'field' declaration");
        Token which = expect(Tok::Ident, "'Q' or 'Fp'");
        if (which.text == "Q") {
            spec.context.field = FieldDesc::rational();
        } else if (which.text == "Fp") {
            Token p = expect(Tok::Integer, "prime modulus");
            try {
                unsigned long v = std::stoul(p.text);
                spec.context.field = FieldDesc::prime_field(static_cast<std::uint32_t>(v));
            } catch (const Error&) {
                throw ParseError(p.line, p.col, "modulus " + p.text + " is not a prime < 2^31");
            } catch (const std::exception&) {
                throw ParseError(p.line, p.col, "modulus " + p.text + " out of range");
            }
        } else {
            throw ParseError(which.line, which.col, "unknown field '" + which.text + "'");
        }
    }

    // poly := ("+"|"-")? term (("+"|"-") term)*
    Polynomial parse_poly(const ProblemSpec& spec) {
        std::vector<Term> terms;
        bool negative = false;
        if (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus)
            negative = lex_.next().kind == Tok::Minus;
        parse_term(spec, negative, terms);
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            negative = lex_.next().kind == Tok::Minus;
            parse_term(spec, negative, terms);
        }
        return Polynomial(spec.context, std::move(terms));
    }

    // term := factor ("*" factor)* ; factor := number ("/" number) | var ("^" nat)?
    void parse_term(const ProblemSpec& spec, bool negative, std::vector<Term>& out) {
        mpz_class num = negative ? -1 : 1;
        mpz_class den = 1;
        std::vector<int> exp(static_cast<std::size_t>(spec.context.vars), 0);
        while (true) {
            Token t = lex_.peek();
            if (t.kind == Tok::Integer) {
                lex_.next();
                num *= mpz_class(t.text);
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.next();
                    Token d = expect(Tok::Integer, "denominator");
                    mpz_class dv(d.text);
                    if (dv == 0) throw ParseError(d.line, d.col, "zero denominator");
                    den *= dv;
                }
            } else if (t.kind == Tok::Ident) {
                lex_.next();
                int idx = -1;
                for (std::size_t i = 0; i < spec.variables.size(); ++i)
                    if (spec.variables[i] == t.text) idx = static_cast<int>(i);
                if (idx < 0)
                    throw ParseError(t.line, t.col, "unknown variable '" + t.text + "'");
                int e = 1;
                if (lex_.peek().kind == Tok::Caret) {
                    lex_.next();
                    Token p = expect(Tok::Integer, "exponent");
                    try {
                        e = std::stoi(p.text);
                    } catch (const std::exception&) {
                        throw ParseError(p.line, p.col, "exponent out of range");
                    }
                    if (e > (1 << 20)) throw ParseError(p.line, p.col, "exponent too large");
                }
                exp[static_cast<std::size_t>(idx)] += e;
            } else {
                throw ParseError(t.line, t.col,
                                 "expected a coefficient or variable, found '" + t.text + "'");
            }
            if (lex_.peek().kind == Tok::Star) {
                lex_.next();
                continue;
            }
            break;
        }
        out.push_back(Term{Exponent(std::move(exp)),
                           Coefficient::from_rational(spec.context.field, num, den)});
    }

    void validate_generator(const Polynomial& g, const Token& at) {
        if (g.is_zero()) throw ParseError(at.line, at.col, "zero generator is not allowed");
        if (order_of(g).value() < 1)
            throw ParseError(at.line, at.col,
                             "generator has order 0 (a unit of the local ring); ideals must lie "
                             "in the maximal ideal");
    }

    Lexer lex_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingContext& ctx,
                            const std::vector<std::string>& variables) {
    if (static_cast<int>(variables.size()) != ctx.vars)
        throw dimension_error("variable name list does not match ring context");
    Parser p(text);
    return p.parse_single_polynomial(ctx, variables);
}

ProblemSpec parse_problem(const std::string& text) {
    Parser p(text);
    return p.parse_problem();
}

ProblemSpec load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open problem file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

}  // namespace sblab
