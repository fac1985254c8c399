#include "ectrace/io.hpp"

#include <cctype>
#include <sstream>

namespace ectrace {

namespace {

enum class TokKind { Integer, Variable, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::size_t pos;
    std::string text;  // digits or variable name
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        const std::size_t start = i_;
        if (i_ >= text_.size()) {
            tok_ = {TokKind::End, start, ""};
            return;
        }
        const char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            tok_ = {TokKind::Integer, start, std::string(text_.substr(i_, j - i_))};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < text_.size() && std::isalpha(static_cast<unsigned char>(text_[j]))) ++j;
            tok_ = {TokKind::Variable, start, std::string(text_.substr(i_, j - i_))};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {TokKind::Plus, start, "+"}; return;
            case '-': tok_ = {TokKind::Minus, start, "-"}; return;
            case '*': tok_ = {TokKind::Star, start, "*"}; return;
            case '/': tok_ = {TokKind::Slash, start, "/"}; return;
            case '^': tok_ = {TokKind::Caret, start, "^"}; return;
            case '(': tok_ = {TokKind::LParen, start, "("}; return;
            case ')': tok_ = {TokKind::RParen, start, ")"}; return;
            default:
                throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Token tok_{TokKind::End, 0, ""};
};

// Recursive-descent evaluator producing a polynomial in t. Division requires
// a constant (degree <= 0) divisor, which keeps the result a polynomial.
class ExpressionParser {
public:
    ExpressionParser(const FieldDescriptor& desc, std::string_view text, bool allow_t)
        : desc_(desc), lex_(text), allow_t_(allow_t) {}

    Polynomial run() {
        Polynomial value = parse_sum();
        const Token& t = lex_.peek();
        if (t.kind != TokKind::End)
            throw ParseError(t.pos, "unexpected trailing input '" + t.text + "'");
        return value;
    }

private:
    Polynomial parse_sum() {
        Polynomial acc = parse_product();
        for (;;) {
            const TokKind k = lex_.peek().kind;
            if (k == TokKind::Plus) {
                lex_.take();
                acc = acc + parse_product();
            } else if (k == TokKind::Minus) {
                lex_.take();
                acc = acc - parse_product();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_product() {
        Polynomial acc = parse_unary();
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == TokKind::Star) {
                lex_.take();
                acc = acc * parse_unary();
            } else if (t.kind == TokKind::Slash) {
                const Token op = lex_.take();
                Polynomial divisor = parse_unary();
                if (!divisor.is_constant())
                    throw ParseError(op.pos, "division by a non-constant polynomial");
                if (divisor.is_zero()) throw ParseError(op.pos, "division by zero");
                acc = acc.scaled(divisor.constant_term().inverse());
            } else if (t.kind == TokKind::Variable || t.kind == TokKind::LParen) {
                // Juxtaposition, e.g. "2l^3" or "2(l+1)".
                acc = acc * parse_power();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_unary() {
        const Token& t = lex_.peek();
        if (t.kind == TokKind::Minus) {
            lex_.take();
            return -parse_unary();
        }
        if (t.kind == TokKind::Plus) {
            lex_.take();
            return parse_unary();
        }
        return parse_power();
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        if (lex_.peek().kind != TokKind::Caret) return base;
        lex_.take();
        const Token e = lex_.take();
        if (e.kind != TokKind::Integer)
            throw ParseError(e.pos, "exponent must be a nonnegative integer literal");
        if (e.text.size() > 4)
            throw ParseError(e.pos, "exponent too large");
        return pow(base, static_cast<std::size_t>(std::stoul(e.text)));
    }

    Polynomial parse_atom() {
        const Token t = lex_.take();
        switch (t.kind) {
            case TokKind::Integer:
                return Polynomial::constant(FieldScalar::from_integer(desc_, Integer(t.text)));
            case TokKind::Variable:
                if (t.text == "t" || t.text == "x") {
                    if (!allow_t_)
                        throw ParseError(t.pos,
                                         "variable '" + t.text + "' is not allowed in a scalar");
                    return Polynomial::identity_power(desc_, 1);
                }
                if (t.text == "l") {
                    if (desc_.kind() != FieldKind::RationalFunctions)
                        throw ParseError(t.pos, "variable 'l' requires a rational-function field");
                    return Polynomial::constant(FieldScalar::indeterminate(desc_));
                }
                throw ParseError(t.pos, "unknown variable '" + t.text + "'");
            case TokKind::LParen: {
                Polynomial inner = parse_sum();
                const Token close = lex_.take();
                if (close.kind != TokKind::RParen)
                    throw ParseError(close.pos, "expected ')'");
                return inner;
            }
            default:
                throw ParseError(t.pos, "expected a value, found '" + t.text + "'");
        }
    }

    FieldDescriptor desc_;
    Lexer lex_;
    bool allow_t_;
};

// True if the printed coefficient needs parentheses when multiplied by a
// power of the variable.
bool coeff_needs_parens(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '+' || s[i] == '/') return true;
        if (s[i] == '-' && i > 0) return true;
    }
    return false;
}

}  // namespace

FieldScalar parse_scalar(const FieldDescriptor& desc, std::string_view text) {
    Polynomial p = ExpressionParser(desc, text, /*allow_t=*/false).run();
    return p.constant_term();
}

Polynomial parse_polynomial(const FieldDescriptor& desc, std::string_view text) {
    return ExpressionParser(desc, text, /*allow_t=*/true).run();
}

std::string format_scalar(const FieldScalar& s) {
    switch (s.descriptor().kind()) {
        case FieldKind::Rationals:
            return s.rational_value().str();
        case FieldKind::PrimeField:
            return std::to_string(s.residue_value());
        case FieldKind::RationalFunctions: {
            std::string num = format_polynomial(s.numerator(), 'l');
            if (s.denominator().is_one()) return num;
            std::string den = format_polynomial(s.denominator(), 'l');
            if (coeff_needs_parens(num)) num = "(" + num + ")";
            if (coeff_needs_parens(den)) den = "(" + den + ")";
            return num + "/" + den;
        }
    }
    throw UsageError("unknown field kind");
}

std::string format_polynomial(const Polynomial& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const FieldScalar c = p.coeff(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        std::string term;
        if (k == 0) {
            term = format_scalar(c);
        } else {
            std::string base(1, var);
            if (k > 1) base += "^" + std::to_string(k);
            if (c.is_one()) {
                term = base;
            } else {
                std::string cs = format_scalar(c);
                // Pull a leading minus out of single-term coefficients.
                bool negated = false;
                if (!cs.empty() && cs[0] == '-') {
                    const std::string rest = cs.substr(1);
                    if (rest.find('+') == std::string::npos &&
                        rest.find('-') == std::string::npos) {
                        negated = true;
                        cs = rest;
                    }
                }
                if (cs == "1") {
                    term = base;
                } else {
                    if (coeff_needs_parens(cs)) cs = "(" + cs + ")";
                    term = cs + "*" + base;
                }
                if (negated) term = "-" + term;
            }
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += term;
        } else {
            out += "+" + term;
        }
    }
    return out;
}

std::string format_point(const GroundPoint& p) {
    if (p.is_infinity()) return "O";
    return "(" + format_scalar(p.x()) + ", " + format_scalar(p.y()) + ")";
}

std::string format_point(const ExtPoint& p) {
    if (p.is_infinity()) return "O";
    return "(" + format_polynomial(p.x().rep(), 't') + ", " +
           format_polynomial(p.y().rep(), 't') + ")";
}

std::string format_matrix(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << format_scalar(m.at(i, j));
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace ectrace
