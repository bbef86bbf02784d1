#include "ietlab/parse.hpp"

#include <cctype>
#include <sstream>

namespace ietlab {

namespace {

// Hand-rolled lexer + recursive descent; tracks line/column for errors.
class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_space_and_comments();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space_and_comments();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        skip_space_and_comments();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool accept_keyword(const std::string& word) {
        skip_space_and_comments();
        std::size_t save_pos = pos_;
        int save_line = line_;
        int save_col = col_;
        std::string name = try_identifier();
        if (name == word) return true;
        pos_ = save_pos;
        line_ = save_line;
        col_ = save_col;
        return false;
    }

    std::string identifier() {
        skip_space_and_comments();
        std::string name = try_identifier();
        if (name.empty()) fail("expected identifier");
        return name;
    }

    long integer() {
        skip_space_and_comments();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            advance();
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            advance();
        }
        return negative ? -value : value;
    }

    Rational rational() {
        skip_space_and_comments();
        Integer num = big_integer();
        if (accept('/')) {
            Integer den = big_integer();
            if (den == 0) fail("zero denominator");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    [[noreturn]] void fail(const std::string& message) {
        throw ParseError(message, line_, col_);
    }

    int line() const { return line_; }
    int column() const { return col_; }

    /// Rest of the current line, trimmed (for word relators).
    std::string rest_of_line() {
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '\n' && text_[pos_] != '#') {
            out += text_[pos_];
            advance();
        }
        while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
        return out;
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string try_identifier() {
        if (pos_ >= text_.size()) return "";
        char c = text_[pos_];
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') return "";
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            name += text_[pos_];
            advance();
        }
        return name;
    }

    Integer big_integer() {
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            advance();
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits += text_[pos_];
            advance();
        }
        Integer value(digits);
        return negative ? Integer(-value) : value;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// expr := term (('+'|'-') term)*
// term := factor (('*'|'/') factor)*
// factor := ('-'|'+')* power
// power := atom ('^' int)?
// atom := rational | 't' | '(' expr ')'
class ExprParser {
public:
    ExprParser(Lexer& lex, const FieldPtr& field) : lex_(lex), field_(field) {}

    AlgebraicNumber expr() {
        AlgebraicNumber value = term();
        for (;;) {
            if (lex_.accept('+'))
                value = value + term();
            else if (lex_.accept('-'))
                value = value - term();
            else
                return value;
        }
    }

private:
    AlgebraicNumber term() {
        AlgebraicNumber value = factor();
        for (;;) {
            if (lex_.accept('*')) {
                value = value * factor();
            } else if (lex_.accept('/')) {
                AlgebraicNumber divisor = factor();
                if (divisor.is_zero()) lex_.fail("division by zero");
                value = value / divisor;
            } else {
                return value;
            }
        }
    }

    AlgebraicNumber factor() {
        if (lex_.accept('-')) return -factor();
        if (lex_.accept('+')) return factor();
        return power();
    }

    AlgebraicNumber power() {
        AlgebraicNumber base = atom();
        if (lex_.accept('^')) {
            long e = lex_.integer();
            if (base.is_zero() && e < 0) lex_.fail("0 raised to a negative power");
            return base.pow(e);
        }
        return base;
    }

    AlgebraicNumber atom() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.expect('(');
            AlgebraicNumber value = expr();
            lex_.expect(')');
            return value;
        }
        if (c == 't') {
            if (!lex_.accept_keyword("t")) lex_.fail("expected 't'");
            return field_->theta();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return field_->element(lex_.rational());
        lex_.fail("expected number, 't' or '('");
    }

    Lexer& lex_;
    const FieldPtr& field_;
};

std::vector<AlgebraicNumber> number_list(Lexer& lex, const FieldPtr& field) {
    std::vector<AlgebraicNumber> out;
    lex.expect('[');
    if (!lex.accept(']')) {
        do {
            ExprParser p(lex, field);
            out.push_back(p.expr());
        } while (lex.accept(','));
        lex.expect(']');
    }
    return out;
}

std::vector<long> integer_list(Lexer& lex) {
    std::vector<long> out;
    lex.expect('[');
    if (!lex.accept(']')) {
        do {
            out.push_back(lex.integer());
        } while (lex.accept(','));
        lex.expect(']');
    }
    return out;
}

Iet parse_iet_block(Lexer& lex, const FieldPtr& field) {
    lex.expect('{');
    if (!lex.accept_keyword("cuts")) lex.fail("expected 'cuts'");
    lex.expect(':');
    std::vector<AlgebraicNumber> cuts = number_list(lex, field);
    lex.expect(';');
    if (!lex.accept_keyword("translations")) lex.fail("expected 'translations'");
    lex.expect(':');
    std::vector<AlgebraicNumber> translations = number_list(lex, field);
    lex.accept(';');
    lex.expect('}');
    return Iet::create(std::move(cuts), std::move(translations));
}

GnElem parse_gn_block(Lexer& lex, const FieldPtr& field) {
    lex.expect('{');
    if (!lex.accept_keyword("n")) lex.fail("expected 'n'");
    lex.expect(':');
    long n = lex.integer();
    if (n < 1) lex.fail("n must be >= 1");
    lex.expect(';');
    if (!lex.accept_keyword("alpha")) lex.fail("expected 'alpha'");
    lex.expect(':');
    std::vector<AlgebraicNumber> alpha = number_list(lex, field);
    lex.expect(';');
    if (!lex.accept_keyword("sigma")) lex.fail("expected 'sigma'");
    lex.expect(':');
    std::vector<long> sigma_images = integer_list(lex);
    lex.accept(';');
    lex.expect('}');
    if (static_cast<long>(alpha.size()) != n || static_cast<long>(sigma_images.size()) != n)
        lex.fail("alpha and sigma must both have n entries");
    std::vector<int> images(sigma_images.begin(), sigma_images.end());
    return GnElem(static_cast<int>(n), std::move(alpha), Permutation::from_one_based(images));
}

FieldPtr parse_field_decl_body(Lexer& lex) {
    if (lex.peek() == '{') {
        lex.expect('{');
        if (!lex.accept_keyword("minpoly")) lex.fail("expected 'minpoly'");
        lex.expect(':');
        lex.expect('[');
        poly::Poly coeffs;
        do {
            coeffs.push_back(lex.rational());
        } while (lex.accept(','));
        lex.expect(']');
        lex.expect(';');
        if (!lex.accept_keyword("interval")) lex.fail("expected 'interval'");
        lex.expect(':');
        lex.expect('(');
        Rational lo = lex.rational();
        lex.expect(',');
        Rational hi = lex.rational();
        lex.expect(')');
        lex.accept(';');
        lex.expect('}');
        return NumberField::create({std::move(coeffs), std::move(lo), std::move(hi)});
    }
    std::string name = lex.identifier();
    return NumberField::preset(name);
}

// gen value: iet-block | gn-block | rotation(expr) | restricted_rotation(angle, [a, b))
Iet parse_gen_value(Lexer& lex, const FieldPtr& field) {
    if (lex.accept_keyword("iet")) return parse_iet_block(lex, field);
    if (lex.accept_keyword("gn")) return gn_embed(parse_gn_block(lex, field));
    if (lex.accept_keyword("rotation")) {
        lex.expect('(');
        ExprParser p(lex, field);
        AlgebraicNumber angle = p.expr();
        lex.expect(')');
        return Iet::rotation(angle);
    }
    if (lex.accept_keyword("restricted_rotation")) {
        lex.expect('(');
        ExprParser p(lex, field);
        AlgebraicNumber angle = p.expr();
        lex.expect(',');
        lex.expect('[');
        AlgebraicNumber a = p.expr();
        lex.expect(',');
        AlgebraicNumber b = p.expr();
        lex.expect(')');
        lex.expect(')');
        return Iet::restricted_rotation(angle, a, b);
    }
    lex.fail("expected iet { ... }, gn { ... }, rotation(...) or restricted_rotation(...)");
}

}  // namespace

AlgebraicNumber parse_number(const FieldPtr& field, const std::string& text) {
    Lexer lex(text);
    ExprParser p(lex, field);
    AlgebraicNumber value = p.expr();
    if (!lex.eof()) lex.fail("trailing input after expression");
    return value;
}

Iet parse_iet(const FieldPtr& field, const std::string& text) {
    Lexer lex(text);
    if (!lex.accept_keyword("iet")) lex.fail("expected 'iet'");
    Iet out = parse_iet_block(lex, field);
    if (!lex.eof()) lex.fail("trailing input after iet block");
    return out;
}

GnElem parse_gn(const FieldPtr& field, const std::string& text) {
    Lexer lex(text);
    if (!lex.accept_keyword("gn")) lex.fail("expected 'gn'");
    GnElem out = parse_gn_block(lex, field);
    if (!lex.eof()) lex.fail("trailing input after gn block");
    return out;
}

FieldPtr parse_field_decl(const std::string& text) {
    Lexer lex(text);
    if (!lex.accept_keyword("field")) lex.fail("expected 'field'");
    FieldPtr field = parse_field_decl_body(lex);
    if (!lex.eof()) lex.fail("trailing input after field declaration");
    return field;
}

GeneratorFileResult parse_generator_file(const std::string& text, FieldPtr default_field) {
    Lexer lex(text);
    GeneratorFileResult result;
    result.field = std::move(default_field);
    result.gens = GeneratorSet(result.field);
    while (!lex.eof()) {
        if (lex.accept_keyword("field")) {
            result.field = parse_field_decl_body(lex);
            result.gens.set_field(result.field);
            continue;
        }
        if (lex.accept_keyword("gen")) {
            if (!result.field) lex.fail("generator before any field declaration");
            std::string name = lex.identifier();
            lex.expect('=');
            result.gens.add_generator(name, parse_gen_value(lex, result.field));
            continue;
        }
        if (lex.accept_keyword("rel")) {
            int line = lex.line();
            int col = lex.column();
            std::string word_text = lex.rest_of_line();
            try {
                result.gens.add_relator(Word::parse(word_text));
            } catch (const ParseError& e) {
                throw ParseError(std::string("bad relator: ") + e.what(), line, col);
            }
            continue;
        }
        lex.fail("expected 'field', 'gen' or 'rel'");
    }
    if (!result.field) throw InputError("no field declared (file or --field)");
    return result;
}

IetFileResult parse_iet_file(const std::string& text, FieldPtr default_field) {
    Lexer lex(text);
    FieldPtr field = std::move(default_field);
    if (lex.accept_keyword("field")) field = parse_field_decl_body(lex);
    if (!field) throw InputError("no field declared (file or --field)");
    Iet value = parse_gen_value(lex, field);
    if (!lex.eof()) lex.fail("trailing input after the map");
    return IetFileResult{std::move(field), std::move(value)};
}

std::string serialize_iet(const Iet& f) {
    return f.str();
}

std::string serialize_gn(const GnElem& e) {
    return e.str();
}

}  // namespace ietlab
