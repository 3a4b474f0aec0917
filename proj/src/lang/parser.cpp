#include "guidedog/lang/parser.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace guidedog::lang {

namespace {

enum class Tok {
    number, string, ident,
    kw_let, kw_if, kw_else, kw_while, kw_for, kw_in, kw_return,
    kw_true, kw_false, kw_and, kw_or, kw_not,
    lparen, rparen, lbracket, rbracket, lbrace, rbrace, comma,
    plus, minus, star, slash,
    lt, gt, le, ge, eq_eq, ne, assign,
    newline, eof,
};

struct Token {
    Tok kind;
    std::string text;   // ident name or decoded string value
    double number = 0.0;
    int line = 1;
    int column = 1;
};

const char* describe(Tok t) {
    switch (t) {
        case Tok::number: return "number";
        case Tok::string: return "string";
        case Tok::ident: return "identifier";
        case Tok::kw_let: return "'let'";
        case Tok::kw_if: return "'if'";
        case Tok::kw_else: return "'else'";
        case Tok::kw_while: return "'while'";
        case Tok::kw_for: return "'for'";
        case Tok::kw_in: return "'in'";
        case Tok::kw_return: return "'return'";
        case Tok::kw_true: return "'true'";
        case Tok::kw_false: return "'false'";
        case Tok::kw_and: return "'and'";
        case Tok::kw_or: return "'or'";
        case Tok::kw_not: return "'not'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::lbracket: return "'['";
        case Tok::rbracket: return "']'";
        case Tok::lbrace: return "'{'";
        case Tok::rbrace: return "'}'";
        case Tok::comma: return "','";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::slash: return "'/'";
        case Tok::lt: return "'<'";
        case Tok::gt: return "'>'";
        case Tok::le: return "'<='";
        case Tok::ge: return "'>='";
        case Tok::eq_eq: return "'=='";
        case Tok::ne: return "'!='";
        case Tok::assign: return "'='";
        case Tok::newline: return "end of line";
        case Tok::eof: return "end of input";
    }
    return "?";
}

Tok keyword_or_ident(std::string_view word) {
    if (word == "let") return Tok::kw_let;
    if (word == "if") return Tok::kw_if;
    if (word == "else") return Tok::kw_else;
    if (word == "while") return Tok::kw_while;
    if (word == "for") return Tok::kw_for;
    if (word == "in") return Tok::kw_in;
    if (word == "return") return Tok::kw_return;
    if (word == "true") return Tok::kw_true;
    if (word == "false") return Tok::kw_false;
    if (word == "and") return Tok::kw_and;
    if (word == "or") return Tok::kw_or;
    if (word == "not") return Tok::kw_not;
    return Tok::ident;
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_blanks_and_comments();
            Token t;
            t.line = line_;
            t.column = column_;
            if (at_end()) {
                t.kind = Tok::eof;
                out.push_back(t);
                return out;
            }
            const char c = peek();
            if (c == '\n') {
                advance();
                // Newlines separate statements only outside ( ) and [ ].
                if (depth_ == 0 && !out.empty() && out.back().kind != Tok::newline) {
                    t.kind = Tok::newline;
                    out.push_back(t);
                }
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                lex_number(t);
            } else if (c == '"') {
                lex_string(t);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                lex_word(t);
            } else {
                lex_punct(t);
            }
            out.push_back(std::move(t));
        }
    }

private:
    bool at_end() const { return pos_ >= src_.size(); }
    char peek(size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column_, msg); }

    void skip_blanks_and_comments() {
        while (!at_end()) {
            const char c = peek();
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else if (c == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                return;
            }
        }
    }

    void lex_number(Token& t) {
        const size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            advance();
            while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        }
        if ((peek() == 'e' || peek() == 'E') &&
            (std::isdigit(static_cast<unsigned char>(peek(1))) ||
             ((peek(1) == '+' || peek(1) == '-') &&
              std::isdigit(static_cast<unsigned char>(peek(2)))))) {
            advance();
            if (peek() == '+' || peek() == '-') advance();
            while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        }
        const std::string_view text = src_.substr(start, pos_ - start);
        t.kind = Tok::number;
        const auto result = std::from_chars(text.data(), text.data() + text.size(), t.number);
        if (result.ec != std::errc{} || result.ptr != text.data() + text.size())
            fail("invalid number literal '" + std::string(text) + "'");
    }

    void lex_string(Token& t) {
        t.kind = Tok::string;
        advance();  // opening quote
        std::string value;
        while (true) {
            if (at_end() || peek() == '\n') fail("unterminated string literal");
            const char c = advance();
            if (c == '"') break;
            if (c == '\\') {
                if (at_end()) fail("unterminated string literal");
                const char esc = advance();
                switch (esc) {
                    case '"': value.push_back('"'); break;
                    case '\\': value.push_back('\\'); break;
                    case 'n': value.push_back('\n'); break;
                    case 't': value.push_back('\t'); break;
                    case 'r': value.push_back('\r'); break;
                    default: fail(std::string("unknown escape '\\") + esc + "'");
                }
            } else {
                value.push_back(c);
            }
        }
        t.text = std::move(value);
    }

    void lex_word(Token& t) {
        const size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') advance();
        const std::string_view word = src_.substr(start, pos_ - start);
        t.kind = keyword_or_ident(word);
        if (t.kind == Tok::ident) t.text = std::string(word);
    }

    void lex_punct(Token& t) {
        const char c = advance();
        switch (c) {
            case '(': t.kind = Tok::lparen; ++depth_; return;
            case ')': t.kind = Tok::rparen; if (depth_ > 0) --depth_; return;
            case '[': t.kind = Tok::lbracket; ++depth_; return;
            case ']': t.kind = Tok::rbracket; if (depth_ > 0) --depth_; return;
            case '{': t.kind = Tok::lbrace; return;
            case '}': t.kind = Tok::rbrace; return;
            case ',': t.kind = Tok::comma; return;
            case '+': t.kind = Tok::plus; return;
            case '-': t.kind = Tok::minus; return;
            case '*': t.kind = Tok::star; return;
            case '/': t.kind = Tok::slash; return;
            case ';': t.kind = Tok::newline; return;  // ';' is an explicit separator
            case '<':
                if (peek() == '=') { advance(); t.kind = Tok::le; } else t.kind = Tok::lt;
                return;
            case '>':
                if (peek() == '=') { advance(); t.kind = Tok::ge; } else t.kind = Tok::gt;
                return;
            case '=':
                if (peek() == '=') { advance(); t.kind = Tok::eq_eq; } else t.kind = Tok::assign;
                return;
            case '!':
                if (peek() == '=') { advance(); t.kind = Tok::ne; return; }
                throw ParseError(t.line, t.column, "unexpected character '!' (use 'not')");
            default:
                throw ParseError(t.line, t.column,
                                 std::string("unexpected character '") + c + "'");
        }
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    int depth_ = 0;  // paren/bracket nesting; newlines are insignificant inside
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Block parse_program() {
        Block statements;
        skip_separators();
        while (peek().kind != Tok::eof) {
            statements.push_back(parse_statement());
            expect_statement_end();
        }
        return statements;
    }

private:
    const Token& peek(size_t ahead = 0) const {
        const size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    bool match(Tok kind) {
        if (peek().kind != kind) return false;
        advance();
        return true;
    }
    const Token& expect(Tok kind, const char* context) {
        if (peek().kind != kind)
            fail(std::string("expected ") + describe(kind) + " " + context + ", found " +
                 describe(peek().kind));
        return advance();
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(peek().line, peek().column, msg);
    }

    void skip_separators() {
        while (peek().kind == Tok::newline) advance();
    }

    void expect_statement_end() {
        const Tok k = peek().kind;
        if (k == Tok::newline) {
            skip_separators();
            return;
        }
        if (k == Tok::eof || k == Tok::rbrace) return;
        fail(std::string("expected end of statement, found ") + describe(k));
    }

    StmtPtr parse_statement() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::kw_let: return parse_let();
            case Tok::kw_if: return parse_if();
            case Tok::kw_while: return parse_while();
            case Tok::kw_for: return parse_for();
            case Tok::kw_return: return parse_return();
            case Tok::ident:
                if (peek(1).kind == Tok::assign) return parse_assign();
                break;
            default: break;
        }
        auto stmt = std::make_unique<Stmt>();
        stmt->pos = {t.line, t.column};
        stmt->node = ExprStmt{parse_expression()};
        return stmt;
    }

    StmtPtr parse_let() {
        const Token& kw = advance();
        const Token& name = expect(Tok::ident, "after 'let'");
        expect(Tok::assign, "in let binding");
        auto stmt = std::make_unique<Stmt>();
        stmt->pos = {kw.line, kw.column};
        stmt->node = LetStmt{name.text, parse_expression()};
        return stmt;
    }

    StmtPtr parse_assign() {
        const Token& name = advance();
        advance();  // '='
        auto stmt = std::make_unique<Stmt>();
        stmt->pos = {name.line, name.column};
        stmt->node = AssignStmt{name.text, parse_expression()};
        return stmt;
    }

    StmtPtr parse_if() {
        const Token& kw = advance();
        expect(Tok::lparen, "after 'if'");
        auto condition = parse_expression();
        expect(Tok::rparen, "to close the if condition");
        Block then_body = parse_block("if body");
        Block else_body;
        skip_separators();
        if (match(Tok::kw_else)) {
            if (peek().kind == Tok::kw_if) {
                else_body.push_back(parse_if());
            } else {
                else_body = parse_block("else body");
            }
        }
        auto stmt = std::make_unique<Stmt>();
        stmt->pos = {kw.line, kw.column};
        stmt->node = IfStmt{std::move(condition), std::move(then_body), std::move(else_body)};
        return stmt;
    }

    StmtPtr parse_while() {
        const Token& kw = advance();
        expect(Tok::lparen, "after 'while'");
        auto condition = parse_expression();
        expect(Tok::rparen, "to close the while condition");
        Block body = parse_block("while body");
        if (body.empty()) throw ParseError(kw.line, kw.column, "while body must not be empty");
        auto stmt = std::make_unique<Stmt>();
        stmt->pos = {kw.line, kw.column};
        stmt->node = WhileStmt{std::move(condition), std::move(body)};
        return stmt;
    }

    StmtPtr parse_for() {
        const Token& kw = advance();
        const Token& var = expect(Tok::ident, "after 'for'");
        expect(Tok::kw_in, "in for-each loop");
        auto iterable = parse_expression();
        Block body = parse_block("for body");
        if (body.empty()) throw ParseError(kw.line, kw.column, "for body must not be empty");
        auto stmt = std::make_unique<Stmt>();
        stmt->pos = {kw.line, kw.column};
        stmt->node = ForEachStmt{var.text, std::move(iterable), std::move(body)};
        return stmt;
    }

    StmtPtr parse_return() {
        const Token& kw = advance();
        auto stmt = std::make_unique<Stmt>();
        stmt->pos = {kw.line, kw.column};
        ExprPtr value;
        const Tok k = peek().kind;
        if (k != Tok::newline && k != Tok::eof && k != Tok::rbrace) value = parse_expression();
        stmt->node = ReturnStmt{std::move(value)};
        return stmt;
    }

    Block parse_block(const char* what) {
        expect(Tok::lbrace, (std::string("to open the ") + what).c_str());
        Block body;
        skip_separators();
        while (peek().kind != Tok::rbrace) {
            if (peek().kind == Tok::eof) fail(std::string("unterminated ") + what);
            body.push_back(parse_statement());
            const Tok k = peek().kind;
            if (k != Tok::newline && k != Tok::rbrace)
                fail(std::string("expected end of statement, found ") + describe(k));
            skip_separators();
        }
        advance();  // '}'
        return body;
    }

    ExprPtr parse_expression() { return parse_or(); }

    ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, SourcePos pos) {
        auto e = std::make_unique<Expr>();
        e->pos = pos;
        e->node = Binary{op, std::move(lhs), std::move(rhs)};
        return e;
    }

    ExprPtr parse_or() {
        auto lhs = parse_and();
        while (peek().kind == Tok::kw_or) {
            const Token& op = advance();
            lhs = make_binary(BinaryOp::logic_or, std::move(lhs), parse_and(),
                              {op.line, op.column});
        }
        return lhs;
    }

    ExprPtr parse_and() {
        auto lhs = parse_equality();
        while (peek().kind == Tok::kw_and) {
            const Token& op = advance();
            lhs = make_binary(BinaryOp::logic_and, std::move(lhs), parse_equality(),
                              {op.line, op.column});
        }
        return lhs;
    }

    ExprPtr parse_equality() {
        auto lhs = parse_relational();
        const Tok k = peek().kind;
        if (k == Tok::eq_eq || k == Tok::ne) {
            const Token& op = advance();
            const BinaryOp bop = k == Tok::eq_eq ? BinaryOp::eq : BinaryOp::ne;
            lhs = make_binary(bop, std::move(lhs), parse_relational(), {op.line, op.column});
        }
        return lhs;
    }

    ExprPtr parse_relational() {
        auto lhs = parse_additive();
        const Tok k = peek().kind;
        if (k == Tok::lt || k == Tok::gt || k == Tok::le || k == Tok::ge) {
            const Token& op = advance();
            BinaryOp bop;
            switch (k) {
                case Tok::lt: bop = BinaryOp::lt; break;
                case Tok::gt: bop = BinaryOp::gt; break;
                case Tok::le: bop = BinaryOp::le; break;
                default: bop = BinaryOp::ge; break;
            }
            lhs = make_binary(bop, std::move(lhs), parse_additive(), {op.line, op.column});
        }
        return lhs;
    }

    ExprPtr parse_additive() {
        auto lhs = parse_term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token& op = advance();
            const BinaryOp bop = op.kind == Tok::plus ? BinaryOp::add : BinaryOp::sub;
            lhs = make_binary(bop, std::move(lhs), parse_term(), {op.line, op.column});
        }
        return lhs;
    }

    ExprPtr parse_term() {
        auto lhs = parse_unary();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const Token& op = advance();
            const BinaryOp bop = op.kind == Tok::star ? BinaryOp::mul : BinaryOp::div;
            lhs = make_binary(bop, std::move(lhs), parse_unary(), {op.line, op.column});
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        const Tok k = peek().kind;
        if (k == Tok::minus || k == Tok::kw_not) {
            const Token& op = advance();
            auto e = std::make_unique<Expr>();
            e->pos = {op.line, op.column};
            e->node = Unary{k == Tok::minus ? UnaryOp::negate : UnaryOp::logic_not, parse_unary()};
            return e;
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        auto expr = parse_primary();
        while (peek().kind == Tok::lbracket) {
            const Token& open = advance();
            auto index = parse_expression();
            expect(Tok::rbracket, "to close the index");
            auto e = std::make_unique<Expr>();
            e->pos = {open.line, open.column};
            e->node = Index{std::move(expr), std::move(index)};
            expr = std::move(e);
        }
        return expr;
    }

    std::vector<ExprPtr> parse_args(Tok closer, const char* what) {
        std::vector<ExprPtr> args;
        if (peek().kind != closer) {
            args.push_back(parse_expression());
            while (match(Tok::comma)) args.push_back(parse_expression());
        }
        expect(closer, what);
        return args;
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        auto e = std::make_unique<Expr>();
        e->pos = {t.line, t.column};
        switch (t.kind) {
            case Tok::number:
                advance();
                e->node = NumberLit{t.number};
                return e;
            case Tok::string:
                advance();
                e->node = StringLit{t.text};
                return e;
            case Tok::kw_true:
                advance();
                e->node = BoolLit{true};
                return e;
            case Tok::kw_false:
                advance();
                e->node = BoolLit{false};
                return e;
            case Tok::ident: {
                advance();
                if (match(Tok::lparen)) {
                    e->node = Call{t.text, parse_args(Tok::rparen, "to close the call")};
                } else {
                    e->node = VarRef{t.text};
                }
                return e;
            }
            case Tok::lparen: {
                advance();
                auto inner = parse_expression();
                expect(Tok::rparen, "to close the group");
                return inner;
            }
            case Tok::lbracket: {
                advance();
                e->node = ListLit{parse_args(Tok::rbracket, "to close the list")};
                return e;
            }
            default:
                fail(std::string("expected an expression, found ") + describe(t.kind));
        }
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

}  // namespace

Program parse(std::string_view source) {
    Program program;
    program.source_hash = fnv1a_hex(source);
    Parser parser(Lexer(source).run());
    program.statements = parser.parse_program();
    return program;
}

}  // namespace guidedog::lang
