#include "guidedog/lang/printer.hpp"

#include <charconv>

namespace guidedog::lang {

namespace {

// Higher binds tighter. Mirrors the grammar's precedence ladder.
int precedence(BinaryOp op) {
    switch (op) {
        case BinaryOp::logic_or: return 0;
        case BinaryOp::logic_and: return 1;
        case BinaryOp::eq:
        case BinaryOp::ne: return 2;
        case BinaryOp::lt:
        case BinaryOp::gt:
        case BinaryOp::le:
        case BinaryOp::ge: return 3;
        case BinaryOp::add:
        case BinaryOp::sub: return 4;
        case BinaryOp::mul:
        case BinaryOp::div: return 5;
    }
    return 0;
}

constexpr int kUnaryPrec = 6;
constexpr int kPostfixPrec = 7;

bool is_left_associative(BinaryOp op) {
    switch (op) {
        case BinaryOp::eq:
        case BinaryOp::ne:
        case BinaryOp::lt:
        case BinaryOp::gt:
        case BinaryOp::le:
        case BinaryOp::ge:
            return false;  // comparisons do not chain
        default:
            return true;
    }
}

int expr_precedence(const Expr& e) {
    if (const auto* b = std::get_if<Binary>(&e.node)) return precedence(b->op);
    if (std::holds_alternative<Unary>(e.node)) return kUnaryPrec;
    return kPostfixPrec;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

class Writer {
public:
    std::string print_program(const Program& p) {
        for (const StmtPtr& s : p.statements) write_stmt(*s, 0);
        return std::move(out_);
    }

    std::string print_expr(const Expr& e) {
        write_expr(e);
        return std::move(out_);
    }

private:
    void indent(int depth) { out_.append(static_cast<size_t>(depth) * 2, ' '); }

    void write_block(const Block& body, int depth) {
        for (const StmtPtr& s : body) write_stmt(*s, depth);
    }

    void write_stmt(const Stmt& stmt, int depth) {
        indent(depth);
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, LetStmt>) {
                    out_ += "let " + node.name + " = ";
                    write_expr(*node.value);
                    out_ += "\n";
                } else if constexpr (std::is_same_v<T, AssignStmt>) {
                    out_ += node.name + " = ";
                    write_expr(*node.value);
                    out_ += "\n";
                } else if constexpr (std::is_same_v<T, IfStmt>) {
                    write_if(node, depth);
                } else if constexpr (std::is_same_v<T, WhileStmt>) {
                    out_ += "while (";
                    write_expr(*node.condition);
                    out_ += ") {\n";
                    write_block(node.body, depth + 1);
                    indent(depth);
                    out_ += "}\n";
                } else if constexpr (std::is_same_v<T, ForEachStmt>) {
                    out_ += "for " + node.var + " in ";
                    write_expr(*node.iterable);
                    out_ += " {\n";
                    write_block(node.body, depth + 1);
                    indent(depth);
                    out_ += "}\n";
                } else if constexpr (std::is_same_v<T, ReturnStmt>) {
                    out_ += "return";
                    if (node.value) {
                        out_ += " ";
                        write_expr(*node.value);
                    }
                    out_ += "\n";
                } else {
                    static_assert(std::is_same_v<T, ExprStmt>);
                    write_expr(*node.expr);
                    out_ += "\n";
                }
            },
            stmt.node);
    }

    void write_if(const IfStmt& node, int depth) {
        out_ += "if (";
        write_expr(*node.condition);
        out_ += ") {\n";
        write_block(node.then_body, depth + 1);
        indent(depth);
        out_ += "}";
        const IfStmt* chain = nullptr;
        if (node.else_body.size() == 1)
            chain = std::get_if<IfStmt>(&node.else_body.front()->node);
        if (chain) {
            out_ += " else ";
            // Re-enter without the leading indent: splice the nested if inline.
            out_ += "if (";
            write_expr(*chain->condition);
            out_ += ") {\n";
            write_block(chain->then_body, depth + 1);
            indent(depth);
            out_ += "}";
            // Recurse over any further else branches of the chain.
            write_else_tail(*chain, depth);
            out_ += "\n";
        } else if (!node.else_body.empty()) {
            out_ += " else {\n";
            write_block(node.else_body, depth + 1);
            indent(depth);
            out_ += "}\n";
        } else {
            out_ += "\n";
        }
    }

    void write_else_tail(const IfStmt& node, int depth) {
        const IfStmt* chain = nullptr;
        if (node.else_body.size() == 1)
            chain = std::get_if<IfStmt>(&node.else_body.front()->node);
        if (chain) {
            out_ += " else if (";
            write_expr(*chain->condition);
            out_ += ") {\n";
            write_block(chain->then_body, depth + 1);
            indent(depth);
            out_ += "}";
            write_else_tail(*chain, depth);
        } else if (!node.else_body.empty()) {
            out_ += " else {\n";
            write_block(node.else_body, depth + 1);
            indent(depth);
            out_ += "}";
        }
    }

    void write_child(const Expr& child, bool needs_parens) {
        if (needs_parens) {
            out_ += "(";
            write_expr(child);
            out_ += ")";
        } else {
            write_expr(child);
        }
    }

    void write_expr(const Expr& expr) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, NumberLit>) {
                    out_ += format_number(node.value);
                } else if constexpr (std::is_same_v<T, StringLit>) {
                    out_ += quote(node.value);
                } else if constexpr (std::is_same_v<T, BoolLit>) {
                    out_ += node.value ? "true" : "false";
                } else if constexpr (std::is_same_v<T, VarRef>) {
                    out_ += node.name;
                } else if constexpr (std::is_same_v<T, Binary>) {
                    const int prec = precedence(node.op);
                    const bool left_assoc = is_left_associative(node.op);
                    write_child(*node.lhs, expr_precedence(*node.lhs) < prec ||
                                               (!left_assoc && expr_precedence(*node.lhs) == prec));
                    out_ += std::string(" ") + to_string(node.op) + " ";
                    write_child(*node.rhs, expr_precedence(*node.rhs) <= prec);
                } else if constexpr (std::is_same_v<T, Unary>) {
                    const bool operand_is_negate =
                        node.op == UnaryOp::negate &&
                        std::holds_alternative<Unary>(node.operand->node);
                    out_ += to_string(node.op);
                    if (node.op == UnaryOp::logic_not) out_ += " ";
                    write_child(*node.operand,
                                expr_precedence(*node.operand) < kUnaryPrec || operand_is_negate);
                } else if constexpr (std::is_same_v<T, ListLit>) {
                    out_ += "[";
                    for (size_t i = 0; i < node.items.size(); ++i) {
                        if (i) out_ += ", ";
                        write_expr(*node.items[i]);
                    }
                    out_ += "]";
                } else if constexpr (std::is_same_v<T, Index>) {
                    write_child(*node.target, expr_precedence(*node.target) < kPostfixPrec);
                    out_ += "[";
                    write_expr(*node.index);
                    out_ += "]";
                } else {
                    static_assert(std::is_same_v<T, Call>);
                    out_ += node.callee + "(";
                    for (size_t i = 0; i < node.args.size(); ++i) {
                        if (i) out_ += ", ";
                        write_expr(*node.args[i]);
                    }
                    out_ += ")";
                }
            },
            expr.node);
    }

    std::string out_;
};

}  // namespace

std::string format_number(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

std::string pretty_print(const Program& program) { return Writer().print_program(program); }

std::string pretty_print(const Expr& expr) { return Writer().print_expr(expr); }

}  // namespace guidedog::lang
