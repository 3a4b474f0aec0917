#include "guidedog/lang/ast.hpp"

#include <cstdint>
#include <cstdio>

namespace guidedog::lang {

const char* to_string(BinaryOp op) {
    switch (op) {
        case BinaryOp::add: return "+";
        case BinaryOp::sub: return "-";
        case BinaryOp::mul: return "*";
        case BinaryOp::div: return "/";
        case BinaryOp::lt: return "<";
        case BinaryOp::gt: return ">";
        case BinaryOp::le: return "<=";
        case BinaryOp::ge: return ">=";
        case BinaryOp::eq: return "==";
        case BinaryOp::ne: return "!=";
        case BinaryOp::logic_and: return "and";
        case BinaryOp::logic_or: return "or";
    }
    return "?";
}

const char* to_string(UnaryOp op) {
    return op == UnaryOp::negate ? "-" : "not";
}

namespace {

bool eq_block(const Block& a, const Block& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!structurally_equal(*a[i], *b[i])) return false;
    return true;
}

bool eq_expr_list(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!structurally_equal(*a[i], *b[i])) return false;
    return true;
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& lhs) {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, NumberLit>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, StringLit>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, BoolLit>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, VarRef>) {
                return lhs.name == rhs.name;
            } else if constexpr (std::is_same_v<T, Binary>) {
                return lhs.op == rhs.op && structurally_equal(*lhs.lhs, *rhs.lhs) &&
                       structurally_equal(*lhs.rhs, *rhs.rhs);
            } else if constexpr (std::is_same_v<T, Unary>) {
                return lhs.op == rhs.op && structurally_equal(*lhs.operand, *rhs.operand);
            } else if constexpr (std::is_same_v<T, ListLit>) {
                return eq_expr_list(lhs.items, rhs.items);
            } else if constexpr (std::is_same_v<T, Index>) {
                return structurally_equal(*lhs.target, *rhs.target) &&
                       structurally_equal(*lhs.index, *rhs.index);
            } else {
                static_assert(std::is_same_v<T, Call>);
                return lhs.callee == rhs.callee && eq_expr_list(lhs.args, rhs.args);
            }
        },
        a.node);
}

bool structurally_equal(const Stmt& a, const Stmt& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& lhs) {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, LetStmt> || std::is_same_v<T, AssignStmt>) {
                return lhs.name == rhs.name && structurally_equal(*lhs.value, *rhs.value);
            } else if constexpr (std::is_same_v<T, IfStmt>) {
                return structurally_equal(*lhs.condition, *rhs.condition) &&
                       eq_block(lhs.then_body, rhs.then_body) &&
                       eq_block(lhs.else_body, rhs.else_body);
            } else if constexpr (std::is_same_v<T, WhileStmt>) {
                return structurally_equal(*lhs.condition, *rhs.condition) &&
                       eq_block(lhs.body, rhs.body);
            } else if constexpr (std::is_same_v<T, ForEachStmt>) {
                return lhs.var == rhs.var && structurally_equal(*lhs.iterable, *rhs.iterable) &&
                       eq_block(lhs.body, rhs.body);
            } else if constexpr (std::is_same_v<T, ReturnStmt>) {
                if (!lhs.value != !rhs.value) return false;
                return !lhs.value || structurally_equal(*lhs.value, *rhs.value);
            } else {
                static_assert(std::is_same_v<T, ExprStmt>);
                return structurally_equal(*lhs.expr, *rhs.expr);
            }
        },
        a.node);
}

bool structurally_equal(const Program& a, const Program& b) {
    return eq_block(a.statements, b.statements);
}

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace guidedog::lang
