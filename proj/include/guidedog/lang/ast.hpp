#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace guidedog::lang {

struct SourcePos {
    int line = 0;
    int column = 0;
};

enum class BinaryOp { add, sub, mul, div, lt, gt, le, ge, eq, ne, logic_and, logic_or };
enum class UnaryOp { negate, logic_not };

const char* to_string(BinaryOp op);
const char* to_string(UnaryOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct NumberLit { double value = 0.0; };
struct StringLit { std::string value; };
struct BoolLit { bool value = false; };
struct VarRef { std::string name; };
struct Binary { BinaryOp op; ExprPtr lhs, rhs; };
struct Unary { UnaryOp op; ExprPtr operand; };
struct ListLit { std::vector<ExprPtr> items; };
struct Index { ExprPtr target, index; };
struct Call { std::string callee; std::vector<ExprPtr> args; };

struct Expr {
    SourcePos pos;
    std::variant<NumberLit, StringLit, BoolLit, VarRef, Binary, Unary, ListLit, Index, Call> node;
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;
using Block = std::vector<StmtPtr>;

struct LetStmt { std::string name; ExprPtr value; };
struct AssignStmt { std::string name; ExprPtr value; };
// An `else if` chain is an else branch holding exactly one nested IfStmt.
struct IfStmt { ExprPtr condition; Block then_body, else_body; };
struct WhileStmt { ExprPtr condition; Block body; };
struct ForEachStmt { std::string var; ExprPtr iterable; Block body; };
struct ReturnStmt { ExprPtr value; };  // value may be null
struct ExprStmt { ExprPtr expr; };

struct Stmt {
    SourcePos pos;
    std::variant<LetStmt, AssignStmt, IfStmt, WhileStmt, ForEachStmt, ReturnStmt, ExprStmt> node;
};

/// A parsed robot-command program. Only parse() produces these.
struct Program {
    Block statements;
    std::string source_hash;  // fnv1a-64 of the source text, hex
};

/// Structural equality, ignoring source positions and the source hash.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Stmt& a, const Stmt& b);
bool structurally_equal(const Program& a, const Program& b);

std::string fnv1a_hex(std::string_view text);

}  // namespace guidedog::lang
