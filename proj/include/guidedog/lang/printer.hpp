#pragma once

#include <string>

#include "guidedog/lang/ast.hpp"

namespace guidedog::lang {

/// Canonical source form: one statement per line, 2-space indent, minimal
/// parentheses. parse(pretty_print(p)) is structurally identical to p.
std::string pretty_print(const Program& program);
std::string pretty_print(const Expr& expr);

/// Shortest text that round-trips the double exactly.
std::string format_number(double value);

}  // namespace guidedog::lang
