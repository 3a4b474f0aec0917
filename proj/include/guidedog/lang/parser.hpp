#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "guidedog/lang/ast.hpp"

namespace guidedog::lang {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column),
          message_(message) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

/// Parses robot-command source text. Deterministic; throws ParseError with
/// the offending line/column. Grammar reference: docs/robo_grammar.ebnf.
Program parse(std::string_view source);

}  // namespace guidedog::lang
