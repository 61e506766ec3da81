#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace abp {

// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Generic whitespace-insensitive s-expression node; `;` starts a line
// comment. Atoms keep their raw token text, classification into variables,
// numbers and symbols happens in the domain parser.
struct SExpr {
    bool is_atom = false;
    std::string atom;
    std::vector<SExpr> items;
    int line = 0;
    int column = 0;

    bool is_list() const { return !is_atom; }
    std::size_t size() const { return items.size(); }
    const SExpr& operator[](std::size_t i) const { return items[i]; }

    ParseError error(const std::string& message) const {
        return ParseError(message, line, column);
    }
};

// Reads the single expression in `text`; trailing content is an error.
SExpr read_sexpr(const std::string& text);

// Reads all top-level expressions.
std::vector<SExpr> read_sexprs(const std::string& text);

}  // namespace abp
