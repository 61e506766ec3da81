#include "abp/sexpr.hpp"

namespace abp {

namespace {

struct Reader {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    explicit Reader(const std::string& t) : text(t) {}

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

    void skip_blanks() {
        while (!done()) {
            char c = peek();
            if (c == ';') {
                while (!done() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    SExpr read() {
        skip_blanks();
        if (done()) throw ParseError("unexpected end of input", line, column);
        SExpr node;
        node.line = line;
        node.column = column;
        char c = peek();
        if (c == '(') {
            advance();
            for (;;) {
                skip_blanks();
                if (done()) throw ParseError("missing ')'", node.line, node.column);
                if (peek() == ')') {
                    advance();
                    return node;
                }
                node.items.push_back(read());
            }
        }
        if (c == ')') throw ParseError("unmatched ')'", line, column);
        node.is_atom = true;
        while (!done()) {
            c = peek();
            if (c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c)))
                break;
            node.atom += c;
            advance();
        }
        return node;
    }
};

}  // namespace

SExpr read_sexpr(const std::string& text) {
    Reader r(text);
    SExpr node = r.read();
    r.skip_blanks();
    if (!r.done()) throw ParseError("trailing content after expression", r.line, r.column);
    return node;
}

std::vector<SExpr> read_sexprs(const std::string& text) {
    Reader r(text);
    std::vector<SExpr> out;
    for (;;) {
        r.skip_blanks();
        if (r.done()) return out;
        out.push_back(r.read());
    }
}

}  // namespace abp
