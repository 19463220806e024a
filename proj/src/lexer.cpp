#include "m2j/lexer.hpp"

#include <array>
#include <cctype>

#include "m2j/diagnostics.hpp"
#include "m2j/types.hpp"

namespace m2j {

namespace {

constexpr std::array<std::string_view, 12> kTwoCharPuncts = {"::", "->", "++", "--", "<<", ">>",
                                                            "<=", ">=", "==", "!=", "&&", "||"};
constexpr std::string_view kOneCharPuncts = "{}()[];:,.<>=+-*/%!&~?|^";

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        bool marker = false;
        while (true) {
            if (skip_trivia(marker)) continue;
            if (pos_ >= src_.size()) break;
            Token t = next();
            t.resource_marker = marker;
            marker = false;
            out.push_back(std::move(t));
        }
        Token end;
        end.kind = TokenKind::End;
        end.offset = src_.size();
        end.line = line_;
        end.col = col_;
        out.push_back(end);
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ConversionError(code::SyntaxError, msg, line_, col_); }

    char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
            at_line_start_ = true;
        } else {
            ++col_;
            if (!std::isspace(static_cast<unsigned char>(src_[pos_]))) at_line_start_ = false;
        }
        ++pos_;
    }

    // Returns true if something was skipped.
    bool skip_trivia(bool& marker) {
        if (pos_ >= src_.size()) return false;
        char c = peek();
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
            return true;
        }
        if (c == '/' && peek(1) == '/') {
            std::size_t start = pos_;
            while (pos_ < src_.size() && peek() != '\n') advance();
            if (trim(src_.substr(start, pos_ - start)) == "// @resource") marker = true;
            return true;
        }
        if (c == '/' && peek(1) == '*') {
            advance();
            advance();
            while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/')) advance();
            if (pos_ >= src_.size()) fail("unterminated block comment");
            advance();
            advance();
            return true;
        }
        if (c == '#' && at_line_start_) {
            int l = line_, cl = col_;
            std::size_t start = pos_;
            while (pos_ < src_.size() && peek() != '\n') advance();
            std::string directive = trim(src_.substr(start + 1, pos_ - start - 1));
            if (directive.rfind("include", 0) != 0)
                throw ConversionError(code::SyntaxError, "unsupported preprocessor directive '#" + directive + "'",
                                      l, cl);
            return true;
        }
        return false;
    }

    Token make(TokenKind k, std::size_t start, int l, int c) const {
        Token t;
        t.kind = k;
        t.offset = start;
        t.length = pos_ - start;
        t.text = std::string(src_.substr(start, pos_ - start));
        t.line = l;
        t.col = c;
        return t;
    }

    void read_quoted(char quote) {
        advance();
        while (pos_ < src_.size() && peek() != quote) {
            if (peek() == '\n') fail("newline in literal");
            if (peek() == '\\') advance();
            if (pos_ < src_.size()) advance();
        }
        if (pos_ >= src_.size()) fail("unterminated literal");
        advance();
    }

    Token next() {
        std::size_t start = pos_;
        int l = line_, c = col_;
        char ch = peek();
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') advance();
            return make(TokenKind::Identifier, start, l, c);
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            bool is_float = false;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '.') {
                if (peek() == '.') is_float = true;
                advance();
            }
            return make(is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, start, l, c);
        }
        if (ch == '"') {
            read_quoted('"');
            return make(TokenKind::StringLiteral, start, l, c);
        }
        if (ch == '\'') {
            read_quoted('\'');
            return make(TokenKind::CharLiteral, start, l, c);
        }
        for (auto p : kTwoCharPuncts) {
            if (src_.substr(pos_, 2) == p) {
                advance();
                advance();
                return make(TokenKind::Punct, start, l, c);
            }
        }
        if (kOneCharPuncts.find(ch) != std::string_view::npos) {
            advance();
            return make(TokenKind::Punct, start, l, c);
        }
        fail(std::string("unexpected character '") + ch + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    bool at_line_start_ = true;
};

}  // namespace

std::vector<Token> tokenize(std::string_view src) { return Lexer(src).run(); }

}  // namespace m2j
