#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace m2j {

enum class TokenKind { Identifier, IntLiteral, FloatLiteral, CharLiteral, StringLiteral, Punct, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    std::size_t offset = 0;
    std::size_t length = 0;
    int line = 1;
    int col = 1;
    // Set on the first token after a "// @resource" comment line.
    bool resource_marker = false;

    bool is(std::string_view p) const {
        return (kind == TokenKind::Punct || kind == TokenKind::Identifier) && text == p;
    }
    std::size_t end() const { return offset + length; }
};

// Tokenizes MiniCxx. #include lines are dropped; any other preprocessor
// directive is a SyntaxError.
std::vector<Token> tokenize(std::string_view src);

}  // namespace m2j
