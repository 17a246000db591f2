#ifndef SRCLABEL_LEXER_HPP
#define SRCLABEL_LEXER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace srclabel {

/// One source file, decoded to text.
struct SourceFile {
    std::string path;
    std::string text;
    std::size_t byte_len = 0;
};

enum class TokenKind {
    Word,
    Punct,
    StringLit,
    CharLit,
    Number,
    Comment,
    Whitespace,
    Annotation,
};

/// A slice of the file text. Concatenating all token texts in order
/// reproduces the file exactly.
struct LexToken {
    TokenKind kind;
    std::string_view text;   // view into SourceFile::text
    std::size_t offset = 0;  // char index into the file
    int line = 1;            // 1-based line of the first character
};

struct LexResult {
    std::vector<LexToken> tokens;
    std::vector<std::string> warnings;  // unterminated literal/comment notes
};

namespace detail {

inline bool is_ident_start(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' ||
           c >= 0x80;  // non-ASCII bytes belong to identifier words
}

inline bool is_ident_char(unsigned char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

inline bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

}  // namespace detail

/// Lossless lexer for Java-like source. Comments, string literals, char
/// literals and annotation names each come out as a single token, so later
/// stages never look inside them.
inline LexResult lex(const SourceFile& file) {
    const std::string& s = file.text;
    LexResult out;
    std::size_t i = 0;
    int line = 1;

    auto emit = [&](TokenKind kind, std::size_t begin, std::size_t end) {
        out.tokens.push_back({kind, std::string_view(s).substr(begin, end - begin), begin, line});
        for (std::size_t k = begin; k < end; ++k)
            if (s[k] == '\n') ++line;
    };

    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        const std::size_t begin = i;

        if (c == '/' && i + 1 < s.size() && s[i + 1] == '/') {
            while (i < s.size() && s[i] != '\n') ++i;
            emit(TokenKind::Comment, begin, i);
        } else if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
            i += 2;
            bool closed = false;
            while (i < s.size()) {
                if (s[i] == '*' && i + 1 < s.size() && s[i + 1] == '/') {
                    i += 2;
                    closed = true;
                    break;
                }
                ++i;
            }
            if (!closed)
                out.warnings.push_back(file.path + ": unterminated block comment");
            emit(TokenKind::Comment, begin, i);
        } else if (c == '"') {
            ++i;
            bool closed = false;
            while (i < s.size()) {
                if (s[i] == '\\' && i + 1 < s.size()) {
                    i += 2;
                } else if (s[i] == '"') {
                    ++i;
                    closed = true;
                    break;
                } else {
                    ++i;
                }
            }
            if (!closed)
                out.warnings.push_back(file.path + ": unterminated string literal");
            emit(TokenKind::StringLit, begin, i);
        } else if (c == '\'') {
            ++i;
            bool closed = false;
            while (i < s.size() && s[i] != '\n') {
                if (s[i] == '\\' && i + 1 < s.size()) {
                    i += 2;
                } else if (s[i] == '\'') {
                    ++i;
                    closed = true;
                    break;
                } else {
                    ++i;
                }
            }
            if (!closed)
                out.warnings.push_back(file.path + ": unterminated char literal");
            emit(TokenKind::CharLit, begin, i);
        } else if (c == '@' && i + 1 < s.size() &&
                   detail::is_ident_start(static_cast<unsigned char>(s[i + 1]))) {
            // '@' plus a dotted name; argument lists are lexed normally.
            ++i;
            while (i < s.size() && detail::is_ident_char(static_cast<unsigned char>(s[i]))) ++i;
            while (i + 1 < s.size() && s[i] == '.' &&
                   detail::is_ident_start(static_cast<unsigned char>(s[i + 1]))) {
                ++i;
                while (i < s.size() && detail::is_ident_char(static_cast<unsigned char>(s[i]))) ++i;
            }
            emit(TokenKind::Annotation, begin, i);
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
            while (i < s.size()) {
                const char w = s[i];
                if (w != ' ' && w != '\t' && w != '\r' && w != '\n' && w != '\f' && w != '\v')
                    break;
                ++i;
            }
            emit(TokenKind::Whitespace, begin, i);
        } else if (detail::is_digit(c)) {
            // Numeric literal: digits, hex/binary letters, '_', '.', exponents
            // with sign, and type suffixes. Lossless even when over-eager.
            ++i;
            while (i < s.size()) {
                const unsigned char n = static_cast<unsigned char>(s[i]);
                if (detail::is_digit(n) || n == '_' ||
                    (n >= 'a' && n <= 'f') || (n >= 'A' && n <= 'F') ||
                    n == 'x' || n == 'X' || n == 'l' || n == 'L') {
                    ++i;
                } else if (n == '.' && i + 1 < s.size() &&
                           detail::is_digit(static_cast<unsigned char>(s[i + 1]))) {
                    ++i;
                } else if ((n == 'e' || n == 'E' || n == 'p' || n == 'P') && i + 1 < s.size() &&
                           (detail::is_digit(static_cast<unsigned char>(s[i + 1])) ||
                            s[i + 1] == '+' || s[i + 1] == '-')) {
                    i += 2;
                } else {
                    break;
                }
            }
            emit(TokenKind::Number, begin, i);
        } else if (detail::is_ident_start(c)) {
            ++i;
            while (i < s.size() && detail::is_ident_char(static_cast<unsigned char>(s[i]))) ++i;
            emit(TokenKind::Word, begin, i);
        } else {
            ++i;
            emit(TokenKind::Punct, begin, i);
        }
    }
    return out;
}

}  // namespace srclabel

#endif  // SRCLABEL_LEXER_HPP
