#ifndef SRCLABEL_EXTRACTOR_HPP
#define SRCLABEL_EXTRACTOR_HPP

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "srclabel/lexer.hpp"

namespace srclabel {

enum class IdentifierKind { Package, Class, Attribute, Method };

inline constexpr std::array<IdentifierKind, 4> kAllKinds = {
    IdentifierKind::Package, IdentifierKind::Class,
    IdentifierKind::Attribute, IdentifierKind::Method};

inline constexpr const char* kind_name(IdentifierKind k) {
    switch (k) {
        case IdentifierKind::Package: return "package";
        case IdentifierKind::Class: return "class";
        case IdentifierKind::Attribute: return "attribute";
        case IdentifierKind::Method: return "method";
    }
    return "?";
}

/// One declared name, as written in the source. Package names keep their
/// dotted form; every other kind is a single word.
struct IdentifierRecord {
    IdentifierKind kind;
    std::string name;
    std::string file;
    int line = 1;
};

struct ExtractResult {
    std::vector<IdentifierRecord> records;
    int skipped_constructs = 0;  // per-file diagnostics tally
};

namespace detail {

inline bool is_control_keyword(std::string_view w) {
    return w == "if" || w == "for" || w == "while" || w == "switch" || w == "catch" ||
           w == "synchronized" || w == "return" || w == "new";
}

inline bool is_type_keyword(std::string_view w) {
    return w == "class" || w == "interface" || w == "enum";
}

}  // namespace detail

/// Declaration-level scanner over the token stream. Tracks brace depth and
/// whether the enclosing scope is a type body; does not build a syntax tree.
///
/// Extracted per file:
///   Package   — the dotted name after `package` at top level
///   Class     — the word after `class`/`interface`/`enum`, any nesting depth
///   Method    — the word before a parameter list of a member declaration
///               (constructors included)
///   Attribute — declarator names of field declarations at member depth
inline ExtractResult extract_identifiers(const std::vector<LexToken>& tokens,
                                         const SourceFile& file) {
    ExtractResult out;

    // Significant tokens only: whitespace and comments dropped. Annotations
    // stay so their argument lists can be skipped as a unit.
    std::vector<const LexToken*> sig;
    sig.reserve(tokens.size());
    for (const LexToken& t : tokens) {
        if (t.kind == TokenKind::Whitespace || t.kind == TokenKind::Comment) continue;
        sig.push_back(&t);
    }

    enum class Scope { TypeBody, Block };
    std::vector<Scope> scopes;

    auto at_member_depth = [&] { return !scopes.empty() && scopes.back() == Scope::TypeBody; };

    auto record = [&](IdentifierKind kind, std::string_view name, int line) {
        out.records.push_back({kind, std::string(name), file.path, line});
    };

    // Statement state for the current member declaration.
    std::string_view last_word;
    int last_word_line = 1;
    int angle_depth = 0;
    bool in_initializer = false;   // past '=' of a field declaration
    bool after_signature = false;  // past ')' of a method, before '{' or ';'

    auto reset_statement = [&] {
        last_word = {};
        angle_depth = 0;
        in_initializer = false;
        after_signature = false;
    };

    auto skip_balanced = [&](std::size_t& i, char open, char close) {
        // i points at the opening punct; advances past the matching close.
        int depth = 0;
        for (; i < sig.size(); ++i) {
            if (sig[i]->kind != TokenKind::Punct) continue;
            const char p = sig[i]->text[0];
            if (p == open) ++depth;
            else if (p == close && --depth == 0) { ++i; return; }
        }
    };

    for (std::size_t i = 0; i < sig.size();) {
        const LexToken& t = *sig[i];

        if (t.kind == TokenKind::Annotation) {
            ++i;
            if (i < sig.size() && sig[i]->kind == TokenKind::Punct && sig[i]->text[0] == '(')
                skip_balanced(i, '(', ')');
            continue;
        }

        if (t.kind == TokenKind::Word && detail::is_type_keyword(t.text) &&
            !(i > 0 && sig[i - 1]->kind == TokenKind::Punct && sig[i - 1]->text[0] == '.')) {
            // `.class` is an expression, everything else declares a type.
            ++i;
            if (i < sig.size() && sig[i]->kind == TokenKind::Word) {
                record(IdentifierKind::Class, sig[i]->text, sig[i]->line);
                ++i;
                // Skip type parameters, extends/implements clause.
                while (i < sig.size()) {
                    if (sig[i]->kind == TokenKind::Punct) {
                        const char p = sig[i]->text[0];
                        if (p == '{') { scopes.push_back(Scope::TypeBody); ++i; break; }
                        if (p == ';') { ++i; break; }
                    }
                    ++i;
                }
                reset_statement();
            } else {
                ++out.skipped_constructs;
            }
            continue;
        }

        if (t.kind == TokenKind::Word && t.text == "package" && scopes.empty()) {
            std::string name;
            const int line = t.line;
            ++i;
            while (i < sig.size()) {
                const LexToken& p = *sig[i];
                if (p.kind == TokenKind::Word) name += p.text;
                else if (p.kind == TokenKind::Punct && p.text[0] == '.') name += '.';
                else break;
                ++i;
            }
            if (i < sig.size() && sig[i]->kind == TokenKind::Punct && sig[i]->text[0] == ';') ++i;
            if (!name.empty()) record(IdentifierKind::Package, name, line);
            else ++out.skipped_constructs;
            continue;
        }

        if (!at_member_depth()) {
            // Method bodies, initializer blocks, top level between types.
            if (t.kind == TokenKind::Punct) {
                const char p = t.text[0];
                if (p == '{') scopes.push_back(Scope::Block);
                else if (p == '}' && !scopes.empty()) scopes.pop_back();
            }
            ++i;
            continue;
        }

        // Member depth: scan one declaration at a time.
        if (after_signature) {
            if (t.kind == TokenKind::Punct) {
                const char p = t.text[0];
                if (p == ';') { reset_statement(); ++i; continue; }
                if (p == '{') { scopes.push_back(Scope::Block); reset_statement(); ++i; continue; }
            }
            ++i;  // throws clause, default values
            continue;
        }

        if (in_initializer) {
            if (t.kind == TokenKind::Punct) {
                const char p = t.text[0];
                if (p == '(') { skip_balanced(i, '(', ')'); continue; }
                if (p == '{') { skip_balanced(i, '{', '}'); continue; }
                if (p == ',') { in_initializer = false; last_word = {}; ++i; continue; }
                if (p == ';') { reset_statement(); ++i; continue; }
                if (p == '}') { scopes.pop_back(); reset_statement(); ++i; continue; }
            }
            ++i;
            continue;
        }

        if (t.kind == TokenKind::Word) {
            last_word = t.text;
            last_word_line = t.line;
            ++i;
            continue;
        }
        if (t.kind != TokenKind::Punct) { ++i; continue; }

        switch (t.text[0]) {
            case '<': ++angle_depth; ++i; break;
            case '>': if (angle_depth > 0) --angle_depth; ++i; break;
            case '(':
                if (!last_word.empty() && angle_depth == 0 &&
                    !detail::is_control_keyword(last_word)) {
                    record(IdentifierKind::Method, last_word, last_word_line);
                } else {
                    ++out.skipped_constructs;
                }
                skip_balanced(i, '(', ')');
                last_word = {};
                after_signature = true;
                break;
            case '=':
                if (angle_depth == 0) {
                    if (!last_word.empty())
                        record(IdentifierKind::Attribute, last_word, last_word_line);
                    last_word = {};
                    in_initializer = true;
                }
                ++i;
                break;
            case ',':
                if (angle_depth == 0) {
                    if (!last_word.empty())
                        record(IdentifierKind::Attribute, last_word, last_word_line);
                    last_word = {};
                }
                ++i;
                break;
            case ';':
                if (!last_word.empty())
                    record(IdentifierKind::Attribute, last_word, last_word_line);
                reset_statement();
                ++i;
                break;
            case '[': skip_balanced(i, '[', ']'); break;
            case '{':
                // static/instance initializer block
                scopes.push_back(Scope::Block);
                reset_statement();
                ++i;
                break;
            case '}':
                scopes.pop_back();
                reset_statement();
                ++i;
                break;
            default:
                ++i;
                break;
        }
    }
    return out;
}

}  // namespace srclabel

#endif  // SRCLABEL_EXTRACTOR_HPP
