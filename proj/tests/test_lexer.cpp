#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "srclabel/lexer.hpp"

using namespace srclabel;

namespace {

SourceFile make_file(std::string text) {
    SourceFile f;
    f.path = "Test.java";
    f.byte_len = text.size();
    f.text = std::move(text);
    return f;
}

std::string concat(const std::vector<LexToken>& tokens) {
    std::string out;
    for (const LexToken& t : tokens) out += t.text;
    return out;
}

}  // namespace

TEST_CASE("lexing a simple statement yields the expected token sequence") {
    const SourceFile f = make_file("int x = 1; // count");
    const LexResult r = lex(f);

    std::vector<std::pair<TokenKind, std::string>> got;
    for (const LexToken& t : r.tokens) got.emplace_back(t.kind, std::string(t.text));

    const std::vector<std::pair<TokenKind, std::string>> expected = {
        {TokenKind::Word, "int"},       {TokenKind::Whitespace, " "},
        {TokenKind::Word, "x"},         {TokenKind::Whitespace, " "},
        {TokenKind::Punct, "="},        {TokenKind::Whitespace, " "},
        {TokenKind::Number, "1"},       {TokenKind::Punct, ";"},
        {TokenKind::Whitespace, " "},   {TokenKind::Comment, "// count"},
    };
    CHECK(got == expected);
    CHECK(r.warnings.empty());
}

TEST_CASE("string literals are single tokens with their delimiters") {
    const SourceFile f = make_file("String s = \"class Foo\";");
    const LexResult r = lex(f);
    int lits = 0;
    for (const LexToken& t : r.tokens) {
        if (t.kind == TokenKind::StringLit) {
            ++lits;
            CHECK(t.text == "\"class Foo\"");
        }
    }
    CHECK(lits == 1);
}

TEST_CASE("escapes inside string and char literals") {
    const SourceFile f = make_file(R"(char c = '\''; String s = "a\"b";)");
    const LexResult r = lex(f);
    CHECK(concat(r.tokens) == f.text);
    int lits = 0;
    for (const LexToken& t : r.tokens)
        if (t.kind == TokenKind::StringLit || t.kind == TokenKind::CharLit) ++lits;
    CHECK(lits == 2);
    CHECK(r.warnings.empty());
}

TEST_CASE("annotations swallow their dotted name") {
    const SourceFile f = make_file("@java.lang.Override\npublic void run() {}");
    const LexResult r = lex(f);
    REQUIRE(r.tokens.size() > 1);
    CHECK(r.tokens[0].kind == TokenKind::Annotation);
    CHECK(r.tokens[0].text == "@java.lang.Override");
    CHECK(concat(r.tokens) == f.text);
}

TEST_CASE("unterminated constructs lex to end of input with a warning") {
    SECTION("block comment") {
        const SourceFile f = make_file("int a; /* trailing");
        const LexResult r = lex(f);
        REQUIRE(r.warnings.size() == 1);
        CHECK(r.tokens.back().kind == TokenKind::Comment);
        CHECK(concat(r.tokens) == f.text);
    }
    SECTION("string literal") {
        const SourceFile f = make_file("String s = \"open");
        const LexResult r = lex(f);
        REQUIRE(r.warnings.size() == 1);
        CHECK(r.tokens.back().kind == TokenKind::StringLit);
        CHECK(concat(r.tokens) == f.text);
    }
}

TEST_CASE("line numbers track newlines") {
    const SourceFile f = make_file("a\nb\n  c");
    const LexResult r = lex(f);
    std::vector<int> word_lines;
    for (const LexToken& t : r.tokens)
        if (t.kind == TokenKind::Word) word_lines.push_back(t.line);
    CHECK(word_lines == std::vector<int>{1, 2, 3});
}

TEST_CASE("lexing is lossless on randomized input") {
    std::mt19937 rng(20240817);
    const std::string alphabet =
        "abcXYZ019 \t\n{}();=+-*/\"'\\@_$.<>,/**///";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 200);

    for (int trial = 0; trial < 500; ++trial) {
        std::string text;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) text += alphabet[pick(rng)];
        const SourceFile f = make_file(text);
        const LexResult r = lex(f);
        REQUIRE(concat(r.tokens) == text);
        std::size_t expected_offset = 0;
        for (const LexToken& t : r.tokens) {
            CHECK(t.offset == expected_offset);
            expected_offset += t.text.size();
        }
    }
}
