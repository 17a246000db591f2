#ifndef SRCLABEL_SPLITTER_HPP
#define SRCLABEL_SPLITTER_HPP

#include <cstddef>
#include <cstdint>
#include <cwctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace srclabel {

/// One split token after lowercase normalization: letters only.
struct Keyword {
    std::string text;               // lowercase
    std::string source_identifier;  // the identifier it came from
    int position = 0;               // 0-based index within the split
};

struct SplitOptions {
    // Default: cut before every uppercase letter, so "UID" -> U, I, D.
    // Acronym mode keeps maximal uppercase runs together, splitting off the
    // last letter when a lowercase follows ("HTTPServer" -> HTTP, Server).
    bool keep_acronyms = false;
};

namespace detail {

struct Utf8Decoder {
    std::string_view s;
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }

    // Decodes one codepoint; invalid bytes come back as themselves.
    char32_t next(std::size_t& len) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        len = 1;
        if (c < 0x80) return c;
        char32_t cp = 0;
        std::size_t n = 0;
        if ((c & 0xE0) == 0xC0) { cp = c & 0x1F; n = 1; }
        else if ((c & 0xF0) == 0xE0) { cp = c & 0x0F; n = 2; }
        else if ((c & 0xF8) == 0xF0) { cp = c & 0x07; n = 3; }
        else return c;
        if (i + n >= s.size()) return c;
        for (std::size_t k = 1; k <= n; ++k) {
            const unsigned char cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xC0) != 0x80) return c;
            cp = (cp << 6) | (cc & 0x3F);
        }
        len = n + 1;
        return cp;
    }
};

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

// Character classes. ASCII is handled directly; other codepoints go through
// the wide-character tables (the process locale must be UTF-8 for those).
inline bool cp_is_separator(char32_t c) { return c == U'.' || c == U'_' || c == U'$'; }

inline bool cp_is_digit(char32_t c) {
    if (c < 0x80) return c >= U'0' && c <= U'9';
    return std::iswdigit(static_cast<wint_t>(c)) != 0;
}

inline bool cp_is_upper(char32_t c) {
    if (c < 0x80) return c >= U'A' && c <= U'Z';
    return std::iswupper(static_cast<wint_t>(c)) != 0;
}

inline bool cp_is_letter(char32_t c) {
    if (c < 0x80) return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
    return std::iswalpha(static_cast<wint_t>(c)) != 0;
}

inline char32_t cp_to_lower(char32_t c) {
    if (c < 0x80) return (c >= U'A' && c <= U'Z') ? c + 32 : c;
    return static_cast<char32_t>(std::towlower(static_cast<wint_t>(c)));
}

inline char32_t cp_to_upper(char32_t c) {
    if (c < 0x80) return (c >= U'a' && c <= U'z') ? c - 32 : c;
    return static_cast<char32_t>(std::towupper(static_cast<wint_t>(c)));
}

}  // namespace detail

/// CamelCase split. Cuts at every separator ('.', '_', '$', consumed), at
/// every letter/digit boundary, and before every uppercase letter. Returns
/// raw tokens with case preserved; digit runs come out as their own tokens.
inline std::vector<std::string> split_identifier(std::string_view name,
                                                 const SplitOptions& opts = {}) {
    // Decode once so boundary decisions see codepoints, not bytes.
    std::vector<char32_t> cps;
    cps.reserve(name.size());
    detail::Utf8Decoder dec{name};
    while (!dec.done()) {
        std::size_t len = 0;
        cps.push_back(dec.next(len));
        dec.i += len;
    }

    std::vector<std::string> tokens;
    std::string cur;
    bool cur_is_digit = false;
    auto flush = [&] {
        if (!cur.empty()) tokens.push_back(std::move(cur));
        cur.clear();
    };

    for (std::size_t k = 0; k < cps.size(); ++k) {
        const char32_t c = cps[k];
        if (detail::cp_is_separator(c)) {
            flush();
            continue;
        }
        const bool digit = detail::cp_is_digit(c);
        if (!cur.empty() && digit != cur_is_digit) flush();
        if (!digit && detail::cp_is_upper(c) && !cur.empty() && !cur_is_digit) {
            bool cut = true;
            if (opts.keep_acronyms && detail::cp_is_upper(cps[k - 1])) {
                // Inside an uppercase run: cut only before the run's last
                // letter when a lowercase letter follows.
                cut = k + 1 < cps.size() && detail::cp_is_letter(cps[k + 1]) &&
                      !detail::cp_is_upper(cps[k + 1]) && !detail::cp_is_digit(cps[k + 1]);
            }
            if (cut) flush();
        }
        detail::append_utf8(cur, c);
        cur_is_digit = digit;
    }
    flush();
    return tokens;
}

/// Lowercases a raw token; drops purely numeric tokens.
inline std::optional<std::string> normalize_token(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool any_letter = false;
    detail::Utf8Decoder dec{raw};
    while (!dec.done()) {
        std::size_t len = 0;
        const char32_t c = dec.next(len);
        dec.i += len;
        if (detail::cp_is_digit(c)) continue;
        any_letter = true;
        detail::append_utf8(out, detail::cp_to_lower(c));
    }
    if (!any_letter || out.empty()) return std::nullopt;
    return out;
}

/// split + normalize in one call.
inline std::vector<Keyword> split_keywords(std::string_view name,
                                           const SplitOptions& opts = {}) {
    std::vector<Keyword> out;
    int pos = 0;
    for (const std::string& raw : split_identifier(name, opts)) {
        if (auto norm = normalize_token(raw)) {
            out.push_back({std::move(*norm), std::string(name), pos++});
        }
    }
    return out;
}

}  // namespace srclabel

#endif  // SRCLABEL_SPLITTER_HPP
