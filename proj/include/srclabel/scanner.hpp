#ifndef SRCLABEL_SCANNER_HPP
#define SRCLABEL_SCANNER_HPP

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fnmatch.h>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "srclabel/extractor.hpp"
#include "srclabel/lexer.hpp"

namespace srclabel {

struct SourceCorpus {
    std::vector<SourceFile> files;
    std::vector<IdentifierRecord> records;
    std::vector<std::pair<std::string, std::string>> skipped;  // (path, reason)
    std::size_t loc_total = 0;
    std::vector<std::string> warnings;
};

struct ScanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool has_extension(const std::string& path, const std::vector<std::string>& exts) {
    for (const std::string& e : exts) {
        if (path.size() >= e.size() &&
            path.compare(path.size() - e.size(), e.size(), e) == 0)
            return true;
    }
    return false;
}

inline bool matches_exclude(const std::string& rel, const std::vector<std::string>& globs) {
    for (const std::string& g : globs) {
        if (fnmatch(g.c_str(), rel.c_str(), 0) == 0) return true;
        // Also match against the basename so "*.generated.java" style
        // patterns work without a directory prefix.
        const auto slash = rel.rfind('/');
        if (slash != std::string::npos &&
            fnmatch(g.c_str(), rel.c_str() + slash + 1, 0) == 0)
            return true;
    }
    return false;
}

inline std::size_t count_lines(const std::string& text) {
    std::size_t n = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
    if (!text.empty() && text.back() != '\n') ++n;
    return n == 0 ? 1 : n;
}

// Validates UTF-8 in place. Returns false if the content looks binary
// (NUL byte); otherwise replaces invalid sequences with U+FFFD and reports
// whether any replacement happened.
inline bool decode_utf8(std::string& text, bool& replaced) {
    replaced = false;
    std::string fixed;
    bool copying = false;
    std::size_t i = 0;
    auto bad = [&](std::size_t at) {
        if (!copying) {
            fixed.assign(text, 0, at);
            copying = true;
        }
        fixed += "\xEF\xBF\xBD";
        replaced = true;
    };
    while (i < text.size()) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == 0) return false;
        std::size_t len = 1;
        if (c < 0x80) len = 1;
        else if ((c & 0xE0) == 0xC0) len = 2;
        else if ((c & 0xF0) == 0xE0) len = 3;
        else if ((c & 0xF8) == 0xF0) len = 4;
        else { bad(i); ++i; continue; }
        bool ok = i + len <= text.size();
        for (std::size_t k = 1; ok && k < len; ++k)
            ok = (static_cast<unsigned char>(text[i + k]) & 0xC0) == 0x80;
        if (!ok) { bad(i); ++i; continue; }
        if (copying) fixed.append(text, i, len);
        i += len;
    }
    if (copying) text = std::move(fixed);
    return true;
}

}  // namespace detail

/// Walk `root` and load every file matching the extension filter. Files are
/// loaded in sorted path order so the corpus content does not depend on
/// directory traversal order.
inline SourceCorpus scan_tree(const std::filesystem::path& root,
                              const std::vector<std::string>& extensions = {".java"},
                              const std::vector<std::string>& exclude_globs = {}) {
    namespace fs = std::filesystem;
    if (!fs::exists(root))
        throw ScanError("root does not exist: " + root.string());

    SourceCorpus corpus;
    std::vector<std::string> paths;
    std::error_code ec;
    for (fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec), end;
         it != end; it.increment(ec)) {
        if (ec) break;
        if (!it->is_regular_file(ec) && !it->is_symlink(ec)) continue;
        const std::string p = it->path().string();
        if (!detail::has_extension(p, extensions)) continue;
        const std::string rel = fs::relative(it->path(), root, ec).string();
        if (detail::matches_exclude(rel.empty() ? p : rel, exclude_globs)) continue;
        paths.push_back(p);
    }
    std::sort(paths.begin(), paths.end());

    for (const std::string& p : paths) {
        std::ifstream in(p, std::ios::binary);
        if (!in) {
            corpus.skipped.emplace_back(p, "io");
            continue;
        }
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (!in.good() && !in.eof()) {
            corpus.skipped.emplace_back(p, "io");
            continue;
        }
        bool replaced = false;
        if (!detail::decode_utf8(text, replaced)) {
            corpus.skipped.emplace_back(p, "encoding");
            continue;
        }
        if (replaced)
            corpus.warnings.push_back(p + ": invalid UTF-8 replaced");
        SourceFile f;
        f.path = p;
        f.byte_len = text.size();
        f.text = std::move(text);
        corpus.loc_total += detail::count_lines(f.text);
        corpus.files.push_back(std::move(f));
    }
    return corpus;
}

/// Lex and scan every loaded file, filling `records`.
inline void extract_corpus(SourceCorpus& corpus) {
    for (const SourceFile& f : corpus.files) {
        LexResult lexed = lex(f);
        for (std::string& w : lexed.warnings) corpus.warnings.push_back(std::move(w));
        ExtractResult ex = extract_identifiers(lexed.tokens, f);
        corpus.records.insert(corpus.records.end(),
                              std::make_move_iterator(ex.records.begin()),
                              std::make_move_iterator(ex.records.end()));
    }
}

}  // namespace srclabel

#endif  // SRCLABEL_SCANNER_HPP
