#ifndef SRCLABEL_LABELMAP_HPP
#define SRCLABEL_LABELMAP_HPP

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "srclabel/extractor.hpp"
#include "srclabel/splitter.hpp"
#include "srclabel/stemmer.hpp"

namespace srclabel {

/// Four alphabetized, duplicate-free term vocabularies with occurrence
/// counts. Terms are stored lowercase; capitalization is a rendering choice.
struct LabelMap {
    // std::map keeps each kind sorted and unique by construction.
    std::array<std::map<std::string, std::uint64_t>, 4> per_kind;

    struct Meta {
        std::size_t file_count = 0;
        std::size_t loc_total = 0;
        std::int64_t elapsed_ms = 0;
    } meta;

    std::map<std::string, std::uint64_t>& kind(IdentifierKind k) {
        return per_kind[static_cast<std::size_t>(k)];
    }
    const std::map<std::string, std::uint64_t>& kind(IdentifierKind k) const {
        return per_kind[static_cast<std::size_t>(k)];
    }

    bool operator==(const LabelMap& other) const { return per_kind == other.per_kind; }
};

/// split -> normalize -> stem for every record; terms accumulate under the
/// record's kind. Order of the input records does not affect the result.
inline LabelMap build_label_map(const std::vector<IdentifierRecord>& records,
                                const SplitOptions& split_opts = {},
                                const Lexicon* lexicon = nullptr) {
    LabelMap map;
    for (const IdentifierRecord& rec : records) {
        auto& bucket = map.kind(rec.kind);
        for (const Keyword& kw : split_keywords(rec.name, split_opts))
            ++bucket[stem(kw.text, lexicon)];
    }
    return map;
}

/// Union per kind with counts added. Commutative and associative; the
/// default-constructed map is the identity.
inline LabelMap merge(const LabelMap& a, const LabelMap& b) {
    LabelMap out = a;
    for (std::size_t k = 0; k < out.per_kind.size(); ++k)
        for (const auto& [term, count] : b.per_kind[k])
            out.per_kind[k][term] += count;
    out.meta.file_count = a.meta.file_count + b.meta.file_count;
    out.meta.loc_total = a.meta.loc_total + b.meta.loc_total;
    return out;
}

enum class RenderFormat { Text, Json, Csv };
enum class DisplayCase { Capitalized, Lower };

struct RenderOptions {
    RenderFormat format = RenderFormat::Text;
    DisplayCase display_case = DisplayCase::Capitalized;
    std::size_t min_term_len = 1;
    std::array<bool, 4> kinds = {true, true, true, true};
};

inline RenderFormat parse_format(std::string_view name) {
    if (name == "text") return RenderFormat::Text;
    if (name == "json") return RenderFormat::Json;
    if (name == "csv") return RenderFormat::Csv;
    throw std::invalid_argument("unknown format: " + std::string(name) +
                                " (expected text, json or csv)");
}

namespace detail {

inline std::string capitalize(std::string_view term) {
    // Terms are lowercase; uppercase the first codepoint for display.
    std::string out(term);
    if (out.empty()) return out;
    if (static_cast<unsigned char>(out[0]) < 0x80) {
        out[0] = static_cast<char>(cp_to_upper(static_cast<char32_t>(out[0])));
        return out;
    }
    Utf8Decoder dec{out};
    std::size_t len = 0;
    const char32_t up = cp_to_upper(dec.next(len));
    std::string head;
    append_utf8(head, up);
    return head + out.substr(len);
}

inline const char* section_title(IdentifierKind k) {
    switch (k) {
        case IdentifierKind::Package: return "Package labels";
        case IdentifierKind::Class: return "Class labels";
        case IdentifierKind::Attribute: return "Attribute labels";
        case IdentifierKind::Method: return "Method labels";
    }
    return "?";
}

}  // namespace detail

/// Renders the map. Text output is the four captioned blocks with terms on
/// one space-separated line, Capitalized by default; json is one object
/// with four arrays of {term, count}; csv is kind,term,count rows. All
/// formats are byte-stable for a given map.
inline std::string render(const LabelMap& map, const RenderOptions& opts = {}) {
    std::ostringstream out;

    auto selected = [&](IdentifierKind k) { return opts.kinds[static_cast<std::size_t>(k)]; };
    auto visible = [&](const std::string& term) { return term.size() >= opts.min_term_len; };

    switch (opts.format) {
        case RenderFormat::Text: {
            bool first = true;
            for (IdentifierKind k : kAllKinds) {
                if (!selected(k)) continue;
                if (!first) out << '\n';
                first = false;
                out << detail::section_title(k) << '\n';
                bool first_term = true;
                for (const auto& [term, count] : map.kind(k)) {
                    if (!visible(term)) continue;
                    if (!first_term) out << ' ';
                    first_term = false;
                    out << (opts.display_case == DisplayCase::Capitalized
                                ? detail::capitalize(term)
                                : term);
                }
                out << '\n';
            }
            break;
        }
        case RenderFormat::Json: {
            out << "{";
            bool first_kind = true;
            for (IdentifierKind k : kAllKinds) {
                if (!selected(k)) continue;
                if (!first_kind) out << ",";
                first_kind = false;
                out << "\n  \"" << kind_name(k) << "\": [";
                bool first_term = true;
                for (const auto& [term, count] : map.kind(k)) {
                    if (!visible(term)) continue;
                    if (!first_term) out << ",";
                    first_term = false;
                    out << "\n    {\"term\": \"" << term << "\", \"count\": " << count << "}";
                }
                out << (first_term ? "]" : "\n  ]");
            }
            out << "\n}\n";
            break;
        }
        case RenderFormat::Csv: {
            out << "kind,term,count\n";
            for (IdentifierKind k : kAllKinds) {
                if (!selected(k)) continue;
                for (const auto& [term, count] : map.kind(k)) {
                    if (!visible(term)) continue;
                    out << kind_name(k) << ',' << term << ',' << count << '\n';
                }
            }
            break;
        }
    }
    return out.str();
}

/// Inverse of the csv rendering (used to round-trip maps).
inline LabelMap parse_csv(std::string_view csv) {
    LabelMap map;
    std::istringstream in{std::string(csv)};
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("bad csv row: " + line);
        const std::string kind = line.substr(0, c1);
        const std::string term = line.substr(c1 + 1, c2 - c1 - 1);
        const std::uint64_t count = std::stoull(line.substr(c2 + 1));
        for (IdentifierKind k : kAllKinds)
            if (kind == kind_name(k)) map.kind(k)[term] = count;
    }
    return map;
}

}  // namespace srclabel

#endif  // SRCLABEL_LABELMAP_HPP
