#ifndef SRCLABEL_PIPELINE_HPP
#define SRCLABEL_PIPELINE_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "srclabel/labelmap.hpp"
#include "srclabel/scanner.hpp"
#include "srclabel/stemmer.hpp"

namespace srclabel {

struct RunConfig {
    std::string root;
    std::vector<std::string> extensions = {".java"};
    std::vector<std::string> excludes;
    std::optional<std::string> lexicon_dir;
    SplitOptions split;
    RenderOptions render;
};

struct RunResult {
    LabelMap map;
    SourceCorpus corpus;  // files kept for diagnostics; records consumed
};

/// scan -> extract -> build, one label map per file merged into the total.
/// The merge order is fixed (sorted path order) but any order would give
/// the same map.
inline RunResult run_pipeline(const RunConfig& cfg, const Lexicon* lexicon) {
    const auto start = std::chrono::steady_clock::now();

    RunResult result;
    result.corpus = scan_tree(cfg.root, cfg.extensions, cfg.excludes);

    for (const SourceFile& f : result.corpus.files) {
        LexResult lexed = lex(f);
        for (std::string& w : lexed.warnings)
            result.corpus.warnings.push_back(std::move(w));
        ExtractResult ex = extract_identifiers(lexed.tokens, f);
        result.map = merge(result.map, build_label_map(ex.records, cfg.split, lexicon));
        result.corpus.records.insert(result.corpus.records.end(),
                                     ex.records.begin(), ex.records.end());
    }

    result.map.meta.file_count = result.corpus.files.size();
    result.map.meta.loc_total = result.corpus.loc_total;
    result.map.meta.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - start)
                                     .count();
    return result;
}

/// "elapsed: <N> ms" with a non-negative millisecond count.
inline std::string format_timing(std::chrono::steady_clock::time_point start,
                                 std::chrono::steady_clock::time_point end) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    if (ms < 0) ms = 0;
    return "elapsed: " + std::to_string(ms) + " ms";
}

}  // namespace srclabel

#endif  // SRCLABEL_PIPELINE_HPP
