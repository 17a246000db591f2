// srclabel — label a Java codebase with its identifier vocabulary.
//
// Walks a source tree, extracts package/class/attribute/method names,
// splits them on CamelCase boundaries, stems the keywords and prints four
// alphabetized label blocks.

#include <chrono>
#include <clocale>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srclabel/pipeline.hpp"

namespace {

constexpr const char* kLexiconEnv = "SRCLABEL_LEXICON";

int run(const srclabel::RunConfig& cfg, bool show_timing) {
    using namespace srclabel;

    std::optional<Lexicon> lexicon;
    if (cfg.lexicon_dir) {
        try {
            lexicon = load_lexicon(*cfg.lexicon_dir);
            std::cerr << "lexicon: " << lexicon->stats.words << " words, "
                      << lexicon->stats.exceptions << " exceptions";
            if (lexicon->stats.malformed_lines > 0)
                std::cerr << " (" << lexicon->stats.malformed_lines << " malformed lines skipped)";
            std::cerr << "\n";
        } catch (const LexiconError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 3;
        }
    } else {
        std::cerr << "no lexicon configured; stemming in rule-only mode\n";
    }

    const auto start = std::chrono::steady_clock::now();
    RunResult result;
    try {
        result = run_pipeline(cfg, lexicon ? &*lexicon : nullptr);
    } catch (const ScanError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    for (const auto& [path, reason] : result.corpus.skipped)
        std::cerr << "skipped: " << path << " (" << reason << ")\n";
    for (const std::string& w : result.corpus.warnings)
        std::cerr << "warning: " << w << "\n";

    std::cout << render(result.map, cfg.render);

    if (show_timing)
        std::cerr << format_timing(start, std::chrono::steady_clock::now()) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_CTYPE, "C.UTF-8");

    CLI::App app{"Label source code with its identifier vocabulary"};

    srclabel::RunConfig cfg;
    std::string format = "text";
    std::vector<std::string> kinds;
    std::string lexicon_dir;
    bool acronyms = false;
    bool lower = false;
    bool timing = false;
    std::size_t min_len = 1;

    app.add_option("root", cfg.root, "Root of the source tree")->required();
    app.add_option("--ext", cfg.extensions, "Source file extensions (default .java)");
    app.add_option("--exclude", cfg.excludes, "Glob patterns for paths to skip");
    app.add_option("--lexicon", lexicon_dir,
                   "WordNet-format lexicon directory (default: $" + std::string(kLexiconEnv) + ")");
    app.add_flag("--acronyms", acronyms, "Keep uppercase runs together (UID stays one keyword)");
    app.add_option("--min-len", min_len, "Hide labels shorter than N characters")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--kinds", kinds,
                   "Kinds to report: package, class, attribute, method (default all)")
        ->delimiter(',')
        ->check(CLI::IsMember({"package", "class", "attribute", "method"}));
    app.add_flag("--lower", lower, "Print labels lowercase instead of Capitalized");
    app.add_flag("--timing", timing, "Report elapsed milliseconds on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    cfg.split.keep_acronyms = acronyms;
    cfg.render.format = srclabel::parse_format(format);
    cfg.render.display_case =
        lower ? srclabel::DisplayCase::Lower : srclabel::DisplayCase::Capitalized;
    cfg.render.min_term_len = min_len;

    if (!kinds.empty()) {
        cfg.render.kinds = {false, false, false, false};
        for (const std::string& k : kinds)
            for (srclabel::IdentifierKind kind : srclabel::kAllKinds)
                if (k == srclabel::kind_name(kind))
                    cfg.render.kinds[static_cast<std::size_t>(kind)] = true;
    }

    if (!lexicon_dir.empty()) {
        cfg.lexicon_dir = lexicon_dir;
    } else if (const char* env = std::getenv(kLexiconEnv); env && *env) {
        cfg.lexicon_dir = std::string(env);
    }

    return run(cfg, timing);
}
