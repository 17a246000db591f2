#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <unistd.h>

#include "srclabel/scanner.hpp"

using namespace srclabel;
namespace fs = std::filesystem;

namespace {

struct TempTree {
    fs::path root;
    TempTree() {
        root = fs::temp_directory_path() /
               ("srclabel_scan_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(root);
    }
    ~TempTree() { fs::remove_all(root); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    void write(const std::string& rel, const std::string& text) const {
        const fs::path p = root / rel;
        fs::create_directories(p.parent_path());
        std::ofstream(p, std::ios::binary) << text;
    }
};

}  // namespace

TEST_CASE("scan_tree finds exactly the matching files") {
    TempTree t;
    t.write("MyLine.java", "class MyLine {}\n");
    t.write("sub/MyOval.java", "class MyOval {}\n");
    t.write("notes.txt", "not source\n");

    const SourceCorpus c = scan_tree(t.root);
    CHECK(c.files.size() == 2);
    CHECK(c.skipped.empty());
    CHECK(c.loc_total == 2);
}

TEST_CASE("empty directory gives an empty corpus") {
    TempTree t;
    const SourceCorpus c = scan_tree(t.root);
    CHECK(c.files.empty());
    CHECK(c.skipped.empty());
    CHECK(c.loc_total == 0);
}

TEST_CASE("missing root is a fatal error naming the path") {
    CHECK_THROWS_AS(scan_tree("/no/such/dir/srclabel"), ScanError);
    try {
        scan_tree("/no/such/dir/srclabel");
    } catch (const ScanError& e) {
        CHECK(std::string(e.what()).find("/no/such/dir/srclabel") != std::string::npos);
    }
}

TEST_CASE("unreadable files are skipped with reason io") {
    TempTree t;
    t.write("Ok.java", "class Ok {}\n");
    fs::create_symlink(t.root / "missing_target.java", t.root / "Broken.java");

    const SourceCorpus c = scan_tree(t.root);
    CHECK(c.files.size() == 1);
    REQUIRE(c.skipped.size() == 1);
    CHECK(c.skipped[0].first.find("Broken.java") != std::string::npos);
    CHECK(c.skipped[0].second == "io");
}

TEST_CASE("binary-looking files are skipped with reason encoding") {
    TempTree t;
    t.write("Bin.java", std::string("class A {}\0garbage", 18));
    const SourceCorpus c = scan_tree(t.root);
    CHECK(c.files.empty());
    REQUIRE(c.skipped.size() == 1);
    CHECK(c.skipped[0].second == "encoding");
}

TEST_CASE("invalid UTF-8 is replaced and the file still parses") {
    TempTree t;
    t.write("Latin.java", "class Caf\xE9 {}\n");  // lone Latin-1 byte
    const SourceCorpus c = scan_tree(t.root);
    REQUIRE(c.files.size() == 1);
    CHECK(c.files[0].text.find("\xEF\xBF\xBD") != std::string::npos);
    REQUIRE(c.warnings.size() == 1);
    CHECK(c.warnings[0].find("invalid UTF-8") != std::string::npos);
}

TEST_CASE("exclude globs filter by relative path or basename") {
    TempTree t;
    t.write("Keep.java", "class Keep {}\n");
    t.write("gen/Skip.java", "class Skip {}\n");
    t.write("Legacy.generated.java", "class Legacy {}\n");

    const SourceCorpus c = scan_tree(t.root, {".java"}, {"gen/*", "*.generated.java"});
    REQUIRE(c.files.size() == 1);
    CHECK(c.files[0].path.find("Keep.java") != std::string::npos);
}

TEST_CASE("corpus content is independent of traversal order") {
    TempTree t;
    t.write("b/B.java", "class B {}\n");
    t.write("a/A.java", "class A {}\n");
    t.write("c/C.java", "class C {}\n");

    SourceCorpus c1 = scan_tree(t.root);
    SourceCorpus c2 = scan_tree(t.root);
    extract_corpus(c1);
    extract_corpus(c2);

    std::multiset<std::string> n1, n2;
    for (const auto& r : c1.records) n1.insert(r.name);
    for (const auto& r : c2.records) n2.insert(r.name);
    CHECK(n1 == n2);
    CHECK(n1 == std::multiset<std::string>{"A", "B", "C"});
}
