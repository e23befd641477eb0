#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knowmap/corpus_io.hpp"
#include "knowmap/synth.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static int counter = 0;
        path_ = fs::temp_directory_path()
                / ("knowmap_cli_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

RunResult run(const std::string& args, const fs::path& cwd) {
    const fs::path out = cwd / "_stdout.txt";
    const fs::path err = cwd / "_stderr.txt";
    const std::string cmd = "cd '" + cwd.string() + "' && '" + KNOWMAP_BIN + "' " + args + " > '"
                            + out.string() + "' 2> '" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string fixtures() {
    return KNOWMAP_FIXTURES;
}

} // namespace

TEST_CASE("ingest merges mixed-format inputs and reports the overlap") {
    TempDir tmp("ingest");
    // sample.ris and scopus.csv share DOI 10.1111/tmi.13383
    const std::string config = R"({
  "inputs": [
    {"path": ")" + fixtures() + R"(/sample.bib", "format": "bibtex", "origin": "wos"},
    {"path": ")" + fixtures() + R"(/sample.ris", "format": "ris", "origin": "scopus"},
    {"path": ")" + fixtures() + R"(/sample.nbib", "format": "medline", "origin": "medline"},
    {"path": ")" + fixtures() + R"(/scopus.csv", "format": "tabular", "origin": "scopus"}
  ],
  "column_map": {"Title": "title", "Year": "year", "Source title": "source_title",
                 "Authors": "authors", "Author Keywords": "author_keywords",
                 "DOI": "doi", "Abstract": "abstract"},
  "output_dir": "out"
})";
    knowmap::write_file(tmp.path() / "config.json", config);

    const RunResult r = run("ingest --config config.json", tmp.path());
    CHECK(r.code == 0);
    // 3 bib + 2 ris + 2 nbib + 2 csv = 9 normalized, 1 DOI overlap
    CHECK(r.out.find("8 records (1 duplicates merged)") != std::string::npos);
    // structured diagnostics on stderr
    CHECK(r.err.find("WARN") != std::string::npos);
    CHECK(r.err.find("UnbalancedBraces") != std::string::npos);
    CHECK(r.err.find("MissingEndRecord") != std::string::npos);
    CHECK(r.err.find("NoPmid") != std::string::npos);
    CHECK(r.err.find("RaggedRow") != std::string::npos);

    const std::string corpus_csv = slurp(tmp.path() / "out" / "corpus.csv");
    const auto load = knowmap::corpus_from_csv(corpus_csv);
    CHECK(load.corpus.records.size() == 8);

    // manifest lists the corpus with a hash
    const std::string manifest = slurp(tmp.path() / "out" / "ingest_manifest.json");
    CHECK(manifest.find("\"corpus.csv\"") != std::string::npos);
    CHECK(manifest.find("\"sha256\"") != std::string::npos);
    CHECK(manifest.find("\"merged_duplicates\": 1") != std::string::npos);
}

TEST_CASE("ingest without inputs or with missing files exits 2") {
    TempDir tmp("ingest_err");
    const RunResult none = run("ingest", tmp.path());
    CHECK(none.code == 2);
    CHECK(none.err.find("ERROR") != std::string::npos);

    const RunResult missing = run("ingest --input nope.bib:bibtex", tmp.path());
    CHECK(missing.code == 2);
    CHECK(missing.err.find("nope.bib") != std::string::npos);
}

TEST_CASE("report exits 3 without a corpus, works after ingest") {
    TempDir tmp("report");
    const RunResult no_corpus = run("report --out out", tmp.path());
    CHECK(no_corpus.code == 3);

    // tiny corpus, written directly in the canonical format
    knowmap::SynthSpec spec;
    spec.documents = 30;
    spec.single_authored = 6;
    spec.author_appearances = 90;
    spec.authors = 40;
    spec.seed = 2;
    knowmap::write_file(tmp.path() / "out" / "corpus.csv",
                        knowmap::corpus_to_csv(knowmap::synthesize(spec)));

    const RunResult r = run("report --out out --top-k 5", tmp.path());
    CHECK(r.code == 0);
    CHECK(r.out.find("Documents") != std::string::npos);
    for (const char* f : {"summary.json", "annual.csv", "sources.csv", "sources_years.csv",
                          "authors.csv", "annual.svg", "authors.svg", "report_manifest.json"})
        CHECK(fs::exists(tmp.path() / "out" / f));

    const std::string summary = slurp(tmp.path() / "out" / "summary.json");
    CHECK(summary.find("\"documents\": 30") != std::string::npos);
    const std::string annual = slurp(tmp.path() / "out" / "annual.csv");
    CHECK(annual.rfind("year,articles\n", 0) == 0);
}

TEST_CASE("map produces graphs, clusters and exits 4 when min_df filters everything") {
    TempDir tmp("map");
    knowmap::SynthSpec spec;
    spec.documents = 40;
    spec.single_authored = 8;
    spec.author_appearances = 120;
    spec.authors = 50;
    spec.topics = 2;
    spec.seed = 4;
    knowmap::write_file(tmp.path() / "out" / "corpus.csv",
                        knowmap::corpus_to_csv(knowmap::synthesize(spec)));

    const RunResult r = run("map --out out --layer keywords --min-df 2 --seed 11", tmp.path());
    CHECK(r.code == 0);
    for (const char* f : {"terms.graphml", "terms.dot", "authors.graphml", "authors.dot",
                          "centrality.csv", "clusters.csv", "map.svg", "map_manifest.json"})
        CHECK(fs::exists(tmp.path() / "out" / f));

    const std::string graphml = slurp(tmp.path() / "out" / "terms.graphml");
    CHECK(graphml.find("<graphml") != std::string::npos);
    CHECK(graphml.find("attr.name=\"betweenness\"") != std::string::npos);
    const std::string centrality = slurp(tmp.path() / "out" / "centrality.csv");
    CHECK(centrality.rfind("term,betweenness,degree\n", 0) == 0);

    const RunResult starved = run("map --out out --layer keywords --min-df 99999", tmp.path());
    CHECK(starved.code == 4);
}

TEST_CASE("synth validates its spec and exits 5 on infeasible counts") {
    TempDir tmp("synth");
    const RunResult ok =
        run("synth --docs 10 --single 2 --appearances 30 --authors 12 --out out", tmp.path());
    CHECK(ok.code == 0);
    CHECK(fs::exists(tmp.path() / "out" / "synth_corpus.csv"));

    // appearances < documents is infeasible
    const RunResult bad =
        run("synth --docs 10 --single 2 --appearances 5 --authors 12 --out out", tmp.path());
    CHECK(bad.code == 5);
    CHECK(bad.err.find("InfeasibleSpec") != std::string::npos);
}

TEST_CASE("config errors exit 5") {
    TempDir tmp("config");
    knowmap::write_file(tmp.path() / "bad.json", "{ not json");
    CHECK(run("report --config bad.json", tmp.path()).code == 5);
    CHECK(run("report --layer bogus --out out", tmp.path()).code == 5);
    CHECK(run("map --min-df 0 --out out", tmp.path()).code == 5);
}

TEST_CASE("repeated runs in one directory produce byte-identical manifests") {
    TempDir tmp("determinism");
    const std::string synth_args =
        "synth --docs 60 --single 12 --appearances 200 --authors 80 --seed 9 --out out";
    CHECK(run(synth_args, tmp.path()).code == 0);
    CHECK(run("ingest --input out/synth_corpus.csv:tabular --out out", tmp.path()).code == 0);

    CHECK(run("report --out out", tmp.path()).code == 0);
    const std::string report1 = slurp(tmp.path() / "out" / "report_manifest.json");
    CHECK(run("map --out out --layer abstract --min-df 2 --seed 13", tmp.path()).code == 0);
    const std::string map1 = slurp(tmp.path() / "out" / "map_manifest.json");

    CHECK(run("report --out out", tmp.path()).code == 0);
    CHECK(run("map --out out --layer abstract --min-df 2 --seed 13", tmp.path()).code == 0);

    CHECK(slurp(tmp.path() / "out" / "report_manifest.json") == report1);
    CHECK(slurp(tmp.path() / "out" / "map_manifest.json") == map1);
}

TEST_CASE("corpus written by ingest re-ingests to the same corpus (file boundary lossless)") {
    TempDir tmp("roundtrip");
    CHECK(run("synth --docs 25 --single 5 --appearances 80 --authors 30 --seed 6 --out out",
              tmp.path())
              .code == 0);
    CHECK(run("ingest --input out/synth_corpus.csv:tabular --out out", tmp.path()).code == 0);
    const std::string first = slurp(tmp.path() / "out" / "corpus.csv");

    CHECK(run("ingest --input out/corpus.csv:tabular --out again", tmp.path()).code == 0);
    const std::string second = slurp(tmp.path() / "again" / "corpus.csv");
    CHECK(first == second);
}
