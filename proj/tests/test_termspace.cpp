#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knowmap/corpus_io.hpp"
#include "knowmap/error.hpp"
#include "knowmap/exports.hpp"
#include "knowmap/termspace.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>

using namespace knowmap;

namespace {

BibRecord with_abstract(std::string id, std::string abstract) {
    BibRecord r;
    r.record_id = std::move(id);
    r.title = "title " + r.record_id;
    r.abstract = std::move(abstract);
    return r;
}

Corpus corpus_of(std::vector<BibRecord> records) {
    Corpus c;
    c.records = std::move(records);
    return c;
}

TermConfig bare_config(int min_length = 1) {
    TermConfig cfg;
    cfg.min_length = min_length;
    return cfg;
}

std::map<std::string, long> as_map(const std::vector<std::pair<std::string, long>>& rows) {
    return {rows.begin(), rows.end()};
}

} // namespace

TEST_CASE("default stopword list has exactly 175 words and matches the data file") {
    const auto& words = default_stopwords();
    CHECK(words.size() == 175);
    std::set<std::string> uniq(words.begin(), words.end());
    CHECK(uniq.size() == words.size());
    validate_term_config(default_term_config());

    const auto file_words = load_stopwords(std::string(KNOWMAP_FIXTURES) + "/../../data/stopwords_en.txt");
    CHECK(file_words == uniq);
}

TEST_CASE("extract_terms: hand-tokenized abstract with a merge rule") {
    BibRecord r = with_abstract("1", "Novel 2019-nCoV outbreak. Novel cases.");
    TermConfig cfg = bare_config(2);
    cfg.merge_rules["2019-ncov"] = "ncov";
    const ExtractedTerms et = extract_terms(r, TermLayer::Abstract, cfg);
    CHECK_FALSE(et.layer_empty);
    const auto m = as_map(et.terms);
    CHECK(m == std::map<std::string, long>{{"novel", 2}, {"ncov", 1}, {"outbreak", 1}, {"cases", 1}});
}

TEST_CASE("extract_terms: missing layer flagged, not failed") {
    BibRecord r;
    r.record_id = "1";
    r.title = "has a title";
    const ExtractedTerms et = extract_terms(r, TermLayer::Abstract, bare_config());
    CHECK(et.layer_empty);
    CHECK(et.terms.empty());
}

TEST_CASE("extract_terms: keyword layer keeps phrases intact") {
    BibRecord r;
    r.record_id = "1";
    r.title = "t";
    r.author_keywords = {"covid-19", "coronavirus"};
    const ExtractedTerms et = extract_terms(r, TermLayer::AuthorKeywords, bare_config());
    const auto m = as_map(et.terms);
    CHECK(m == std::map<std::string, long>{{"covid-19", 1}, {"coronavirus", 1}});
}

TEST_CASE("extract_terms: hyphen handling follows keep_hyphenated") {
    BibRecord r = with_abstract("1", "state-of-the-art x-ray");
    TermConfig keep = bare_config(2);
    const auto kept = as_map(extract_terms(r, TermLayer::Abstract, keep).terms);
    CHECK(kept.count("state-of-the-art") == 1);
    CHECK(kept.count("x-ray") == 1);

    TermConfig split = bare_config(2);
    split.keep_hyphenated = false;
    const auto splits = as_map(extract_terms(r, TermLayer::Abstract, split).terms);
    CHECK(splits.count("state-of-the-art") == 0);
    CHECK(splits.count("state") == 1);
    CHECK(splits.count("ray") == 1);
}

TEST_CASE("extract_terms: stopwords and min_length drop tokens before merge rules") {
    BibRecord r = with_abstract("1", "The virus is a virus of viruses");
    const TermConfig cfg = default_term_config(); // min_length 2, full stopword list
    const auto m = as_map(extract_terms(r, TermLayer::Abstract, cfg).terms);
    CHECK(m == std::map<std::string, long>{{"virus", 2}, {"viruses", 1}});
}

TEST_CASE("occurrence_table: raw token frequency, sorted rows, total") {
    const Corpus c = corpus_of({with_abstract("1", "a b a")});
    const OccurrenceTable t = occurrence_table(c, TermLayer::Abstract, bare_config(1));
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0] == std::pair<std::string, long>{"a", 2});
    CHECK(t.rows[1] == std::pair<std::string, long>{"b", 1});
    CHECK(t.total == 3);
}

TEST_CASE("occurrence_table: frequencies add across records") {
    const Corpus c = corpus_of({with_abstract("1", "x y x"), with_abstract("2", "x x z")});
    const OccurrenceTable t = occurrence_table(c, TermLayer::Abstract, bare_config(1));
    CHECK(as_map(t.rows).at("x") == 4);
    CHECK(t.total == 6); // x:4 y:1 z:1
}

TEST_CASE("document_frequency: presence, not frequency") {
    const Corpus c = corpus_of({with_abstract("1", "x x x"), with_abstract("2", "x y"),
                                with_abstract("3", "y y")});
    const OccurrenceTable t = document_frequency(c, TermLayer::Abstract, bare_config(1));
    const auto m = as_map(t.rows);
    CHECK(m.at("x") == 2);
    CHECK(m.at("y") == 2);
}

TEST_CASE("parallel and serial table builders agree exactly") {
    std::mt19937 rng(9);
    std::vector<BibRecord> records;
    for (int i = 0; i < 300; ++i) {
        std::string abs;
        const int len = 5 + static_cast<int>(rng() % 40);
        for (int k = 0; k < len; ++k)
            abs += "w" + std::to_string(rng() % 50) + " ";
        records.push_back(with_abstract("r" + std::to_string(i), abs));
    }
    const Corpus c = corpus_of(std::move(records));
    const TermConfig cfg = bare_config(1);

    const OccurrenceTable tf_par = occurrence_table(c, TermLayer::Abstract, cfg);
    const OccurrenceTable tf_ser = occurrence_table_serial(c, TermLayer::Abstract, cfg);
    CHECK(tf_par.rows == tf_ser.rows);
    CHECK(tf_par.total == tf_ser.total);

    const OccurrenceTable df_par = document_frequency(c, TermLayer::Abstract, cfg);
    const OccurrenceTable df_ser = document_frequency_serial(c, TermLayer::Abstract, cfg);
    CHECK(df_par.rows == df_ser.rows);

    // df <= tf <= df * max tokens per record
    const auto tf = as_map(tf_ser.rows);
    long max_tokens = 0;
    for (const auto& r : c.records) {
        long n = 0;
        for (const auto& [term, f] : extract_terms(r, TermLayer::Abstract, cfg).terms)
            n += f;
        max_tokens = std::max(max_tokens, n);
    }
    for (const auto& [term, df] : df_ser.rows) {
        CHECK(df <= tf.at(term));
        CHECK(tf.at(term) <= df * max_tokens);
    }
}

TEST_CASE("occurrence_table invariant under record permutation") {
    std::mt19937 rng(21);
    std::vector<BibRecord> records;
    for (int i = 0; i < 60; ++i)
        records.push_back(with_abstract("r" + std::to_string(i),
                                        "alpha beta w" + std::to_string(rng() % 10)));
    const Corpus a = corpus_of(records);
    std::shuffle(records.begin(), records.end(), rng);
    const Corpus b = corpus_of(records);
    CHECK(occurrence_table(a, TermLayer::Abstract, bare_config(1)).rows
          == occurrence_table(b, TermLayer::Abstract, bare_config(1)).rows);
}

TEST_CASE("merge-then-count equals count-then-fold (property)") {
    std::mt19937 rng(31);
    for (int round = 0; round < 20; ++round) {
        // random vocabulary and a random chain-free rule set
        std::vector<std::string> vocab;
        for (int v = 0; v < 12; ++v)
            vocab.push_back("v" + std::to_string(v));
        TermConfig with_rules = bare_config(1);
        TermConfig without_rules = bare_config(1);
        for (int v = 0; v < 6; ++v)
            if (rng() % 2)
                with_rules.merge_rules["v" + std::to_string(v)] = "m" + std::to_string(rng() % 3);
        validate_term_config(with_rules);

        std::vector<BibRecord> records;
        for (int i = 0; i < 25; ++i) {
            std::string abs;
            const int len = 1 + static_cast<int>(rng() % 15);
            for (int k = 0; k < len; ++k)
                abs += vocab[rng() % vocab.size()] + " ";
            records.push_back(with_abstract("r" + std::to_string(i), abs));
        }
        const Corpus c = corpus_of(std::move(records));

        const auto merged = as_map(occurrence_table(c, TermLayer::Abstract, with_rules).rows);
        auto folded = std::map<std::string, long>{};
        for (const auto& [term, n] : occurrence_table(c, TermLayer::Abstract, without_rules).rows) {
            const auto it = with_rules.merge_rules.find(term);
            folded[it == with_rules.merge_rules.end() ? term : it->second] += n;
        }
        CHECK(merged == folded);
    }
}

TEST_CASE("table sort order is total and deterministic") {
    const Corpus c = corpus_of({with_abstract("1", "b a c a c b zz")});
    const OccurrenceTable t = occurrence_table(c, TermLayer::Abstract, bare_config(1));
    for (size_t i = 1; i < t.rows.size(); ++i) {
        const bool ordered = t.rows[i - 1].second > t.rows[i].second
                             || (t.rows[i - 1].second == t.rows[i].second
                                 && t.rows[i - 1].first < t.rows[i].first);
        CHECK(ordered);
    }
}

TEST_CASE("config validation rejects chained merge rules and bad stopwords") {
    TermConfig chain = bare_config();
    chain.merge_rules["a"] = "b";
    chain.merge_rules["b"] = "c";
    CHECK_THROWS_AS(validate_term_config(chain), Error);

    TermConfig upper = bare_config();
    upper.stopwords.insert("The");
    CHECK_THROWS_AS(validate_term_config(upper), Error);
}

TEST_CASE("stopword and merge-rule file loading") {
    const auto dir = std::filesystem::temp_directory_path() / "knowmap_termspace_test";
    std::filesystem::create_directories(dir);
    write_file(dir / "stop.txt", "# comment\nThe\nand\n\nof\n");
    const auto stops = load_stopwords(dir / "stop.txt");
    CHECK(stops == std::set<std::string>{"the", "and", "of"});

    write_file(dir / "rules.tsv", "2019-ncov\tncov\nsars-cov-2\tncov\n");
    const auto rules = load_merge_rules(dir / "rules.tsv");
    CHECK(rules.at("2019-ncov") == "ncov");
    CHECK(rules.at("sars-cov-2") == "ncov");

    write_file(dir / "bad.tsv", "no-tab-here\n");
    CHECK_THROWS_AS(load_merge_rules(dir / "bad.tsv"), Error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("occurrence csv ends with a TOTAL row") {
    OccurrenceTable t;
    t.layer = TermLayer::AuthorKeywords;
    t.rows = {{"alpha", 3}, {"beta", 2}};
    const std::string csv_text = occurrence_csv(t);
    CHECK(csv_text == "term,occurrences\nalpha,3\nbeta,2\nTOTAL,5\n");
}
