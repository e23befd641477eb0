// knowmap: bibliographic exports -> indicators, term statistics, and
// co-occurrence / co-authorship network maps.
//
// Commands: ingest, report, map, synth. Exit codes: 0 ok, 2 input error,
// 3 missing corpus, 4 empty analysis, 5 config error.

#include "knowmap/corpus_io.hpp"
#include "knowmap/error.hpp"
#include "knowmap/exports.hpp"
#include "knowmap/indicators.hpp"
#include "knowmap/manifest.hpp"
#include "knowmap/netlab.hpp"
#include "knowmap/normalize.hpp"
#include "knowmap/parsers.hpp"
#include "knowmap/synth.hpp"
#include "knowmap/termspace.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif
#include <unistd.h>

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMissingCorpus = 3;
constexpr int kExitEmptyAnalysis = 4;
constexpr int kExitConfig = 5;

struct InputSpec {
    std::string path;
    knowmap::Format format = knowmap::Format::BibTex;
    knowmap::Origin origin = knowmap::Origin::Other;
};

struct PipelineConfig {
    std::vector<InputSpec> inputs;
    knowmap::TermLayer layer = knowmap::TermLayer::Abstract;
    int min_df = 2;
    int top_k = 10;
    unsigned seed = 42;
    double resolution = 1.0;
    bool weighted_betweenness = false;
    std::string stopword_path;
    std::string merge_rules_path;
    std::string output_dir = "out";
    std::string corpus_path; // defaults to <output_dir>/corpus.csv
    knowmap::ColumnMap column_map; // tabular inputs; canonical schema when empty
};

bool color_enabled() {
    if (std::getenv("KNOWMAP_NO_COLOR") != nullptr)
        return false;
    return isatty(fileno(stderr)) != 0;
}

void print_diagnostics(const std::vector<knowmap::Diagnostic>& diags) {
    const bool color = color_enabled();
    for (const auto& d : diags) {
        if (color)
            std::fputs("\x1b[33m", stderr);
        std::fprintf(stderr, "WARN %s:%d %s %s", d.file.c_str(), d.line, d.code.c_str(),
                     d.message.c_str());
        if (color)
            std::fputs("\x1b[0m", stderr);
        std::fputc('\n', stderr);
    }
}

int fail(int code, const std::string& tag, const std::string& message) {
    std::fprintf(stderr, "ERROR %s %s\n", tag.c_str(), message.c_str());
    return code;
}

int exit_code_for(const knowmap::Error& e) {
    switch (e.code()) {
    case knowmap::Errc::InputError: return kExitInput;
    case knowmap::Errc::MissingCorpus: return kExitMissingCorpus;
    case knowmap::Errc::EmptyCorpus: return kExitMissingCorpus;
    case knowmap::Errc::NoTerms:
    case knowmap::Errc::NoEdges:
    case knowmap::Errc::EmptyGraph: return kExitEmptyAnalysis;
    case knowmap::Errc::InfeasibleSpec:
    case knowmap::Errc::ConfigError: return kExitConfig;
    }
    return kExitConfig;
}

const char* tag_for(const knowmap::Error& e) {
    switch (e.code()) {
    case knowmap::Errc::InputError: return "InputError";
    case knowmap::Errc::MissingCorpus: return "MissingCorpus";
    case knowmap::Errc::EmptyCorpus: return "EmptyCorpus";
    case knowmap::Errc::NoTerms: return "NoTerms";
    case knowmap::Errc::NoEdges: return "NoEdges";
    case knowmap::Errc::EmptyGraph: return "EmptyGraph";
    case knowmap::Errc::InfeasibleSpec: return "InfeasibleSpec";
    case knowmap::Errc::ConfigError: return "ConfigError";
    }
    return "Error";
}

void load_config_file(const std::string& path, PipelineConfig& config) {
    const std::string text = knowmap::read_file(path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw knowmap::Error(knowmap::Errc::ConfigError,
                             "config '" + path + "' is not valid JSON: " + e.what());
    }
    if (j.contains("inputs")) {
        for (const auto& item : j.at("inputs")) {
            InputSpec in;
            in.path = item.at("path").get<std::string>();
            const std::string fmt = item.value("format", "bibtex");
            const auto parsed = knowmap::parse_format(fmt);
            if (!parsed)
                throw knowmap::Error(knowmap::Errc::ConfigError, "unknown input format '" + fmt + "'");
            in.format = *parsed;
            in.origin = knowmap::parse_origin(item.value("origin", "other"));
            config.inputs.push_back(std::move(in));
        }
    }
    if (j.contains("layer")) {
        const std::string layer = j.at("layer").get<std::string>();
        const auto parsed = knowmap::parse_layer(layer);
        if (!parsed)
            throw knowmap::Error(knowmap::Errc::ConfigError, "unknown layer '" + layer + "'");
        config.layer = *parsed;
    }
    config.min_df = j.value("min_df", config.min_df);
    config.top_k = j.value("top_k", config.top_k);
    config.seed = j.value("seed", config.seed);
    config.resolution = j.value("resolution", config.resolution);
    config.weighted_betweenness = j.value("weighted_betweenness", config.weighted_betweenness);
    config.stopword_path = j.value("stopword_path", config.stopword_path);
    config.merge_rules_path = j.value("merge_rules_path", config.merge_rules_path);
    config.output_dir = j.value("output_dir", config.output_dir);
    config.corpus_path = j.value("corpus_path", config.corpus_path);
    if (j.contains("column_map")) {
        for (const auto& [col, field] : j.at("column_map").items())
            config.column_map.emplace_back(col, field.get<std::string>());
    }
    if (config.min_df < 1)
        throw knowmap::Error(knowmap::Errc::ConfigError, "min_df must be >= 1");
    if (config.top_k < 1)
        throw knowmap::Error(knowmap::Errc::ConfigError, "top_k must be >= 1");
}

ordered_json config_echo(const PipelineConfig& config, bool with_inputs) {
    ordered_json j;
    if (with_inputs) {
        ordered_json inputs = ordered_json::array();
        for (const auto& in : config.inputs) {
            inputs.push_back({{"path", in.path},
                              {"format", knowmap::to_string(in.format)},
                              {"origin", knowmap::to_string(in.origin)}});
        }
        j["inputs"] = std::move(inputs);
    }
    j["layer"] = knowmap::to_string(config.layer);
    j["min_df"] = config.min_df;
    j["top_k"] = config.top_k;
    j["seed"] = config.seed;
    j["resolution"] = config.resolution;
    j["weighted_betweenness"] = config.weighted_betweenness;
    j["stopword_path"] = config.stopword_path;
    j["merge_rules_path"] = config.merge_rules_path;
    j["output_dir"] = config.output_dir;
    return j;
}

knowmap::TermConfig term_config_for(const PipelineConfig& config) {
    knowmap::TermConfig tc = knowmap::default_term_config();
    if (!config.stopword_path.empty())
        tc.stopwords = knowmap::load_stopwords(config.stopword_path);
    if (!config.merge_rules_path.empty())
        tc.merge_rules = knowmap::load_merge_rules(config.merge_rules_path);
    knowmap::validate_term_config(tc);
    return tc;
}

knowmap::Corpus load_corpus(const PipelineConfig& config, std::vector<knowmap::Diagnostic>& diags) {
    const fs::path path = config.corpus_path.empty() ? fs::path(config.output_dir) / "corpus.csv"
                                                     : fs::path(config.corpus_path);
    if (!fs::exists(path))
        throw knowmap::Error(knowmap::Errc::MissingCorpus,
                             "corpus file '" + path.string() + "' not found; run `knowmap ingest` first");
    knowmap::CorpusLoad load = knowmap::corpus_from_csv(knowmap::read_file(path), path.string());
    diags.insert(diags.end(), load.diagnostics.begin(), load.diagnostics.end());
    if (load.corpus.records.empty())
        throw knowmap::Error(knowmap::Errc::EmptyCorpus, "corpus '" + path.string() + "' has no records");
    return load.corpus;
}

int cmd_ingest(const PipelineConfig& config) {
    if (config.inputs.empty())
        return fail(kExitInput, "InputError", "no inputs configured (config `inputs` or --input)");

    std::vector<std::string> missing;
    std::vector<std::string> contents(config.inputs.size());
    for (size_t i = 0; i < config.inputs.size(); ++i) {
        const auto& in = config.inputs[i];
        if (!fs::exists(in.path)) {
            missing.push_back(in.path);
            continue;
        }
        contents[i] = knowmap::read_file(in.path);
    }
    if (!missing.empty()) {
        std::string list;
        for (const auto& m : missing)
            list += (list.empty() ? "" : ", ") + m;
        return fail(kExitInput, "InputError", "unreadable input(s): " + list);
    }

    // parsing fans out per input file; everything downstream is sequential
    std::vector<knowmap::ParseResult> parsed(config.inputs.size());
    const long n_inputs = static_cast<long>(config.inputs.size());
    #pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n_inputs; ++i) {
        const auto& in = config.inputs[static_cast<size_t>(i)];
        const auto& text = contents[static_cast<size_t>(i)];
        auto& slot = parsed[static_cast<size_t>(i)];
        switch (in.format) {
        case knowmap::Format::BibTex: slot = knowmap::parse_bibtex(text, in.path); break;
        case knowmap::Format::Ris: slot = knowmap::parse_ris(text, in.path); break;
        case knowmap::Format::Medline: slot = knowmap::parse_medline(text, in.path); break;
        case knowmap::Format::Tabular:
            slot = knowmap::parse_tabular(
                text, config.column_map.empty() ? knowmap::canonical_columns() : config.column_map,
                in.path);
            break;
        }
    }

    std::vector<knowmap::Diagnostic> diags;
    std::vector<std::pair<knowmap::Origin, std::vector<knowmap::BibRecord>>> lists;
    long total_entries = 0;
    for (size_t i = 0; i < parsed.size(); ++i) {
        total_entries += static_cast<long>(parsed[i].entries.size());
        lists.emplace_back(config.inputs[i].origin,
                           knowmap::normalize_all(parsed[i], config.inputs[i].origin, diags));
    }
    long normalized = 0;
    for (const auto& [origin, records] : lists)
        normalized += static_cast<long>(records.size());

    const knowmap::Corpus corpus = knowmap::merge_corpora(lists);

    knowmap::RunManifest manifest("ingest", config_echo(config, true));
    manifest.count("input_files", n_inputs);
    manifest.count("parsed_entries", total_entries);
    manifest.count("normalized_records", normalized);
    manifest.count("merged_duplicates", static_cast<long>(corpus.merge_log.size()));
    manifest.count("records", static_cast<long>(corpus.records.size()));
    manifest.add_diagnostics(diags);
    manifest.emit(config.output_dir, "corpus.csv", knowmap::corpus_to_csv(corpus));
    manifest.write(config.output_dir);

    print_diagnostics(diags);
    std::printf("ingest: %ld records (%ld duplicates merged) -> %s/corpus.csv\n",
                static_cast<long>(corpus.records.size()), static_cast<long>(corpus.merge_log.size()),
                config.output_dir.c_str());
    return kExitOk;
}

int cmd_report(const PipelineConfig& config) {
    std::vector<knowmap::Diagnostic> diags;
    const knowmap::Corpus corpus = load_corpus(config, diags);

    const knowmap::IndicatorSummary summary = knowmap::summarize(corpus);
    const knowmap::AnnualProduction annual = knowmap::annual_production(corpus);
    const knowmap::RankingReport sources = knowmap::rank_sources(corpus, config.top_k);
    const knowmap::RankingReport authors = knowmap::rank_authors(corpus, config.top_k);

    knowmap::RunManifest manifest("report", config_echo(config, false));
    manifest.count("records", summary.documents);
    manifest.count("sources", summary.sources);
    manifest.count("authors", summary.authors);
    manifest.count("unknown_year_records", annual.unknown_year);
    manifest.add_diagnostics(diags);

    std::vector<std::pair<std::string, long>> annual_bars;
    for (const auto& [year, n] : annual.counts)
        annual_bars.emplace_back(std::to_string(year), n);

    manifest.emit(config.output_dir, "summary.json", knowmap::summary_json(summary));
    manifest.emit(config.output_dir, "annual.csv", knowmap::annual_csv(annual));
    manifest.emit(config.output_dir, "sources.csv", knowmap::ranking_csv(sources, "source"));
    manifest.emit(config.output_dir, "sources_years.csv", knowmap::cumulative_csv(sources));
    manifest.emit(config.output_dir, "authors.csv", knowmap::ranking_csv(authors, "author"));
    manifest.emit(config.output_dir, "annual.svg",
                  knowmap::svg_bar_chart("Yearly scientific production", annual_bars));
    manifest.emit(config.output_dir, "authors.svg",
                  knowmap::svg_bar_chart("Production by main authors", authors.rows));
    manifest.write(config.output_dir);

    print_diagnostics(diags);
    std::printf("Documents                              %ld\n", summary.documents);
    std::printf("Sources                                %ld\n", summary.sources);
    std::printf("Keywords                               %ld\n", summary.keywords);
    if (summary.period)
        std::printf("Period                                 %d - %d\n", summary.period->first,
                    summary.period->second);
    std::printf("Authors                                %ld\n", summary.authors);
    std::printf("Author Appearances                     %ld\n", summary.author_appearances);
    std::printf("Authors of single-authored documents   %ld\n", summary.authors_single);
    std::printf("Authors of multi-authored documents    %ld\n", summary.authors_multi);
    std::printf("Single-authored documents              %ld\n", summary.single_authored_docs);
    std::printf("Documents per Author                   %.3f\n", summary.documents_per_author);
    std::printf("Authors per Document                   %.2f\n", summary.authors_per_document);
    std::printf("Co-Authors per Documents               %.2f\n", summary.coauthors_per_document);
    if (summary.collaboration_index)
        std::printf("Collaboration Index                    %.2f\n", *summary.collaboration_index);
    else
        std::printf("Collaboration Index                    n/a (no multi-authored documents)\n");
    return kExitOk;
}

int cmd_map(const PipelineConfig& config) {
    std::vector<knowmap::Diagnostic> diags;
    const knowmap::Corpus corpus = load_corpus(config, diags);
    const knowmap::TermConfig tc = term_config_for(config);

    const knowmap::ConceptualMap cmap =
        knowmap::conceptual_map(corpus, config.layer, tc, config.min_df, config.seed, config.resolution);
    const knowmap::CentralityScores term_bc =
        knowmap::betweenness(cmap.graph, config.weighted_betweenness);
    const auto term_deg = knowmap::degree_centrality(cmap.graph);
    const knowmap::OccurrenceTable occurrences = knowmap::occurrence_table(corpus, config.layer, tc);
    const knowmap::OccurrenceTable doc_freq = knowmap::document_frequency(corpus, config.layer, tc);

    const knowmap::WeightedGraph coauth = knowmap::coauthorship_graph(corpus);
    const knowmap::CentralityScores author_bc =
        knowmap::betweenness(coauth, config.weighted_betweenness);

    int n_clusters = 0;
    for (const auto& [label, c] : cmap.partition.assignment)
        n_clusters = std::max(n_clusters, c + 1);

    knowmap::RunManifest manifest("map", config_echo(config, false));
    manifest.count("records", static_cast<long>(corpus.records.size()));
    manifest.count("term_nodes", static_cast<long>(cmap.graph.nodes.size()));
    manifest.count("term_edges", static_cast<long>(cmap.graph.edges.size()));
    manifest.count("term_clusters", n_clusters);
    manifest.count("author_nodes", static_cast<long>(coauth.nodes.size()));
    manifest.count("author_edges", static_cast<long>(coauth.edges.size()));
    manifest.add_diagnostics(diags);

    manifest.emit(config.output_dir, "terms.graphml",
                  knowmap::to_graphml(cmap.graph, &cmap.partition.assignment, &cmap.points,
                                      &term_bc.scores));
    manifest.emit(config.output_dir, "terms.dot",
                  knowmap::to_dot(cmap.graph, &cmap.partition.assignment));
    manifest.emit(config.output_dir, "authors.graphml",
                  knowmap::to_graphml(coauth, nullptr, nullptr, &author_bc.scores));
    manifest.emit(config.output_dir, "authors.dot", knowmap::to_dot(coauth, nullptr));
    manifest.emit(config.output_dir, "centrality.csv", knowmap::centrality_csv(term_bc, term_deg));
    manifest.emit(config.output_dir, "clusters.csv", knowmap::clusters_csv(cmap.partition));
    manifest.emit(config.output_dir, "terms.csv", knowmap::occurrence_csv(occurrences));
    manifest.emit(config.output_dir, "terms_df.csv", knowmap::occurrence_csv(doc_freq));
    manifest.emit(config.output_dir, "map.svg",
                  knowmap::svg_scatter("Conceptual map", cmap.points, cmap.partition.assignment));
    manifest.write(config.output_dir);

    print_diagnostics(diags);
    std::printf("map: %zu terms, %zu edges, %d clusters, Q=%.6f, stress=%.6g -> %s\n",
                cmap.graph.nodes.size(), cmap.graph.edges.size(), n_clusters,
                cmap.partition.modularity, cmap.stress, config.output_dir.c_str());
    return kExitOk;
}

int cmd_synth(const PipelineConfig& config, const knowmap::SynthSpec& spec) {
    const knowmap::Corpus corpus = knowmap::synthesize(spec);

    ordered_json echo = config_echo(config, false);
    echo["synth"] = {{"documents", spec.documents},
                     {"single_authored", spec.single_authored},
                     {"author_appearances", spec.author_appearances},
                     {"authors", spec.authors},
                     {"authors_multi", spec.authors_multi},
                     {"sources", spec.sources},
                     {"topics", spec.topics},
                     {"words_per_topic", spec.words_per_topic},
                     {"year_min", spec.year_min},
                     {"year_max", spec.year_max}};

    knowmap::RunManifest manifest("synth", std::move(echo));
    manifest.count("records", static_cast<long>(corpus.records.size()));
    manifest.emit(config.output_dir, "synth_corpus.csv", knowmap::corpus_to_csv(corpus));
    manifest.write(config.output_dir);

    std::printf("synth: %ld records -> %s/synth_corpus.csv\n",
                static_cast<long>(corpus.records.size()), config.output_dir.c_str());
    return kExitOk;
}

// "--input path:format[:origin]"
InputSpec parse_input_flag(const std::string& value) {
    InputSpec in;
    const auto first = value.rfind(':');
    std::string rest = value;
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        const auto sep = rest.find(':', pos);
        if (sep == std::string::npos) {
            parts.push_back(rest.substr(pos));
            break;
        }
        parts.push_back(rest.substr(pos, sep - pos));
        pos = sep + 1;
    }
    (void)first;
    if (parts.empty() || parts[0].empty())
        throw knowmap::Error(knowmap::Errc::ConfigError, "--input needs path:format[:origin]");
    in.path = parts[0];
    if (parts.size() >= 2) {
        const auto fmt = knowmap::parse_format(parts[1]);
        if (!fmt)
            throw knowmap::Error(knowmap::Errc::ConfigError, "unknown format '" + parts[1] + "'");
        in.format = *fmt;
    } else {
        const auto ext = fs::path(parts[0]).extension().string();
        const auto fmt = knowmap::parse_format(ext.empty() ? "" : ext.substr(1));
        if (!fmt)
            throw knowmap::Error(knowmap::Errc::ConfigError,
                                 "cannot infer format of '" + parts[0] + "'; use path:format");
        in.format = *fmt;
    }
    if (parts.size() >= 3)
        in.origin = knowmap::parse_origin(parts[2]);
    return in;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"knowmap: bibliometric knowledge-mapping pipeline"};
    app.require_subcommand(1);
    app.set_version_flag("--version", knowmap::kToolVersion);

    std::string config_path;
    std::string layer_flag, out_flag;
    std::vector<std::string> input_flags;
    int min_df_flag = -1, top_k_flag = -1;
    long seed_flag = -1;
    double resolution_flag = -1;
    bool weighted_flag = false;
    std::string stopwords_flag, merge_rules_flag, corpus_flag;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--layer", layer_flag, "term layer: title|abstract|keywords");
        sub->add_option("--min-df", min_df_flag, "minimum document frequency for graph terms");
        sub->add_option("--top-k", top_k_flag, "ranking length");
        sub->add_option("--seed", seed_flag, "deterministic seed");
        sub->add_option("--out", out_flag, "output directory");
        sub->add_option("--resolution", resolution_flag, "community resolution");
        sub->add_option("--stopwords", stopwords_flag, "stopword file (one per line)");
        sub->add_option("--merge-rules", merge_rules_flag, "merge-rule file (from<TAB>to)");
        sub->add_option("--corpus", corpus_flag, "corpus CSV path (default <out>/corpus.csv)");
    };

    auto* ingest = app.add_subcommand("ingest", "parse inputs and write the merged corpus");
    add_common(ingest);
    ingest->add_option("--input", input_flags, "input as path:format[:origin] (repeatable)");
    ingest->add_flag("--weighted", weighted_flag, "")->group(""); // accepted everywhere

    auto* report = app.add_subcommand("report", "indicator tables and charts");
    add_common(report);

    auto* mapcmd = app.add_subcommand("map", "term/author networks, clusters, conceptual map");
    add_common(mapcmd);
    mapcmd->add_flag("--weighted", weighted_flag, "use 1/weight shortest paths for betweenness");

    auto* synth = app.add_subcommand("synth", "generate a synthetic corpus with exact counts");
    add_common(synth);
    knowmap::SynthSpec spec;
    synth->add_option("--docs", spec.documents, "total documents")->required();
    synth->add_option("--single", spec.single_authored, "single-authored documents");
    synth->add_option("--appearances", spec.author_appearances, "total author appearances")->required();
    synth->add_option("--authors", spec.authors, "distinct authors")->required();
    synth->add_option("--authors-multi", spec.authors_multi,
                      "authors on multi-authored documents (derived when omitted)");
    synth->add_option("--sources", spec.sources, "distinct sources");
    synth->add_option("--topics", spec.topics, "synthetic topic count");
    synth->add_option("--words-per-topic", spec.words_per_topic, "vocabulary per topic");
    synth->add_option("--year-min", spec.year_min, "first publication year");
    synth->add_option("--year-max", spec.year_max, "last publication year");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp"
            || e.get_name() == "CallForVersion")
            return app.exit(e);
        return fail(kExitConfig, "ConfigError", e.what());
    }

    try {
        PipelineConfig config;
        if (!config_path.empty())
            load_config_file(config_path, config);
        for (const auto& flag : input_flags)
            config.inputs.push_back(parse_input_flag(flag));
        if (!layer_flag.empty()) {
            const auto parsed = knowmap::parse_layer(layer_flag);
            if (!parsed)
                throw knowmap::Error(knowmap::Errc::ConfigError, "unknown layer '" + layer_flag + "'");
            config.layer = *parsed;
        }
        if (min_df_flag >= 0) {
            if (min_df_flag < 1)
                throw knowmap::Error(knowmap::Errc::ConfigError, "min_df must be >= 1");
            config.min_df = min_df_flag;
        }
        if (top_k_flag >= 0) {
            if (top_k_flag < 1)
                throw knowmap::Error(knowmap::Errc::ConfigError, "top_k must be >= 1");
            config.top_k = top_k_flag;
        }
        if (seed_flag >= 0)
            config.seed = static_cast<unsigned>(seed_flag);
        if (resolution_flag >= 0)
            config.resolution = resolution_flag;
        if (weighted_flag)
            config.weighted_betweenness = true;
        if (!stopwords_flag.empty())
            config.stopword_path = stopwords_flag;
        if (!merge_rules_flag.empty())
            config.merge_rules_path = merge_rules_flag;
        if (!out_flag.empty())
            config.output_dir = out_flag;
        if (!corpus_flag.empty())
            config.corpus_path = corpus_flag;

        if (ingest->parsed())
            return cmd_ingest(config);
        if (report->parsed())
            return cmd_report(config);
        if (mapcmd->parsed())
            return cmd_map(config);
        if (synth->parsed()) {
            spec.seed = config.seed;
            return cmd_synth(config, spec);
        }
        return kExitConfig;
    } catch (const knowmap::Error& e) {
        return fail(exit_code_for(e), tag_for(e), e.what());
    } catch (const std::exception& e) {
        return fail(kExitConfig, "ConfigError", e.what());
    }
}
