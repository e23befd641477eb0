#pragma once

#include "knowmap/record.hpp"

namespace knowmap {

// Deterministic corpus generator whose aggregate counts hit the spec exactly:
// documents, single-authored documents, total author appearances, distinct
// authors (split into single-only and multi pools).
struct SynthSpec {
    long documents = 0;
    long single_authored = 0;
    long author_appearances = 0;
    long authors = 0;
    long authors_multi = -1; // derived when negative
    int sources = 24;
    int topics = 4;
    int words_per_topic = 30;
    int year_min = 2019;
    int year_max = 2020;
    unsigned seed = 1;
};

// Throws Error(InfeasibleSpec) when the counts cannot coexist.
Corpus synthesize(const SynthSpec& spec);

} // namespace knowmap
