#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace knowmap {

enum class Errc {
    EmptyCorpus,
    NoTerms,
    NoEdges,
    EmptyGraph,
    InfeasibleSpec,
    MissingCorpus,
    InputError,
    ConfigError,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message) : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace knowmap
