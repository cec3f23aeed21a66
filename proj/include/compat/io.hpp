#pragma once

#include <compat/solver.hpp>

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace compat {

class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Instance
{
    Graph graph;
    IncompatSystem system;

    friend auto operator==(const Instance &, const Instance &) -> bool = default;
};

/// Text lines `n <count>`, `e <u> <v>`, `i <v> <a> <b>`; '#' starts a comment.
auto parse_instance_text(const std::string & text) -> Instance;

/// {"n": .., "edges": [[u,v],..], "incompat": [[v,a,b],..]}
auto parse_instance_json(const std::string & text) -> Instance;

/// JSON when the first non-blank character is '{', text otherwise.
auto parse_instance(const std::string & text) -> Instance;

auto emit_instance_text(const Graph & g, const IncompatSystem & f, const std::vector<std::string> & comments = {})
    -> std::string;
auto emit_instance_json(const Graph & g, const IncompatSystem & f) -> std::string;

/// Throws ParseError when the file cannot be read.
auto read_file(const std::string & path) -> std::string;
/// Throws std::runtime_error when the file cannot be written.
auto write_file(const std::string & path, const std::string & content) -> void;

/// Vertex list separated by commas or blanks.
auto parse_cycle(const std::string & text) -> Cycle;

auto report_to_json(const SolveReport & report) -> nlohmann::ordered_json;
auto config_to_json(const SolverConfig & config) -> nlohmann::ordered_json;

/// 64-bit FNV-1a, used to fingerprint input files.
auto fnv1a64(const std::string & bytes) -> std::uint64_t;

} // namespace compat
