#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "bes/constructors.hpp"
#include "bes/hypergraph.hpp"
#include "bes/structure.hpp"
#include "bes/sunflower.hpp"

namespace bes {

/// "h3 <n> <m>" then one "a b c" line per edge, newline-terminated.
std::string serialize_hypergraph(const Hypergraph3& h);

/// Strict parser for the text format. '#' lines are allowed before the
/// header only; a missing final newline is tolerated. Throws ParseError.
Hypergraph3 parse_hypergraph(std::string_view text);

/// "witness A=<list> B=<list> u=<v> v=<v> k=<int>\n".
std::string serialize_witness(const EligibilityWitness& w);

/// Parses one witness line against a hypergraph with `universe` vertices.
/// `line_number` only feeds the diagnostics.
EligibilityWitness parse_witness(std::string_view line, std::size_t universe, std::size_t line_number = 1);

struct HypergraphFile {
    Hypergraph3 hypergraph;
    std::optional<EligibilityWitness> witness;
};

/// A hypergraph block optionally followed by one witness line.
HypergraphFile parse_hypergraph_file(std::string_view text);
std::string serialize_hypergraph_file(const Hypergraph3& h, const std::optional<EligibilityWitness>& w);

/// Glue steps as {"steps":[{"copies":m,"copy_maps":[[...],...]},...]}.
std::string provenance_json(const GluedHypergraph& g);

/// 16 lowercase hex digits.
std::string format_hash(std::uint64_t hash);

std::string sunflower_certificate_json(const SunflowerCertificate& cert, const std::string& host_name,
                                       std::uint64_t host_hash);
std::string configuration_certificate_json(const ConfigurationCertificate& cert, const std::string& host_name);

struct CertificateFile {
    enum class Kind { sunflower, configuration };
    Kind kind = Kind::configuration;
    std::string host;
    std::uint64_t host_hash = 0;
    std::optional<SunflowerCertificate> sunflower;
    std::optional<ConfigurationCertificate> configuration;
};

/// Throws InputError on malformed JSON or missing fields. Configuration
/// vertex sets use `host_vertices` as their universe.
CertificateFile parse_certificate_json(std::string_view text, std::size_t host_vertices);

/// Whole file as a string; InputError when it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace bes
