#ifndef EVIDENTIA_JSON_IO_HPP
#define EVIDENTIA_JSON_IO_HPP

#include <filesystem>
#include <string>

#include "evidentia/imprecise.hpp"
#include "evidentia/mass.hpp"

namespace evidentia {

// Body of evidence wire format:
//   {"frame": ["a", "b", ...],
//    "masses": [{"set": ["a"] | [] | "*", "mass": 0.5}, ...]}
// [] is the empty set, "*" the whole frame. Serialization is
// deterministic: sets are listed by canonical bit-pattern order and
// numbers carry 17 significant digits, enough to reproduce the double.
//
// P-box wire format:
//   {"domain": ["a", ...], "lower": [...], "upper": [...]}
//
// Hypergraph wire format:
//   {"frame": ["a", ...], "edges": [["a", "b"], ...]}

BodyOfEvidence body_from_json(const std::string& text);
std::string body_to_json(const BodyOfEvidence& body);

PBox pbox_from_json(const std::string& text);
std::string pbox_to_json(const PBox& pb);

Hypergraph hypergraph_from_json(const std::string& text);

std::string intervals_to_json(const IntervalMassList& im);

BodyOfEvidence load_body(const std::filesystem::path& path);
PBox load_pbox(const std::filesystem::path& path);
Hypergraph load_hypergraph(const std::filesystem::path& path);

/// Shortest text with 17 significant digits that reparses to `value`.
std::string format_number(double value);

} // namespace evidentia

#endif
