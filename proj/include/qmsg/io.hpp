#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "qmsg/ensemble.hpp"
#include "qmsg/measurement.hpp"

namespace qmsg::io {

using json = nlohmann::ordered_json;

// Complex scalars travel as [re, im] pairs of decimal floats.
complexd read_complex(const json& j);
json write_complex(complexd v);
json write_vector(const std::vector<complexd>& v);
json write_matrix(const DenseMatrix& m);

struct AlphabetFile {
  Alphabet alphabet;
  std::optional<std::vector<double>> priors;
};

// { "letters": [{ "label": str, "vector": [[re,im],...] }...],
//   "priors": [float,...] (optional) }
AlphabetFile parse_alphabet(const json& j);
AlphabetFile load_alphabet(const std::filesystem::path& path);

// { "K": int, "N": int, "terms": [{ "digits": [int,...], "amp": [re,im] }...] }
ManyLetterState parse_state(const json& j);
json write_state(const ManyLetterState& state);

// { "diagonal": [{ "digits": [...], "value": float }...], "default": float }
// or { "dense": [[[re,im],...],...] }; the shape comes from context.
Observable parse_observable(const json& j, const SpaceShape& shape);

struct EnsembleFile {
  Alphabet alphabet;
  SpaceShape shape;
  Ensemble ensemble;
  bool from_grand_canonical = false;
};

// { "alphabet": <alphabet object | file path>, "N": int (default 8),
//   "entries": [{ "state": <state | {"product": [letter indices]}>, "p": f }...] }
// or the grand-canonical shorthand
// { "alphabet": ..., "grand_canonical": { "priors": [...], "lambdas": [...] } },
// which expands to the explicit product-message ensemble with
// p(x^n) = lambda_n p(x_1) ... p(x_n).
//
// base_dir resolves a relative alphabet file reference; max_length_override
// replaces the file's N when set.
EnsembleFile parse_ensemble(const json& j, const std::filesystem::path& base_dir,
                            std::optional<std::size_t> max_length_override = {});
EnsembleFile load_ensemble(const std::filesystem::path& path,
                           std::optional<std::size_t> max_length_override = {});

// { "outcomes": [{ "label", "count", "freq" }...],
//   "mean_length", "variance", "seed", "trials" }
json write_histogram(const Histogram& h);

json load_json(const std::filesystem::path& path);

// FNV-1a 64-bit digest as 16 hex characters.
std::string fnv1a_hex(std::string_view bytes);
std::string file_digest(const std::filesystem::path& path);

// The build-time tolerances, for report provenance.
json tolerance_report();

}  // namespace qmsg::io
