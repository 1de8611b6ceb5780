#pragma once

#include "stdpairs/decomp.hpp"
#include "stdpairs/errors.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace stdpairs {

using Json = nlohmann::ordered_json;

// Reads and parses a JSON file; ParseError on I/O or syntax problems.
Json read_json_file(const std::string &path);
Json parse_json(const std::string &text);

// {"matrix": [[row], ...]}
IntMatrix parse_matrix(const Json &j);
Json emit_matrix(const IntMatrix &m);

// {"generators": [[degree], ...]}
std::vector<IntVec> parse_generators(const Json &j);
Json emit_ideal(const MonomialIdeal &ideal);

// {"pairs": [{"root": [...], "face": [1-based columns]}, ...]}
std::vector<Pair> parse_pairs(const Configuration &config, const Json &j);
Json emit_face(const Configuration &config, FaceId f);
Json emit_pair(const Configuration &config, const Pair &p);
// Pairs plus overlap classes, class order and maximal classes.
Json emit_standard_pairs(const Configuration &config, const StandardPairSet &s);

Json emit_configuration(const Configuration &config);
Json emit_faces(const Configuration &config, const std::vector<FaceId> &faces);
Json emit_multiplicity(const Configuration &config, const MultiplicityTable &t);
Json emit_decomposition(const Configuration &config,
                        const DecompositionReport &report);
DecompositionReport parse_decomposition(ConfigPtr config, const Json &j);

Json emit_error(const Error &e);

// Human-readable variants.
std::string text_vector(const IntVec &v);
std::string text_face(const Configuration &config, FaceId f);
std::string text_standard_pairs(const Configuration &config,
                                const StandardPairSet &s);
std::string text_ideal(const MonomialIdeal &ideal);
std::string text_decomposition(const Configuration &config,
                               const DecompositionReport &report);

} // namespace stdpairs
