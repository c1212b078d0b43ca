#pragma once

#include <string>

#include <json.hpp>

#include "nilpair/canon.hpp"
#include "nilpair/orbit.hpp"

namespace nilpair {

/// An input pair of matrices plus its field designator, as read from a
/// JSON file: {"field": "Q" | "GF(p)", "A": [["0","1"],...], "B": [...]}.
/// Scalars travel as canonical strings so exactness survives any JSON
/// reader.
struct PairFile {
    FieldSpec field;
    DenseMatrix a;
    DenseMatrix b;
};

PairFile read_pair_file(const std::string& path);
PairFile pair_from_json(const nlohmann::json& doc);

nlohmann::json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const nlohmann::json& rows, const FieldSpec& spec);

nlohmann::json short_form_to_json(const ShortForm& sf);
ShortForm short_form_from_json(const nlohmann::json& doc, const FieldSpec& spec);

/// Full canonicalization result: rank, form, canonical short form,
/// the canonical pair expanded to full matrices, the witness and the
/// jordanizer. Scalars are canonical strings; the field is embedded.
nlohmann::json canon_result_to_json(const CanonResult& result, const FieldSpec& spec,
                                    std::size_t m, std::size_t n);

nlohmann::json orbit_report_to_json(const OrbitReport& report);

} // namespace nilpair
