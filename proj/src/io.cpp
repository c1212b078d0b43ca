#include "nilpair/io.hpp"

#include <fstream>

namespace nilpair {

using nlohmann::json;

namespace {

DenseMatrix parse_matrix(const json& rows, const FieldSpec& spec, const std::string& name) {
    if (!rows.is_array() || rows.empty())
        throw ParseError("\"" + name + "\" must be a non-empty array of rows");
    std::size_t height = rows.size();
    if (!rows[0].is_array() || rows[0].empty())
        throw ParseError("\"" + name + "\" rows must be non-empty arrays");
    std::size_t width = rows[0].size();
    DenseMatrix out(spec, height, width);
    for (std::size_t i = 0; i < height; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != width)
            throw ParseError("\"" + name + "\" is not rectangular");
        for (std::size_t j = 0; j < width; ++j) {
            if (!row[j].is_string())
                throw ParseError("\"" + name + "\" entries must be scalar strings");
            out.set(i, j, Scalar::parse(row[j].get<std::string>(), spec));
        }
    }
    return out;
}

std::vector<Scalar> parse_row(const json& row, const FieldSpec& spec, const std::string& name) {
    if (!row.is_array()) throw ParseError("\"" + name + "\" must be an array of scalar strings");
    std::vector<Scalar> out;
    for (const json& v : row) {
        if (!v.is_string()) throw ParseError("\"" + name + "\" entries must be scalar strings");
        out.push_back(Scalar::parse(v.get<std::string>(), spec));
    }
    return out;
}

json row_to_json(const std::vector<Scalar>& row) {
    json out = json::array();
    for (const Scalar& v : row) out.push_back(v.str());
    return out;
}

} // namespace

PairFile pair_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("pair file must be a JSON object");
    if (!doc.contains("field") || !doc["field"].is_string())
        throw ParseError("pair file needs a \"field\" string (\"Q\" or \"GF(p)\")");
    if (!doc.contains("A") || !doc.contains("B"))
        throw ParseError("pair file needs matrices \"A\" and \"B\"");
    try {
        FieldSpec spec = FieldSpec::parse(doc["field"].get<std::string>());
        DenseMatrix a = parse_matrix(doc["A"], spec, "A");
        DenseMatrix b = parse_matrix(doc["B"], spec, "B");
        if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
            throw ParseError("A and B must be square matrices of equal order");
        return PairFile{spec, std::move(a), std::move(b)};
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        // a non-prime modulus or a zero denominator in a file is still
        // malformed input
        throw ParseError(e.what());
    }
}

PairFile read_pair_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) throw ParseError("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return pair_from_json(doc);
}

json matrix_to_json(const DenseMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        out.push_back(row);
    }
    return out;
}

DenseMatrix matrix_from_json(const json& rows, const FieldSpec& spec) {
    return parse_matrix(rows, spec, "matrix");
}

json short_form_to_json(const ShortForm& sf) {
    json out;
    out["m"] = sf.m;
    out["n"] = sf.n;
    out["a"] = row_to_json(sf.a);
    out["b"] = row_to_json(sf.b);
    out["c"] = row_to_json(sf.c);
    out["d"] = row_to_json(sf.d);
    return out;
}

ShortForm short_form_from_json(const json& doc, const FieldSpec& spec) {
    if (!doc.is_object() || !doc.contains("m") || !doc.contains("n"))
        throw ParseError("short form needs \"m\", \"n\" and rows \"a\", \"b\", \"c\", \"d\"");
    std::size_t m = doc["m"].get<std::size_t>();
    std::size_t n = doc["n"].get<std::size_t>();
    return ShortForm(m, n, parse_row(doc.at("a"), spec, "a"), parse_row(doc.at("b"), spec, "b"),
                     parse_row(doc.at("c"), spec, "c"), parse_row(doc.at("d"), spec, "d"));
}

json canon_result_to_json(const CanonResult& result, const FieldSpec& spec, std::size_t m,
                          std::size_t n) {
    json out;
    out["field"] = spec.str();
    out["m"] = m;
    out["n"] = n;
    out["rank"] = result.rank;
    out["form"] = to_string(result.form);
    out["jordanizer"] = matrix_to_json(result.jordanizer);
    if (result.canonical) {
        out["canonical_short_form"] = short_form_to_json(*result.canonical);
        out["canonical_A"] =
            matrix_to_json(DenseMatrix::jordan_matrix(spec, JordanType({m, n})));
        out["canonical_B"] = matrix_to_json(expand(*result.canonical));
    }
    if (result.witness) out["witness"] = matrix_to_json(*result.witness);
    return out;
}

json orbit_report_to_json(const OrbitReport& report) {
    json out;
    out["m"] = report.m;
    out["n"] = report.n;
    out["p"] = report.p;
    out["total_nilc"] = report.total_nilc;
    out["orbit_count"] = report.orbit_count;
    out["decomposable_orbits"] = report.decomposable_orbits;
    out["indecomposable_orbits"] = report.indecomposable_orbits;
    out["template_count"] = report.template_count;
    out["conjectured_indecomposable"] = report.conjectured_indecomposable;
    out["certified"] = report.certified;
    json hits = json::object();
    for (const auto& [orbit, forms] : report.canonical_hits)
        hits[std::to_string(orbit)] = forms;
    out["canonical_hits"] = std::move(hits);
    out["findings"] = report.findings;
    out["violations"] = report.violations;
    return out;
}

} // namespace nilpair
