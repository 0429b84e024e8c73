#include "boardmagic/document.hpp"

#include <json.hpp>

namespace boardmagic {

namespace {

using nlohmann::json;

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& rows, const char* name, int er, int ec) {
    if (!rows.is_array())
        throw DocumentParseError(std::string(name) + " must be an array of rows");
    if (static_cast<int>(rows.size()) != er)
        throw InvalidDesign(std::string(name) + " has " + std::to_string(rows.size()) +
                            " rows, expected " + std::to_string(er));
    IntMatrix m(er, ec);
    for (int i = 0; i < er; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != ec)
            throw InvalidDesign(std::string(name) + " row " + std::to_string(i) +
                                " must hold " + std::to_string(ec) + " integers");
        for (int j = 0; j < ec; ++j) {
            const json& v = row[static_cast<std::size_t>(j)];
            if (!v.is_number_integer())
                throw InvalidDesign(std::string(name) + "[" + std::to_string(i) + "][" +
                                    std::to_string(j) + "] is not an integer");
            m.at(i, j) = v.get<std::int64_t>();
        }
    }
    return m;
}

}  // namespace

std::string to_document(const Design& d) {
    json doc;
    doc["schema_version"] = kDocumentSchemaVersion;
    doc["p"] = d.board.p;
    doc["q"] = d.board.q;
    doc["r"] = d.board.r;
    doc["pq"] = matrix_to_json(d.pq);
    doc["pr"] = matrix_to_json(d.pr);
    doc["qr"] = matrix_to_json(d.qr);
    return doc.dump(2) + "\n";
}

Design from_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentParseError(e.what());
    }
    if (!doc.is_object()) throw DocumentParseError("document root must be an object");
    if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer())
        throw DocumentParseError("missing integer schema_version");
    if (doc["schema_version"].get<int>() != kDocumentSchemaVersion)
        throw DocumentParseError("unsupported schema_version " +
                                 doc["schema_version"].dump());
    for (const char* key : {"p", "q", "r"})
        if (!doc.contains(key) || !doc[key].is_number_integer())
            throw DocumentParseError(std::string("missing integer field '") + key + "'");
    Design d;
    d.board = Board{doc["p"].get<int>(), doc["q"].get<int>(), doc["r"].get<int>()};
    if (!d.board.valid()) throw InvalidDesign("board dimensions must all be >= 1");
    for (const char* key : {"pq", "pr", "qr"})
        if (!doc.contains(key))
            throw DocumentParseError(std::string("missing matrix '") + key + "'");
    d.pq = matrix_from_json(doc["pq"], "pq", d.board.p, d.board.q);
    d.pr = matrix_from_json(doc["pr"], "pr", d.board.p, d.board.r);
    d.qr = matrix_from_json(doc["qr"], "qr", d.board.q, d.board.r);
    auto issues = validate(d);
    if (!issues.empty()) throw InvalidDesign(issues.front());
    return d;
}

}  // namespace boardmagic
