#include "hnum/records.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hnum/rational.hpp"

namespace hnum {

using nlohmann::json;

InputError::InputError(const std::string& what, std::size_t l, std::size_t c)
    : std::runtime_error(l ? what + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")" : what),
      reason(what),
      line(l),
      column(c) {}

namespace {

void line_column(const std::string& text, std::size_t byte, std::size_t& line, std::size_t& col) {
    line = 1;
    col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
}

Rational parse_entry(const json& v, const std::string& where) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Rational(Integer(std::to_string(v.get<unsigned long long>())));
        return Rational(Integer(std::to_string(v.get<long long>())));
    }
    if (v.is_string()) {
        auto q = parse_rational(v.get<std::string>());
        if (!q) throw InputError(where + ": entry \"" + v.get<std::string>() + "\" is not an integer or p/q");
        return *q;
    }
    if (v.is_number_float()) throw InputError(where + ": floating-point entries are not accepted");
    throw InputError(where + ": matrix entries must be integers or \"p/q\" strings");
}

RatMatrix parse_matrix(const json& v, const std::string& where) {
    if (!v.is_array()) throw InputError(where + " must be an array of rows");
    const std::size_t rows = v.size();
    if (rows == 0) return RatMatrix(0, 0);
    RatMatrix m(rows, rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = v[i];
        if (!row.is_array()) throw InputError(where + ": row " + std::to_string(i + 1) + " is not an array");
        if (row.size() != rows)
            throw InputError(where + ": row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(rows) + " (matrix must be square)");
        for (std::size_t j = 0; j < rows; ++j)
            m(i, j) = parse_entry(row[j], where + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
    }
    return m;
}

json matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            if (q.get_den() == 1 && q.get_num().fits_slong_p())
                row.push_back(q.get_num().get_si());
            else
                row.push_back(to_string(q));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::vector<LinkRecord> parse_link_records(const std::string& text, bool allow_variation_only) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 0, col = 0;
        line_column(text, e.byte > 0 ? e.byte - 1 : 0, line, col);
        std::string msg = e.what();
        throw InputError("malformed JSON: " + msg, line, col);
    }
    if (!doc.is_array()) throw InputError("input must be a JSON array of link records", 1, 1);
    std::vector<LinkRecord> out;
    for (std::size_t r = 0; r < doc.size(); ++r) {
        const json& item = doc[r];
        const std::string where = "record " + std::to_string(r + 1);
        if (!item.is_object()) throw InputError(where + " is not an object");
        LinkRecord rec;
        if (!item.contains("name") || !item["name"].is_string()) throw InputError(where + ": missing string field \"name\"");
        rec.name = item["name"].get<std::string>();
        const std::string w = where + " (" + rec.name + ")";
        if (item.contains("seifert")) rec.seifert = parse_matrix(item["seifert"], w + " seifert");
        if (item.contains("monodromy")) rec.monodromy = parse_matrix(item["monodromy"], w + " monodromy");
        if (item.contains("variation")) rec.variation = parse_matrix(item["variation"], w + " variation");
        if (item.contains("components")) {
            if (!item["components"].is_number_integer() || item["components"].get<long long>() < 1)
                throw InputError(w + ": \"components\" must be a positive integer");
            rec.components = static_cast<int>(item["components"].get<long long>());
        }
        if (item.contains("tags")) {
            if (!item["tags"].is_array()) throw InputError(w + ": \"tags\" must be an array of strings");
            for (const auto& t : item["tags"]) {
                if (!t.is_string()) throw InputError(w + ": \"tags\" must be an array of strings");
                rec.tags.push_back(t.get<std::string>());
            }
        }
        if (!rec.seifert && !(allow_variation_only && rec.variation))
            throw InputError(w + ": missing field \"seifert\"");
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<LinkRecord> read_link_records(const std::string& path, bool allow_variation_only) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_link_records(ss.str(), allow_variation_only);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.reason, e.line, e.column);
    }
}

std::string write_link_records(const std::vector<LinkRecord>& records) {
    json doc = json::array();
    for (const auto& r : records) {
        json item;
        item["name"] = r.name;
        if (r.seifert) item["seifert"] = matrix_json(*r.seifert);
        if (r.components) item["components"] = *r.components;
        if (!r.tags.empty()) item["tags"] = r.tags;
        if (r.monodromy) item["monodromy"] = matrix_json(*r.monodromy);
        if (r.variation) item["variation"] = matrix_json(*r.variation);
        doc.push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

}  // namespace hnum
