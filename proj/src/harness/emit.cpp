#include "goedisc/harness/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "goedisc/error.hpp"
#include "json.hpp"

namespace goedisc::harness {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string cell_text(const Cell& cell, bool json) {
    struct Visitor {
        bool json;
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(std::uint64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return json && !std::isfinite(v) ? "null" : format_real(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const {
            return json ? nlohmann::json(v).dump() : csv_field(v);
        }
    };
    return std::visit(Visitor{json}, cell);
}

double parse_real(const std::string& s) {
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters in '" + s + "'");
    return v;
}

double json_real(const nlohmann::json& v) {
    return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
}

}  // namespace

const std::vector<std::string>& prediction_columns() {
    static const std::vector<std::string> columns{"n",         "m",      "trial", "seed",      "disc",
                                                  "predicted", "xi_hat", "ratio", "runtime_ms"};
    return columns;
}

Table prediction_table(const std::vector<PredictionRecord>& records) {
    Table t;
    t.columns = prediction_columns();
    t.rows.reserve(records.size());
    for (const PredictionRecord& r : records) {
        t.rows.push_back({std::int64_t{r.n}, static_cast<std::int64_t>(r.m), std::int64_t{r.trial}, r.seed, r.disc,
                          r.predicted, r.xi_hat, r.ratio, r.runtime_ms});
    }
    return t;
}

std::string format_real(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_csv(const Table& table, std::ostream& os) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << csv_field(table.columns[i]);
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i], false);
        os << '\n';
    }
}

void write_json(const Table& table, std::ostream& os) {
    os << '[';
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        os << (r ? ",\n " : "\n ") << '{';
        const auto& row = table.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? ", " : "") << nlohmann::json(table.columns[i]).dump() << ": " << cell_text(row[i], true);
        }
        os << '}';
    }
    os << (table.rows.empty() ? "]\n" : "\n]\n");
}

void emit(const Table& table, OutputFormat format, const std::string& path) {
    auto write = [&](std::ostream& os) {
        if (format == OutputFormat::csv) {
            write_csv(table, os);
        } else {
            write_json(table, os);
        }
    };
    if (path.empty()) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    write(file);
    file.flush();
    if (!file) throw IoError("write to '" + path + "' failed");
}

std::vector<PredictionRecord> parse_prediction_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw IoError("prediction CSV: missing header");
    std::string expected;
    for (const auto& c : prediction_columns()) expected += (expected.empty() ? "" : ",") + c;
    if (line != expected) throw IoError("prediction CSV: unexpected header '" + line + "'");
    std::vector<PredictionRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) f.push_back(field);
        if (f.size() != prediction_columns().size()) throw IoError("prediction CSV: bad row '" + line + "'");
        PredictionRecord r;
        r.n = std::stoi(f[0]);
        r.m = static_cast<std::size_t>(std::stoull(f[1]));
        r.trial = std::stoi(f[2]);
        r.seed = std::stoull(f[3]);
        r.disc = parse_real(f[4]);
        r.predicted = parse_real(f[5]);
        r.xi_hat = parse_real(f[6]);
        r.ratio = parse_real(f[7]);
        r.runtime_ms = std::stoll(f[8]);
        out.push_back(r);
    }
    return out;
}

std::vector<PredictionRecord> parse_prediction_json(std::istream& is) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("prediction JSON: ") + e.what());
    }
    if (!doc.is_array()) throw IoError("prediction JSON: expected an array");
    std::vector<PredictionRecord> out;
    for (const auto& o : doc) {
        PredictionRecord r;
        r.n = o.at("n").get<int>();
        r.m = o.at("m").get<std::size_t>();
        r.trial = o.at("trial").get<int>();
        r.seed = o.at("seed").get<std::uint64_t>();
        r.disc = json_real(o.at("disc"));
        r.predicted = json_real(o.at("predicted"));
        r.xi_hat = json_real(o.at("xi_hat"));
        r.ratio = json_real(o.at("ratio"));
        r.runtime_ms = o.at("runtime_ms").get<std::int64_t>();
        out.push_back(r);
    }
    return out;
}

}  // namespace goedisc::harness
