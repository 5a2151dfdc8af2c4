#include "ieq/harness/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace ieq::harness {

Json number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

namespace {

std::string csv_cell(const Json& v) {
    std::string s;
    if (v.is_string()) {
        s = v.get<std::string>();
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ';';
            s += csv_cell(v[i]);
        }
    } else {
        s = v.dump();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + "\"";
    }
    return s;
}

void flatten(const std::string& prefix, const Json& v, std::ostringstream& os) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) flatten(prefix.empty() ? it.key() : prefix + "." + it.key(), *it, os);
        return;
    }
    os << csv_cell(prefix) << ',' << csv_cell(v) << '\n';
}

}  // namespace

std::string render(const Report& report, Format format, std::uint64_t seed) {
    if (format == Format::Json) {
        Json j;
        j["schema"] = kSchema;
        j["command"] = report.command;
        j["seed"] = seed;
        for (auto it = report.fields.begin(); it != report.fields.end(); ++it) j[it.key()] = *it;
        if (!report.table_name.empty()) {
            Json rows = Json::array();
            for (const auto& row : report.rows) {
                Json r;
                for (std::size_t c = 0; c < report.columns.size(); ++c) r[report.columns[c]] = row[c];
                rows.push_back(std::move(r));
            }
            j[report.table_name] = std::move(rows);
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    if (!report.table_name.empty()) {
        for (std::size_t c = 0; c < report.columns.size(); ++c) os << (c ? "," : "") << csv_cell(report.columns[c]);
        os << '\n';
        for (const auto& row : report.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_cell(row[c]);
            os << '\n';
        }
        return os.str();
    }
    os << "key,value\n";
    os << "schema," << kSchema << '\n';
    os << "command," << report.command << '\n';
    os << "seed," << seed << '\n';
    flatten("", report.fields, os);
    return os.str();
}

}  // namespace ieq::harness
