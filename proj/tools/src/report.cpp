#include "report.hpp"

#include <vector>

#include "latsnake/errors.hpp"

namespace latsnake::cli {

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_text(v[i]);
        return s;
    }
    return v.dump();
}

bool is_flat_array(const Json& v) {
    if (!v.is_array()) return false;
    for (const Json& x : v) {
        if (x.is_object()) return false;
    }
    return true;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

void write_text(std::ostream& out, const Json& v, const std::string& indent) {
    for (const auto& [key, value] : v.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            write_text(out, value, indent + "  ");
        } else if (value.is_array() && !is_flat_array(value)) {
            out << indent << key << ": " << value.size() << " entries\n";
            for (const Json& row : value) {
                out << indent << "  -";
                if (row.is_object()) {
                    for (const auto& [k, x] : row.items()) out << ' ' << k << '=' << scalar_text(x);
                } else {
                    out << ' ' << scalar_text(row);
                }
                out << '\n';
            }
        } else {
            out << indent << key << ": " << scalar_text(value) << '\n';
        }
    }
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, out);
    } else if (v.is_array() && !is_flat_array(v)) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), out);
    } else {
        out.emplace_back(prefix, scalar_text(v));
    }
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "text") return Format::Text;
    throw InvalidInput("unknown format '" + name + "' (json, csv or text)");
}

void write_report(std::ostream& out, const Json& report, Format format) {
    switch (format) {
        case Format::Json:
            out << report.dump(2) << '\n';
            return;
        case Format::Text:
            write_text(out, report, "");
            return;
        case Format::Csv:
            break;
    }
    if (report.contains("rows") && report["rows"].is_array() && !report["rows"].empty() &&
        report["rows"][0].is_object()) {
        const Json& rows = report["rows"];
        bool first = true;
        for (const auto& [k, x] : rows[0].items()) {
            out << (first ? "" : ",") << csv_cell(k);
            first = false;
        }
        out << '\n';
        for (const Json& row : rows) {
            first = true;
            for (const auto& [k, x] : row.items()) {
                out << (first ? "" : ",") << csv_cell(scalar_text(x));
                first = false;
            }
            out << '\n';
        }
        return;
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    flatten(report, "", pairs);
    out << "key,value\n";
    for (const auto& [k, v] : pairs) out << csv_cell(k) << ',' << csv_cell(v) << '\n';
}

}  // namespace latsnake::cli
