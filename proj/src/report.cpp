#include "angelesco/report.hpp"

#include <json.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace angelesco {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string file_stem(const std::string& name) {
    std::string out;
    for (char ch : name) {
        if (std::isalnum(static_cast<unsigned char>(ch))) {
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        } else if (!out.empty() && out.back() != '_') {
            out += '_';
        }
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out.empty() ? "check" : out;
}

ordered_json row_json(const CheckRow& r) {
    ordered_json j;
    j["n_total"] = r.n_total;
    j["i"] = r.i + 1;
    j["z_re"] = to_string_full(r.z.real());
    j["z_im"] = to_string_full(r.z.imag());
    j["lhs_re"] = to_string_full(r.lhs.real());
    j["lhs_im"] = to_string_full(r.lhs.imag());
    j["rhs_re"] = to_string_full(r.rhs.real());
    j["rhs_im"] = to_string_full(r.rhs.imag());
    j["rel_err"] = to_string_full(r.rel_err);
    j["residual_flags"] = r.flags;
    return j;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("report: cannot write " + path.string());
    out << body;
}

}  // namespace

real_t CheckReport::max_rel_err() const {
    real_t m = 0;
    for (const CheckRow& r : rows) m = std::max(m, r.rel_err);
    return m;
}

int CheckReport::flagged_rows() const {
    int k = 0;
    for (const CheckRow& r : rows) k += !r.flags.empty();
    return k;
}

bool CheckReport::pass() const {
    if (forced_fail) return false;
    if (threshold <= 0 || rows.empty()) return true;
    return max_rel_err() < threshold;
}

std::string to_csv(const CheckReport& r) {
    std::ostringstream out;
    out << "n_total,i,z_re,z_im,lhs_re,lhs_im,rhs_re,rhs_im,rel_err,"
           "residual_flags\n";
    for (const CheckRow& row : r.rows) {
        out << row.n_total << ',' << row.i + 1 << ','
            << to_string_full(row.z.real()) << ','
            << to_string_full(row.z.imag()) << ','
            << to_string_full(row.lhs.real()) << ','
            << to_string_full(row.lhs.imag()) << ','
            << to_string_full(row.rhs.real()) << ','
            << to_string_full(row.rhs.imag()) << ','
            << to_string_full(row.rel_err) << ',' << row.flags << '\n';
    }
    return out.str();
}

std::string to_row_json(const CheckReport& r) {
    ordered_json j;
    j["schema"] = "angelesco-rows/1";
    j["name"] = r.name;
    j["threshold"] = to_string_full(r.threshold);
    j["rows"] = ordered_json::array();
    for (const CheckRow& row : r.rows) j["rows"].push_back(row_json(row));
    return j.dump(2) + "\n";
}

std::string summary_json(const std::vector<CheckReport>& checks,
                         const Scenario& sc, const std::string& format) {
    ordered_json j;
    j["schema"] = "angelesco-summary/1";
    j["format"] = format;
    j["precision_bits"] = sc.precision_bits;
    j["grid_n"] = sc.grid_n;
    j["tol"] = to_string_full(sc.tol);
    j["config"] = ordered_json::array();
    for (const auto& [key, value] : sc.entries) {
        j["config"].push_back(ordered_json::array({key, value}));
    }
    j["checks"] = ordered_json::array();
    bool all = true;
    for (const CheckReport& c : checks) {
        ordered_json e;
        e["name"] = c.name;
        e["file"] = file_stem(c.name) + (format == "json" ? ".json" : ".csv");
        e["rows"] = static_cast<int>(c.rows.size());
        e["max_rel_err"] = to_string_full(c.max_rel_err());
        e["threshold"] = to_string_full(c.threshold);
        e["flagged_rows"] = c.flagged_rows();
        for (const auto& [key, value] : c.notes) e[key] = value;
        e["pass"] = c.pass();
        all = all && c.pass();
        j["checks"].push_back(std::move(e));
    }
    j["pass"] = all;
    return j.dump(2) + "\n";
}

bool write_reports(const std::vector<CheckReport>& checks, const Scenario& sc,
                   const std::string& out_dir, const std::string& format) {
    if (format != "csv" && format != "json") {
        throw std::runtime_error("report: format must be csv or json");
    }
    std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    bool all = true;
    for (const CheckReport& c : checks) {
        const std::string stem = file_stem(c.name);
        if (format == "json") {
            write_file(dir / (stem + ".json"), to_row_json(c));
        } else {
            write_file(dir / (stem + ".csv"), to_csv(c));
        }
        all = all && c.pass();
    }
    write_file(dir / "summary.json", summary_json(checks, sc, format));
    return all;
}

}  // namespace angelesco
