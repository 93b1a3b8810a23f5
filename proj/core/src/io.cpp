#include "fracline/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fracline/errors.hpp"

namespace fracline {

namespace {

void append_escaped(std::string& out, const std::string& text) {
    out.push_back('"');
    for (const char ch : text) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
                    out += buf;
                } else {
                    out.push_back(ch);
                }
        }
    }
    out.push_back('"');
}

void dump_impl(const Json& value, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    const std::string closing_pad(static_cast<std::size_t>(indent) * depth, ' ');

    if (std::holds_alternative<std::nullptr_t>(value)) {
        out += "null";
    } else if (const bool* b = std::get_if<bool>(&value)) {
        out += *b ? "true" : "false";
    } else if (const std::int64_t* i = std::get_if<std::int64_t>(&value)) {
        out += std::to_string(*i);
    } else if (const double* d = std::get_if<double>(&value)) {
        out += format_double(*d);
    } else if (const std::string* s = std::get_if<std::string>(&value)) {
        append_escaped(out, *s);
    } else if (const JsonArray* arr = std::get_if<JsonArray>(&value)) {
        if (arr->empty()) {
            out += "[]";
            return;
        }
        out.push_back('[');
        bool first = true;
        for (const Json& item : *arr) {
            out += first ? "\n" : ",\n";
            first = false;
            out += pad;
            dump_impl(item, out, indent, depth + 1);
        }
        out.push_back('\n');
        out += closing_pad;
        out.push_back(']');
    } else {
        const JsonObject& obj = std::get<JsonObject>(value);
        if (obj.empty()) {
            out += "{}";
            return;
        }
        out.push_back('{');
        bool first = true;
        for (const auto& [key, item] : obj) {
            out += first ? "\n" : ",\n";
            first = false;
            out += pad;
            append_escaped(out, key);
            out += ": ";
            dump_impl(item, out, indent, depth + 1);
        }
        out.push_back('\n');
        out += closing_pad;
        out.push_back('}');
    }
}

Json json_or_null(double x) {
    if (!std::isfinite(x)) return Json(nullptr);
    return Json(x);
}

}  // namespace

std::string dump(const Json& value, int indent) {
    std::string out;
    dump_impl(value, out, indent, 0);
    out.push_back('\n');
    return out;
}

std::string format_double(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json to_json(const GridSpec& grid) {
    JsonObject obj;
    obj["half_width"] = grid.half_width();
    obj["n_points"] = static_cast<std::int64_t>(grid.n_points());
    return obj;
}

Json to_json(const WellposednessReport& report) {
    JsonObject coeffs;
    coeffs["a"] = report.coefficients.a;
    coeffs["b"] = report.coefficients.b;
    coeffs["mu"] = report.coefficients.mu;
    coeffs["p"] = report.coefficients.p;
    coeffs["q"] = report.coefficients.q;

    JsonArray c_values, sigma_values;
    for (double value : report.constants.c) c_values.emplace_back(value);
    for (double value : report.constants.sigma) sigma_values.emplace_back(value);
    JsonObject constants;
    constants["c"] = std::move(c_values);
    constants["sigma"] = std::move(sigma_values);

    JsonArray conditions;
    for (const ConditionRecord& cond : report.conditions) {
        JsonObject row;
        row["description"] = cond.description;
        row["lhs"] = cond.lhs;
        row["margin"] = cond.margin;
        row["rhs"] = cond.rhs;
        row["satisfied"] = cond.satisfied;
        conditions.push_back(std::move(row));
    }

    JsonObject obj;
    obj["alpha"] = report.alpha;
    obj["case"] = to_string(report.case_label);
    obj["certified"] = report.certified;
    obj["coefficients"] = std::move(coeffs);
    obj["conditions"] = std::move(conditions);
    obj["constants"] = std::move(constants);
    obj["p11"] = report.p11;
    obj["p15"] = report.p15;
    obj["stability_constant"] =
        report.certified ? Json(stability_constant(report)) : Json(nullptr);
    return obj;
}

Json to_json(const SolveResult& result) {
    JsonObject norms;
    for (const auto& [order, value] : result.norms) norms[format_double(order)] = value;

    JsonObject stability;
    stability["certified"] = result.stability.certified;
    stability["constant"] = json_or_null(result.stability.constant);
    stability["lhs"] = json_or_null(result.stability.lhs);
    stability["rhs"] = json_or_null(result.stability.rhs);
    stability["satisfied"] = result.stability.satisfied;

    JsonObject obj;
    obj["grid"] = to_json(result.u.grid);
    obj["min_abs_symbol"] = result.min_abs_symbol;
    obj["norms"] = std::move(norms);
    obj["residual_rel"] = result.residual_rel;
    obj["stability"] = std::move(stability);
    obj["zeroed_modes"] = static_cast<std::int64_t>(result.zeroed_modes);
    return obj;
}

void write_csv(const std::string& path, const SampledFunction& f,
               const std::string& value_header) {
    std::string out = "x," + value_header + "\n";
    for (std::size_t j = 0; j < f.grid.n_points(); ++j) {
        out += format_double(f.grid.node(j));
        out.push_back(',');
        out += format_double(f.values[j]);
        out.push_back('\n');
    }
    write_text_file(path, out);
}

SampledFunction load_csv(const std::string& path, const GridSpec& grid) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);

    SampledFunction f{grid, {}, std::nullopt};
    f.values.reserve(grid.n_points());

    std::string line;
    std::size_t row = 0;
    bool first_line = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const char* text = line.c_str();
        char* after_x = nullptr;
        const double x = std::strtod(text, &after_x);
        if (first_line && after_x == text) {
            first_line = false;  // header row
            continue;
        }
        first_line = false;
        if (after_x == text || *after_x != ',')
            throw IoError(path + ": malformed row \"" + line + "\"");
        char* after_v = nullptr;
        const double v = std::strtod(after_x + 1, &after_v);
        if (after_v == after_x + 1)
            throw IoError(path + ": malformed row \"" + line + "\"");

        if (row >= grid.n_points())
            throw IoError(path + ": more rows than grid points (" +
                          std::to_string(grid.n_points()) + " expected)");
        if (std::abs(x - grid.node(row)) > 1e-6 * grid.spacing())
            throw IoError(path + ": row " + std::to_string(row) + " has x = " + format_double(x) +
                          ", expected grid node " + format_double(grid.node(row)));
        f.values.push_back(v);
        ++row;
    }
    if (row != grid.n_points())
        throw IoError(path + ": " + std::to_string(row) + " rows, expected " +
                      std::to_string(grid.n_points()));
    return f;
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("failed writing " + path);
}

}  // namespace fracline
