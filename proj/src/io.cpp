#include "akcores/io.hpp"

#include <cctype>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

namespace akcores {

using nlohmann::json;

json to_json(const Partition& p) {
    return json(p.parts());
}

json to_json(const Multipartition& mp) {
    json arr = json::array();
    for (const auto& c : mp.components()) arr.push_back(to_json(c));
    return arr;
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("partition must be a JSON array of integers");
    std::vector<Int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("partition entries must be integers");
        parts.push_back(v.get<Int>());
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

Multipartition multipartition_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("multipartition must be a nonempty JSON array of arrays");
    std::vector<Partition> comps;
    for (const auto& c : j) comps.push_back(partition_from_json(c));
    return Multipartition(std::move(comps));
}

static json parse_json_text(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

Partition parse_partition(std::string_view text) {
    return partition_from_json(parse_json_text(text));
}

Multipartition parse_multipartition(std::string_view text) {
    return multipartition_from_json(parse_json_text(text));
}

Multicharge parse_charge_list(std::string_view text) {
    Multicharge out;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        size_t consumed = 0;
        Int value = 0;
        try {
            value = std::stoll(token, &consumed);
        } catch (const std::exception&) {
            throw ParseError("charge entries must be integers");
        }
        while (consumed < token.size() && std::isspace(static_cast<unsigned char>(token[consumed]))) ++consumed;
        if (consumed != token.size()) throw ParseError("charge entries must be integers");
        out.push_back(value);
    }
    if (out.empty()) throw ParseError("empty charge list");
    return out;
}

std::string format_partition(const Partition& p) { return to_json(p).dump(); }
std::string format_multipartition(const Multipartition& mp) { return to_json(mp).dump(); }
std::string format_charge(const Multicharge& s) { return json(s).dump(); }

TableFormat parse_table_format(std::string_view name) {
    if (name == "json") return TableFormat::Json;
    if (name == "csv") return TableFormat::Csv;
    if (name == "md" || name == "markdown") return TableFormat::Markdown;
    throw ParseError("format must be one of json, csv, md");
}

namespace {

struct Row {
    Multipartition mp;
    const Block* block;
};

std::vector<Row> table_rows(const std::vector<Block>& blocks, Int n, int l) {
    std::map<Multipartition, const Block*> owner;
    for (const auto& b : blocks)
        for (const auto& m : b.members) owner.emplace(m, &b);
    std::vector<Row> rows;
    MultipartitionEnumerator en(n, l);
    while (auto mp = en.next()) {
        auto it = owner.find(*mp);
        if (it != owner.end()) rows.push_back({std::move(*mp), it->second});
    }
    return rows;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::string render_block_table(const std::vector<Block>& blocks, Int n, int l, Int e,
                               const Multicharge& s, TableFormat format) {
    auto rows = table_rows(blocks, n, l);
    if (format == TableFormat::Json) {
        json out;
        out["n"] = n;
        out["l"] = l;
        out["e"] = e;
        out["charge"] = json(s);
        json jrows = json::array();
        for (const auto& r : rows) {
            json row;
            row["multipartition"] = to_json(r.mp);
            row["core"] = to_json(r.block->core.core);
            row["core_charge"] = json(r.block->core.charge);
            row["weight"] = r.block->core.weight;
            row["block_id"] = r.block->key.to_string();
            jrows.push_back(std::move(row));
        }
        out["rows"] = std::move(jrows);
        return out.dump(2) + "\n";
    }
    std::string out;
    if (format == TableFormat::Csv) {
        out = "multipartition,core,core_charge,weight,block_id\n";
        for (const auto& r : rows) {
            out += csv_quote(format_multipartition(r.mp)) + ",";
            out += csv_quote(format_multipartition(r.block->core.core)) + ",";
            out += csv_quote(format_charge(r.block->core.charge)) + ",";
            out += std::to_string(r.block->core.weight) + ",";
            out += csv_quote(r.block->key.to_string()) + "\n";
        }
        return out;
    }
    out = "| multipartition | core | core_charge | weight | block_id |\n";
    out += "| --- | --- | --- | --- | --- |\n";
    for (const auto& r : rows) {
        out += "| " + format_multipartition(r.mp);
        out += " | " + format_multipartition(r.block->core.core);
        out += " | " + format_charge(r.block->core.charge);
        out += " | " + std::to_string(r.block->core.weight);
        out += " | " + r.block->key.to_string() + " |\n";
    }
    return out;
}

}  // namespace akcores
