#include "reltop/relation_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "reltop/errors.hpp"

namespace reltop {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

}  // namespace

std::string relation_to_json(const BinaryRelation& relation) {
    ordered_json doc;
    doc["universe"] = relation.universe()->labels();
    auto& pairs = doc["pairs"] = ordered_json::array();
    for (const auto& [from, to] : relation.pairs()) pairs.push_back({from, to});
    return doc.dump(2);
}

BinaryRelation relation_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(0, e.what());
    }
    if (!doc.is_object() || !doc.contains("universe") || !doc.contains("pairs"))
        throw ParseError(0, "expected an object with \"universe\" and \"pairs\"");
    if (!doc["universe"].is_array()) throw ParseError(0, "\"universe\" must be an array of labels");
    std::vector<std::string> labels;
    for (const auto& entry : doc["universe"]) {
        if (!entry.is_string()) throw ParseError(0, "\"universe\" must be an array of labels");
        labels.push_back(entry.get<std::string>());
    }
    if (!doc["pairs"].is_array()) throw ParseError(0, "\"pairs\" must be an array of label pairs");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& entry : doc["pairs"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() || !entry[1].is_string())
            throw ParseError(0, "each pair must be a two-element array of labels");
        pairs.emplace_back(entry[0].get<std::string>(), entry[1].get<std::string>());
    }
    return BinaryRelation(make_universe(std::move(labels)), pairs);
}

std::string relation_to_text(const BinaryRelation& relation) {
    std::string out;
    const auto& labels = relation.universe()->labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += " ";
        out += labels[i];
    }
    out += "\n";
    for (const auto& [from, to] : relation.pairs()) out += from + " " + to + "\n";
    return out;
}

BinaryRelation relation_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> pairs;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        if (!have_header) {
            labels = std::move(tokens);
            have_header = true;
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError(lineno, "expected a pair \"x y\", got " +
                                         std::to_string(tokens.size()) + " token(s)");
        pairs.emplace_back(std::move(tokens[0]), std::move(tokens[1]));
    }
    if (!have_header) throw ParseError(1, "missing universe line");
    return BinaryRelation(make_universe(std::move(labels)), pairs);
}

BinaryRelation load_relation_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return relation_from_json(text);
    return relation_from_text(text);
}

}  // namespace reltop
