#include "homw1/complex_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace homw1::io {

using Json = nlohmann::ordered_json;

std::string complex_to_json(const posets::SimplicialComplex& c) {
    Json j;
    j["format"] = "homw1-complex";
    j["version"] = 1;
    j["labels"] = c.labels;
    Json simp = Json::object();
    for (int d = 0; d <= c.dim(); ++d) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < c.tables[d].size(); ++r) {
            auto s = c.tables[d][r];
            rows.push_back(std::vector<std::int32_t>(s.begin(), s.end()));
        }
        simp[std::to_string(d)] = std::move(rows);
    }
    j["simplices"] = std::move(simp);
    return j.dump(2) + "\n";
}

posets::SimplicialComplex complex_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidInput(std::string("bad complex JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "homw1-complex" || j.value("version", 0) != 1)
        throw InvalidInput("not a homw1-complex version 1 file");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    if (!j.contains("simplices") || !j["simplices"].is_object())
        throw InvalidInput("complex file missing simplices object");
    std::vector<std::vector<std::vector<std::int32_t>>> by_dim;
    for (auto& [key, rows] : j["simplices"].items()) {
        int d = 0;
        try {
            d = std::stoi(key);
        } catch (const std::exception&) {
            throw InvalidInput("bad dimension key '" + key + "'");
        }
        if (d < 0) throw InvalidInput("negative dimension key");
        if (d >= static_cast<int>(by_dim.size())) by_dim.resize(d + 1);
        for (auto& row : rows) {
            auto verts = row.get<std::vector<std::int32_t>>();
            for (std::size_t i = 0; i + 1 < verts.size(); ++i)
                if (verts[i] >= verts[i + 1])
                    throw InvalidInput("simplex indices not strictly increasing");
            if (static_cast<int>(verts.size()) != d + 1)
                throw InvalidInput("simplex arity does not match its dimension key");
            by_dim[d].push_back(std::move(verts));
        }
    }
    return posets::make_complex(std::move(by_dim), std::move(labels));
}

std::string involution_to_json(const posets::VertexPerm& t) {
    Json j;
    j["format"] = "homw1-involution";
    j["version"] = 1;
    j["perm"] = t;
    return j.dump(2) + "\n";
}

posets::VertexPerm involution_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidInput(std::string("bad involution JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "homw1-involution" ||
        j.value("version", 0) != 1)
        throw InvalidInput("not a homw1-involution version 1 file");
    return j.at("perm").get<posets::VertexPerm>();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << text;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace homw1::io
