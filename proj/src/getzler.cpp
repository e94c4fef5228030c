#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "m1taut/json_io.hpp"
#include "m1taut/strata.hpp"

namespace m1taut {

GetzlerRelationData load_getzler_relation(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw GetzlerLoadError("cannot open relation data file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw GetzlerLoadError("malformed relation data file " + path + ": " + e.what());
    }
    GetzlerRelationData data;
    try {
        data.provenance = j.at("provenance").get<std::string>();
        for (const auto& t : j.at("terms")) {
            StableGraph g = graph_from_json(t.at("graph"));
            Rat c = Rat::parse(t.at("coeff").get<std::string>());
            data.terms.emplace_back(std::move(g), std::move(c));
        }
    } catch (const std::exception& e) {
        throw GetzlerLoadError("malformed relation data file " + path + ": " + e.what());
    }
    for (const auto& [g, c] : data.terms) {
        if (g.n != 4)
            throw GetzlerLoadError("relation term is not a 4-marked graph");
        if (g.codim() != 2)
            throw GetzlerLoadError("relation term is not of codimension two");
        try {
            g.validate();
        } catch (const std::invalid_argument& e) {
            throw GetzlerLoadError(std::string("invalid relation term graph: ") + e.what());
        }
    }
    if (data.vector().is_zero())
        throw GetzlerLoadError("relation data accumulates to the zero vector");
    return data;
}

std::string default_getzler_path() {
    if (const char* env = std::getenv("M1TAUT_DATA"); env && *env)
        return env;
    namespace fs = std::filesystem;
    std::vector<fs::path> candidates = {"data/getzler_relation.json"};
    std::error_code ec;
    fs::path exe = fs::read_symlink("/proc/self/exe", ec);
    if (!ec) {
        fs::path dir = exe.parent_path();
        candidates.push_back(dir / "data/getzler_relation.json");
        candidates.push_back(dir / "../data/getzler_relation.json");
        candidates.push_back(dir / "../../data/getzler_relation.json");
    }
    for (const auto& p : candidates)
        if (fs::exists(p, ec))
            return p.string();
    return "data/getzler_relation.json";  // will fail loudly on open
}

}  // namespace m1taut
