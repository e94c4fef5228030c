#include "m1taut/json_io.hpp"

#include <stdexcept>

namespace m1taut {

using nlohmann::json;

json graph_to_json(const StableGraph& g) {
    json j;
    j["vertices"] = json::array();
    for (int gen : g.genus)
        j["vertices"].push_back({{"genus", gen}});
    j["legs"] = json::array();
    for (int l = 1; l <= g.n; ++l)
        j["legs"].push_back({{"label", l}, {"vertex", g.leg_vertex[l - 1]}});
    j["edges"] = json::array();
    for (const auto& [a, b] : g.edges)
        j["edges"].push_back({a, b});
    return j;
}

json graph_to_json_halfedges(const StableGraph& g) {
    json j;
    j["vertices"] = json::array();
    for (int gen : g.genus)
        j["vertices"].push_back({{"genus", gen}});
    j["halfedges"] = json::array();
    j["legs"] = json::array();
    j["edges"] = json::array();
    int he = 0;
    for (int l = 1; l <= g.n; ++l) {
        j["halfedges"].push_back({{"vertex", g.leg_vertex[l - 1]}});
        j["legs"].push_back({{"label", l}, {"halfedge", he++}});
    }
    for (const auto& [a, b] : g.edges) {
        j["halfedges"].push_back({{"vertex", a}});
        j["halfedges"].push_back({{"vertex", b}});
        j["edges"].push_back({he, he + 1});
        he += 2;
    }
    return j;
}

StableGraph graph_from_json(const json& j) {
    StableGraph g;
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("graph JSON: missing vertices");
    for (const auto& v : j["vertices"])
        g.genus.push_back(v.at("genus").get<int>());
    if (j.contains("halfedges")) {
        const auto& hes = j["halfedges"];
        std::vector<int> he_vertex;
        for (const auto& h : hes)
            he_vertex.push_back(h.at("vertex").get<int>());
        std::map<int, int> leg_of_he;
        g.n = static_cast<int>(j.at("legs").size());
        g.leg_vertex.assign(g.n, 0);
        for (const auto& l : j.at("legs")) {
            int label = l.at("label").get<int>();
            int he = l.at("halfedge").get<int>();
            if (label < 1 || label > g.n)
                throw std::invalid_argument("graph JSON: leg labels must be 1..n");
            if (he < 0 || he >= static_cast<int>(he_vertex.size()))
                throw std::invalid_argument("graph JSON: leg halfedge out of range");
            g.leg_vertex[label - 1] = he_vertex[he];
            leg_of_he[he] = label;
        }
        for (const auto& e : j.at("edges")) {
            int h1 = e.at(0).get<int>(), h2 = e.at(1).get<int>();
            if (leg_of_he.count(h1) || leg_of_he.count(h2))
                throw std::invalid_argument("graph JSON: edge uses a leg halfedge");
            int a = he_vertex.at(h1), b = he_vertex.at(h2);
            g.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    } else {
        g.n = static_cast<int>(j.at("legs").size());
        g.leg_vertex.assign(g.n, 0);
        std::vector<bool> seen(g.n, false);
        for (const auto& l : j.at("legs")) {
            int label = l.at("label").get<int>();
            if (label < 1 || label > g.n || seen[label - 1])
                throw std::invalid_argument("graph JSON: leg labels must be a bijection onto 1..n");
            seen[label - 1] = true;
            g.leg_vertex[label - 1] = l.at("vertex").get<int>();
        }
        for (const auto& e : j.at("edges")) {
            int a = e.at(0).get<int>(), b = e.at(1).get<int>();
            g.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.validate();
    return g;
}

json strata_vector_to_json(const StrataVector& v) {
    json j;
    j["n"] = v.n;
    j["codim"] = v.codim;
    j["terms"] = json::array();
    for (const auto& [k, c] : v.coeffs)
        j["terms"].push_back({{"graph", graph_to_json(decode_canonical_key(k))},
                              {"coeff", c.str()}});
    return j;
}

StrataVector strata_vector_from_json(const json& j) {
    StrataVector v;
    v.n = j.at("n").get<int>();
    v.codim = j.at("codim").get<int>();
    for (const auto& t : j.at("terms")) {
        StableGraph g = graph_from_json(t.at("graph"));
        if (g.n != v.n || g.codim() != v.codim)
            throw std::invalid_argument("strata vector JSON: term of wrong (n, codim)");
        v.add(canonical_form(g), Rat::parse(t.at("coeff").get<std::string>()));
    }
    return v;
}

json sl2_to_json(const SL2Rep& r) {
    json arr = json::array();
    for (const auto& [km, m] : r.summands())
        arr.push_back({{"k", km.first}, {"twist", km.second}, {"mult", m}});
    return json{{"sl2", arr}};
}

SL2Rep sl2_from_json(const json& j) {
    SL2Rep r;
    for (const auto& s : j.at("sl2"))
        r.add(s.at("k").get<int>(), s.at("twist").get<int>(), s.at("mult").get<long>());
    return r;
}

json sn_to_json(const SnModule& m) {
    json arr = json::array();
    for (const auto& [lam, mult] : m.summands())
        arr.push_back({{"lambda", lam.parts()}, {"mult", mult}});
    return json{{"sn", {{"n", m.n()}, {"summands", arr}}}};
}

SnModule sn_from_json(const json& j) {
    const auto& sn = j.at("sn");
    SnModule m(sn.at("n").get<int>());
    for (const auto& s : sn.at("summands"))
        m.add(Partition(s.at("lambda").get<std::vector<int>>()), s.at("mult").get<long>());
    return m;
}

}  // namespace m1taut
