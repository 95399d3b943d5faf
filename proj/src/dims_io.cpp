#include "dims_io.hpp"

#include <cstdint>
#include <json.hpp>

namespace gcf {

namespace {

using nlohmann::json;

i128 read_coordinate(const json& v, const std::string& where) {
    if (!v.is_number_integer()) {
        throw ParseError(where + ": expected an integer");
    }
    std::int64_t x = v.get<std::int64_t>();
    if (x < INT32_MIN || x > INT32_MAX) {
        throw ParseError(where + ": value outside signed 32-bit range");
    }
    if (x < 0) {
        throw ParseError(where + ": coordinates must be nonnegative");
    }
    return x;
}

json pair_json(Eisenstein z) {
    return json::array({to_int64(z.a), to_int64(z.b)});
}

const char* kind_name(const GcTransform& t) {
    if (t.l() == 0) return "inflation";
    if (t.is_leapfrog()) return "leapfrog";
    return "primary";
}

json dims_json(const FullereneDims& d) {
    json j;
    json edges = json::array();
    for (const Eisenstein& e : d.edges()) edges.push_back(pair_json(e));
    j["edges"] = std::move(edges);
    if (!d.facets().empty()) {
        json facets = json::array();
        for (const FacetDims& f : d.facets()) {
            facets.push_back(json::array({to_int64(f.k()), to_int64(f.l()),
                                          to_int64(f.p()), to_int64(f.q())}));
        }
        j["facets"] = std::move(facets);
    }
    if (!d.name().empty()) j["name"] = d.name();
    return j;
}

}  // namespace

FullereneDims parse_dims(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level: expected an object");
    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        if (key != "edges" && key != "facets" && key != "name") {
            throw ParseError("unknown field \"" + key + "\"");
        }
    }

    if (!j.contains("edges")) throw ParseError("missing required field \"edges\"");
    const json& jedges = j["edges"];
    if (!jedges.is_array() || jedges.empty()) {
        throw ParseError("edges: expected a nonempty array of [a, b] pairs");
    }
    std::vector<Eisenstein> edges;
    edges.reserve(jedges.size());
    for (size_t i = 0; i < jedges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const json& e = jedges[i];
        if (!e.is_array() || e.size() != 2) {
            throw ParseError(where + ": expected a pair [a, b]");
        }
        Eisenstein z{read_coordinate(e[0], where), read_coordinate(e[1], where)};
        if (is_zero(z)) throw ParseError(where + ": edge must be nonzero");
        edges.push_back(z);
    }

    std::vector<FacetDims> facets;
    if (j.contains("facets")) {
        const json& jfacets = j["facets"];
        if (!jfacets.is_array()) {
            throw ParseError("facets: expected an array of [k, l, p, q] quadruples");
        }
        facets.reserve(jfacets.size());
        for (size_t i = 0; i < jfacets.size(); ++i) {
            const std::string where = "facets[" + std::to_string(i) + "]";
            const json& f = jfacets[i];
            if (!f.is_array() || f.size() != 4) {
                throw ParseError(where + ": expected a quadruple [k, l, p, q]");
            }
            i128 k = read_coordinate(f[0], where);
            i128 l = read_coordinate(f[1], where);
            i128 p = read_coordinate(f[2], where);
            i128 q = read_coordinate(f[3], where);
            try {
                facets.emplace_back(k, l, p, q);
            } catch (const std::domain_error& e) {
                throw ParseError(where + ": " + e.what());
            }
        }
    }

    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("name: expected a string");
        name = j["name"].get<std::string>();
    }

    try {
        return FullereneDims(std::move(edges), std::move(facets), std::move(name));
    } catch (const std::domain_error& e) {
        throw ParseError(e.what());
    }
}

std::string dims_to_json(const FullereneDims& d, bool pretty) {
    return dims_json(d).dump(pretty ? 2 : -1);
}

std::string report_to_json(const IdentificationReport& r, bool pretty) {
    json j;
    j["input"] = dims_json(r.input);
    j["inflation_factor"] = to_uint64(r.inflation_factor);
    j["area_scale_factor"] = to_uint64(r.area_scale_factor);
    json chain = json::array();
    for (const GcTransform& t : r.chain) {
        chain.push_back(json{{"k", to_int64(t.k())},
                             {"l", to_int64(t.l())},
                             {"norm", to_uint64(t.norm())},
                             {"kind", kind_name(t)}});
    }
    j["chain"] = std::move(chain);
    j["norm_product"] = to_uint64(r.norm_product());
    j["archetype"] = dims_json(r.archetype);
    json residual = json::array();
    for (u128 p : r.residual_primes) residual.push_back(to_uint64(p));
    j["residual_primes"] = std::move(residual);
    json alternates = json::array();
    for (const GcTransform& t : r.alternates) alternates.push_back(pair_json(t.kl()));
    j["alternates"] = std::move(alternates);
    j["notes"] = r.notes;
    return j.dump(pretty ? 2 : -1);
}

}  // namespace gcf
