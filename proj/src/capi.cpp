// The extern-C surface of the library. Thin translation layer: convert
// arguments, call the core, map exceptions to status codes. No logic here.
#include "gcfuller.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "conjectures.hpp"
#include "dims_io.hpp"
#include "eisenstein.hpp"
#include "fullerene.hpp"
#include "transform.hpp"

#include <json.hpp>

struct gcf_dims {
    gcf::FullereneDims value;
};

struct gcf_report {
    gcf::IdentificationReport value;
};

namespace {

template <typename F>
gcf_status guarded(F&& body) noexcept {
    try {
        return body();
    } catch (const gcf::arithmetic_overflow&) {
        return GCF_ERROR_OVERFLOW;
    } catch (const gcf::ParseError&) {
        return GCF_ERROR_PARSE;
    } catch (const std::domain_error&) {
        return GCF_ERROR_DOMAIN;
    } catch (const std::bad_alloc&) {
        return GCF_ERROR_ARGUMENT;
    } catch (...) {
        return GCF_ERROR_DOMAIN;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc{};
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void write_pair(gcf::Eisenstein z, int64_t* a, int64_t* b) {
    *a = gcf::to_int64(z.a);
    *b = gcf::to_int64(z.b);
}

gcf_status copy_pairs(const std::vector<gcf::GcTransform>& list, int64_t* pairs,
                      size_t capacity, size_t* count) {
    if (count == nullptr) return GCF_ERROR_ARGUMENT;
    *count = list.size();
    if (list.size() > capacity) return GCF_ERROR_CAPACITY;
    if (pairs == nullptr && !list.empty()) return GCF_ERROR_ARGUMENT;
    for (size_t i = 0; i < list.size(); ++i) {
        pairs[2 * i] = gcf::to_int64(list[i].k());
        pairs[2 * i + 1] = gcf::to_int64(list[i].l());
    }
    return GCF_OK;
}

}  // namespace

extern "C" {

const char* gcf_status_name(gcf_status status) {
    switch (status) {
        case GCF_OK: return "ok";
        case GCF_ERROR_ARGUMENT: return "invalid argument";
        case GCF_ERROR_DOMAIN: return "domain error";
        case GCF_ERROR_NOT_DIVISIBLE: return "not divisible";
        case GCF_ERROR_OVERFLOW: return "arithmetic overflow";
        case GCF_ERROR_PARSE: return "parse error";
        case GCF_ERROR_CAPACITY: return "buffer too small";
        case GCF_ERROR_RANGE: return "index out of range";
    }
    return "unknown status";
}

const char* gcf_version(void) { return "1.0.0"; }

gcf_status gcf_add(int64_t a1, int64_t b1, int64_t a2, int64_t b2, int64_t* ra,
                   int64_t* rb) {
    if (ra == nullptr || rb == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        write_pair(gcf::add({a1, b1}, {a2, b2}), ra, rb);
        return GCF_OK;
    });
}

gcf_status gcf_mul(int64_t a1, int64_t b1, int64_t a2, int64_t b2, int64_t* ra,
                   int64_t* rb) {
    if (ra == nullptr || rb == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        write_pair(gcf::mul({a1, b1}, {a2, b2}), ra, rb);
        return GCF_OK;
    });
}

gcf_status gcf_conj(int64_t a, int64_t b, int64_t* ra, int64_t* rb) {
    if (ra == nullptr || rb == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        write_pair(gcf::conj({a, b}), ra, rb);
        return GCF_OK;
    });
}

gcf_status gcf_norm(int64_t a, int64_t b, uint64_t* n) {
    if (n == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        *n = gcf::to_uint64(gcf::norm({a, b}));
        return GCF_OK;
    });
}

gcf_status gcf_canonical_sextant(int64_t a, int64_t b, int64_t* ca, int64_t* cb,
                                 int32_t* unit_power) {
    if (ca == nullptr || cb == nullptr || unit_power == nullptr) {
        return GCF_ERROR_ARGUMENT;
    }
    return guarded([&] {
        gcf::Canonical c = gcf::canonical_sextant({a, b});
        write_pair(c.value, ca, cb);
        *unit_power = c.unit_power;
        return GCF_OK;
    });
}

gcf_status gcf_exact_div(int64_t a, int64_t b, int64_t da, int64_t db,
                         int64_t* qa, int64_t* qb) {
    if (qa == nullptr || qb == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        auto q = gcf::exact_div({a, b}, {da, db});
        if (!q) return GCF_ERROR_NOT_DIVISIBLE;
        write_pair(*q, qa, qb);
        return GCF_OK;
    });
}

gcf_status gcf_factorize(int64_t a, int64_t b, int32_t* unit_power,
                         int64_t* triples, size_t capacity, size_t* count) {
    if (unit_power == nullptr || count == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        gcf::Factorization f = gcf::factorize({a, b});
        *unit_power = f.unit_power;
        *count = f.factors.size();
        if (f.factors.size() > capacity) return GCF_ERROR_CAPACITY;
        if (triples == nullptr && !f.factors.empty()) return GCF_ERROR_ARGUMENT;
        for (size_t i = 0; i < f.factors.size(); ++i) {
            triples[3 * i] = gcf::to_int64(f.factors[i].prime.a);
            triples[3 * i + 1] = gcf::to_int64(f.factors[i].prime.b);
            triples[3 * i + 2] = f.factors[i].exponent;
        }
        return GCF_OK;
    });
}

gcf_status gcf_transform_apply(int64_t k, int64_t l, int64_t a, int64_t b,
                               int64_t* ra, int64_t* rb) {
    if (ra == nullptr || rb == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        write_pair(gcf::apply(gcf::GcTransform(k, l), {a, b}), ra, rb);
        return GCF_OK;
    });
}

gcf_status gcf_transform_invert(int64_t k, int64_t l, int64_t a, int64_t b,
                                int64_t* ra, int64_t* rb) {
    if (ra == nullptr || rb == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        auto q = gcf::invert(gcf::GcTransform(k, l), {a, b});
        if (!q) return GCF_ERROR_NOT_DIVISIBLE;
        write_pair(*q, ra, rb);
        return GCF_OK;
    });
}

gcf_status gcf_transform_compose(int64_t k1, int64_t l1, int64_t k2, int64_t l2,
                                 int64_t* k, int64_t* l) {
    if (k == nullptr || l == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        gcf::GcTransform r = gcf::compose(gcf::GcTransform(k1, l1), gcf::GcTransform(k2, l2));
        *k = gcf::to_int64(r.k());
        *l = gcf::to_int64(r.l());
        return GCF_OK;
    });
}

gcf_status gcf_transform_classify(int64_t k, int64_t l, gcf_transform_kind* kind,
                                  uint64_t* inflation_factor) {
    if (kind == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        gcf::TransformClass c = gcf::classify(gcf::GcTransform(k, l));
        switch (c.kind) {
            case gcf::TransformKind::identity: *kind = GCF_TRANSFORM_IDENTITY; break;
            case gcf::TransformKind::inflation: *kind = GCF_TRANSFORM_INFLATION; break;
            case gcf::TransformKind::leapfrog: *kind = GCF_TRANSFORM_LEAPFROG; break;
            case gcf::TransformKind::primary: *kind = GCF_TRANSFORM_PRIMARY; break;
            case gcf::TransformKind::composite: *kind = GCF_TRANSFORM_COMPOSITE; break;
        }
        if (inflation_factor != nullptr) {
            *inflation_factor = gcf::to_uint64(c.inflation_factor);
        }
        return GCF_OK;
    });
}

gcf_status gcf_transform_decompose(int64_t k, int64_t l, int64_t* pairs,
                                   size_t capacity, size_t* count) {
    return guarded([&] {
        return copy_pairs(gcf::decompose(gcf::GcTransform(k, l)), pairs, capacity, count);
    });
}

gcf_status gcf_transform_candidates(uint64_t n, int64_t* pairs, size_t capacity,
                                    size_t* count) {
    return guarded([&] {
        return copy_pairs(gcf::enumerate_candidates(n), pairs, capacity, count);
    });
}

gcf_status gcf_oracle_decomposable(int64_t k, int64_t l, int32_t* decomposable) {
    if (decomposable == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        *decomposable = gcf::oracle_decomposable(gcf::GcTransform(k, l)) ? 1 : 0;
        return GCF_OK;
    });
}

gcf_status gcf_dims_create(const int64_t* edges, size_t edge_count,
                           const int64_t* facets, size_t facet_count,
                           const char* name, gcf_dims** out) {
    if (out == nullptr || edges == nullptr) return GCF_ERROR_ARGUMENT;
    if (facets == nullptr && facet_count > 0) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        std::vector<gcf::Eisenstein> es;
        es.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i) {
            es.push_back({edges[2 * i], edges[2 * i + 1]});
        }
        std::vector<gcf::FacetDims> fs;
        fs.reserve(facet_count);
        for (size_t i = 0; i < facet_count; ++i) {
            fs.emplace_back(facets[4 * i], facets[4 * i + 1], facets[4 * i + 2],
                            facets[4 * i + 3]);
        }
        *out = new gcf_dims{gcf::FullereneDims(std::move(es), std::move(fs),
                                               name != nullptr ? name : "")};
        return GCF_OK;
    });
}

gcf_status gcf_dims_parse(const char* json_text, gcf_dims** out, char* errbuf,
                          size_t errbuf_size) {
    if (json_text == nullptr || out == nullptr) return GCF_ERROR_ARGUMENT;
    if (errbuf != nullptr && errbuf_size > 0) errbuf[0] = '\0';
    try {
        *out = new gcf_dims{gcf::parse_dims(json_text)};
        return GCF_OK;
    } catch (const gcf::ParseError& e) {
        if (errbuf != nullptr && errbuf_size > 0) {
            std::strncpy(errbuf, e.what(), errbuf_size - 1);
            errbuf[errbuf_size - 1] = '\0';
        }
        return GCF_ERROR_PARSE;
    } catch (...) {
        return GCF_ERROR_DOMAIN;
    }
}

void gcf_dims_free(gcf_dims* dims) { delete dims; }

gcf_status gcf_dims_to_json(const gcf_dims* dims, int pretty, char** out) {
    if (dims == nullptr || out == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        *out = dup_string(gcf::dims_to_json(dims->value, pretty != 0));
        return GCF_OK;
    });
}

size_t gcf_dims_edge_count(const gcf_dims* dims) {
    return dims == nullptr ? 0 : dims->value.edges().size();
}

size_t gcf_dims_facet_count(const gcf_dims* dims) {
    return dims == nullptr ? 0 : dims->value.facets().size();
}

gcf_status gcf_dims_edge(const gcf_dims* dims, size_t index, int64_t* a,
                         int64_t* b) {
    if (dims == nullptr || a == nullptr || b == nullptr) return GCF_ERROR_ARGUMENT;
    if (index >= dims->value.edges().size()) return GCF_ERROR_RANGE;
    return guarded([&] {
        write_pair(dims->value.edges()[index], a, b);
        return GCF_OK;
    });
}

gcf_status gcf_dims_facet(const gcf_dims* dims, size_t index, int64_t* k,
                          int64_t* l, int64_t* p, int64_t* q) {
    if (dims == nullptr || k == nullptr || l == nullptr || p == nullptr ||
        q == nullptr) {
        return GCF_ERROR_ARGUMENT;
    }
    if (index >= dims->value.facets().size()) return GCF_ERROR_RANGE;
    return guarded([&] {
        const gcf::FacetDims& f = dims->value.facets()[index];
        *k = gcf::to_int64(f.k());
        *l = gcf::to_int64(f.l());
        *p = gcf::to_int64(f.p());
        *q = gcf::to_int64(f.q());
        return GCF_OK;
    });
}

const char* gcf_dims_name(const gcf_dims* dims) {
    if (dims == nullptr || dims->value.name().empty()) return nullptr;
    return dims->value.name().c_str();
}

gcf_status gcf_dims_edge_square(const gcf_dims* dims, size_t index,
                                uint64_t* square) {
    if (dims == nullptr || square == nullptr) return GCF_ERROR_ARGUMENT;
    if (index >= dims->value.edges().size()) return GCF_ERROR_RANGE;
    return guarded([&] {
        *square = gcf::to_uint64(gcf::edge_square(dims->value.edges()[index]));
        return GCF_OK;
    });
}

gcf_status gcf_dims_facet_area(const gcf_dims* dims, size_t index,
                               uint64_t* area) {
    if (dims == nullptr || area == nullptr) return GCF_ERROR_ARGUMENT;
    if (index >= dims->value.facets().size()) return GCF_ERROR_RANGE;
    return guarded([&] {
        *area = gcf::to_uint64(gcf::facet_area(dims->value.facets()[index]));
        return GCF_OK;
    });
}

gcf_status gcf_dims_detect_inflation(const gcf_dims* dims, uint64_t* factor) {
    if (dims == nullptr || factor == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        *factor = gcf::to_uint64(gcf::detect_inflation(dims->value));
        return GCF_OK;
    });
}

gcf_status gcf_dims_leapfrog_test(const gcf_dims* dims, int32_t* is_leapfrog) {
    if (dims == nullptr || is_leapfrog == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        *is_leapfrog = gcf::leapfrog_test(dims->value) ? 1 : 0;
        return GCF_OK;
    });
}

gcf_status gcf_dims_area_scale_factor(const gcf_dims* dims, uint64_t* factor) {
    if (dims == nullptr || factor == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        *factor = gcf::to_uint64(gcf::area_scale_factor(dims->value));
        return GCF_OK;
    });
}

gcf_status gcf_dims_deflate(const gcf_dims* dims, uint64_t factor,
                            gcf_dims** out) {
    if (dims == nullptr || out == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        *out = new gcf_dims{gcf::deflate(dims->value, factor)};
        return GCF_OK;
    });
}

gcf_status gcf_dims_transform(const gcf_dims* dims, int64_t k, int64_t l,
                              gcf_dims** out) {
    if (dims == nullptr || out == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        *out = new gcf_dims{gcf::transform_dims(dims->value, gcf::GcTransform(k, l))};
        return GCF_OK;
    });
}

gcf_status gcf_identify(const gcf_dims* dims, gcf_report** out) {
    if (dims == nullptr || out == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        *out = new gcf_report{gcf::identify(dims->value)};
        return GCF_OK;
    });
}

void gcf_report_free(gcf_report* report) { delete report; }

uint64_t gcf_report_inflation_factor(const gcf_report* report) {
    return report == nullptr ? 0 : gcf::to_uint64(report->value.inflation_factor);
}

uint64_t gcf_report_area_scale_factor(const gcf_report* report) {
    return report == nullptr ? 0 : gcf::to_uint64(report->value.area_scale_factor);
}

uint64_t gcf_report_norm_product(const gcf_report* report) {
    return report == nullptr ? 0 : gcf::to_uint64(report->value.norm_product());
}

size_t gcf_report_chain_length(const gcf_report* report) {
    return report == nullptr ? 0 : report->value.chain.size();
}

gcf_status gcf_report_chain_step(const gcf_report* report, size_t index,
                                 int64_t* k, int64_t* l) {
    if (report == nullptr || k == nullptr || l == nullptr) return GCF_ERROR_ARGUMENT;
    if (index >= report->value.chain.size()) return GCF_ERROR_RANGE;
    return guarded([&] {
        *k = gcf::to_int64(report->value.chain[index].k());
        *l = gcf::to_int64(report->value.chain[index].l());
        return GCF_OK;
    });
}

gcf_status gcf_report_archetype(const gcf_report* report, gcf_dims** out) {
    if (report == nullptr || out == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        *out = new gcf_dims{report->value.archetype};
        return GCF_OK;
    });
}

size_t gcf_report_residual_count(const gcf_report* report) {
    return report == nullptr ? 0 : report->value.residual_primes.size();
}

gcf_status gcf_report_residual_prime(const gcf_report* report, size_t index,
                                     uint64_t* prime) {
    if (report == nullptr || prime == nullptr) return GCF_ERROR_ARGUMENT;
    if (index >= report->value.residual_primes.size()) return GCF_ERROR_RANGE;
    return guarded([&] {
        *prime = gcf::to_uint64(report->value.residual_primes[index]);
        return GCF_OK;
    });
}

size_t gcf_report_note_count(const gcf_report* report) {
    return report == nullptr ? 0 : report->value.notes.size();
}

const char* gcf_report_note(const gcf_report* report, size_t index) {
    if (report == nullptr || index >= report->value.notes.size()) return nullptr;
    return report->value.notes[index].c_str();
}

size_t gcf_report_alternate_count(const gcf_report* report) {
    return report == nullptr ? 0 : report->value.alternates.size();
}

gcf_status gcf_report_alternate(const gcf_report* report, size_t index,
                                int64_t* k, int64_t* l) {
    if (report == nullptr || k == nullptr || l == nullptr) return GCF_ERROR_ARGUMENT;
    if (index >= report->value.alternates.size()) return GCF_ERROR_RANGE;
    return guarded([&] {
        *k = gcf::to_int64(report->value.alternates[index].k());
        *l = gcf::to_int64(report->value.alternates[index].l());
        return GCF_OK;
    });
}

gcf_status gcf_report_to_json(const gcf_report* report, int pretty, char** out) {
    if (report == nullptr || out == nullptr) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        *out = dup_string(gcf::report_to_json(report->value, pretty != 0));
        return GCF_OK;
    });
}

gcf_status gcf_check_conjecture(int32_t which, uint64_t bound, uint64_t* checked,
                                uint64_t* counterexamples, char** detail_json) {
    if (which != 1 && which != 2) return GCF_ERROR_ARGUMENT;
    return guarded([&] {
        gcf::ConjectureReport report =
            which == 1 ? gcf::check_conjecture1(bound) : gcf::check_conjecture2(bound);
        if (checked != nullptr) *checked = report.checked;
        if (counterexamples != nullptr) {
            *counterexamples = report.counterexamples.size();
        }
        if (detail_json != nullptr) {
            nlohmann::json j;
            j["conjecture"] = which;
            j["bound"] = gcf::to_uint64(report.bound);
            j["checked"] = report.checked;
            nlohmann::json cx = nlohmann::json::array();
            for (const auto& c : report.counterexamples) {
                cx.push_back({{"k", gcf::to_int64(c.transform.k())},
                              {"l", gcf::to_int64(c.transform.l())},
                              {"detail", c.detail}});
            }
            j["counterexamples"] = std::move(cx);
            *detail_json = dup_string(j.dump(2));
        }
        return GCF_OK;
    });
}

void gcf_string_free(char* text) { std::free(text); }

}  // extern "C"
