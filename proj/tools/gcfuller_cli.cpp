// gcfuller — batch front end over the gcfuller C API.
//
//   identify <file> [--json]                  recover the chain and archetype
//   transform <file> --kl K,L [--out f]       apply a transformation
//   candidates <N>                            transforms with norm N
//   table [--max N]                           norm/classification table
//   check --conjecture {1|2} --bound N        exhaustive conjecture check
//
// Exit codes: 0 success, 1 usage/parse error, 2 check found counterexamples,
// 3 identify found no nontrivial transformation.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcfuller.h"

namespace {

using nlohmann::json;

struct Pair {
    int64_t k = 0;
    int64_t l = 0;
};

std::string pair_str(int64_t a, int64_t b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

int fail(const std::string& context, gcf_status status) {
    std::cerr << context << ": " << gcf_status_name(status) << "\n";
    return 1;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::optional<std::vector<Pair>> fetch_pairs(gcf_status (*fn)(int64_t, int64_t,
                                                              int64_t*, size_t,
                                                              size_t*),
                                             int64_t k, int64_t l) {
    std::vector<int64_t> buf(32);
    size_t count = 0;
    gcf_status st = fn(k, l, buf.data(), buf.size() / 2, &count);
    if (st == GCF_ERROR_CAPACITY) {
        buf.resize(2 * count);
        st = fn(k, l, buf.data(), count, &count);
    }
    if (st != GCF_OK) return std::nullopt;
    std::vector<Pair> out(count);
    for (size_t i = 0; i < count; ++i) out[i] = {buf[2 * i], buf[2 * i + 1]};
    return out;
}

std::optional<std::vector<Pair>> decompose_pairs(int64_t k, int64_t l) {
    return fetch_pairs(&gcf_transform_decompose, k, l);
}

std::optional<std::vector<Pair>> candidate_pairs(uint64_t n) {
    std::vector<int64_t> buf(64);
    size_t count = 0;
    gcf_status st = gcf_transform_candidates(n, buf.data(), buf.size() / 2, &count);
    if (st == GCF_ERROR_CAPACITY) {
        buf.resize(2 * count);
        st = gcf_transform_candidates(n, buf.data(), count, &count);
    }
    if (st != GCF_OK) return std::nullopt;
    std::vector<Pair> out(count);
    for (size_t i = 0; i < count; ++i) out[i] = {buf[2 * i], buf[2 * i + 1]};
    return out;
}

const char* kind_name(gcf_transform_kind kind) {
    switch (kind) {
        case GCF_TRANSFORM_IDENTITY: return "identity";
        case GCF_TRANSFORM_INFLATION: return "inflation";
        case GCF_TRANSFORM_LEAPFROG: return "leapfrog";
        case GCF_TRANSFORM_PRIMARY: return "primary";
        case GCF_TRANSFORM_COMPOSITE: return "composite";
    }
    return "unknown";
}

// Merge runs of one repeated prime inflation back into a single (p^e, 0) so
// the text table reads like the published one; the JSON keeps the split form.
std::vector<Pair> merge_inflations(const std::vector<Pair>& factors) {
    std::vector<Pair> out;
    for (const Pair& f : factors) {
        if (!out.empty() && f.l == 0 && out.back().l == 0 && out.back().k % f.k == 0) {
            // same prime run: (p^i, 0) followed by another (p, 0)
            int64_t base = f.k;
            int64_t acc = out.back().k;
            bool same_prime = true;
            int64_t probe = acc;
            while (probe % base == 0) probe /= base;
            same_prime = (probe == 1);
            if (same_prime) {
                out.back().k = acc * base;
                continue;
            }
        }
        out.push_back(f);
    }
    return out;
}

std::string factor_product(const std::vector<Pair>& factors) {
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) s += " · ";
        s += pair_str(factors[i].k, factors[i].l);
    }
    return s;
}

struct ParsedDims {
    gcf_dims* dims = nullptr;
    ~ParsedDims() { gcf_dims_free(dims); }
};

// Reads and parses a dims file; on failure reports and leaves dims null.
bool load_dims(const std::string& path, ParsedDims& holder) {
    auto text = read_file(path);
    if (!text) {
        std::cerr << path << ": cannot read file\n";
        return false;
    }
    char err[512];
    gcf_status st = gcf_dims_parse(text->c_str(), &holder.dims, err, sizeof err);
    if (st != GCF_OK) {
        std::cerr << path << ": " << (err[0] != '\0' ? err : gcf_status_name(st))
                  << "\n";
        return false;
    }
    return true;
}

void print_edge_groups(gcf_dims* dims, const char* label) {
    size_t n = gcf_dims_edge_count(dims);
    std::cout << label << ": ";
    size_t i = 0;
    bool first = true;
    while (i < n) {
        int64_t a = 0, b = 0;
        gcf_dims_edge(dims, i, &a, &b);
        size_t j = i + 1;
        for (; j < n; ++j) {
            int64_t a2 = 0, b2 = 0;
            gcf_dims_edge(dims, j, &a2, &b2);
            if (a2 != a || b2 != b) break;
        }
        if (!first) std::cout << ", ";
        std::cout << pair_str(a, b);
        if (j - i > 1) std::cout << " x" << (j - i);
        first = false;
        i = j;
    }
    std::cout << "\n";
}

void print_facet_groups(gcf_dims* dims, const char* label) {
    size_t n = gcf_dims_facet_count(dims);
    if (n == 0) return;
    std::cout << label << ": ";
    size_t i = 0;
    bool first = true;
    while (i < n) {
        int64_t k = 0, l = 0, p = 0, q = 0;
        gcf_dims_facet(dims, i, &k, &l, &p, &q);
        size_t j = i + 1;
        for (; j < n; ++j) {
            int64_t k2 = 0, l2 = 0, p2 = 0, q2 = 0;
            gcf_dims_facet(dims, j, &k2, &l2, &p2, &q2);
            if (k2 != k || l2 != l || p2 != p || q2 != q) break;
        }
        if (!first) std::cout << ", ";
        std::cout << "(" << k << ", " << l << ", " << p << ", " << q << ")";
        if (j - i > 1) std::cout << " x" << (j - i);
        first = false;
        i = j;
    }
    std::cout << "\n";
}

int run_identify(const std::string& path, bool json_out) {
    ParsedDims input;
    if (!load_dims(path, input)) return 1;

    gcf_report* report = nullptr;
    gcf_status st = gcf_identify(input.dims, &report);
    if (st != GCF_OK) return fail("identify", st);

    if (json_out) {
        char* text = nullptr;
        st = gcf_report_to_json(report, 1, &text);
        if (st != GCF_OK) {
            gcf_report_free(report);
            return fail("identify", st);
        }
        std::cout << text << "\n";
        gcf_string_free(text);
    } else {
        const char* name = gcf_dims_name(input.dims);
        if (name != nullptr) std::cout << "fullerene: " << name << "\n";
        std::cout << "edges: " << gcf_dims_edge_count(input.dims)
                  << ", facets: " << gcf_dims_facet_count(input.dims) << "\n";
        std::cout << "inflation factor: " << gcf_report_inflation_factor(report)
                  << "\n";
        std::cout << "area scale factor: " << gcf_report_area_scale_factor(report)
                  << "\n";
        size_t chain = gcf_report_chain_length(report);
        if (chain == 0) {
            std::cout << "chain: none (input is its own archetype)\n";
        } else {
            std::cout << "chain: ";
            for (size_t i = 0; i < chain; ++i) {
                int64_t k = 0, l = 0;
                gcf_report_chain_step(report, i, &k, &l);
                if (i > 0) std::cout << " · ";
                std::cout << pair_str(k, l);
            }
            std::cout << "\n";
        }
        std::cout << "norm product: " << gcf_report_norm_product(report) << "\n";
        gcf_dims* archetype = nullptr;
        if (gcf_report_archetype(report, &archetype) == GCF_OK) {
            print_edge_groups(archetype, "archetype edges");
            print_facet_groups(archetype, "archetype facets");
            gcf_dims_free(archetype);
        }
        size_t residual = gcf_report_residual_count(report);
        std::cout << "residual primes:";
        if (residual == 0) {
            std::cout << " none";
        } else {
            for (size_t i = 0; i < residual; ++i) {
                uint64_t p = 0;
                gcf_report_residual_prime(report, i, &p);
                std::cout << " " << p;
            }
        }
        std::cout << "\n";
        size_t alternates = gcf_report_alternate_count(report);
        if (alternates > 0) {
            std::cout << "alternates:";
            for (size_t i = 0; i < alternates; ++i) {
                int64_t k = 0, l = 0;
                gcf_report_alternate(report, i, &k, &l);
                std::cout << " " << pair_str(k, l);
            }
            std::cout << "\n";
        }
        size_t notes = gcf_report_note_count(report);
        if (notes > 0) {
            std::cout << "notes:\n";
            for (size_t i = 0; i < notes; ++i) {
                std::cout << "  - " << gcf_report_note(report, i) << "\n";
            }
        }
    }

    size_t chain = gcf_report_chain_length(report);
    gcf_report_free(report);
    return chain > 0 ? 0 : 3;
}

int run_transform(const std::string& path, const std::string& kl,
                  const std::string& out_path, bool json_out) {
    int64_t k = 0, l = 0;
    size_t comma = kl.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument("no comma");
        k = std::stoll(kl.substr(0, comma));
        l = std::stoll(kl.substr(comma + 1));
    } catch (const std::exception&) {
        std::cerr << "--kl expects K,L with integer K and L\n";
        return 1;
    }

    ParsedDims input;
    if (!load_dims(path, input)) return 1;

    gcf_dims* transformed = nullptr;
    gcf_status st = gcf_dims_transform(input.dims, k, l, &transformed);
    if (st != GCF_OK) {
        std::cerr << "transform " << pair_str(k, l) << ": " << gcf_status_name(st);
        if (st == GCF_ERROR_DOMAIN) std::cerr << " (expected k >= 1, l >= 0)";
        std::cerr << "\n";
        return 1;
    }

    char* text = nullptr;
    st = gcf_dims_to_json(transformed, json_out ? 0 : 1, &text);
    gcf_dims_free(transformed);
    if (st != GCF_OK) return fail("transform", st);

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << out_path << ": cannot write file\n";
            gcf_string_free(text);
            return 1;
        }
        out << text << "\n";
    } else {
        std::cout << text << "\n";
    }
    gcf_string_free(text);
    return 0;
}

json candidate_entry(const Pair& c) {
    uint64_t norm = 0;
    gcf_norm(c.k, c.l, &norm);
    gcf_transform_kind kind = GCF_TRANSFORM_IDENTITY;
    gcf_transform_classify(c.k, c.l, &kind, nullptr);
    json entry;
    entry["k"] = c.k;
    entry["l"] = c.l;
    entry["norm"] = norm;
    entry["classification"] = kind_name(kind);
    json factors = json::array();
    if (kind == GCF_TRANSFORM_COMPOSITE) {
        if (auto parts = decompose_pairs(c.k, c.l)) {
            for (const Pair& f : *parts) factors.push_back({f.k, f.l});
        }
    }
    entry["factors"] = std::move(factors);
    return entry;
}

int run_candidates(uint64_t n, bool json_out) {
    if (n < 1) {
        std::cerr << "candidates: N must be >= 1\n";
        return 1;
    }
    auto pairs = candidate_pairs(n);
    if (!pairs) return fail("candidates", GCF_ERROR_DOMAIN);

    // One row per chiral pair: representative with k >= l (descending k),
    // partner shown alongside.
    std::vector<Pair> reps;
    for (const Pair& c : *pairs) {
        if (c.k >= c.l) reps.push_back(c);
    }
    std::sort(reps.begin(), reps.end(),
              [](const Pair& x, const Pair& y) { return x.k > y.k; });

    if (json_out) {
        json j;
        j["area_scale_factor"] = n;
        json list = json::array();
        for (const Pair& r : reps) {
            list.push_back(candidate_entry(r));
            if (r.k != r.l && r.l != 0) list.push_back(candidate_entry({r.l, r.k}));
        }
        j["candidates"] = std::move(list);
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "candidates for area scale factor " << n << " (" << pairs->size()
              << " found):\n";
    for (const Pair& r : reps) {
        std::cout << "  " << pair_str(r.k, r.l);
        if (r.k != r.l && r.l != 0) std::cout << " / " << pair_str(r.l, r.k);
        uint64_t norm = 0;
        gcf_norm(r.k, r.l, &norm);
        gcf_transform_kind kind = GCF_TRANSFORM_IDENTITY;
        gcf_transform_classify(r.k, r.l, &kind, nullptr);
        std::cout << "   norm " << norm << "   " << kind_name(kind);
        if (kind == GCF_TRANSFORM_COMPOSITE) {
            if (auto parts = decompose_pairs(r.k, r.l)) {
                std::cout << ": " << factor_product(*parts);
            }
        }
        std::cout << "\n";
    }
    return 0;
}

int run_table(uint64_t max_norm, bool json_out) {
    if (max_norm < 3) {
        std::cerr << "table: --max must be >= 3\n";
        return 1;
    }

    struct Row {
        int64_t k, l;
        uint64_t norm;
        gcf_transform_kind kind;
        std::vector<Pair> factors;
    };
    std::vector<Row> rows;
    for (int64_t k = 1; static_cast<uint64_t>(k) * static_cast<uint64_t>(k) < max_norm;
         ++k) {
        for (int64_t l = 0; l <= k; ++l) {
            uint64_t norm = 0;
            if (gcf_norm(k, l, &norm) != GCF_OK) continue;
            if (norm >= max_norm) break;
            if (norm < 2) continue;  // skip the identity
            Row row{k, l, norm, GCF_TRANSFORM_IDENTITY, {}};
            gcf_transform_classify(k, l, &row.kind, nullptr);
            if (row.kind == GCF_TRANSFORM_COMPOSITE) {
                if (auto parts = decompose_pairs(k, l)) row.factors = *parts;
            }
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        if (x.norm != y.norm) return x.norm < y.norm;
        return x.k < y.k;
    });

    auto notation = [](const Row& row) -> std::string {
        switch (row.kind) {
            case GCF_TRANSFORM_INFLATION: return "Inflation";
            case GCF_TRANSFORM_LEAPFROG:
            case GCF_TRANSFORM_PRIMARY: return "Primary";
            case GCF_TRANSFORM_COMPOSITE:
                return factor_product(merge_inflations(row.factors));
            case GCF_TRANSFORM_IDENTITY: return "Identity";
        }
        return "?";
    };

    if (json_out) {
        json j;
        j["max_norm"] = max_norm;
        json jrows = json::array();
        for (const Row& row : rows) {
            json r;
            r["k"] = row.k;
            r["l"] = row.l;
            r["norm"] = row.norm;
            r["classification"] = row.kind == GCF_TRANSFORM_INFLATION ? "Inflation"
                                  : row.kind == GCF_TRANSFORM_COMPOSITE
                                      ? "Composite"
                                      : "Primary";
            json factors = json::array();
            for (const Pair& f : row.factors) factors.push_back({f.k, f.l});
            r["factors"] = std::move(factors);
            r["notation"] = notation(row);
            jrows.push_back(std::move(r));
        }
        j["rows"] = std::move(jrows);
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::printf("%-10s %6s  %s\n", "(k, l)", "N_kl", "notation");
    for (const Row& row : rows) {
        std::printf("%-10s %6" PRIu64 "  %s\n", pair_str(row.k, row.l).c_str(),
                    row.norm, notation(row).c_str());
    }
    return 0;
}

int run_check(int conjecture, uint64_t bound, bool json_out) {
    if (bound < 3) {
        std::cerr << "check: --bound must be >= 3\n";
        return 1;
    }
    uint64_t checked = 0, counterexamples = 0;
    char* detail = nullptr;
    gcf_status st = gcf_check_conjecture(conjecture, bound, &checked,
                                         &counterexamples, &detail);
    if (st != GCF_OK) return fail("check", st);

    if (json_out) {
        std::cout << detail << "\n";
    } else {
        std::cout << "conjecture " << conjecture << ", bound " << bound
                  << ": checked " << checked << " transforms, counterexamples: "
                  << counterexamples << "\n";
        if (counterexamples > 0) {
            json j = json::parse(detail);
            for (const auto& c : j["counterexamples"]) {
                std::cout << "  " << pair_str(c["k"], c["l"]) << ": "
                          << c["detail"].get<std::string>() << "\n";
            }
        }
    }
    gcf_string_free(detail);
    return counterexamples == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goldberg-Coxeter fullerene toolkit"};
    app.require_subcommand(1);

    std::string path;
    std::string kl;
    std::string out_path;
    bool json_out = false;
    uint64_t n = 0;
    uint64_t max_norm = 100;
    uint64_t bound = 0;
    int conjecture = 0;

    CLI::App* identify = app.add_subcommand(
        "identify", "Recover the transformation chain and ultimate archetype");
    identify->add_option("file", path, "dims JSON file")->required();
    identify->add_flag("--json", json_out, "machine-readable output");

    CLI::App* transform =
        app.add_subcommand("transform", "Apply a transformation to a dims file");
    transform->add_option("file", path, "dims JSON file")->required();
    transform->add_option("--kl", kl, "transformation K,L")->required();
    transform->add_option("--out", out_path, "write the result to a file");
    transform->add_flag("--json", json_out, "compact output");

    CLI::App* candidates =
        app.add_subcommand("candidates", "List transforms with a given norm");
    candidates->add_option("N", n, "area scale factor")->required();
    candidates->add_flag("--json", json_out, "machine-readable output");

    CLI::App* table =
        app.add_subcommand("table", "Norm and classification table");
    table->add_option("--max", max_norm, "list rows with norm below this bound");
    table->add_flag("--json", json_out, "machine-readable output");

    CLI::App* check =
        app.add_subcommand("check", "Exhaustively check a conjecture");
    check->add_option("--conjecture", conjecture, "1 or 2")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    check->add_option("--bound", bound, "norm bound, >= 3")->required();
    check->add_flag("--json", json_out, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (identify->parsed()) return run_identify(path, json_out);
    if (transform->parsed()) return run_transform(path, kl, out_path, json_out);
    if (candidates->parsed()) return run_candidates(n, json_out);
    if (table->parsed()) return run_table(max_norm, json_out);
    if (check->parsed()) return run_check(conjecture, bound, json_out);
    return 1;
}
