#ifndef ALLIANCEPOLY_COMPARE_HPP
#define ALLIANCEPOLY_COMPARE_HPP

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "alliancepoly/bipoly.hpp"
#include "alliancepoly/derived.hpp"
#include "alliancepoly/enumerate.hpp"
#include "alliancepoly/errors.hpp"
#include "alliancepoly/graph.hpp"
#include "alliancepoly/io.hpp"

namespace alliancepoly {

inline constexpr int kDefaultIsoLimit = 10;

namespace detail {

inline bool extend_isomorphism(const Graph& g, const Graph& h,
                               std::vector<int>& image, std::uint64_t used,
                               int v) {
    int n = g.order();
    if (v == n) return true;
    for (int u = 0; u < n; ++u) {
        if ((used >> u) & 1) continue;
        if (g.degree(v) != h.degree(u)) continue;
        bool consistent = true;
        for (int w = 0; w < v && consistent; ++w) {
            if (g.has_edge(v, w) != h.has_edge(u, image[w])) consistent = false;
        }
        if (!consistent) continue;
        image[v] = u;
        if (extend_isomorphism(g, h, image, used | (std::uint64_t{1} << u),
                               v + 1)) {
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Exact verdict via backtracking over degree-respecting bijections.
inline bool are_isomorphic_small(const Graph& g, const Graph& h,
                                 int limit = kDefaultIsoLimit) {
    if (g.order() > limit || h.order() > limit) {
        throw DomainError("isomorphism test limited to order <= " +
                          std::to_string(limit));
    }
    if (g.order() != h.order() || g.size() != h.size()) return false;
    if (g.degree_multiset() != h.degree_multiset()) return false;
    std::vector<int> image(g.order(), -1);
    return detail::extend_isomorphism(g, h, image, 0, 0);
}

struct CompareReport {
    bool da_equal = false;
    bool A_equal = false;
    bool q_equal = false;
    bool a_equal = false;
    std::optional<bool> isomorphic;  // present when both orders <= iso limit
};

inline CompareReport compare_graphs(const Graph& g, const Graph& h,
                                    const EnumConfig& cfg = {},
                                    int iso_limit = kDefaultIsoLimit) {
    BiPoly da_g = defensive_alliance_polynomial(g, cfg);
    BiPoly da_h = defensive_alliance_polynomial(h, cfg);
    CompareReport report;
    report.da_equal = da_g == da_h;
    report.A_equal = alliance_polynomial(da_g) == alliance_polynomial(da_h);
    report.q_equal = induced_connected_subgraph_polynomial(da_g) ==
                     induced_connected_subgraph_polynomial(da_h);
    // a is compared under each graph's own order; different orders never
    // compare equal even if the raw polynomials coincide
    report.a_equal =
        g.order() == h.order() &&
        strong_alliance_polynomial(da_g, g.order()) ==
            strong_alliance_polynomial(da_h, h.order());
    if (g.order() <= iso_limit && h.order() <= iso_limit) {
        report.isomorphic = are_isomorphic_small(g, h, iso_limit);
    }
    return report;
}

inline std::string to_json(const CompareReport& report) {
    nlohmann::ordered_json doc;
    doc["da_equal"] = report.da_equal;
    doc["A_equal"] = report.A_equal;
    doc["q_equal"] = report.q_equal;
    doc["a_equal"] = report.a_equal;
    if (report.isomorphic) {
        doc["isomorphic"] = *report.isomorphic;
    } else {
        doc["isomorphic"] = nullptr;
    }
    return doc.dump();
}

enum class PolyKey { Da, A, Q };

inline const char* poly_key_name(PolyKey key) {
    switch (key) {
        case PolyKey::Da: return "da";
        case PolyKey::A: return "A";
        case PolyKey::Q: return "q";
    }
    return "?";
}

struct Bucket {
    std::string key;                   // canonical polynomial text
    std::vector<std::string> members;  // graph identifiers, corpus order
};

struct SplitPair {
    std::string a, b;
    bool key_equal = true;
    bool da_equal = false;
    std::optional<bool> isomorphic;
};

struct ScanReport {
    PolyKey key = PolyKey::Da;
    std::vector<Bucket> buckets;
    std::vector<SplitPair> split_pairs;
    std::vector<std::string> errors;    // per-entry parse failures
    std::vector<std::string> warnings;  // guard overruns
};

// Buckets the corpus by the chosen polynomial (canonical text). Within each
// bucket of >= 2 members, pairs with distinct da are reported; da-equal
// members are isomorphism-checked against the first member of their
// da-class (isomorphism is transitive, so this certifies pairwise), and any
// certified non-isomorphic pair is reported rather than suppressed.
inline ScanReport scan_corpus(const std::vector<CorpusEntry>& corpus,
                              PolyKey key, const EnumConfig& cfg = {},
                              int iso_limit = kDefaultIsoLimit) {
    ScanReport report;
    report.key = key;

    struct Item {
        const CorpusEntry* entry = nullptr;
        std::string key_text;
        std::string da_text;
        std::string warning;
        bool ok = false;
    };
    std::vector<Item> items(corpus.size());

    EnumConfig worker_cfg = cfg;
    worker_cfg.parallel = false;  // parallelism is per corpus graph
    auto process = [&](std::size_t i) {
        const CorpusEntry& entry = corpus[i];
        items[i].entry = &entry;
        if (!entry.graph) return;
        BiPoly da;
        try {
            da = defensive_alliance_polynomial(*entry.graph, worker_cfg);
        } catch (const GuardExceeded& e) {
            items[i].warning = entry.id + ": " + e.what();
            return;
        }
        items[i].da_text = to_canonical_text(da);
        switch (key) {
            case PolyKey::Da:
                items[i].key_text = items[i].da_text;
                break;
            case PolyKey::A:
                items[i].key_text = to_canonical_text(alliance_polynomial(da));
                break;
            case PolyKey::Q:
                items[i].key_text = to_canonical_text(
                    induced_connected_subgraph_polynomial(da));
                break;
        }
        items[i].ok = true;
    };

    unsigned workers = detail::worker_count(cfg, static_cast<int>(corpus.size()) + 1);
    if (workers <= 1 || corpus.size() < 2) {
        for (std::size_t i = 0; i < corpus.size(); ++i) process(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < corpus.size();
                     i = next.fetch_add(1)) {
                    process(i);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    std::map<std::string, std::vector<std::size_t>> by_key;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!items[i].entry->graph) {
            report.errors.push_back(items[i].entry->error);
        } else if (!items[i].ok) {
            report.warnings.push_back(items[i].warning);
        } else {
            by_key[items[i].key_text].push_back(i);
        }
    }

    auto iso_verdict = [&](std::size_t i, std::size_t j) -> std::optional<bool> {
        const Graph& gi = *corpus[i].graph;
        const Graph& gj = *corpus[j].graph;
        if (gi.order() > iso_limit || gj.order() > iso_limit) return std::nullopt;
        return are_isomorphic_small(gi, gj, iso_limit);
    };

    for (const auto& [key_text, members] : by_key) {
        Bucket bucket;
        bucket.key = key_text;
        for (std::size_t i : members) bucket.members.push_back(corpus[i].id);
        report.buckets.push_back(std::move(bucket));
        if (members.size() < 2) continue;

        // da-classes within the key bucket, in first-seen order
        std::vector<std::pair<std::string, std::vector<std::size_t>>> classes;
        for (std::size_t i : members) {
            auto it = std::find_if(classes.begin(), classes.end(),
                                   [&](const auto& cls) {
                                       return cls.first == items[i].da_text;
                                   });
            if (it == classes.end()) {
                classes.push_back({items[i].da_text, {i}});
            } else {
                it->second.push_back(i);
            }
        }
        for (std::size_t ci = 0; ci < classes.size(); ++ci) {
            for (std::size_t cj = ci + 1; cj < classes.size(); ++cj) {
                for (std::size_t i : classes[ci].second) {
                    for (std::size_t j : classes[cj].second) {
                        SplitPair pair;
                        pair.a = corpus[i].id;
                        pair.b = corpus[j].id;
                        pair.da_equal = false;
                        pair.isomorphic = iso_verdict(i, j);
                        report.split_pairs.push_back(std::move(pair));
                    }
                }
            }
            // da-equal members: certify against the class representative
            const auto& cls = classes[ci].second;
            for (std::size_t k = 1; k < cls.size(); ++k) {
                auto verdict = iso_verdict(cls[0], cls[k]);
                if (verdict && !*verdict) {
                    SplitPair pair;
                    pair.a = corpus[cls[0]].id;
                    pair.b = corpus[cls[k]].id;
                    pair.da_equal = true;
                    pair.isomorphic = verdict;
                    report.split_pairs.push_back(std::move(pair));
                }
            }
        }
    }
    return report;
}

inline std::string to_json(const ScanReport& report) {
    nlohmann::ordered_json doc;
    doc["key"] = poly_key_name(report.key);
    doc["buckets"] = nlohmann::ordered_json::array();
    for (const Bucket& bucket : report.buckets) {
        doc["buckets"].push_back(
            {{"key", bucket.key}, {"members", bucket.members}});
    }
    doc["split_pairs"] = nlohmann::ordered_json::array();
    for (const SplitPair& pair : report.split_pairs) {
        nlohmann::ordered_json p{{"a", pair.a},
                                 {"b", pair.b},
                                 {"key_equal", pair.key_equal},
                                 {"da_equal", pair.da_equal}};
        if (pair.isomorphic) {
            p["isomorphic"] = *pair.isomorphic;
        } else {
            p["isomorphic"] = nullptr;
        }
        doc["split_pairs"].push_back(std::move(p));
    }
    doc["errors"] = report.errors;
    doc["warnings"] = report.warnings;
    return doc.dump();
}

inline std::string to_summary_table(const ScanReport& report) {
    std::ostringstream os;
    os << "key: " << poly_key_name(report.key) << "\n";
    os << "buckets: " << report.buckets.size() << "\n";
    for (const Bucket& bucket : report.buckets) {
        os << "  [" << bucket.members.size() << "] ";
        for (std::size_t i = 0; i < bucket.members.size(); ++i) {
            if (i) os << ", ";
            os << bucket.members[i];
        }
        os << "  {" << bucket.key << "}\n";
    }
    os << "split pairs: " << report.split_pairs.size() << "\n";
    for (const SplitPair& pair : report.split_pairs) {
        os << "  " << pair.a << " | " << pair.b
           << "  da_equal=" << (pair.da_equal ? "true" : "false")
           << "  isomorphic=";
        if (pair.isomorphic) {
            os << (*pair.isomorphic ? "true" : "false");
        } else {
            os << "unknown";
        }
        os << "\n";
    }
    if (!report.warnings.empty()) {
        os << "warnings: " << report.warnings.size() << "\n";
        for (const auto& w : report.warnings) os << "  " << w << "\n";
    }
    if (!report.errors.empty()) {
        os << "errors: " << report.errors.size() << "\n";
        for (const auto& e : report.errors) os << "  " << e << "\n";
    }
    return os.str();
}

}  // namespace alliancepoly

#endif
