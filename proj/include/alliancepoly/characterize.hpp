#ifndef ALLIANCEPOLY_CHARACTERIZE_HPP
#define ALLIANCEPOLY_CHARACTERIZE_HPP

#include <algorithm>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "alliancepoly/bipoly.hpp"
#include "alliancepoly/closed_forms.hpp"
#include "alliancepoly/compare.hpp"
#include "alliancepoly/enumerate.hpp"
#include "alliancepoly/errors.hpp"
#include "alliancepoly/families.hpp"
#include "alliancepoly/io.hpp"
#include "alliancepoly/poly_props.hpp"

namespace alliancepoly {

enum class MatchEvidence { FullEquality, SliceConfirmed };

struct FamilyMatch {
    FamilySpec spec;
    MatchEvidence evidence = MatchEvidence::FullEquality;
    friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

namespace detail {

// Candidate family specs whose instance could have order n. All parameter
// solving starts from n; slice families get confirmed by enumeration later.
inline std::vector<FamilySpec> family_candidates(int n) {
    std::vector<FamilySpec> out;
    if (n >= 2) out.push_back(FamilySpec::path(n));
    if (n >= 3) out.push_back(FamilySpec::cycle(n));
    if (n >= 2) out.push_back(FamilySpec::star(n - 1));
    for (int r = 1; 2 * r <= n - 2; ++r) {
        out.push_back(FamilySpec::double_star(r, n - 2 - r));
    }
    out.push_back(FamilySpec::complete(n));
    for (int a = 1; 2 * a <= n; ++a) {
        out.push_back(FamilySpec::complete_bipartite(a, n - a));
    }
    if (n - 1 >= 3) out.push_back(FamilySpec::wheel(n - 1));
    if (n - 1 >= 4) out.push_back(FamilySpec::open_wheel(n - 1));
    if (n % 2 == 1 && n >= 3) out.push_back(FamilySpec::friendship((n - 1) / 2));
    if (n - 2 >= 1) out.push_back(FamilySpec::triangular_book(n - 2));
    if (n % 2 == 0 && n >= 4) {
        out.push_back(FamilySpec::quadrilateral_book((n - 2) / 2));
    }
    for (int r = 0; r <= n - 1; ++r) {
        out.push_back(FamilySpec::attached_complete(n - 1, r));
    }
    return out;
}

}  // namespace detail

// All paper families whose fingerprint the polynomial matches. Full-form
// families match by polynomial equality; slice families additionally
// require the enumerated da of a generated instance to equal the query,
// so a wrong slice proposition can never produce a wrong answer.
inline std::vector<FamilyMatch> identify_families(const BiPoly& da,
                                                  const EnumConfig& cfg = {}) {
    long long n = order_of(da);
    long long degree_sum = 0;
    for (int d : degree_sequence_of(da)) degree_sum += d;
    if (degree_sum % 2 != 0) {
        throw DomainError("degree-sum parity violated: not a da input");
    }
    std::vector<FamilyMatch> matches;
    if (n > kMaxVertices) return matches;
    for (const FamilySpec& spec : detail::family_candidates(static_cast<int>(n))) {
        Fingerprint fp = closed_form(spec);
        if (!alliancepoly::matches(fp, da)) continue;
        if (fp.kind() == Fingerprint::Kind::Full) {
            matches.push_back({spec, MatchEvidence::FullEquality});
        } else if (defensive_alliance_polynomial(make_family(spec), cfg) == da) {
            matches.push_back({spec, MatchEvidence::SliceConfirmed});
        }
    }
    return matches;
}

struct CorpusHit {
    std::string id;
    std::optional<bool> isomorphic;  // present when orders <= iso limit
};

struct CharacterizationReport {
    FamilySpec spec;
    BiPoly family_da;
    std::vector<CorpusHit> hits;
    std::vector<std::string> errors;    // per-entry parse failures
    std::vector<std::string> warnings;  // guard overruns, skipped graphs
    // true iff every da-equal corpus graph was certified isomorphic
    bool holds = false;
};

struct StreamedGraph {
    std::string id;
    Graph graph;
};

// Pull-based corpus stream; returns nullopt when exhausted. Must be safe to
// call under the internal lock (it is never called concurrently).
using GraphSource = std::function<std::optional<StreamedGraph>()>;

// Scans the corpus for graphs whose da equals the family instance's and
// attaches an isomorphism verdict to every hit. The characterization holds
// on the corpus iff all hits are isomorphic to the instance.
inline CharacterizationReport verify_characterization(
    const FamilySpec& spec, const GraphSource& source,
    const EnumConfig& cfg = {}, int iso_limit = kDefaultIsoLimit) {
    CharacterizationReport report;
    report.spec = spec;
    Graph instance = make_family(spec);
    report.family_da = defensive_alliance_polynomial(instance, cfg);

    std::mutex mu;
    EnumConfig worker_cfg = cfg;
    worker_cfg.parallel = false;  // parallelism is per corpus graph

    auto process = [&](const StreamedGraph& item) {
        BiPoly da;
        try {
            da = defensive_alliance_polynomial(item.graph, worker_cfg);
        } catch (const GuardExceeded& e) {
            std::lock_guard lock(mu);
            report.warnings.push_back(item.id + ": " + e.what());
            return;
        }
        if (da != report.family_da) return;
        CorpusHit hit;
        hit.id = item.id;
        if (instance.order() <= iso_limit && item.graph.order() <= iso_limit) {
            hit.isomorphic = are_isomorphic_small(item.graph, instance, iso_limit);
        }
        std::lock_guard lock(mu);
        report.hits.push_back(std::move(hit));
    };

    unsigned workers = detail::worker_count(cfg, 4 * kMaxVertices);
    if (workers <= 1) {
        for (auto item = source(); item; item = source()) process(*item);
    } else {
        std::mutex source_mu;
        auto pull = [&]() -> std::optional<StreamedGraph> {
            std::lock_guard lock(source_mu);
            return source();
        };
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_mu;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                try {
                    for (auto item = pull(); item; item = pull()) {
                        process(*item);
                    }
                } catch (...) {
                    std::lock_guard lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::sort(report.hits.begin(), report.hits.end(),
              [](const CorpusHit& a, const CorpusHit& b) { return a.id < b.id; });
    report.holds = true;  // vacuously true when no hit exists
    for (const CorpusHit& hit : report.hits) {
        if (!hit.isomorphic.has_value() || !*hit.isomorphic) {
            report.holds = false;
        }
    }
    return report;
}

inline CharacterizationReport verify_characterization(
    const FamilySpec& spec, const std::vector<CorpusEntry>& corpus,
    const EnumConfig& cfg = {}, int iso_limit = kDefaultIsoLimit) {
    std::size_t next = 0;
    GraphSource source = [&corpus, &next]() -> std::optional<StreamedGraph> {
        while (next < corpus.size() && !corpus[next].graph) ++next;
        if (next >= corpus.size()) return std::nullopt;
        const CorpusEntry& entry = corpus[next++];
        return StreamedGraph{entry.id, *entry.graph};
    };
    CharacterizationReport report =
        verify_characterization(spec, source, cfg, iso_limit);
    for (const CorpusEntry& entry : corpus) {
        if (!entry.graph) report.errors.push_back(entry.error);
    }
    return report;
}

inline std::string evidence_name(MatchEvidence e) {
    return e == MatchEvidence::FullEquality ? "full" : "slice+enumeration";
}

// {query, matches: [...], corpus_hits: [{graph6, isomorphic}]}
inline std::string to_json(const BiPoly& query,
                           const std::vector<FamilyMatch>& matches,
                           const std::vector<CorpusHit>& corpus_hits = {}) {
    nlohmann::ordered_json doc;
    doc["query"] = to_canonical_text(query);
    doc["matches"] = nlohmann::ordered_json::array();
    for (const FamilyMatch& m : matches) {
        doc["matches"].push_back({{"family", m.spec.to_string()},
                                  {"evidence", evidence_name(m.evidence)}});
    }
    doc["corpus_hits"] = nlohmann::ordered_json::array();
    for (const CorpusHit& hit : corpus_hits) {
        nlohmann::ordered_json h{{"graph6", hit.id}};
        if (hit.isomorphic) {
            h["isomorphic"] = *hit.isomorphic;
        } else {
            h["isomorphic"] = nullptr;
        }
        doc["corpus_hits"].push_back(std::move(h));
    }
    return doc.dump();
}

}  // namespace alliancepoly

#endif
