// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the full default corpus (all labeled graphs with n <= 4,
// all connected graphs with n <= 6, C_n/P_n/star_n for n <= 10, K_n for
// n <= 8).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nkt/verify.hpp"

using namespace nkt;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::printf("%s %s%s\n", ok ? "PASS" : "FAIL", name.c_str(), note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::vector<Graph> default_corpus() {
    std::vector<Graph> corpus;
    auto add = [&](const Graph& g) { corpus.push_back(g); };
    for (int n = 1; n <= 4; ++n) for_each_graph(n, false, add);
    for (int n = 5; n <= 6; ++n) for_each_graph(n, true, add);
    for (int n = 3; n <= 10; ++n) {
        add(cycle_graph(n));
        add(path_graph(n));
        add(star_graph(n));
        if (n <= 8) add(complete_graph(n));
    }
    return corpus;
}

}  // namespace

int main() {
    const std::vector<Graph> corpus = default_corpus();

    criterion("1. oracle/formula agreement, all 15 variants, under 60s", [&] {
        auto start = std::chrono::steady_clock::now();
        long mismatches = 0, applicable = 0;
        for (const Graph& g : corpus)
            for (TransformKind k : all_transform_kinds) {
                auto formula = nk_exact(k, g);
                if (!formula) continue;
                ++applicable;
                if (*formula != nk(build_transform(g, k).graph())) ++mismatches;
            }
        auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        return mismatches == 0 && applicable > 0 && secs < 60;
    });

    criterion("2. NK(T1(G)) = 2^(n+m) NK(G)", [&] {
        for (const Graph& g : corpus) {
            BigNat oracle = nk(build_transform(g, TransformKind::SemitotalPoint).graph());
            if (oracle != pow(BigNat(2), g.vertex_count() + g.edge_count()) * nk(g))
                return false;
        }
        return true;
    });

    criterion("3. NK(T2(G)) = NK(G) Pi1*(G); G^{++} follows Theorem 1's form", [&] {
        bool gpp_follows_thm1 = true, gpp_breaks_thm2 = false;
        for (const Graph& g : corpus) {
            if (nk(build_transform(g, TransformKind::SemitotalLine).graph()) !=
                nk(g) * pi1star(g))
                return false;
            BigNat gpp = nk(build_transform(g, TransformKind::Gpp).graph());
            if (gpp != pow(BigNat(2), g.vertex_count() + g.edge_count()) * nk(g))
                gpp_follows_thm1 = false;
            if (gpp != nk(g) * pi1star(g)) gpp_breaks_thm2 = true;
        }
        return gpp_follows_thm1 && gpp_breaks_thm2;
    });

    criterion("4. exact forms of Theorems 3, 4, 6, 10", [&] {
        const TransformKind kinds[] = {TransformKind::Gpm, TransformKind::Gmp,
                                       TransformKind::Gppp, TransformKind::Total,
                                       TransformKind::Gmpp};
        for (const Graph& g : corpus)
            for (TransformKind k : kinds)
                if (nk(build_transform(g, k).graph()) != paper_exact_form(k, g))
                    return false;
        return true;
    });

    criterion("5. AM-GM bounds hold; equality on every regular graph", [&] {
        long strict = 0, tight = 0, nonregular_tight = 0;
        for (const Graph& g : corpus) {
            if (g.edge_count() == 0) continue;
            for (TransformKind k : all_transform_kinds) {
                if (!has_bound(k)) continue;
                BoundResult b = nk_bound(k, g);
                if (!b.applicable || !b.holds()) return false;
                if (b.regular && !b.tight()) return false;
                if (b.tight()) {
                    ++tight;
                    if (!b.regular) ++nonregular_tight;  // reported, not failed
                } else {
                    ++strict;
                }
            }
        }
        std::printf("     (tight %ld, strict %ld, non-regular tight %ld)\n",
                    tight, strict, nonregular_tight);
        return tight > 0 && strict > 0;
    });

    criterion("6. Corollaries 1-6 match the oracle on regular graphs", [&] {
        long checked = 0;
        for (const Graph& g : corpus) {
            auto r = is_regular(g);
            if (!r) continue;
            for (int i = 1; i <= 6; ++i) {
                ++checked;
                if (regular_corollary(i, g.vertex_count(), g.edge_count(), *r) !=
                    nk(build_transform(g, corollary_variant(i)).graph()))
                    return false;
            }
        }
        return checked > 0;
    });

    criterion("7. Examples 1 and 3 (cycles) all CONFIRMED for 3 <= n <= 10", [&] {
        bool saw_c5_gpp = false;
        for (const ExampleClaim& c : example_claims()) {
            if (c.family != Family::Cycle) continue;
            for (int n = 3; n <= 10; ++n) {
                BigNat oracle = nk(build_transform(cycle_graph(n), c.kind).graph());
                if (example_value(c, n) != oracle) return false;
                if (n == 5 && c.kind == TransformKind::Gpp) {
                    if (oracle != 32768) return false;  // 2^(3n)
                    saw_c5_gpp = true;
                }
            }
        }
        return saw_c5_gpp;
    });

    criterion("8. Examples 2 and 4 (complete) classified; ex4.i refuted at K4", [&] {
        bool ex4i_refuted_at_4 = false;
        for (const ExampleClaim& c : example_claims()) {
            if (c.family != Family::Complete) continue;
            bool refuted = false;
            for (int n = 3; n <= 8; ++n) {
                BigNat printed = example_value(c, n);
                BigNat oracle =
                    nk(build_transform(complete_graph(n), c.kind).graph());
                if (printed != oracle) {
                    refuted = true;
                    if (std::string(c.id) == "ex4.i" && n == 4) {
                        ex4i_refuted_at_4 = printed == BigNat("1679616") &&
                                            oracle == BigNat("60466176");
                    }
                }
            }
            // every refutation must be on the checked-in allowlist
            if (refuted) {
                auto allow = default_errata_allowlist();
                if (std::find(allow.begin(), allow.end(), c.id) == allow.end())
                    return false;
            }
        }
        if (!ex4i_refuted_at_4) return false;
        // and CI stays green: the default suite reports zero mismatches
        CorpusSpec spec;
        spec.enum_max_n = 5;  // smaller corpus; claim classification is the point
        spec.family_max_n = 8;
        Report r = run_suite(spec);
        return r.ok() && r.summary.errata == 6;
    });

    criterion("9. G^{xyz} and G^{-x-y-z} are complements, all four pairs", [&] {
        for (const Graph& g : corpus)
            for (auto [a, b] : complementary_xyz_pairs)
                if (!(build_transform(g, a).graph() ==
                      complement(build_transform(g, b).graph())))
                    return false;
        return true;
    });

    criterion("10. |V| = n+m; |E(T1)| = 3m; |E(T2)| = m + M1/2", [&] {
        for (const Graph& g : corpus) {
            int nm = g.vertex_count() + g.edge_count();
            for (TransformKind k : all_transform_kinds)
                if (build_transform(g, k).graph().vertex_count() != nm) return false;
            if (build_transform(g, TransformKind::SemitotalPoint).graph().edge_count() !=
                3 * g.edge_count())
                return false;
            if (build_transform(g, TransformKind::SemitotalLine).graph().edge_count() !=
                g.edge_count() + m1(g) / 2)
                return false;
        }
        return true;
    });

    criterion("11. Pi1 = NK^2 and M1 edge-form = vertex-form everywhere", [&] {
        for (const Graph& g : corpus) {
            if (pi1(g) != nk(g) * nk(g)) return false;
            m1(g);  // throws if the two forms disagree
        }
        return true;
    });

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
