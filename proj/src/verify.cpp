#include "nkt/verify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

namespace nkt {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Match: return "MATCH";
        case Verdict::BoundHoldsStrict: return "BOUND_HOLDS_STRICT";
        case Verdict::BoundTight: return "BOUND_TIGHT";
        case Verdict::Mismatch: return "MISMATCH";
        case Verdict::NotApplicable: return "NOT_APPLICABLE";
    }
    return "?";
}

std::vector<std::string> default_errata_allowlist() {
    return {"thm2.g++", "cor1.printed", "ex4.i", "ex4.iii", "ex4.iv", "ex4.viii"};
}

std::vector<std::string> load_allowlist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open allowlist: " + path);
    nlohmann::json j;
    in >> j;
    if (!j.is_array()) throw std::runtime_error("allowlist must be a JSON array");
    std::vector<std::string> out;
    for (const auto& item : j) out.push_back(item.get<std::string>());
    return out;
}

namespace {

struct ClaimAcc {
    std::string id;
    std::string printed;
    long checked = 0;
    bool refuted = false;
    ErratumRecord first;

    void pass() { ++checked; }
    void fail(const std::string& counterexample, const std::string& printed_value,
              const std::string& oracle_value) {
        ++checked;
        if (!refuted) {
            refuted = true;
            first = {id, printed, counterexample, printed_value, oracle_value};
        }
    }
    void check(bool ok, const std::string& counterexample, const BigNat& claimed,
               const BigNat& oracle) {
        if (ok) pass();
        else fail(counterexample, claimed.str(), oracle.str());
    }
};

const char* bound_theorem_id(TransformKind k) {
    switch (k) {
        case TransformKind::Gmm: return "thm5";
        case TransformKind::Gmmm: return "thm7";
        case TransformKind::Gppm: return "thm8";
        case TransformKind::Gmmp: return "thm9";
        case TransformKind::Gpmm: return "thm11";
        case TransformKind::Gpmp: return "thm12";
        case TransformKind::Gmpm: return "thm13";
        default: return nullptr;
    }
}

const char* exact_theorem_id(TransformKind k) {
    switch (k) {
        case TransformKind::SemitotalPoint: return "thm1";
        case TransformKind::SemitotalLine: return "thm2";
        case TransformKind::Gpm: return "thm3";
        case TransformKind::Gmp: return "thm4";
        case TransformKind::Gppp: return "thm6";
        case TransformKind::Gmpp: return "thm10";
        default: return nullptr;  // total and g++ are covered via their twins
    }
}

std::string describe(const Graph& g) {
    std::ostringstream s;
    s << "graph " << graph_hash(g) << " (n=" << g.vertex_count()
      << ", m=" << g.edge_count() << ")";
    return s.str();
}

std::string describe_family(Family family, int n) {
    std::ostringstream s;
    s << (family == Family::Cycle ? "C" : "K") << n;
    return s.str();
}

std::string rational_str(const Rational& r) {
    std::ostringstream s;
    s << numerator(r);
    if (denominator(r) != 1) s << "/" << denominator(r);
    return s.str();
}

}  // namespace

Report run_suite(const CorpusSpec& spec, const std::vector<std::string>& allowlist) {
    // -- corpus assembly, deduplicated by content hash --
    std::vector<Graph> corpus;
    std::unordered_set<std::string> seen;
    auto add = [&](const Graph& g) {
        if (seen.insert(graph_hash(g)).second) corpus.push_back(g);
    };
    for (int n = spec.enum_min_n; n <= spec.enum_max_n; ++n)
        for_each_graph(n, spec.connected_only, add);
    for (int n = 1; n <= spec.all_graphs_max_n; ++n)
        for_each_graph(n, false, add);
    for (int n = spec.family_min_n; n <= spec.family_max_n; ++n) {
        if (n >= 3) add(cycle_graph(n));
        if (n <= spec.complete_max_n) add(complete_graph(n));
        add(path_graph(n));
        add(star_graph(n));
    }
    if (corpus.empty()) throw std::invalid_argument("corpus spec yields no graphs");

    // -- claim registry, fixed order --
    std::vector<ClaimAcc> claims;
    auto claim = [&](const std::string& id, const std::string& printed) {
        claims.push_back({id, printed});
        return claims.size() - 1;
    };
    std::map<std::string, size_t> claim_index;
    claim_index["thm1"] = claim("thm1", "NK(T1(G)) = 2^(n+m) NK(G)");
    claim_index["thm2"] = claim("thm2", "NK(T2(G)) = NK(G) Pi1*(G)");
    claim_index["thm2.g++"] = claim(
        "thm2.g++",
        "NK(G^{++}) = NK(G) Pi1*(G)  [the G^{++} degrees 2d and 2 give "
        "2^(n+m) NK(G) instead]");
    claim_index["thm3"] = claim("thm3", "NK(G^{+-}) = m^n (n-2)^m");
    claim_index["thm4"] = claim("thm4", "NK(G^{-+}) = 2^m (n-1)^n");
    claim_index["thm5"] = claim(
        "thm5", "NK(G^{--}) <= (n-2)^m [(n+m-1) - 4m/n]^n, equality iff regular");
    claim_index["thm6"] = claim("thm6", "NK(G^{+++}) = 2^n NK(G) Pi1*(G)");
    claim_index["thm7"] = claim(
        "thm7",
        "NK(G^{---}) <= [(m+n-1) - 4m/n]^n [(m+n-1) - M1/m]^m, equality iff regular");
    claim_index["thm8"] = claim(
        "thm8", "NK(G^{++-}) <= m^n [M1/m + (n-4)]^m, equality iff regular");
    claim_index["thm9"] = claim(
        "thm9", "NK(G^{--+}) <= (n-1)^n [(m+3) - M1/m]^m, equality iff regular");
    claim_index["thm10"] = claim("thm10", "NK(G^{-++}) = (n-1)^n Pi1*(G)");
    claim_index["thm11"] = claim(
        "thm11", "NK(G^{+--}) <= m^n [(m+n-1) - M1/m]^m, equality iff regular");
    claim_index["thm12"] = claim(
        "thm12",
        "NK(G^{+-+}) <= 2^n NK(G) [(m+3) - M1/m]^m, equality iff regular");
    claim_index["thm13"] = claim(
        "thm13",
        "NK(G^{-+-}) <= [(m+n-1) - 4m/n]^n [(n-4) + M1/m]^m, equality iff regular");
    static const char* corollary_printed[6] = {
        "regular: NK(G^{--}) = (n-2)^m (n+m-1-2r)^n  [exponent corrected from "
        "the printed (n-2)^n]",
        "regular: NK(G^{---}) = (m+n-2r-1)^(m+n)",
        "regular: NK(G^{++-}) = m^n (2r+n-4)^m",
        "regular: NK(G^{--+}) = (n-1)^n (m+3-2r)^m",
        "regular: NK(G^{+--}) = m^n (m+n-2r-1)^m",
        "regular: NK(G^{-+-}) = (m+n-2r-1)^n (n+2r-4)^m",
    };
    for (int i = 1; i <= 6; ++i)
        claim_index["cor" + std::to_string(i)] =
            claim("cor" + std::to_string(i), corollary_printed[i - 1]);
    claim_index["cor1.printed"] =
        claim("cor1.printed", "regular: NK(G^{--}) = (n-2)^n (n+m-1-2r)^n");
    for (const ExampleClaim& ec : example_claims()) {
        if (!claim_index.count(ec.id))
            claim_index[ec.id] = claim(ec.id, ec.printed);
    }

    Report report;

    // -- per-(graph, variant) records plus corpus-wide theorem checks --
    for (const Graph& g : corpus) {
        const std::string hash = graph_hash(g);
        const int n = g.vertex_count();
        const int m = g.edge_count();
        const std::optional<int> reg = is_regular(g);
        const std::string cex = describe(g);
        std::array<BigNat, all_transform_kinds.size()> oracle;

        for (size_t ki = 0; ki < all_transform_kinds.size(); ++ki) {
            const TransformKind kind = all_transform_kinds[ki];
            TransformedGraph t = build_transform(g, kind);
            oracle[ki] = nk(t.graph());

            VerificationRecord rec;
            rec.graph_hash = hash;
            rec.n = n;
            rec.m = m;
            rec.regular_degree = reg;
            rec.kind = kind;
            rec.oracle_nk = oracle[ki];
            rec.formula_nk = nk_exact(kind, g);

            if (!rec.formula_nk) {
                rec.verdict = Verdict::NotApplicable;
            } else if (*rec.formula_nk != rec.oracle_nk) {
                rec.verdict = Verdict::Mismatch;
            } else {
                rec.verdict = Verdict::Match;
                if (has_bound(kind)) {
                    BoundResult br = nk_bound(kind, g);
                    ClaimAcc& tc = claims[claim_index.at(bound_theorem_id(kind))];
                    if (br.applicable) {
                        rec.bound = br.bound;
                        if (!br.holds()) {
                            rec.verdict = Verdict::Mismatch;
                            tc.fail(cex, rational_str(*br.bound),
                                    rec.oracle_nk.str());
                        } else if (br.regular && !br.tight()) {
                            // Lemma 1 equality direction violated
                            rec.verdict = Verdict::BoundHoldsStrict;
                            tc.fail(cex, rational_str(*br.bound),
                                    rec.oracle_nk.str());
                        } else {
                            rec.verdict = br.tight() ? Verdict::BoundTight
                                                     : Verdict::BoundHoldsStrict;
                            tc.pass();
                            if (br.tight() && !br.regular)
                                report.nonregular_tight.push_back(
                                    hash + " " + std::string(kind_name(kind)));
                        }
                    }
                }
            }
            if (const char* tid = exact_theorem_id(kind))
                claims[claim_index.at(tid)].check(
                    has_paper_exact_form(kind) &&
                        paper_exact_form(kind, g) == oracle[ki],
                    cex, paper_exact_form(kind, g), oracle[ki]);
            if (kind == TransformKind::Gpp)
                claims[claim_index.at("thm2.g++")].check(
                    nk(g) * pi1star(g) == oracle[ki], cex,
                    nk(g) * pi1star(g), oracle[ki]);
            report.records.push_back(std::move(rec));
        }

        if (reg) {
            const int r = *reg;
            for (int i = 1; i <= 6; ++i) {
                size_t ki = 0;
                while (all_transform_kinds[ki] != corollary_variant(i)) ++ki;
                BigNat claimed = regular_corollary(i, n, m, r);
                claims[claim_index.at("cor" + std::to_string(i))].check(
                    claimed == oracle[ki], cex, claimed, oracle[ki]);
            }
            size_t ki = 0;
            while (all_transform_kinds[ki] != TransformKind::Gmm) ++ki;
            BigNat printed = pow(BigNat(n - 2), static_cast<unsigned>(n)) *
                             pow(BigNat(n + m - 1 - 2 * r), static_cast<unsigned>(n));
            claims[claim_index.at("cor1.printed")].check(printed == oracle[ki],
                                                         cex, printed, oracle[ki]);
        }
    }

    // -- printed worked-example formulas over the named families --
    for (const ExampleClaim& ec : example_claims()) {
        const int hi = ec.family == Family::Cycle
                           ? spec.family_max_n
                           : std::min(spec.family_max_n, spec.complete_max_n);
        for (int n = std::max(3, spec.family_min_n); n <= hi; ++n) {
            Graph g = ec.family == Family::Cycle ? cycle_graph(n)
                                                 : complete_graph(n);
            BigNat oracle_value = nk(build_transform(g, ec.kind).graph());
            BigNat printed = example_value(ec, n);
            claims[claim_index.at(ec.id)].check(printed == oracle_value,
                                                describe_family(ec.family, n),
                                                printed, oracle_value);
        }
    }

    // -- assemble: deterministic ordering, summary, errata classification --
    std::stable_sort(report.records.begin(), report.records.end(),
                     [](const VerificationRecord& a, const VerificationRecord& b) {
                         if (a.graph_hash != b.graph_hash)
                             return a.graph_hash < b.graph_hash;
                         return static_cast<int>(a.kind) < static_cast<int>(b.kind);
                     });
    std::sort(report.nonregular_tight.begin(), report.nonregular_tight.end());

    for (const VerificationRecord& rec : report.records) {
        ++report.summary.total;
        switch (rec.verdict) {
            case Verdict::Match: ++report.summary.match; break;
            case Verdict::BoundTight:
                ++report.summary.match;
                ++report.summary.tight;
                break;
            case Verdict::BoundHoldsStrict:
                ++report.summary.match;
                ++report.summary.strict;
                break;
            case Verdict::Mismatch: ++report.summary.mismatch; break;
            case Verdict::NotApplicable: ++report.summary.not_applicable; break;
        }
    }
    for (ClaimAcc& c : claims) {
        ClaimResult res;
        res.id = c.id;
        res.printed = c.printed;
        res.checked = c.checked;
        if (!c.refuted) {
            res.status = ClaimStatus::Confirmed;
        } else {
            bool allowlisted = std::find(allowlist.begin(), allowlist.end(),
                                         c.id) != allowlist.end();
            res.status = allowlisted ? ClaimStatus::Erratum : ClaimStatus::Mismatch;
            if (allowlisted)
                ++report.summary.errata;
            else
                ++report.summary.mismatch;
            report.errata.push_back(c.first);
        }
        report.claims.push_back(std::move(res));
    }
    return report;
}

nlohmann::ordered_json report_to_json(const Report& report) {
    nlohmann::ordered_json j;
    j["summary"] = {
        {"total", report.summary.total},
        {"match", report.summary.match},
        {"tight", report.summary.tight},
        {"strict", report.summary.strict},
        {"errata", report.summary.errata},
        {"mismatch", report.summary.mismatch},
        {"not_applicable", report.summary.not_applicable},
    };
    j["claims"] = nlohmann::ordered_json::array();
    for (const ClaimResult& c : report.claims) {
        j["claims"].push_back({
            {"id", c.id},
            {"printed", c.printed},
            {"status", c.status == ClaimStatus::Confirmed  ? "CONFIRMED"
                       : c.status == ClaimStatus::Erratum ? "ERRATUM"
                                                          : "MISMATCH"},
            {"checked", c.checked},
        });
    }
    j["errata"] = nlohmann::ordered_json::array();
    for (const ErratumRecord& e : report.errata) {
        j["errata"].push_back({
            {"claim", e.claim_id},
            {"printed", e.printed},
            {"counterexample", e.counterexample},
            {"printed_value", e.printed_value},
            {"oracle_value", e.oracle_value},
        });
    }
    j["nonregular_tight"] = report.nonregular_tight;
    j["records"] = nlohmann::ordered_json::array();
    for (const VerificationRecord& r : report.records) {
        nlohmann::ordered_json rec;
        rec["graph"] = r.graph_hash;
        rec["n"] = r.n;
        rec["m"] = r.m;
        if (r.regular_degree)
            rec["regular"] = *r.regular_degree;
        else
            rec["regular"] = nullptr;
        rec["variant"] = std::string(kind_name(r.kind));
        rec["oracle_nk"] = r.oracle_nk.str();
        if (r.formula_nk)
            rec["formula_nk"] = r.formula_nk->str();
        else
            rec["formula_nk"] = nullptr;
        if (r.bound)
            rec["bound"] = rational_str(*r.bound);
        else
            rec["bound"] = nullptr;
        rec["verdict"] = std::string(verdict_name(r.verdict));
        j["records"].push_back(std::move(rec));
    }
    return j;
}

std::string report_to_text(const Report& report) {
    std::ostringstream out;
    const auto& s = report.summary;
    out << "verification records: " << s.total << "  (match " << s.match
        << ", tight " << s.tight << ", strict " << s.strict << ", n/a "
        << s.not_applicable << ", mismatch " << s.mismatch << ")\n";
    out << "claims:\n";
    for (const ClaimResult& c : report.claims) {
        const char* st = c.status == ClaimStatus::Confirmed  ? "CONFIRMED"
                         : c.status == ClaimStatus::Erratum ? "ERRATUM  "
                                                            : "MISMATCH ";
        out << "  " << st << "  " << c.id << "  (" << c.checked
            << " checks)  " << c.printed << "\n";
    }
    if (!report.errata.empty()) {
        out << "errata:\n";
        for (const ErratumRecord& e : report.errata)
            out << "  " << e.claim_id << ": " << e.counterexample
                << "  printed=" << e.printed_value
                << "  oracle=" << e.oracle_value << "\n";
    }
    if (!report.nonregular_tight.empty()) {
        out << "non-regular tight bounds: " << report.nonregular_tight.size()
            << "\n";
        for (const std::string& t : report.nonregular_tight)
            out << "  " << t << "\n";
    }
    out << (report.ok() ? "RESULT: OK\n" : "RESULT: MISMATCH\n");
    return out.str();
}

}  // namespace nkt
