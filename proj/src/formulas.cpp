#include "nkt/formulas.hpp"

#include <stdexcept>

namespace nkt {

namespace {

BigNat bpow(const BigNat& base, long long e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    return pow(base, static_cast<unsigned>(e));
}

Rational rpow(const Rational& base, long long e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    return Rational(bpow(numerator(base), e), bpow(denominator(base), e));
}

long long require_dv(const std::optional<long long>& d_v) {
    if (!d_v) throw std::invalid_argument("edge role requires both endpoint degrees");
    return *d_v;
}

}  // namespace

long long closed_degree(TransformKind kind, Role role, long long d_u,
                        std::optional<long long> d_v, long long n, long long m) {
    if (role == Role::Vertex) {
        switch (kind) {
            case TransformKind::Total:
            case TransformKind::Gppp:
            case TransformKind::SemitotalPoint:
            case TransformKind::Gpp:
            case TransformKind::Gpmp: return 2 * d_u;
            case TransformKind::SemitotalLine: return d_u;
            case TransformKind::Gpm:
            case TransformKind::Gppm:
            case TransformKind::Gpmm: return m;
            case TransformKind::Gmp:
            case TransformKind::Gmmp:
            case TransformKind::Gmpp: return n - 1;
            case TransformKind::Gmm:
            case TransformKind::Gmmm:
            case TransformKind::Gmpm: return n + m - 1 - 2 * d_u;
        }
    } else {
        switch (kind) {
            case TransformKind::SemitotalPoint:
            case TransformKind::Gpp:
            case TransformKind::Gmp: return 2;
            case TransformKind::SemitotalLine:
            case TransformKind::Total:
            case TransformKind::Gppp:
            case TransformKind::Gmpp: return d_u + require_dv(d_v);
            case TransformKind::Gpm:
            case TransformKind::Gmm: require_dv(d_v); return n - 2;
            case TransformKind::Gmmm:
            case TransformKind::Gpmm:
                return n + m - 1 - (d_u + require_dv(d_v));
            case TransformKind::Gppm: return d_u + require_dv(d_v) + n - 4;
            case TransformKind::Gmmp:
            case TransformKind::Gpmp:
                return m + 3 - (d_u + require_dv(d_v));
            case TransformKind::Gmpm: return n - 4 + d_u + require_dv(d_v);
        }
    }
    throw std::logic_error("unknown transform kind");
}

bool has_paper_exact_form(TransformKind kind) {
    switch (kind) {
        case TransformKind::SemitotalPoint:
        case TransformKind::Gpp:
        case TransformKind::SemitotalLine:
        case TransformKind::Gpm:
        case TransformKind::Gmp:
        case TransformKind::Total:
        case TransformKind::Gppp:
        case TransformKind::Gmpp: return true;
        default: return false;
    }
}

BigNat paper_exact_form(TransformKind kind, const Graph& g) {
    const long long n = g.vertex_count();
    const long long m = g.edge_count();
    switch (kind) {
        case TransformKind::SemitotalPoint:
        case TransformKind::Gpp:  // per the t1 degrees 2d and 2
            return bpow(2, n + m) * nk(g);
        case TransformKind::SemitotalLine: return nk(g) * pi1star(g);
        case TransformKind::Gpm: return bpow(m, n) * bpow(n - 2, m);
        case TransformKind::Gmp: return bpow(2, m) * bpow(n - 1, n);
        case TransformKind::Total:
        case TransformKind::Gppp: return bpow(2, n) * nk(g) * pi1star(g);
        case TransformKind::Gmpp: return bpow(n - 1, n) * pi1star(g);
        default:
            throw std::invalid_argument("no exact closed form for this variant");
    }
}

std::optional<BigNat> nk_exact(TransformKind kind, const Graph& g) {
    const long long n = g.vertex_count();
    const long long m = g.edge_count();
    BigNat product = 1;
    for (int v = 0; v < n; ++v) {
        long long d = closed_degree(kind, Role::Vertex, g.degree(v), std::nullopt, n, m);
        if (d < 0) return std::nullopt;
        product *= d;
    }
    for (const auto& [u, v] : g.edges()) {
        long long d = closed_degree(kind, Role::Edge, g.degree(u), g.degree(v), n, m);
        if (d < 0) return std::nullopt;
        product *= d;
    }
    if (has_paper_exact_form(kind) && product != paper_exact_form(kind, g))
        throw std::logic_error("closed form disagrees with degree product");
    return product;
}

bool has_bound(TransformKind kind) {
    switch (kind) {
        case TransformKind::Gmm:
        case TransformKind::Gmmm:
        case TransformKind::Gppm:
        case TransformKind::Gmmp:
        case TransformKind::Gpmm:
        case TransformKind::Gpmp:
        case TransformKind::Gmpm: return true;
        default: return false;
    }
}

BoundResult nk_bound(TransformKind kind, const Graph& g) {
    if (!has_bound(kind))
        throw std::invalid_argument("no AM-GM bound for this variant");
    BoundResult result;
    const long long n = g.vertex_count();
    const long long m = g.edge_count();
    result.regular = is_regular(g).has_value();
    if (m < 1 || n < 1) return result;  // mean factors 4m/n, M1/m undefined
    result.applicable = true;
    result.exact = nk_exact(kind, g);
    const Rational mean_vertex = Rational(n + m - 1) - Rational(4 * m, n);
    const Rational mean_edge_m1 = Rational(m1(g), m);
    Rational bound;
    switch (kind) {
        case TransformKind::Gmm:
            bound = bpow(n - 2, m) * rpow(mean_vertex, n);
            break;
        case TransformKind::Gmmm:
            bound = rpow(mean_vertex, n) * rpow(Rational(n + m - 1) - mean_edge_m1, m);
            break;
        case TransformKind::Gppm:
            bound = bpow(m, n) * rpow(mean_edge_m1 + (n - 4), m);
            break;
        case TransformKind::Gmmp:
            bound = bpow(n - 1, n) * rpow(Rational(m + 3) - mean_edge_m1, m);
            break;
        case TransformKind::Gpmm:
            bound = bpow(m, n) * rpow(Rational(n + m - 1) - mean_edge_m1, m);
            break;
        case TransformKind::Gpmp:
            bound = Rational(bpow(2, n) * nk(g)) *
                    rpow(Rational(m + 3) - mean_edge_m1, m);
            break;
        case TransformKind::Gmpm:
            bound = rpow(mean_vertex, n) * rpow(mean_edge_m1 + (n - 4), m);
            break;
        default: break;
    }
    result.bound = bound;
    return result;
}

TransformKind corollary_variant(int index) {
    switch (index) {
        case 1: return TransformKind::Gmm;
        case 2: return TransformKind::Gmmm;
        case 3: return TransformKind::Gppm;
        case 4: return TransformKind::Gmmp;
        case 5: return TransformKind::Gpmm;
        case 6: return TransformKind::Gmpm;
        default: throw std::invalid_argument("corollary index must be 1..6");
    }
}

BigNat regular_corollary(int index, int n, int m, int r) {
    if (n < 1 || r < 0 || r > n - 1)
        throw std::invalid_argument("need 0 <= r <= n-1");
    if ((static_cast<long long>(n) * r) % 2 != 0 ||
        m != static_cast<long long>(n) * r / 2)
        throw std::invalid_argument("(n, m, r) inconsistent: m must equal nr/2");
    switch (index) {
        case 1: return bpow(n - 2, m) * bpow(n + m - 1 - 2 * r, n);
        case 2: return bpow(m + n - 2 * r - 1, m + n);
        case 3: return bpow(m, n) * bpow(2 * r + n - 4, m);
        case 4: return bpow(n - 1, n) * bpow(m + 3 - 2 * r, m);
        case 5: return bpow(m, n) * bpow(m + n - 2 * r - 1, m);
        case 6: return bpow(m + n - 2 * r - 1, n) * bpow(n + 2 * r - 4, m);
        default: throw std::invalid_argument("corollary index must be 1..6");
    }
}

namespace {

Rational rb(long long v) { return Rational(v); }
long long tri(long long n) { return n * (n - 1) / 2; }  // m of K_n

const ExampleClaim kExampleClaims[] = {
    {"ex1.i", Family::Cycle, TransformKind::Gpp, "NK(C_n^{++}) = 2^(3n)",
     [](long long n) { return rpow(rb(2), 3 * n); }},
    {"ex1.ii", Family::Cycle, TransformKind::Gpm,
     "NK(C_n^{+-}) = n^n (n-2)^n",
     [](long long n) { return rpow(rb(n), n) * rpow(rb(n - 2), n); }},
    {"ex1.iii", Family::Cycle, TransformKind::Gmp,
     "NK(C_n^{-+}) = 2^n (n-1)^n",
     [](long long n) { return rpow(rb(2), n) * rpow(rb(n - 1), n); }},
    {"ex1.iv", Family::Cycle, TransformKind::Gmm,
     "NK(C_n^{--}) = (n-2)^n (2n-5)^n",
     [](long long n) { return rpow(rb(n - 2), n) * rpow(rb(2 * n - 5), n); }},

    {"ex2.i", Family::Complete, TransformKind::Gpp,
     "NK(K_n^{++}) = 2^(n(n+1)/2) (n-1)^n",
     [](long long n) { return rpow(rb(2), n * (n + 1) / 2) * rpow(rb(n - 1), n); }},
    {"ex2.ii", Family::Complete, TransformKind::Gpm,
     "NK(K_n^{+-}) = [n(n-1)/2]^n (n-2)^(n(n-1)/2)",
     [](long long n) { return rpow(rb(tri(n)), n) * rpow(rb(n - 2), tri(n)); }},
    {"ex2.iii", Family::Complete, TransformKind::Gmp,
     "NK(K_n^{-+}) = 2^(n(n-1)/2) (n-1)^n",
     [](long long n) { return rpow(rb(2), tri(n)) * rpow(rb(n - 1), n); }},
    {"ex2.iv", Family::Complete, TransformKind::Gmm,
     "NK(K_n^{--}) = (n-2)^(n(n+1)/2) [(n-1)/2]^n",
     [](long long n) {
         return rpow(rb(n - 2), n * (n + 1) / 2) * rpow(Rational(n - 1, 2), n);
     }},

    {"ex3.i", Family::Cycle, TransformKind::Gppp, "NK(C_n^{+++}) = 4^(2n)",
     [](long long n) { return rpow(rb(4), 2 * n); }},
    {"ex3.ii", Family::Cycle, TransformKind::Gmmm,
     "NK(C_n^{---}) = (2n-5)^(2n)",
     [](long long n) { return rpow(rb(2 * n - 5), 2 * n); }},
    {"ex3.iii", Family::Cycle, TransformKind::Gppm, "NK(C_n^{++-}) = n^(2n)",
     [](long long n) { return rpow(rb(n), 2 * n); }},
    {"ex3.iv", Family::Cycle, TransformKind::Gmmp,
     "NK(C_n^{--+}) = (n-1)^(2n)",
     [](long long n) { return rpow(rb(n - 1), 2 * n); }},
    {"ex3.v", Family::Cycle, TransformKind::Gpmm,
     "NK(C_n^{+--}) = n^n (2n-5)^n",
     [](long long n) { return rpow(rb(n), n) * rpow(rb(2 * n - 5), n); }},
    {"ex3.v", Family::Cycle, TransformKind::Gmpm,
     "NK(C_n^{-+-}) = n^n (2n-5)^n",
     [](long long n) { return rpow(rb(n), n) * rpow(rb(2 * n - 5), n); }},
    {"ex3.vi", Family::Cycle, TransformKind::Gpmp,
     "NK(C_n^{+-+}) = 4^n (n-1)^n",
     [](long long n) { return rpow(rb(4), n) * rpow(rb(n - 1), n); }},
    {"ex3.vi", Family::Cycle, TransformKind::Gmpp,
     "NK(C_n^{-++}) = 4^n (n-1)^n",
     [](long long n) { return rpow(rb(4), n) * rpow(rb(n - 1), n); }},

    {"ex4.i", Family::Complete, TransformKind::Gppp,
     "NK(K_n^{+++}) = 4^n (n-1)^(2n)",
     [](long long n) { return rpow(rb(4), n) * rpow(rb(n - 1), 2 * n); }},
    {"ex4.ii", Family::Complete, TransformKind::Gmmm,
     "NK(K_n^{---}) = [(n-1)(n-2)/2]^(n(n+1)/2)",
     [](long long n) {
         return rpow(Rational((n - 1) * (n - 2), 2), n * (n + 1) / 2);
     }},
    {"ex4.iii", Family::Complete, TransformKind::Gppm,
     "NK(K_n^{++-}) = [n(n-1)/2]^n (3n-8)^m",
     [](long long n) { return rpow(rb(tri(n)), n) * rpow(rb(3 * n - 8), tri(n)); }},
    {"ex4.iv", Family::Complete, TransformKind::Gmmp,
     "NK(K_n^{--+}) = (n-1)^n [n(n-1)/2 - 2n + 1]^m",
     [](long long n) {
         return rpow(rb(n - 1), n) * rpow(rb(tri(n) - 2 * n + 1), tri(n));
     }},
    {"ex4.v", Family::Complete, TransformKind::Gmpp,
     "NK(K_n^{-++}) = 2^(n(n-1)/2) (n-1)^(n(n+1)/2)",
     [](long long n) {
         return rpow(rb(2), tri(n)) * rpow(rb(n - 1), n * (n + 1) / 2);
     }},
    {"ex4.vi", Family::Complete, TransformKind::Gpmm,
     "NK(K_n^{+--}) = [n(n-1)/2]^n [(n-1)(n-2)/2]^m",
     [](long long n) {
         return rpow(rb(tri(n)), n) * rpow(Rational((n - 1) * (n - 2), 2), tri(n));
     }},
    {"ex4.vii", Family::Complete, TransformKind::Gpmp,
     "NK(K_n^{+-+}) = 2^n (n-1)^n [n(n-1)/2 - 2n + 5]^m",
     [](long long n) {
         return rpow(rb(2), n) * rpow(rb(n - 1), n) *
                rpow(rb(tri(n) - 2 * n + 5), tri(n));
     }},
    {"ex4.viii", Family::Complete, TransformKind::Gmpm,
     "NK(K_n^{-+-}) = [(n-1)(n+6)/2]^n [3(n-2)]^m",
     [](long long n) {
         return rpow(Rational((n - 1) * (n + 6), 2), n) *
                rpow(rb(3 * (n - 2)), tri(n));
     }},
};

}  // namespace

std::span<const ExampleClaim> example_claims() { return kExampleClaims; }

BigNat example_value(const ExampleClaim& claim, int n) {
    if (n < 3) throw std::invalid_argument("example formulas require n >= 3");
    Rational v = claim.value(n);
    if (denominator(v) != 1)
        throw std::logic_error("printed example value is not an integer");
    return numerator(v);
}

BigNat family_example(Family family, TransformKind kind, int n) {
    for (const ExampleClaim& c : kExampleClaims)
        if (c.family == family && c.kind == kind) return example_value(c, n);
    throw std::invalid_argument("no printed example formula for this variant");
}

}  // namespace nkt
