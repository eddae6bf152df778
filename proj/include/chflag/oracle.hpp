#pragma once

// Brute-force cross-checks. Nothing here reuses the canonical-form or
// subset-counting code of the main path.

#include "chflag/algebra.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace chflag::oracle {

// Plain adjacency matrix, up to 64 vertices.
class DenseDigraph {
public:
    static constexpr int kMaxVertices = 64;

    explicit DenseDigraph(int order = 0);

    int order() const { return n_; }
    bool has_edge(int u, int v) const { return adj_[index(u, v)] != 0; }
    void add_edge(int u, int v);
    int out_degree(int v) const;
    int min_out_degree() const;
    int edge_count() const;

private:
    std::size_t index(int u, int v) const;

    int n_;
    std::vector<char> adj_;
};

DenseDigraph from_digraph(const Digraph& d);

// No directed 3-cycle and no 2-cycle.
bool is_triangle_free(const DenseDigraph& d);

// p(sub; flag) by listing every admissible vertex subset and testing each
// against `sub` with an exhaustive label-preserving bijection search.
Rational brute_density(const Flag& sub, const Flag& flag);

// Vertex (v, i) becomes v * n + i; (v, i) -> (v, j) iff i -> j, and
// (u, i) -> (v, j) for every i, j whenever u -> v. Throws
// std::invalid_argument when n^2 > 64.
DenseDigraph blow_up(const DenseDigraph& d);

// Each unordered pair is empty, u->v or v->u with probability 1/3; draws
// are rejected until the result is triangle-free.
Digraph random_triangle_free(int order, std::mt19937_64& rng);

struct CheckReport {
    nlohmann::ordered_json config;
    int trials = 0;
    std::vector<std::string> violations;
    std::uint64_t seed = 0;
    nlohmann::ordered_json details;

    bool ok() const { return violations.empty(); }
    nlohmann::ordered_json to_json() const;
};

struct ChainRuleConfig {
    std::string sigma = "0";
    int l_prime = 2;
    int l_mid = 3;
    int l = 4;
    bool exhaustive = true;
    std::uint64_t seed = 1;
};

// p(F'; F) == sum over F~ of p(F'; F~) p(F~; F) for F' of order l_prime,
// F~ of order l_mid and F of order l. Exhaustive mode covers every F; random
// mode draws `trials` labelled triangle-free digraphs of order l.
CheckReport chain_rule_check(const ChainRuleConfig& config, int trials);

// brute_density against algebra density for all unlabelled order-3
// classes against H.
CheckReport density_agreement_check();

// Blow-ups of random triangle-free digraphs of order 1..max_order: checks
// triangle-freeness and records the measured min out-degree against
// delta*n and delta*(n+1).
CheckReport blowup_check(int trials, std::uint64_t seed, int max_order = 6);

}  // namespace chflag::oracle
