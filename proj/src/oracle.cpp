#include "chflag/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace chflag::oracle {

DenseDigraph::DenseDigraph(int order) : n_(order) {
    if (order < 0 || order > kMaxVertices) {
        throw std::invalid_argument("DenseDigraph: order out of range");
    }
    adj_.assign(static_cast<std::size_t>(order * order), 0);
}

std::size_t DenseDigraph::index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw std::out_of_range("DenseDigraph: vertex out of range");
    }
    return static_cast<std::size_t>(u * n_ + v);
}

void DenseDigraph::add_edge(int u, int v) {
    if (u == v) {
        throw std::invalid_argument("DenseDigraph: loop");
    }
    adj_[index(u, v)] = 1;
}

int DenseDigraph::out_degree(int v) const {
    int d = 0;
    for (int w = 0; w < n_; ++w) {
        d += has_edge(v, w);
    }
    return d;
}

int DenseDigraph::min_out_degree() const {
    int best = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v) {
        best = std::min(best, out_degree(v));
    }
    return best;
}

int DenseDigraph::edge_count() const {
    return static_cast<int>(std::count(adj_.begin(), adj_.end(), 1));
}

DenseDigraph from_digraph(const Digraph& d) {
    DenseDigraph out(d.order());
    for (int u = 0; u < d.order(); ++u) {
        for (int v = 0; v < d.order(); ++v) {
            if (u != v && d.has_edge(u, v)) {
                out.add_edge(u, v);
            }
        }
    }
    return out;
}

bool is_triangle_free(const DenseDigraph& d) {
    const int n = d.order();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y || !d.has_edge(x, y)) {
                continue;
            }
            if (d.has_edge(y, x)) {
                return false;
            }
            for (int z = 0; z < n; ++z) {
                if (z != x && z != y && d.has_edge(y, z) && d.has_edge(z, x)) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Vertices listed in `order` form the induced digraph, with the labelled
// ones first.
DenseDigraph induce(const DenseDigraph& d, const std::vector<int>& vertices) {
    DenseDigraph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            if (i != j && d.has_edge(vertices[i], vertices[j])) {
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return out;
}

// Some bijection fixing 0..k-1 maps a onto b.
bool labelled_isomorphic(const DenseDigraph& a, const DenseDigraph& b, int k) {
    const int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) {
        return false;
    }
    std::vector<int> map(static_cast<std::size_t>(n));
    std::iota(map.begin(), map.end(), 0);
    do {
        bool same = true;
        for (int u = 0; u < n && same; ++u) {
            for (int v = 0; v < n && same; ++v) {
                if (u != v && a.has_edge(u, v) != b.has_edge(map[u], map[v])) {
                    same = false;
                }
            }
        }
        if (same) {
            return true;
        }
    } while (std::next_permutation(map.begin() + k, map.end()));
    return false;
}

void choose(int from, int remaining, std::vector<int>& current, int limit,
            const std::function<void(const std::vector<int>&)>& visit) {
    if (remaining == 0) {
        visit(current);
        return;
    }
    for (int v = from; v < limit; ++v) {
        current.push_back(v);
        choose(v + 1, remaining - 1, current, limit, visit);
        current.pop_back();
    }
}

}  // namespace

Rational brute_density(const Flag& sub, const Flag& flag) {
    const int k = flag.type_order();
    if (sub.type_order() != k) {
        throw std::invalid_argument("brute_density: flags of different types");
    }
    const DenseDigraph big = from_digraph(flag.graph());
    const DenseDigraph small = from_digraph(sub.graph());
    // Same labelled part?
    for (int u = 0; u < k; ++u) {
        for (int v = 0; v < k; ++v) {
            if (u != v && big.has_edge(u, v) != small.has_edge(u, v)) {
                throw std::invalid_argument("brute_density: flags of different types");
            }
        }
    }
    if (sub.order() > flag.order()) {
        throw std::invalid_argument("brute_density: sub-flag larger than flag");
    }
    long hits = 0;
    long total = 0;
    std::vector<int> current;
    choose(k, sub.order() - k, current, flag.order(), [&](const std::vector<int>& chosen) {
        std::vector<int> vertices(static_cast<std::size_t>(k));
        std::iota(vertices.begin(), vertices.end(), 0);
        vertices.insert(vertices.end(), chosen.begin(), chosen.end());
        ++total;
        if (labelled_isomorphic(induce(big, vertices), small, k)) {
            ++hits;
        }
    });
    return make_rational(hits, total);
}

DenseDigraph blow_up(const DenseDigraph& d) {
    const int n = d.order();
    if (n * n > DenseDigraph::kMaxVertices) {
        throw std::invalid_argument("blow_up: n^2 exceeds 64 vertices");
    }
    DenseDigraph out(n * n);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j && d.has_edge(i, j)) {
                    out.add_edge(v * n + i, v * n + j);
                }
            }
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v || !d.has_edge(u, v)) {
                continue;
            }
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    out.add_edge(u * n + i, v * n + j);
                }
            }
        }
    }
    return out;
}

Digraph random_triangle_free(int order, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 2);
    while (true) {
        DenseDigraph d(order);
        for (int u = 0; u < order; ++u) {
            for (int v = u + 1; v < order; ++v) {
                switch (pick(rng)) {
                    case 1: d.add_edge(u, v); break;
                    case 2: d.add_edge(v, u); break;
                    default: break;
                }
            }
        }
        if (!is_triangle_free(d)) {
            continue;
        }
        Digraph out(order);
        for (int u = 0; u < order; ++u) {
            for (int v = 0; v < order; ++v) {
                if (u != v && d.has_edge(u, v)) {
                    out.add_edge(u, v);
                }
            }
        }
        return out;
    }
}

nlohmann::ordered_json CheckReport::to_json() const {
    nlohmann::ordered_json j;
    j["config"] = config;
    j["trials"] = trials;
    j["violations"] = violations;
    j["seed"] = seed;
    if (!details.is_null()) {
        j["details"] = details;
    }
    return j;
}

namespace {

void check_chain_rule_at(const Flag& flag, const ChainRuleConfig& config, CheckReport& report) {
    BasisPtr outer = basis_for(flag.type(), config.l_prime);
    BasisPtr middle = basis_for(flag.type(), config.l_mid);
    for (const Flag& fp : outer->members()) {
        Rational direct = density(fp, flag);
        Rational via = 0;
        for (const Flag& mid : middle->members()) {
            via += density(fp, mid) * density(mid, flag);
        }
        if (direct != via) {
            report.violations.push_back("F=" + flag.graph().to_text() + " F'=" +
                                        fp.graph().to_text() + ": " + to_fraction_string(direct) +
                                        " != " + to_fraction_string(via));
        }
    }
}

}  // namespace

CheckReport chain_rule_check(const ChainRuleConfig& config, int trials) {
    const FlagType sigma = type_by_name(config.sigma);
    const int k = sigma.order();
    if (!(k <= config.l_prime && config.l_prime <= config.l_mid && config.l_mid <= config.l &&
          config.l <= 5)) {
        throw std::invalid_argument("chain_rule_check: need |sigma| <= l' <= l~ <= l <= 5");
    }
    CheckReport report;
    report.config = {{"sigma", config.sigma},
                     {"l_prime", config.l_prime},
                     {"l_mid", config.l_mid},
                     {"l", config.l},
                     {"method", config.exhaustive ? "exhaustive" : "random"}};
    report.seed = config.seed;
    if (config.exhaustive) {
        for (const Flag& flag : basis_for(sigma, config.l)->members()) {
            check_chain_rule_at(flag, config, report);
            ++report.trials;
        }
        return report;
    }
    std::mt19937_64 rng(config.seed);
    std::vector<int> vertices(static_cast<std::size_t>(config.l));
    std::iota(vertices.begin(), vertices.end(), 0);
    while (report.trials < trials) {
        Digraph g = random_triangle_free(config.l, rng);
        std::shuffle(vertices.begin(), vertices.end(), rng);
        std::vector<int> labels(vertices.begin(), vertices.begin() + k);
        Flag flag(g, labels);
        if (!(flag.type() == sigma)) {
            continue;
        }
        check_chain_rule_at(flag, config, report);
        ++report.trials;
    }
    return report;
}

CheckReport density_agreement_check() {
    CheckReport report;
    report.config = {{"sub", "F^0_3"}, {"flags", "H"}};
    BasisPtr small = basis_for(empty_type(), 3);
    BasisPtr big = named_basis("H");
    for (std::size_t i = 0; i < small->size(); ++i) {
        for (std::size_t h = 0; h < big->size(); ++h) {
            Rational fast = density((*small)[i], (*big)[h]);
            Rational slow = brute_density((*small)[i], (*big)[h]);
            ++report.trials;
            if (fast != slow) {
                report.violations.push_back("p(" + std::to_string(i) + "; H" + std::to_string(h) +
                                            "): algebra " + to_fraction_string(fast) +
                                            ", brute force " + to_fraction_string(slow));
            }
        }
    }
    return report;
}

CheckReport blowup_check(int trials, std::uint64_t seed, int max_order) {
    if (max_order < 1 || max_order > 8) {
        throw std::invalid_argument("blowup_check: max_order must be in 1..8");
    }
    CheckReport report;
    report.config = {{"max_order", max_order}};
    report.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order_dist(1, max_order);
    int matches_n = 0;
    int matches_n_plus_1 = 0;
    for (int t = 0; t < trials; ++t) {
        Digraph g = random_triangle_free(order_dist(rng), rng);
        DenseDigraph d = from_digraph(g);
        DenseDigraph b = blow_up(d);
        const int n = d.order();
        const int delta = d.min_out_degree();
        const int measured = b.min_out_degree();
        if (!is_triangle_free(b)) {
            report.violations.push_back("blow-up of " + g.to_text() + " has a triangle");
        }
        if (measured != delta * (n + 1)) {
            report.violations.push_back("blow-up of " + g.to_text() + ": min out-degree " +
                                        std::to_string(measured) + ", expected " +
                                        std::to_string(delta * (n + 1)));
        }
        matches_n += measured == delta * n;
        matches_n_plus_1 += measured == delta * (n + 1);
        ++report.trials;
    }
    report.details = {{"min_outdegree_equals_delta_n", matches_n},
                      {"min_outdegree_equals_delta_n_plus_delta", matches_n_plus_1}};
    return report;
}

}  // namespace chflag::oracle
