#include "chflag/flags.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace chflag {

FlagType::FlagType(Digraph underlying) : underlying_(underlying) {
    if (!is_triangle_free(underlying_)) {
        throw std::invalid_argument("type must be triangle-free");
    }
}

FlagType empty_type() { return FlagType(Digraph(0)); }
FlagType vertex_type() { return FlagType(Digraph(1)); }
FlagType beta_type() { return FlagType(Digraph(2, {{0, 1}})); }
FlagType t_type() { return FlagType(Digraph(3, {{1, 2}, {1, 0}, {2, 0}})); }
FlagType v_type() { return FlagType(Digraph(3, {{1, 0}, {2, 0}})); }

FlagType type_by_name(std::string_view name) {
    if (name == "0") return empty_type();
    if (name == "1") return vertex_type();
    if (name == "beta" || name == "β") return beta_type();
    if (name == "T") return t_type();
    if (name == "V") return v_type();
    throw std::invalid_argument("unknown type name: " + std::string(name));
}

std::string type_name(const FlagType& type) {
    if (type == empty_type()) return "0";
    if (type == vertex_type()) return "1";
    if (type == beta_type()) return "beta";
    if (type == t_type()) return "T";
    if (type == v_type()) return "V";
    return "[" + type.underlying().to_text() + "]";
}

Flag::Flag(const Digraph& graph, std::span<const int> labels) {
    const int n = graph.order();
    const int k = static_cast<int>(labels.size());
    if (k > n) {
        throw std::invalid_argument("flag has more labels than vertices");
    }
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<int> order;
    for (int v : labels) {
        if (v < 0 || v >= n || used[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("flag labels must be injective and in range");
        }
        used[static_cast<std::size_t>(v)] = true;
        order.push_back(v);
    }
    for (int v = 0; v < n; ++v) {
        if (!used[static_cast<std::size_t>(v)]) {
            order.push_back(v);
        }
    }
    if (!is_triangle_free(graph)) {
        throw std::invalid_argument("flag graph must be triangle-free");
    }
    graph_ = induced_subgraph(graph, order);
    std::vector<int> prefix(order.begin(), order.begin() + k);
    type_ = FlagType(induced_subgraph(graph, prefix));
    key_ = canonical_encoding(graph_, k);
}

Flag::Flag(const FlagType& type, const Digraph& graph, std::span<const int> labels)
    : Flag(graph, labels) {
    if (!(type_ == type)) {
        throw std::invalid_argument("labelled vertices do not induce the requested type");
    }
}

Flag Flag::unit(const FlagType& type) {
    std::vector<int> labels(static_cast<std::size_t>(type.order()));
    for (int i = 0; i < type.order(); ++i) {
        labels[static_cast<std::size_t>(i)] = i;
    }
    return Flag(type, type.underlying(), labels);
}

std::vector<int> Flag::labels() const {
    std::vector<int> out(static_cast<std::size_t>(type_order()));
    for (int i = 0; i < type_order(); ++i) {
        out[static_cast<std::size_t>(i)] = i;
    }
    return out;
}

Flag Flag::unlabelled() const {
    return Flag(graph_, std::span<const int>{});
}

bool flags_isomorphic(const Flag& a, const Flag& b) {
    if (!(a.type() == b.type())) {
        throw std::invalid_argument("flags_isomorphic: type mismatch");
    }
    return a.order() == b.order() && a.key() == b.key();
}

std::vector<Flag> enumerate_flags(const FlagType& sigma, int order) {
    const int k = sigma.order();
    if (order < k) {
        throw std::invalid_argument("enumerate_flags: order below type order");
    }
    if (order > 5) {
        throw std::invalid_argument("enumerate_flags: order above 5 unsupported");
    }
    std::vector<Edge> free_pairs;
    for (int u = 0; u < order; ++u) {
        for (int v = std::max(u + 1, k); v < order; ++v) {
            free_pairs.emplace_back(u, v);
        }
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < free_pairs.size(); ++i) {
        total *= 3;
    }
    std::vector<int> labels(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        labels[static_cast<std::size_t>(i)] = i;
    }
    auto base_edges = sigma.underlying().edges();
    std::map<std::uint64_t, Flag> classes;
    for (std::size_t code = 0; code < total; ++code) {
        Digraph d(order, base_edges);
        std::size_t rest = code;
        for (auto [u, v] : free_pairs) {
            switch (rest % 3) {
                case 1: d.add_edge(u, v); break;
                case 2: d.add_edge(v, u); break;
                default: break;
            }
            rest /= 3;
        }
        if (!is_triangle_free(d)) {
            continue;
        }
        std::uint64_t key = canonical_encoding(d, k);
        if (!classes.contains(key)) {
            classes.emplace(key, Flag(sigma, d, labels));
        }
    }
    std::vector<Flag> out;
    out.reserve(classes.size());
    for (auto& [key, flag] : classes) {
        out.push_back(flag);
    }
    return out;
}

Basis::Basis(std::string name, FlagType type, int order, std::vector<Flag> members)
    : name_(std::move(name)), type_(std::move(type)), order_(order), members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const Flag& f = members_[i];
        if (!(f.type() == type_) || f.order() != order_) {
            throw std::invalid_argument("basis " + name_ + ": member " + std::to_string(i) +
                                        " has wrong type or order");
        }
        if (!index_.emplace(f.key(), i).second) {
            throw std::invalid_argument("basis " + name_ + ": members " +
                                        std::to_string(index_.at(f.key())) + " and " +
                                        std::to_string(i) + " are isomorphic");
        }
    }
}

std::size_t Basis::index_of(const Flag& flag) const {
    if (!(flag.type() == type_) || flag.order() != order_) {
        throw std::invalid_argument("index_of: flag does not belong to basis " + name_);
    }
    auto it = index_.find(flag.key());
    if (it == index_.end()) {
        throw std::logic_error("index_of: no member of basis " + name_ + " matches " +
                               flag.graph().to_text());
    }
    return it->second;
}

Digraph digraph_from_letters(std::string_view alphabet, std::string_view edges) {
    Digraph d(static_cast<int>(alphabet.size()));
    std::size_t i = 0;
    while (i < edges.size()) {
        if (edges[i] == ' ' || edges[i] == ',') {
            ++i;
            continue;
        }
        if (i + 1 >= edges.size()) {
            throw std::invalid_argument("dangling vertex in edge list");
        }
        auto u = alphabet.find(edges[i]);
        auto v = alphabet.find(edges[i + 1]);
        if (u == std::string_view::npos || v == std::string_view::npos) {
            throw std::invalid_argument("unknown vertex name in edge list");
        }
        d.add_edge(static_cast<int>(u), static_cast<int>(v));
        i += 2;
    }
    return d;
}

namespace {

// Edge lists in published index order.
constexpr std::string_view kKEdges[] = {
    "12", "12 2a", "12 a2", "12 1a", "12 1a 2a", "12 1a a2", "12 a1", "12 a1 a2",
};

constexpr std::string_view kLEdges[] = {
    "",      "ab",       "1b",    "1b ab",    "1b ba",    "b1",    "b1 ab",
    "b1 ba", "1a 1b",    "1a 1b ab", "1a b1", "1a b1 ba", "a1 b1", "a1 b1 ab",
};

constexpr std::string_view kHEdges[] = {
    "",               "cd",             "bd cd",          "bd dc",
    "db dc",          "ad bd cd",       "ad bd dc",       "ad db dc",
    "da db dc",       "bc bd cd",       "ad bc",          "ad bc cd",
    "ad bc bd",       "ad bc bd cd",    "ad bc bd dc",    "ad bc db",
    "ad bc db dc",    "da bc bd",       "da bc bd cd",    "da bc bd dc",
    "da bc db dc",    "ac ad bc bd",    "ac ad bc bd cd", "ac ad bc db",
    "ac ad bc db dc", "ac da bc db",    "ac da bc db dc", "ac ad cb db cd",
    "ac da cb bd",    "ac da cb db dc", "ca da cb db cd", "ab ac ad bc bd cd",
};

template <std::size_t N>
BasisPtr make_registry(std::string name, const FlagType& type, std::string_view alphabet,
                       const std::string_view (&edge_lists)[N]) {
    std::vector<Flag> members;
    std::vector<int> labels(static_cast<std::size_t>(type.order()));
    for (int i = 0; i < type.order(); ++i) {
        labels[static_cast<std::size_t>(i)] = i;
    }
    for (auto edges : edge_lists) {
        members.emplace_back(type, digraph_from_letters(alphabet, edges), labels);
    }
    int order = static_cast<int>(alphabet.size());
    return std::make_shared<const Basis>(std::move(name), type, order, std::move(members));
}

}  // namespace

BasisPtr named_basis(std::string_view name) {
    static const BasisPtr h = make_registry("H", empty_type(), "abcd", kHEdges);
    static const BasisPtr k = make_registry("K", beta_type(), "12a", kKEdges);
    static const BasisPtr l = make_registry("L", vertex_type(), "1ab", kLEdges);
    if (name == "H") return h;
    if (name == "K") return k;
    if (name == "L") return l;
    throw std::invalid_argument("unknown basis: " + std::string(name));
}

BasisPtr basis_for(const FlagType& sigma, int order) {
    if (sigma == empty_type() && order == 4) return named_basis("H");
    if (sigma == beta_type() && order == 3) return named_basis("K");
    if (sigma == vertex_type() && order == 3) return named_basis("L");

    static std::mutex mutex;
    static std::map<std::tuple<std::uint64_t, int, int>, BasisPtr> cache;
    std::tuple key{sigma.underlying().adjacency_bits(), sigma.order(), order};
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) {
        return it->second;
    }
    auto basis = std::make_shared<const Basis>(
        "F^" + type_name(sigma) + "_" + std::to_string(order), sigma, order,
        enumerate_flags(sigma, order));
    cache.emplace(key, basis);
    return basis;
}

Flag named_flag(std::string_view name) {
    const std::vector<int> none;
    const std::vector<int> first{0};
    if (name == "rho" || name == "ϱ" || name == "varrho") {
        return Flag(Digraph(2, {{0, 1}}), none);
    }
    if (name == "alpha" || name == "α") {
        return Flag(Digraph(2, {{0, 1}}), first);
    }
    if (name == "beta" || name == "β") {
        return Flag::unit(beta_type());
    }
    if (name == "gamma" || name == "γ") {
        return Flag(Digraph(2), first);
    }
    if (name == "kappa" || name == "κ") {
        return Flag(Digraph(3, {{0, 1}, {0, 2}}), none);
    }
    if (name == "chi" || name == "χ") {
        return Flag(Digraph(3, {{0, 1}, {0, 2}}), first);
    }
    if (name == "T") {
        return Flag::unit(t_type());
    }
    if (name == "V") {
        return Flag::unit(v_type());
    }
    if (name == "F0(T)" || name == "F0(V)") {
        FlagType sigma = name == "F0(T)" ? t_type() : v_type();
        Digraph d(4, sigma.underlying().edges());
        for (int i = 0; i < 3; ++i) {
            d.add_edge(i, 3);
        }
        return Flag(sigma, d, std::vector<int>{0, 1, 2});
    }
    throw std::invalid_argument("unknown flag name: " + std::string(name));
}

}  // namespace chflag
