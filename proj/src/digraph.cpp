#include "chflag/digraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace chflag {

namespace {

constexpr std::uint64_t bit(int u, int v) {
    return std::uint64_t{1} << (u * Digraph::kMaxVertices + v);
}

int parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("digraph text: bad integer '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

Digraph::Digraph(int order) : order_(order) {
    if (order < 0 || order > kMaxVertices) {
        throw std::invalid_argument("digraph order out of range: " + std::to_string(order));
    }
}

Digraph::Digraph(int order, std::span<const Edge> edges) : Digraph(order) {
    for (auto [u, v] : edges) {
        add_edge(u, v);
    }
}

Digraph::Digraph(int order, std::initializer_list<Edge> edges)
    : Digraph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= order_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(order_));
    }
}

bool Digraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_ & bit(u, v)) != 0;
}

void Digraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
    }
    if (adj_ & bit(v, u)) {
        throw std::invalid_argument("counter-parallel edge " + std::to_string(u) + "->" +
                                    std::to_string(v));
    }
    adj_ |= bit(u, v);
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order_; ++u) {
        for (int v = 0; v < order_; ++v) {
            if (adj_ & bit(u, v)) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

int Digraph::edge_count() const {
    return std::popcount(adj_);
}

int Digraph::out_degree(int v) const {
    check_vertex(v);
    return std::popcount((adj_ >> (v * kMaxVertices)) & 0xffu);
}

int Digraph::in_degree(int v) const {
    check_vertex(v);
    int count = 0;
    for (int u = 0; u < order_; ++u) {
        count += (adj_ & bit(u, v)) ? 1 : 0;
    }
    return count;
}

int Digraph::min_out_degree() const {
    int best = order_;
    for (int v = 0; v < order_; ++v) {
        best = std::min(best, out_degree(v));
    }
    return best;
}

std::uint64_t Digraph::encoding() const {
    std::uint64_t code = 0;
    for (int u = 0; u < order_; ++u) {
        for (int v = 0; v < order_; ++v) {
            if (u != v) {
                code = (code << 1) | ((adj_ & bit(u, v)) ? 1u : 0u);
            }
        }
    }
    return code;
}

Digraph Digraph::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != order_) {
        throw std::invalid_argument("permutation size mismatch");
    }
    Digraph out(order_);
    for (int u = 0; u < order_; ++u) {
        for (int v = 0; v < order_; ++v) {
            if (adj_ & bit(u, v)) {
                out.adj_ |= bit(perm[u], perm[v]);
            }
        }
    }
    return out;
}

std::string Digraph::to_text() const {
    std::string out = "n:" + std::to_string(order_) + ";edges:";
    bool first = true;
    for (auto [u, v] : edges()) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += std::to_string(u) + "->" + std::to_string(v);
    }
    return out;
}

Digraph Digraph::from_text(std::string_view text) {
    if (!text.starts_with("n:")) {
        throw std::invalid_argument("digraph text must start with 'n:'");
    }
    auto semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw std::invalid_argument("digraph text: missing ';'");
    }
    Digraph d(parse_int(text.substr(2, semi - 2)));
    std::string_view rest = text.substr(semi + 1);
    if (!rest.starts_with("edges:")) {
        throw std::invalid_argument("digraph text: missing 'edges:'");
    }
    rest.remove_prefix(6);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        auto arrow = item.find("->");
        if (arrow == std::string_view::npos) {
            throw std::invalid_argument("digraph text: bad edge '" + std::string(item) + "'");
        }
        d.add_edge(parse_int(item.substr(0, arrow)), parse_int(item.substr(arrow + 2)));
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    return d;
}

bool is_triangle_free(const Digraph& d) {
    const int n = d.order();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (!d.has_edge(x, y)) {
                continue;
            }
            for (int z = 0; z < n; ++z) {
                if (d.has_edge(y, z) && d.has_edge(z, x)) {
                    return false;
                }
            }
        }
    }
    return true;
}

Digraph induced_subgraph(const Digraph& d, std::span<const int> subset) {
    Digraph out(static_cast<int>(subset.size()));
    for (int v : subset) {
        if (v < 0 || v >= d.order()) {
            throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        }
    }
    for (std::size_t i = 0; i < subset.size(); ++i) {
        for (std::size_t j = 0; j < subset.size(); ++j) {
            if (i != j && d.has_edge(subset[i], subset[j])) {
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return out;
}

std::uint64_t canonical_encoding(const Digraph& d, int fixed_prefix) {
    const int n = d.order();
    if (fixed_prefix < 0 || fixed_prefix > n) {
        throw std::invalid_argument("canonical_encoding: bad fixed prefix");
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = d.encoding();
    while (std::next_permutation(perm.begin() + fixed_prefix, perm.end())) {
        best = std::min(best, d.permuted(perm).encoding());
    }
    return best;
}

Digraph canonical_form(const Digraph& d) {
    const int n = d.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Digraph best = d;
    std::uint64_t best_code = d.encoding();
    while (std::next_permutation(perm.begin(), perm.end())) {
        Digraph candidate = d.permuted(perm);
        if (candidate.encoding() < best_code) {
            best_code = candidate.encoding();
            best = candidate;
        }
    }
    return best;
}

bool are_isomorphic(const Digraph& a, const Digraph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
        return false;
    }
    auto degrees = [](const Digraph& d) {
        std::vector<std::pair<int, int>> seq;
        for (int v = 0; v < d.order(); ++v) {
            seq.emplace_back(d.out_degree(v), d.in_degree(v));
        }
        std::sort(seq.begin(), seq.end());
        return seq;
    };
    if (degrees(a) != degrees(b)) {
        return false;
    }
    return canonical_encoding(a) == canonical_encoding(b);
}

std::vector<Digraph> enumerate_triangle_free(int n) {
    if (n < 0 || n > 5) {
        throw std::invalid_argument("enumerate_triangle_free: order must be in [0, 5]");
    }
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        total *= 3;
    }
    std::map<std::uint64_t, Digraph> classes;
    for (std::size_t code = 0; code < total; ++code) {
        Digraph d(n);
        std::size_t rest = code;
        for (auto [u, v] : pairs) {
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
        Digraph canon = canonical_form(d);
        classes.emplace(canon.encoding(), canon);
    }
    std::vector<Digraph> out;
    out.reserve(classes.size());
    for (auto& [code, d] : classes) {
        out.push_back(d);
    }
    return out;
}

}  // namespace chflag
