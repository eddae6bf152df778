#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chflag {

using Edge = std::pair<int, int>;

// Loop-free, 2-cycle-free digraph on at most kMaxVertices vertices.
// Adjacency lives in a single 64-bit word, bit (u * 8 + v) for edge u->v.
class Digraph {
public:
    static constexpr int kMaxVertices = 8;

    Digraph() = default;
    explicit Digraph(int order);
    Digraph(int order, std::span<const Edge> edges);
    Digraph(int order, std::initializer_list<Edge> edges);

    int order() const { return order_; }
    bool has_edge(int u, int v) const;
    bool adjacent(int u, int v) const { return has_edge(u, v) || has_edge(v, u); }

    // Throws std::invalid_argument on loops, counter-parallel pairs or
    // out-of-range endpoints.
    void add_edge(int u, int v);

    // Edges in lexicographic (u, v) order.
    std::vector<Edge> edges() const;
    int edge_count() const;
    int out_degree(int v) const;
    int in_degree(int v) const;
    int min_out_degree() const;

    std::uint64_t adjacency_bits() const { return adj_; }

    // Row-major bit string over ordered pairs (u, v), u != v; the first
    // pair is the most significant bit, so integer order is lexicographic.
    std::uint64_t encoding() const;

    // Relabels vertex i as perm[i].
    Digraph permuted(std::span<const int> perm) const;

    // "n:<int>;edges:<u>-><v>,..." with edges in lexicographic order.
    std::string to_text() const;
    static Digraph from_text(std::string_view text);

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.order_ == b.order_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const;

    int order_ = 0;
    std::uint64_t adj_ = 0;
};

bool is_triangle_free(const Digraph& d);

// Vertices of the result are numbered 0..|S|-1 in the order of S.
Digraph induced_subgraph(const Digraph& d, std::span<const int> subset);

// Minimum of permuted(p).encoding() over permutations p that fix the first
// `fixed_prefix` vertices pointwise.
std::uint64_t canonical_encoding(const Digraph& d, int fixed_prefix = 0);

Digraph canonical_form(const Digraph& d);
bool are_isomorphic(const Digraph& a, const Digraph& b);

// One representative per isomorphism class of triangle-free digraphs on n
// vertices (0 <= n <= 5), in canonical form, ordered by canonical encoding.
std::vector<Digraph> enumerate_triangle_free(int n);

}  // namespace chflag
