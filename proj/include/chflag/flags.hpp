#pragma once

#include "chflag/digraph.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace chflag {

// A type of order k: a triangle-free digraph on the label set {0..k-1}
// (the labels 1..k of the usual notation, shifted down by one).
class FlagType {
public:
    FlagType() = default;
    explicit FlagType(Digraph underlying);

    const Digraph& underlying() const { return underlying_; }
    int order() const { return underlying_.order(); }

    friend bool operator==(const FlagType&, const FlagType&) = default;

private:
    Digraph underlying_;
};

FlagType empty_type();
FlagType vertex_type();  // the type "1"
FlagType beta_type();    // labelled edge 1->2
FlagType t_type();       // E = {23, 21, 31}
FlagType v_type();       // E = {21, 31}

// Accepts "0", "1", "beta", "T", "V".
FlagType type_by_name(std::string_view name);
std::string type_name(const FlagType& type);

// A sigma-flag (D, theta). Stored normalized: label i sits on vertex i, the
// unlabelled vertices follow in their original relative order.
class Flag {
public:
    Flag() = default;

    // Infers the type from the labelled vertices. Throws
    // std::invalid_argument if labels are not injective/in range or the
    // graph contains a triangle.
    Flag(const Digraph& graph, std::span<const int> labels);

    // Additionally checks that the labelled vertices induce `type`.
    Flag(const FlagType& type, const Digraph& graph, std::span<const int> labels);

    static Flag unit(const FlagType& type);

    const Digraph& graph() const { return graph_; }
    const FlagType& type() const { return type_; }
    int order() const { return graph_.order(); }
    int type_order() const { return type_.order(); }
    std::vector<int> labels() const;

    // Invariant under flag isomorphism; equal keys <=> isomorphic flags of
    // the same type and order.
    std::uint64_t key() const { return key_; }

    // Same digraph with every label removed.
    Flag unlabelled() const;

private:
    Digraph graph_;
    FlagType type_;
    std::uint64_t key_ = 0;
};

bool flags_isomorphic(const Flag& a, const Flag& b);

// One representative per isomorphism class of sigma-flags of order l,
// |sigma| <= l <= 5, ordered by key.
std::vector<Flag> enumerate_flags(const FlagType& sigma, int order);

// An ordered flag basis of F^sigma_l.
class Basis {
public:
    Basis(std::string name, FlagType type, int order, std::vector<Flag> members);

    const std::string& name() const { return name_; }
    const FlagType& type() const { return type_; }
    int order() const { return order_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<Flag>& members() const { return members_; }
    const Flag& operator[](std::size_t i) const { return members_[i]; }

    // Throws std::invalid_argument on a type/order mismatch and
    // std::logic_error if no member is isomorphic to `flag`.
    std::size_t index_of(const Flag& flag) const;

private:
    std::string name_;
    FlagType type_;
    int order_;
    std::vector<Flag> members_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const Basis>;

// "H" (F^0_4), "K" (F^beta_3) or "L" (F^1_3), members in the published
// index order.
BasisPtr named_basis(std::string_view name);

// The basis of F^sigma_l: the named registry where one exists, otherwise
// the enumeration order. Cached; safe to call concurrently.
BasisPtr basis_for(const FlagType& sigma, int order);

// rho, alpha, beta, gamma, kappa, chi, T, V, F0(T), F0(V); Greek letters
// are accepted in either spelling.
Flag named_flag(std::string_view name);

// Builds a digraph from an edge list such as "12 1a a2" over `alphabet`,
// where alphabet[i] names vertex i.
Digraph digraph_from_letters(std::string_view alphabet, std::string_view edges);

}  // namespace chflag
