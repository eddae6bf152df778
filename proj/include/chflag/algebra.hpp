#pragma once

#include "chflag/flags.hpp"
#include "chflag/rational.hpp"

#include <json.hpp>

#include <span>

namespace chflag {

// Exact coefficient vector over an ordered flag basis.
class LinearForm {
public:
    explicit LinearForm(BasisPtr basis);
    LinearForm(BasisPtr basis, RationalVector coeffs);

    static LinearForm unit(BasisPtr basis, std::size_t index);
    // The all-ones form: sum of every basis member.
    static LinearForm ones(BasisPtr basis);

    const Basis& basis() const { return *basis_; }
    const BasisPtr& basis_ptr() const { return basis_; }
    std::size_t size() const { return coeffs_.size(); }
    const RationalVector& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }
    bool is_zero() const;

    LinearForm& operator+=(const LinearForm& other);
    LinearForm& operator-=(const LinearForm& other);
    LinearForm& operator*=(const Rational& scalar);

    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(const Rational& s, LinearForm f) { return f *= s; }
    friend bool operator==(const LinearForm& a, const LinearForm& b);

private:
    void check_compatible(const LinearForm& other) const;

    BasisPtr basis_;
    RationalVector coeffs_;
};

// {"basis": name, "coeffs": ["p/q", ...]}
nlohmann::json to_json(const LinearForm& form);
LinearForm linear_form_from_json(const nlohmann::json& j);

// p(F'; F): probability that the labelled part of F together with a uniform
// random (|F'| - k)-subset of its unlabelled vertices induces a copy of F'.
Rational density(const Flag& sub, const Flag& flag);

// p(F1, F2; F) over uniformly random ordered disjoint pairs (V1, V2).
Rational pair_density(const Flag& f1, const Flag& f2, const Flag& flag);

// F1 * F2 expanded over F^sigma_l.
LinearForm product(const Flag& f1, const Flag& f2, int order);

// Probability that a uniformly random injective labelling of the
// underlying digraph yields a flag isomorphic to F (full unlabelling).
Rational normalizing_factor(const Flag& flag);

// Averaging (full unlabelling) onto F^0_l.
LinearForm average(const LinearForm& form);
LinearForm average(const Flag& flag);

// Re-expresses a form over F^sigma_m in F^sigma_l (m <= l <= 5) via
// F' = sum p(F'; G) G.
LinearForm lift_to_order(const LinearForm& form, int order);
LinearForm as_form(const Flag& flag);

Rational evaluate(const LinearForm& form, std::span<const Rational> point);

}  // namespace chflag
