#include "chflag/algebra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace chflag {

LinearForm::LinearForm(BasisPtr basis) : basis_(std::move(basis)), coeffs_(basis_->size()) {}

LinearForm::LinearForm(BasisPtr basis, RationalVector coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != basis_->size()) {
        throw std::invalid_argument("linear form length does not match basis " + basis_->name());
    }
}

LinearForm LinearForm::unit(BasisPtr basis, std::size_t index) {
    LinearForm f(std::move(basis));
    f.coeffs_.at(index) = 1;
    return f;
}

LinearForm LinearForm::ones(BasisPtr basis) {
    LinearForm f(std::move(basis));
    for (auto& c : f.coeffs_) {
        c = 1;
    }
    return f;
}

bool LinearForm::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

void LinearForm::check_compatible(const LinearForm& other) const {
    if (basis_ != other.basis_) {
        throw std::invalid_argument("linear forms over different bases: " + basis_->name() +
                                    " vs " + other.basis_->name());
    }
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

LinearForm& LinearForm::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
}

nlohmann::json to_json(const LinearForm& form) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : form.coeffs()) {
        coeffs.push_back(to_fraction_string(c));
    }
    return {{"basis", form.basis().name()}, {"coeffs", coeffs}};
}

LinearForm linear_form_from_json(const nlohmann::json& j) {
    BasisPtr basis = named_basis(j.at("basis").get<std::string>());
    RationalVector coeffs;
    for (const auto& c : j.at("coeffs")) {
        coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    return LinearForm(basis, std::move(coeffs));
}

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

// Key of the sigma-flag induced on the labels plus the unlabelled vertices
// selected by `mask` (bit i selects vertex k + i).
std::uint64_t restricted_key(const Flag& flag, unsigned mask) {
    const int k = flag.type_order();
    std::vector<int> vertices(static_cast<std::size_t>(k));
    std::iota(vertices.begin(), vertices.end(), 0);
    for (int i = 0; k + i < flag.order(); ++i) {
        if (mask & (1u << i)) {
            vertices.push_back(k + i);
        }
    }
    return canonical_encoding(induced_subgraph(flag.graph(), vertices), k);
}

void check_same_type(const Flag& a, const Flag& b) {
    if (!(a.type() == b.type())) {
        throw std::invalid_argument("flags have different types");
    }
}

}  // namespace

Rational density(const Flag& sub, const Flag& flag) {
    check_same_type(sub, flag);
    if (sub.order() > flag.order()) {
        throw std::invalid_argument("density: sub-flag larger than flag");
    }
    const int k = flag.type_order();
    const int free_vertices = flag.order() - k;
    const int pick = sub.order() - k;
    std::uint64_t hits = 0;
    for (unsigned mask = 0; mask < (1u << free_vertices); ++mask) {
        if (std::popcount(mask) == pick && restricted_key(flag, mask) == sub.key()) {
            ++hits;
        }
    }
    Rational result(mpz_class(hits), mpz_class(binomial(free_vertices, pick)));
    result.canonicalize();
    return result;
}

Rational pair_density(const Flag& f1, const Flag& f2, const Flag& flag) {
    check_same_type(f1, flag);
    check_same_type(f2, flag);
    const int k = flag.type_order();
    const int free_vertices = flag.order() - k;
    const int m1 = f1.order() - k;
    const int m2 = f2.order() - k;
    if (m1 + m2 > free_vertices) {
        throw std::invalid_argument("pair_density: flag too small for the pair");
    }
    const unsigned all = (1u << free_vertices) - 1;
    std::uint64_t hits = 0;
    for (unsigned v1 = 0; v1 <= all; ++v1) {
        if (std::popcount(v1) != m1 || restricted_key(flag, v1) != f1.key()) {
            continue;
        }
        for (unsigned v2 = 0; v2 <= all; ++v2) {
            if ((v2 & v1) == 0 && std::popcount(v2) == m2 && restricted_key(flag, v2) == f2.key()) {
                ++hits;
            }
        }
    }
    std::uint64_t pairs = binomial(free_vertices, m1) * binomial(free_vertices - m1, m2);
    Rational result{mpz_class(hits), mpz_class(pairs)};
    result.canonicalize();
    return result;
}

LinearForm product(const Flag& f1, const Flag& f2, int order) {
    check_same_type(f1, f2);
    const int k = f1.type_order();
    if (order < f1.order() + f2.order() - k) {
        throw std::invalid_argument("product: target order too small");
    }
    if (order > 5) {
        throw std::invalid_argument("product: target order above 5 unsupported");
    }
    BasisPtr basis = basis_for(f1.type(), order);
    LinearForm out(basis);
    for (std::size_t i = 0; i < basis->size(); ++i) {
        out[i] = pair_density(f1, f2, (*basis)[i]);
    }
    return out;
}

Rational normalizing_factor(const Flag& flag) {
    const int n = flag.order();
    const int k = flag.type_order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    // Every injective [k] -> V appears (n - k)! times as a prefix of a
    // permutation; count each prefix once.
    std::uint64_t hits = 0;
    std::uint64_t maps = 0;
    do {
        if (!std::is_sorted(perm.begin() + k, perm.end())) {
            continue;
        }
        ++maps;
        std::vector<int> labels(perm.begin(), perm.begin() + k);
        Flag candidate(flag.graph(), labels);
        if (candidate.type() == flag.type() && candidate.key() == flag.key()) {
            ++hits;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational result{mpz_class(hits), mpz_class(maps)};
    result.canonicalize();
    return result;
}

LinearForm average(const LinearForm& form) {
    BasisPtr target = basis_for(empty_type(), form.basis().order());
    LinearForm out(target);
    for (std::size_t i = 0; i < form.size(); ++i) {
        if (form[i] == 0) {
            continue;
        }
        const Flag& f = form.basis()[i];
        out[target->index_of(f.unlabelled())] += form[i] * normalizing_factor(f);
    }
    return out;
}

LinearForm as_form(const Flag& flag) {
    BasisPtr basis = basis_for(flag.type(), flag.order());
    return LinearForm::unit(basis, basis->index_of(flag));
}

LinearForm average(const Flag& flag) {
    return average(as_form(flag));
}

LinearForm lift_to_order(const LinearForm& form, int order) {
    const int from = form.basis().order();
    if (order < from) {
        throw std::invalid_argument("lift_to_order: cannot lower the order");
    }
    if (order == from) {
        return form;
    }
    BasisPtr target = basis_for(form.basis().type(), order);
    LinearForm out(target);
    for (std::size_t i = 0; i < form.size(); ++i) {
        if (form[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < target->size(); ++j) {
            out[j] += form[i] * density(form.basis()[i], (*target)[j]);
        }
    }
    return out;
}

Rational evaluate(const LinearForm& form, std::span<const Rational> point) {
    if (point.size() != form.size()) {
        throw std::invalid_argument("evaluate: dimension mismatch");
    }
    return dot(form.coeffs(), point);
}

}  // namespace chflag
