#pragma once

#include "qmstab/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace qmstab {

/// A monomial exponent delta in N^n.
class ExponentVector {
public:
    using value_type = std::uint32_t;

    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : e_(n, 0) {}
    ExponentVector(std::initializer_list<value_type> init) : e_(init) {}
    explicit ExponentVector(std::vector<value_type> e) : e_(std::move(e)) {}

    static ExponentVector unit(std::size_t n, std::size_t i) {
        ExponentVector v(n);
        v.e_.at(i) = 1;
        return v;
    }

    std::size_t size() const noexcept { return e_.size(); }
    value_type operator[](std::size_t i) const { return e_[i]; }
    value_type& operator[](std::size_t i) { return e_[i]; }
    auto begin() const noexcept { return e_.begin(); }
    auto end() const noexcept { return e_.end(); }
    const std::vector<value_type>& entries() const noexcept { return e_; }

    std::uint64_t total_degree() const noexcept {
        return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
    }

    bool is_zero() const noexcept {
        return std::all_of(e_.begin(), e_.end(), [](value_type x) { return x == 0; });
    }

    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
        if (a.size() != b.size()) throw DimensionError("exponent vectors of different length");
        ExponentVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.e_[i] > std::numeric_limits<value_type>::max() - b.e_[i])
                throw DomainError("exponent overflow");
            r.e_[i] = a.e_[i] + b.e_[i];
        }
        return r;
    }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<value_type> e_;
};

/// Graded-lexicographic key order used for canonical term storage.
struct GrlexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        const auto da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a < b;
    }
};

/// Ordered, distinct variable names; position fixes the coordinate index.
class VariableContext {
public:
    VariableContext() = default;
    explicit VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw DomainError("variable context must be nonempty");
        std::unordered_set<std::string> seen;
        for (const auto& n : names_) {
            if (n.empty()) throw DomainError("empty variable name");
            if (!seen.insert(n).second) throw DomainError("duplicate variable '" + n + "'");
        }
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    friend bool operator==(const VariableContext&, const VariableContext&) = default;

private:
    std::vector<std::string> names_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// The term map never stores a zero coefficient, so the zero polynomial is
/// the empty map and equal polynomials have identical maps.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : n_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        p.add_term(ExponentVector(nvars), c);
        return p;
    }

    static Polynomial variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw DimensionError("variable index out of range");
        Polynomial p(nvars);
        p.add_term(ExponentVector::unit(nvars, i), 1);
        return p;
    }

    static Polynomial monomial(const ExponentVector& e, const Rational& c) {
        Polynomial p(e.size());
        p.add_term(e, c);
        return p;
    }

    /// Adds c*X^e in place, keeping the canonical form.
    void add_term(const ExponentVector& e, const Rational& c) {
        if (e.size() != n_) throw DimensionError("exponent length does not match variable count");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::size_t nvars() const noexcept { return n_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    Rational coefficient(const ExponentVector& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& g) {
        check_same_ring(g);
        for (const auto& [e, c] : g.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& g) {
        check_same_ring(g);
        for (const auto& [e, c] : g.terms_) add_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        f.check_same_ring(g);
        Polynomial r(f.n_);
        for (const auto& [ef, cf] : f.terms_)
            for (const auto& [eg, cg] : g.terms_) r.add_term(ef + eg, cf * cg);
        return r;
    }

    Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

    friend Polynomial operator*(const Rational& s, const Polynomial& f) {
        Polynomial r(f.n_);
        if (s == 0) return r;
        for (const auto& [e, c] : f.terms_) r.terms_.emplace_hint(r.terms_.end(), e, s * c);
        return r;
    }

    Polynomial pow(std::uint32_t k) const {
        Polynomial result = constant(n_, 1);
        Polynomial base = *this;
        while (k != 0) {
            if (k & 1U) result *= base;
            k >>= 1U;
            if (k != 0) base *= base;
        }
        return result;
    }

    /// Exact value at a rational point.
    Rational evaluate(std::span<const Rational> point) const {
        if (point.size() != n_) throw DimensionError("evaluation point has wrong dimension");
        // Powers per coordinate are cached since supports are small but repeat.
        std::vector<std::vector<Rational>> pw(n_, std::vector<Rational>{Rational(1)});
        auto power_of = [&](std::size_t i, std::uint32_t k) -> const Rational& {
            auto& cache = pw[i];
            while (cache.size() <= k) cache.push_back(cache.back() * point[i]);
            return cache[k];
        };
        Rational value = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < n_; ++i)
                if (e[i] != 0) t *= power_of(i, e[i]);
            value += t;
        }
        return value;
    }

    /// Floating-point value; only ever used to pre-screen candidates whose
    /// exact value is computed afterwards.
    double evaluate_approx(std::span<const double> point) const {
        double value = 0.0;
        for (const auto& [e, c] : terms_) {
            double t = static_cast<double>(c);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
            value += t;
        }
        return value;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    void check_same_ring(const Polynomial& g) const {
        if (g.n_ != n_) throw DimensionError("polynomials over different variable counts");
    }

    std::size_t n_ = 0;
    TermMap terms_;
};

}  // namespace qmstab
