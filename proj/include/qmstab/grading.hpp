#pragma once

// Gradings of the polynomial ring: weighted z-gradings indexed by Z and
// term-order gradings indexed by Z^n. Both assign every nonzero polynomial a
// degree and a highest-degree part; the zero polynomial has the bottom degree.

#include "qmstab/parser.hpp"
#include "qmstab/polynomial.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qmstab {

/// Degree in an ordered group, extended by a bottom element (the degree of 0).
/// Adding bottom to anything yields bottom.
template <class Value>
class GradedDegree {
public:
    GradedDegree() = default;  // bottom
    GradedDegree(Value v) : v_(std::move(v)) {}

    static GradedDegree bottom() { return GradedDegree(); }

    bool is_bottom() const noexcept { return !v_.has_value(); }
    const Value& value() const {
        if (!v_) throw DomainError("the zero polynomial has no finite degree");
        return *v_;
    }

    friend GradedDegree operator+(const GradedDegree& a, const GradedDegree& b) {
        if (a.is_bottom() || b.is_bottom()) return bottom();
        return GradedDegree(*a.v_ + *b.v_);
    }

    friend bool operator==(const GradedDegree&, const GradedDegree&) = default;

private:
    std::optional<Value> v_;
};

/// Weight vector z in Z^n \ {0}.
class ZVector {
public:
    ZVector() = default;
    explicit ZVector(std::vector<std::int64_t> z) : z_(std::move(z)) {
        if (z_.empty()) throw DomainError("z-vector must have at least one entry");
        if (std::all_of(z_.begin(), z_.end(), [](std::int64_t x) { return x == 0; }))
            throw DomainError("the zero z-vector grades everything in degree 0 and is rejected");
    }
    ZVector(std::initializer_list<std::int64_t> z) : ZVector(std::vector<std::int64_t>(z)) {}

    std::size_t size() const noexcept { return z_.size(); }
    std::int64_t operator[](std::size_t i) const { return z_[i]; }
    const std::vector<std::int64_t>& entries() const noexcept { return z_; }

    /// z . delta, with overflow reported rather than wrapped.
    std::int64_t dot(const ExponentVector& delta) const {
        if (delta.size() != z_.size()) throw DimensionError("z-vector and exponent differ in length");
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < z_.size(); ++i) {
            std::int64_t term = 0;
            if (__builtin_mul_overflow(z_[i], static_cast<std::int64_t>(delta[i]), &term) ||
                __builtin_add_overflow(acc, term, &acc))
                throw DomainError("z-degree overflows 64 bits");
        }
        return acc;
    }

    friend bool operator==(const ZVector&, const ZVector&) = default;
    friend auto operator<=>(const ZVector&, const ZVector&) = default;

private:
    std::vector<std::int64_t> z_;
};

using ZDegree = GradedDegree<std::int64_t>;

/// "1,-1" -> ZVector{1,-1}.
inline ZVector parse_zvector(std::string_view text) {
    std::vector<std::int64_t> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw DomainError("empty entry in z-vector '" + std::string(text) + "'");
        item = item.substr(b, e - b + 1);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw DomainError("bad integer '" + item + "' in z-vector");
        out.push_back(v);
    }
    if (!text.empty() && text.back() == ',') throw DomainError("trailing ',' in z-vector");
    return ZVector(std::move(out));
}

inline std::string to_string(const ZVector& z) {
    std::string s;
    for (std::size_t i = 0; i < z.size(); ++i) s += (i ? "," : "") + std::to_string(z[i]);
    return s;
}

inline std::string to_string(const ExponentVector& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s;
}

/// A translation-invariant linear order on N^n.
struct TermOrder {
    enum class Kind { Lex, DegLex };

    Kind kind = Kind::DegLex;
    std::vector<std::size_t> priority;  // variable indices, highest first

    TermOrder() = default;
    TermOrder(Kind k, std::vector<std::size_t> prio) : kind(k), priority(std::move(prio)) {
        std::vector<bool> seen(priority.size(), false);
        for (auto i : priority) {
            if (i >= priority.size() || seen[i]) throw DomainError("term-order priority is not a permutation");
            seen[i] = true;
        }
        if (priority.empty()) throw DomainError("term order over zero variables");
    }

    static TermOrder deglex(std::size_t n) { return identity(Kind::DegLex, n); }
    static TermOrder lex(std::size_t n) { return identity(Kind::Lex, n); }

    std::size_t size() const noexcept { return priority.size(); }

    /// Only degree-then-lex has finite-dimensional filtration pieces.
    bool finite_dimensional() const noexcept { return kind == Kind::DegLex; }

    friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
    static TermOrder identity(Kind k, std::size_t n) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), std::size_t{0});
        return TermOrder(k, std::move(p));
    }
};

inline std::strong_ordering compare_exponents(const TermOrder& ord, const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size() || a.size() != ord.size())
        throw DimensionError("term order and exponents differ in length");
    if (ord.kind == TermOrder::Kind::DegLex) {
        if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    }
    for (auto i : ord.priority)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

/// "deglex:x,y" or "lex:y,x" (highest priority first). Every variable of the
/// context must be listed exactly once.
inline TermOrder parse_term_order(std::string_view text, const VariableContext& ctx) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw DomainError("term order must look like 'deglex:x,y' or 'lex:x,y'");
    std::string_view kind = text.substr(0, colon);
    TermOrder::Kind k{};
    if (kind == "deglex")
        k = TermOrder::Kind::DegLex;
    else if (kind == "lex")
        k = TermOrder::Kind::Lex;
    else
        throw DomainError("unknown term order kind '" + std::string(kind) + "'");
    std::vector<std::size_t> prio;
    std::istringstream in{std::string(text.substr(colon + 1))};
    std::string name;
    while (std::getline(in, name, ',')) {
        auto b = name.find_first_not_of(" \t");
        auto e = name.find_last_not_of(" \t");
        name = b == std::string::npos ? "" : name.substr(b, e - b + 1);
        auto idx = ctx.index_of(name);
        if (!idx) throw DomainError("unknown variable '" + name + "' in term order");
        prio.push_back(*idx);
    }
    if (prio.size() != ctx.size()) throw DomainError("term order must list every variable exactly once");
    return TermOrder(k, std::move(prio));
}

inline std::string to_string(const TermOrder& ord, const VariableContext& ctx) {
    std::string s = ord.kind == TermOrder::Kind::DegLex ? "deglex:" : "lex:";
    for (std::size_t i = 0; i < ord.priority.size(); ++i) s += (i ? "," : "") + ctx.name(ord.priority[i]);
    return s;
}

using GradingSpec = std::variant<ZVector, TermOrder>;

// ---------------------------------------------------------------------------
// z-gradings

inline ZDegree z_degree(const Polynomial& f, const ZVector& z) {
    if (f.nvars() != z.size()) throw DimensionError("polynomial and z-vector differ in dimension");
    ZDegree best;
    for (const auto& [e, c] : f.terms()) {
        auto d = z.dot(e);
        if (best.is_bottom() || d > best.value()) best = d;
    }
    return best;
}

/// Sum of the terms of f at top z-degree.
inline Polynomial z_max_part(const Polynomial& f, const ZVector& z) {
    if (f.is_zero()) throw DomainError("the zero polynomial has no highest-degree part");
    const auto top = z_degree(f, z).value();
    Polynomial part(f.nvars());
    for (const auto& [e, c] : f.terms())
        if (z.dot(e) == top) part.add_term(e, c);
    return part;
}

struct HomogeneousPart {
    std::int64_t degree;
    Polynomial part;
};

/// f = sum of parts, degrees strictly increasing, each part nonzero.
inline std::vector<HomogeneousPart> z_homogeneous_decomposition(const Polynomial& f, const ZVector& z) {
    if (f.is_zero()) throw DomainError("the zero polynomial has no homogeneous decomposition");
    if (f.nvars() != z.size()) throw DimensionError("polynomial and z-vector differ in dimension");
    std::map<std::int64_t, Polynomial> parts;
    for (const auto& [e, c] : f.terms()) {
        auto [it, _] = parts.try_emplace(z.dot(e), f.nvars());
        it->second.add_term(e, c);
    }
    std::vector<HomogeneousPart> out;
    out.reserve(parts.size());
    for (auto& [d, p] : parts) out.push_back({d, std::move(p)});
    return out;
}

// ---------------------------------------------------------------------------
// term-order gradings

struct LeadingTerm {
    ExponentVector exponent;
    Rational coefficient;
};

inline LeadingTerm term_order_leading(const Polynomial& f, const TermOrder& ord) {
    if (f.is_zero()) throw DomainError("the zero polynomial has no leading term");
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it)
        if (compare_exponents(ord, it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

inline GradedDegree<ExponentVector> term_order_degree(const Polynomial& f, const TermOrder& ord) {
    if (f.is_zero()) return {};
    return term_order_leading(f, ord).exponent;
}

// ---------------------------------------------------------------------------
// residues modulo 2*Gamma

/// Residue label of a degree modulo 2*Gamma: one entry for Z, n entries for Z^n.
using Residue = std::vector<int>;

inline Residue residue_mod_two(std::int64_t d) { return {static_cast<int>(((d % 2) + 2) % 2)}; }

inline Residue residue_mod_two(const ExponentVector& e) {
    Residue r;
    r.reserve(e.size());
    for (auto x : e) r.push_back(static_cast<int>(x % 2));
    return r;
}

inline bool is_zero_residue(const Residue& r) {
    return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

inline std::string to_string(const Residue& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s;
}

/// Residue of deg(f) modulo 2*Gamma for either grading family; f nonzero.
inline Residue degree_residue(const Polynomial& f, const GradingSpec& grading) {
    if (f.is_zero()) throw DomainError("the zero polynomial has no degree residue");
    if (const auto* z = std::get_if<ZVector>(&grading)) return residue_mod_two(z_degree(f, *z).value());
    return residue_mod_two(term_order_leading(f, std::get<TermOrder>(grading)).exponent);
}

/// Highest-degree part for either grading family; f nonzero.
inline Polynomial max_part(const Polynomial& f, const GradingSpec& grading) {
    if (const auto* z = std::get_if<ZVector>(&grading)) return z_max_part(f, *z);
    auto lt = term_order_leading(f, std::get<TermOrder>(grading));
    return Polynomial::monomial(lt.exponent, lt.coefficient);
}

inline std::size_t grading_dimension(const GradingSpec& grading) {
    return std::visit([](const auto& g) { return g.size(); }, grading);
}

}  // namespace qmstab
