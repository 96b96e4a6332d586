#pragma once

// Stability decisions for finitely generated quadratic modules QM(f_1..f_s).
//
// Every Stable verdict carries a certificate that verify_certificate can
// re-derive with exact arithmetic:
//   * z-gradings: a rational point at which all highest-degree parts are
//     strictly positive (one point per residue class mod 2 when the
//     mod-two reduction is needed). Such a point has an open neighbourhood
//     of the same kind, so the positivity set of the max parts is Zariski
//     dense and the module is totally stable for that grading.
//   * several z-gradings: additionally multipliers r in N^m with
//     sum r_j z^(j) > 0, which makes the gradings cover the usual total
//     degree grading and yields stability, closedness and (n >= 2) failure
//     of the strong moment property.
//   * term orders: the sign rule on leading coefficients per residue class.
//
// The witness search is one-sided: failing to find a point gives Unknown,
// never a negative answer. Only the term-order sign rule is complete and may
// report NotTotallyStable.

#include "qmstab/feasibility.hpp"
#include "qmstab/grading.hpp"
#include "qmstab/parser.hpp"
#include "qmstab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qmstab {

/// Named variables plus nonzero generators f_1..f_s. Index 0 stands for the
/// implicit generator f_0 = 1 wherever member indices are used.
class GeneratorSystem {
public:
    GeneratorSystem() = default;
    GeneratorSystem(VariableContext ctx, std::vector<Polynomial> gens) : ctx_(std::move(ctx)), gens_(std::move(gens)) {
        if (ctx_.size() == 0) throw DomainError("generator system needs at least one variable");
        if (gens_.empty()) throw DomainError("generator system needs at least one generator");
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].nvars() != ctx_.size())
                throw DimensionError("generator " + std::to_string(i + 1) + " has the wrong variable count");
            if (gens_[i].is_zero()) throw DomainError("generator " + std::to_string(i + 1) + " is zero");
        }
    }

    static GeneratorSystem parse(std::vector<std::string> vars, const std::vector<std::string>& gens) {
        VariableContext ctx(std::move(vars));
        std::vector<Polynomial> polys;
        for (const auto& g : gens) polys.push_back(parse_polynomial(g, ctx));
        return {std::move(ctx), std::move(polys)};
    }

    const VariableContext& context() const noexcept { return ctx_; }
    std::size_t nvars() const noexcept { return ctx_.size(); }
    std::size_t size() const noexcept { return gens_.size(); }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }

    /// Member 0 is the constant 1, member k >= 1 is f_k.
    Polynomial member(std::size_t k) const {
        if (k == 0) return Polynomial::constant(nvars(), 1);
        return gens_.at(k - 1);
    }
    std::size_t member_count() const noexcept { return gens_.size() + 1; }

    /// Generators of PO(f_1..f_t) as a quadratic module: all products
    /// f_1^e_1 ... f_t^e_t for e in {0,1}^t \ {0}, listed by the binary
    /// value of e with f_1 as the lowest bit.
    GeneratorSystem preordering_closure() const {
        constexpr std::size_t max_generators = 16;
        if (gens_.size() > max_generators)
            throw DomainError("preordering closure limited to " + std::to_string(max_generators) + " generators");
        std::vector<Polynomial> out;
        const std::uint32_t count = 1U << gens_.size();
        for (std::uint32_t e = 1; e < count; ++e) {
            Polynomial p = Polynomial::constant(nvars(), 1);
            for (std::size_t i = 0; i < gens_.size(); ++i)
                if (e & (1U << i)) p *= gens_[i];
            out.push_back(std::move(p));
        }
        return {ctx_, std::move(out)};
    }

private:
    VariableContext ctx_;
    std::vector<Polynomial> gens_;
};

// ---------------------------------------------------------------------------
// mod-two reduction

struct ResidueClass {
    Residue residue;
    std::vector<std::size_t> members;  // member indices, 0 = implicit 1
};

struct ClassPartition {
    GradingSpec grading;
    std::vector<ResidueClass> classes;  // ordered by first member
};

/// Groups f_0 = 1, f_1, ..., f_s by deg(f_i) mod 2*Gamma.
inline ClassPartition partition_mod_two(const GeneratorSystem& sys, const GradingSpec& grading) {
    if (grading_dimension(grading) != sys.nvars()) throw DimensionError("grading and system differ in dimension");
    ClassPartition out{grading, {}};
    for (std::size_t k = 0; k < sys.member_count(); ++k) {
        Residue r = degree_residue(sys.member(k), grading);
        auto it = std::find_if(out.classes.begin(), out.classes.end(),
                               [&](const ResidueClass& c) { return c.residue == r; });
        if (it == out.classes.end())
            out.classes.push_back({std::move(r), {k}});
        else
            it->members.push_back(k);
    }
    return out;
}

// ---------------------------------------------------------------------------
// verdicts

enum class Status { Stable, NotTotallyStable, Unknown };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::Stable: return "Stable";
        case Status::NotTotallyStable: return "NotTotallyStable";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

/// A rational point with the exact values of some highest-degree parts there.
struct PositivityWitness {
    std::vector<Rational> point;
    std::vector<Rational> values;
};

/// Members sharing one witness point. residue is empty when a single group
/// covers the whole system (no reduction was needed).
struct WitnessGroup {
    std::optional<Residue> residue;
    std::vector<std::size_t> members;
    PositivityWitness witness;
};

struct DirectionCertificate {
    ZVector z;
    Status status = Status::Unknown;
    std::vector<WitnessGroup> groups;
    std::vector<Residue> failed_classes;  // Unknown only
};

struct TermClass {
    Residue residue;
    std::vector<std::size_t> members;
    std::vector<ExponentVector> leading_exponents;
    std::vector<Rational> leading_coefficients;
};

struct TermOrderAnalysis {
    TermOrder order;
    std::vector<TermClass> classes;
    std::optional<std::size_t> violating_class;
};

struct Consequences {
    bool closed = false;
    bool fails_smp = false;
};

/// Which route produced a verdict and therefore which checks apply.
enum class Route { SingleGrading, CombinedGradings, TermOrderRule };

struct StabilityVerdict {
    Status status = Status::Unknown;
    Route route = Route::SingleGrading;
    std::vector<std::string> chain;
    std::vector<DirectionCertificate> directions;
    std::vector<std::size_t> combined;  // indices into directions fed to the combination step
    std::optional<std::vector<BigInt>> multipliers;
    std::optional<ExponentVector> obstruction;
    std::optional<TermOrderAnalysis> term_order;
    Consequences consequences;
    std::string note;
};

// Names of the reasoning steps recorded in a verdict chain.
namespace step {
inline constexpr const char* mod_two = "mod-two-reduction";
inline constexpr const char* max_part_witness = "max-part-positivity-witness";
inline constexpr const char* tentacle = "tentacle-containment";
inline constexpr const char* positive_combination = "positive-combination";
inline constexpr const char* covering = "covering";
inline constexpr const char* covering_transfer = "covering-transfer";
inline constexpr const char* sign_rule = "term-order-sign-rule";
}  // namespace step

// ---------------------------------------------------------------------------
// term orders

/// Decides total stability for a term-order grading. Exact and complete:
/// within each residue class the leading coefficients must share one sign,
/// and the class of residue 0 (which holds f_0 = 1) must be positive.
inline StabilityVerdict term_order_total_stability(const GeneratorSystem& sys, const TermOrder& ord) {
    auto partition = partition_mod_two(sys, ord);
    TermOrderAnalysis analysis{ord, {}, std::nullopt};
    for (const auto& cls : partition.classes) {
        TermClass tc{cls.residue, cls.members, {}, {}};
        int sign_seen = 0;
        bool ok = true;
        for (auto k : cls.members) {
            auto lt = term_order_leading(sys.member(k), ord);
            const int s = sign(lt.coefficient);
            if (sign_seen == 0) sign_seen = s;
            ok = ok && s == sign_seen;
            tc.leading_exponents.push_back(std::move(lt.exponent));
            tc.leading_coefficients.push_back(std::move(lt.coefficient));
        }
        if (is_zero_residue(cls.residue)) ok = ok && sign_seen > 0;
        if (!ok && !analysis.violating_class) analysis.violating_class = analysis.classes.size();
        analysis.classes.push_back(std::move(tc));
    }

    StabilityVerdict v;
    v.route = Route::TermOrderRule;
    v.chain = {step::mod_two, step::sign_rule};
    v.status = analysis.violating_class ? Status::NotTotallyStable : Status::Stable;
    if (v.status == Status::Stable) {
        if (ord.finite_dimensional()) {
            v.consequences.closed = true;
            v.consequences.fails_smp = sys.nvars() >= 2;
        } else {
            v.note = "totally stable with respect to the given grading only; lex filtration pieces are "
                     "infinite dimensional, so no closedness or moment-property consequence is drawn";
        }
    } else {
        v.note = "leading terms of the violating class cancel in a sum of the module's elements";
    }
    v.term_order = std::move(analysis);
    return v;
}

// ---------------------------------------------------------------------------
// positivity witnesses

struct SearchConfig {
    std::uint64_t seed = 0;
    int max_scale = 12;
    int samples_per_scale = 512;
    std::uint32_t denom_bound = 256;
};

namespace detail {

inline bool all_positive(const std::vector<Polynomial>& parts, const std::vector<Rational>& point,
                         std::vector<Rational>& values) {
    values.clear();
    for (const auto& p : parts) {
        values.push_back(p.evaluate(point));
        if (values.back() <= 0) return false;
    }
    return true;
}

}  // namespace detail

/// Searches for a rational point where every polynomial in parts is
/// strictly positive.
///
/// Points are drawn deterministically from cfg.seed: for scale k = 0..max_scale
/// the box [-2^k, 2^k]^n is sampled samples_per_scale times, each coordinate a
/// dyadic rational with denominator at most denom_bound. The origin is tried
/// first. Returns nullopt when the budget is exhausted; that
/// says nothing about whether a witness exists.
inline std::optional<PositivityWitness> find_positivity_witness(const std::vector<Polynomial>& parts,
                                                                const SearchConfig& cfg) {
    if (parts.empty()) throw DomainError("positivity search needs at least one polynomial");
    const std::size_t n = parts.front().nvars();
    for (const auto& p : parts) {
        if (p.nvars() != n) throw DimensionError("parts differ in variable count");
        if (p.is_zero()) throw DomainError("the zero polynomial is never positive");
    }

    std::vector<Rational> values;
    std::vector<Rational> point(n, Rational(0));
    if (detail::all_positive(parts, point, values)) return PositivityWitness{point, values};

    int max_denom_log = 0;
    while (max_denom_log < 62 && (std::uint64_t{2} << max_denom_log) <= cfg.denom_bound) ++max_denom_log;

    std::mt19937_64 rng(cfg.seed);
    std::vector<double> approx(n);
    std::vector<std::int64_t> num(n);
    std::vector<int> dlog(n);
    for (int k = 0; k <= cfg.max_scale; ++k) {
        for (int s = 0; s < cfg.samples_per_scale; ++s) {
            for (std::size_t i = 0; i < n; ++i) {
                dlog[i] = static_cast<int>(rng() % static_cast<std::uint64_t>(max_denom_log + 1));
                const std::int64_t half = std::int64_t{1} << (k + dlog[i]);
                num[i] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * half + 1)) - half;
                approx[i] = std::ldexp(static_cast<double>(num[i]), -dlog[i]);
            }
            // Cheap floating-point screen; survivors are decided exactly.
            bool promising = true;
            for (const auto& p : parts)
                if (p.evaluate_approx(approx) < 0) {
                    promising = false;
                    break;
                }
            if (!promising) continue;
            for (std::size_t i = 0; i < n; ++i) point[i] = Rational(BigInt(num[i]), BigInt(1) << dlog[i]);
            if (detail::all_positive(parts, point, values)) return PositivityWitness{point, values};
        }
    }
    return std::nullopt;
}

namespace detail {

inline std::optional<WitnessGroup> witness_for(const GeneratorSystem& sys, const ZVector& z,
                                               std::optional<Residue> residue, std::vector<std::size_t> members,
                                               const SearchConfig& cfg) {
    std::vector<Polynomial> parts;
    for (auto k : members) parts.push_back(z_max_part(sys.member(k), z));
    auto w = find_positivity_witness(parts, cfg);
    if (!w) return std::nullopt;
    return WitnessGroup{std::move(residue), std::move(members), std::move(*w)};
}

/// Certifies total stability for one z-grading: a single witness for all
/// max parts, or failing that one witness per residue class mod 2.
inline DirectionCertificate certify_direction(const GeneratorSystem& sys, const ZVector& z, const SearchConfig& cfg) {
    if (z.size() != sys.nvars()) throw DimensionError("z-vector and system differ in dimension");
    DirectionCertificate cert{z, Status::Unknown, {}, {}};
    std::vector<std::size_t> all(sys.member_count());
    std::iota(all.begin(), all.end(), std::size_t{0});
    if (auto g = witness_for(sys, z, std::nullopt, all, cfg)) {
        cert.groups.push_back(std::move(*g));
        cert.status = Status::Stable;
        return cert;
    }
    auto partition = partition_mod_two(sys, z);
    if (partition.classes.size() == 1) {
        cert.failed_classes.push_back(partition.classes.front().residue);
        return cert;
    }
    for (auto& cls : partition.classes) {
        if (auto g = witness_for(sys, z, cls.residue, cls.members, cfg))
            cert.groups.push_back(std::move(*g));
        else
            cert.failed_classes.push_back(cls.residue);
    }
    cert.status = cert.failed_classes.empty() ? Status::Stable : Status::Unknown;
    return cert;
}

inline void append_direction_chain(std::vector<std::string>& chain, const DirectionCertificate& d) {
    auto add = [&](const char* s) {
        if (std::find(chain.begin(), chain.end(), s) == chain.end()) chain.emplace_back(s);
    };
    if (d.groups.size() > 1 || (d.groups.size() == 1 && d.groups.front().residue)) add(step::mod_two);
    add(step::max_part_witness);
    add(step::tentacle);
}

}  // namespace detail

/// Total stability of QM(sys) for the z-grading alone. Stable carries the
/// witnesses; a failed search gives Unknown.
inline StabilityVerdict z_total_stability(const GeneratorSystem& sys, const ZVector& z, const SearchConfig& cfg) {
    StabilityVerdict v;
    v.route = Route::SingleGrading;
    v.directions.push_back(detail::certify_direction(sys, z, cfg));
    v.status = v.directions.front().status;
    if (v.status == Status::Stable) {
        detail::append_direction_chain(v.chain, v.directions.front());
        v.note = "totally stable with respect to the z-grading";
    } else {
        v.note = "no positivity witness found within the search budget";
    }
    return v;
}

/// Composite decision over several z-gradings: certify each direction, then
/// ask for r in N^J with sum r_j z^(j) > 0 over the certified ones J.
inline StabilityVerdict stability_verdict(const GeneratorSystem& sys, const std::vector<ZVector>& zs,
                                          const SearchConfig& cfg) {
    if (zs.empty()) throw DomainError("stability_verdict needs at least one z-vector");
    StabilityVerdict v;
    v.route = Route::CombinedGradings;
    for (const auto& z : zs) v.directions.push_back(detail::certify_direction(sys, z, cfg));

    std::vector<ZVector> certified;
    for (std::size_t j = 0; j < v.directions.size(); ++j) {
        if (v.directions[j].status != Status::Stable) continue;
        v.combined.push_back(j);
        certified.push_back(v.directions[j].z);
        detail::append_direction_chain(v.chain, v.directions[j]);
    }

    if (certified.empty()) {
        v.status = Status::Unknown;
        // Report the obstruction among all requested directions, if any.
        for (std::size_t j = 0; j < zs.size(); ++j) v.combined.push_back(j);
        auto all = positive_combination(zs);
        if (auto* f = std::get_if<FarkasWitness>(&all)) v.obstruction = f->delta;
        v.note = "no direction could be certified";
        return v;
    }

    auto outcome = positive_combination(certified);
    if (auto* m = std::get_if<Multipliers>(&outcome)) {
        v.status = Status::Stable;
        v.multipliers = std::move(m->r);
        v.chain.emplace_back(step::positive_combination);
        v.chain.emplace_back(step::covering);
        v.chain.emplace_back(step::covering_transfer);
        v.consequences.closed = true;
        v.consequences.fails_smp = sys.nvars() >= 2;
        return v;
    }
    v.status = Status::Unknown;
    v.obstruction = std::get<FarkasWitness>(outcome).delta;
    v.note = "certified directions admit a bounded monomial; their gradings do not cover the total degree";
    return v;
}

// ---------------------------------------------------------------------------
// verification

namespace detail {

inline bool check_group(const GeneratorSystem& sys, const ZVector& z, const WitnessGroup& g) {
    const auto& w = g.witness;
    if (g.members.empty() || w.values.size() != g.members.size()) return false;
    if (w.point.size() != sys.nvars()) throw DimensionError("witness point has the wrong dimension");
    for (std::size_t idx = 0; idx < g.members.size(); ++idx) {
        const auto k = g.members[idx];
        if (k >= sys.member_count()) throw DimensionError("witness refers to a generator the system lacks");
        const Polynomial f = sys.member(k);
        if (g.residue && degree_residue(f, z) != *g.residue) return false;
        const Rational value = z_max_part(f, z).evaluate(w.point);
        if (value != w.values[idx] || value <= 0) return false;
    }
    return true;
}

inline bool check_direction(const GeneratorSystem& sys, const DirectionCertificate& d, bool require_complete) {
    if (d.z.size() != sys.nvars()) throw DimensionError("certificate direction has the wrong dimension");
    for (const auto& g : d.groups)
        if (!check_group(sys, d.z, g)) return false;
    if (!require_complete) return true;

    std::vector<int> seen(sys.member_count(), 0);
    for (const auto& g : d.groups)
        for (auto k : g.members) ++seen[k];
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) return false;
    if (d.groups.size() == 1) return true;
    // Several groups: each must be labelled and the labels distinct, so no
    // two groups' degrees can agree modulo 2.
    for (std::size_t a = 0; a < d.groups.size(); ++a) {
        if (!d.groups[a].residue) return false;
        for (std::size_t b = a + 1; b < d.groups.size(); ++b)
            if (d.groups[b].residue && *d.groups[a].residue == *d.groups[b].residue) return false;
    }
    return true;
}

inline bool check_term_order(const GeneratorSystem& sys, const TermOrderAnalysis& a, Status claimed) {
    if (a.order.size() != sys.nvars()) throw DimensionError("term order has the wrong dimension");
    const auto recomputed = term_order_total_stability(sys, a.order);
    const auto& ref = *recomputed.term_order;
    if (ref.classes.size() != a.classes.size()) return false;
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        const auto& x = a.classes[i];
        const auto& y = ref.classes[i];
        if (x.residue != y.residue || x.members != y.members || x.leading_exponents != y.leading_exponents ||
            x.leading_coefficients != y.leading_coefficients)
            return false;
    }
    return recomputed.status == claimed && ref.violating_class == a.violating_class;
}

}  // namespace detail

/// Re-derives every inequality a verdict relies on. True iff all hold.
/// Throws DimensionError when the verdict cannot belong to sys at all.
inline bool verify_certificate(const StabilityVerdict& v, const GeneratorSystem& sys) {
    const bool many = sys.nvars() >= 2;
    switch (v.route) {
        case Route::TermOrderRule: {
            if (!v.term_order || v.status == Status::Unknown) return false;
            if (!detail::check_term_order(sys, *v.term_order, v.status)) return false;
            if (v.status == Status::Stable) {
                const bool fin = v.term_order->order.finite_dimensional();
                return v.consequences.closed == fin && v.consequences.fails_smp == (fin && many);
            }
            return !v.consequences.closed && !v.consequences.fails_smp;
        }
        case Route::SingleGrading: {
            if (v.directions.size() != 1 || v.status == Status::NotTotallyStable) return false;
            const auto& d = v.directions.front();
            if (d.status != v.status) return false;
            return detail::check_direction(sys, d, v.status == Status::Stable) && !v.consequences.closed &&
                   !v.consequences.fails_smp;
        }
        case Route::CombinedGradings: {
            if (v.directions.empty() || v.status == Status::NotTotallyStable) return false;
            for (const auto& d : v.directions)
                if (!detail::check_direction(sys, d, d.status == Status::Stable)) return false;
            std::vector<ZVector> zs;
            for (auto j : v.combined) {
                if (j >= v.directions.size()) return false;
                zs.push_back(v.directions[j].z);
            }
            if (v.status == Status::Unknown) {
                if (v.consequences.closed || v.consequences.fails_smp) return false;
                return !v.obstruction || (!zs.empty() && verify_farkas(zs, *v.obstruction));
            }
            for (auto j : v.combined)
                if (v.directions[j].status != Status::Stable) return false;
            if (!v.multipliers || !verify_multipliers(zs, *v.multipliers)) return false;
            return v.consequences.closed && v.consequences.fails_smp == many;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// tentacles

/// T_{K,z} = {(l^z_1 x_1, ..., l^z_n x_n) : l >= 1, x in K} with K a box.
struct TentacleSpec {
    ZVector z;
    std::vector<std::pair<Rational, Rational>> box;
};

struct TentacleViolation {
    Rational lambda;
    std::vector<Rational> base_point;
    std::vector<Rational> image;
    std::size_t generator;  // 1-based
    Rational value;
};

struct TentacleReport {
    std::size_t points_checked = 0;
    std::vector<TentacleViolation> violations;
};

/// Evaluates every generator on a grid x grid x ... lattice of the box pushed
/// along the tentacle for each lambda, recording every negative value.
/// Finding none is evidence, not proof, of containment.
inline TentacleReport tentacle_sample_check(const GeneratorSystem& sys, const TentacleSpec& t,
                                            const std::vector<Rational>& lambdas, std::size_t grid) {
    const std::size_t n = sys.nvars();
    if (t.z.size() != n || t.box.size() != n) throw DimensionError("tentacle and system differ in dimension");
    if (grid == 0) throw DomainError("grid must be positive");
    for (const auto& [lo, hi] : t.box)
        if (!(lo < hi)) throw DomainError("tentacle box must have nonempty interior");
    for (const auto& l : lambdas)
        if (l < 1) throw DomainError("tentacle parameter lambda must be >= 1");

    auto coordinate = [&](std::size_t i, std::size_t k) {
        const auto& [lo, hi] = t.box[i];
        if (grid == 1) return Rational((lo + hi) / 2);
        return Rational(lo + (hi - lo) * Rational(BigInt(k), BigInt(grid - 1)));
    };

    TentacleReport report;
    std::vector<std::size_t> idx(n, 0);
    std::vector<Rational> base(n), image(n);
    for (const auto& lambda : lambdas) {
        std::vector<Rational> scale(n);
        for (std::size_t i = 0; i < n; ++i) scale[i] = power(lambda, t.z[i]);
        std::fill(idx.begin(), idx.end(), 0);
        for (;;) {
            for (std::size_t i = 0; i < n; ++i) {
                base[i] = coordinate(i, idx[i]);
                image[i] = scale[i] * base[i];
            }
            ++report.points_checked;
            for (std::size_t g = 0; g < sys.size(); ++g) {
                Rational value = sys.generators()[g].evaluate(image);
                if (value < 0) report.violations.push_back({lambda, base, image, g + 1, std::move(value)});
            }
            std::size_t i = 0;
            while (i < n && ++idx[i] == grid) idx[i++] = 0;
            if (i == n) break;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

/// Primitive z in Z^n with |z|_inf <= bound, ascending lexicographically.
/// Both z and -z are listed since they grade differently.
inline std::vector<ZVector> suggest_z_vectors(std::size_t n, std::int64_t bound) {
    if (bound < 1) throw DomainError("suggest bound must be at least 1");
    if (n == 0) throw DomainError("need at least one variable");
    std::vector<ZVector> out;
    std::vector<std::int64_t> z(n, -bound);
    for (;;) {
        std::int64_t g = 0;
        for (auto x : z) g = std::gcd(g, x < 0 ? -x : x);
        if (g == 1) out.emplace_back(z);
        std::size_t i = n;
        while (i > 0 && z[i - 1] == bound) z[--i] = -bound;
        if (i == 0) break;
        ++z[i - 1];
    }
    return out;
}

inline std::vector<ZVector> suggest_z_vectors(const GeneratorSystem& sys, std::int64_t bound) {
    return suggest_z_vectors(sys.nvars(), bound);
}

}  // namespace qmstab
