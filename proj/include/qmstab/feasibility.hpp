#pragma once

// Exact rational linear feasibility and the integer statements built on it:
// positive combinations of weight vectors, Farkas witnesses (bounded
// monomials), and covering certificates between z-gradings.

#include "qmstab/grading.hpp"
#include "qmstab/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qmstab {

enum class Relation { GreaterEqual, Greater };

struct LinearRow {
    std::vector<Rational> coeffs;
    Relation rel = Relation::GreaterEqual;
    Rational rhs;
};

struct LinearSystem {
    std::vector<LinearRow> rows;

    std::size_t nvars() const { return rows.empty() ? 0 : rows.front().coeffs.size(); }

    void add(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
        rows.push_back({std::move(coeffs), rel, std::move(rhs)});
    }

    bool satisfied_by(const std::vector<Rational>& x) const {
        for (const auto& row : rows) {
            if (row.coeffs.size() != x.size()) return false;
            Rational lhs = 0;
            for (std::size_t j = 0; j < x.size(); ++j) lhs += row.coeffs[j] * x[j];
            if (row.rel == Relation::Greater ? !(lhs > row.rhs) : !(lhs >= row.rhs)) return false;
        }
        return true;
    }
};

namespace detail {

/// Dense two-phase simplex over the rationals with Bland's rule, so pivots
/// are deterministic and never cycle. Solves
///     max c.y  s.t.  A y = b, y >= 0
/// after a phase-one search for a feasible basis.
class Simplex {
public:
    Simplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
        : m_(a.size()), n_(a.empty() ? 0 : a.front().size()) {
        // Artificial columns n_..n_+m_-1 start as the basis.
        cols_ = n_ + m_;
        t_.assign(m_, std::vector<Rational>(cols_ + 1, Rational(0)));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const bool flip = b[i] < 0;
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
            t_[i][n_ + i] = 1;
            t_[i][cols_] = flip ? Rational(-b[i]) : b[i];
            basis_[i] = n_ + i;
        }
    }

    /// Phase one. Returns false iff A y = b, y >= 0 has no solution.
    bool find_feasible_basis() {
        std::vector<Rational> cost(cols_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) cost[n_ + i] = -1;
        set_objective(cost);
        optimize(cols_);
        if (obj_[cols_] < 0) return false;
        drive_out_artificials();
        return true;
    }

    /// Phase two on the structural columns; the objective must be bounded.
    Rational maximize(const std::vector<Rational>& c) {
        std::vector<Rational> cost(cols_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) cost[j] = c[j];
        set_objective(cost);
        optimize(n_);
        return obj_[cols_];
    }

    std::vector<Rational> solution() const {
        std::vector<Rational> y(n_, Rational(0));
        for (std::size_t i = 0; i < t_.size(); ++i)
            if (basis_[i] < n_) y[basis_[i]] = t_[i][cols_];
        return y;
    }

private:
    void set_objective(const std::vector<Rational>& cost) {
        obj_.assign(cols_ + 1, Rational(0));
        for (std::size_t j = 0; j < cols_; ++j) obj_[j] = -cost[j];
        for (std::size_t i = 0; i < t_.size(); ++i) {
            const Rational f = obj_[basis_[i]];
            if (f == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= f * t_[i][j];
        }
    }

    // Columns >= allowed never enter the basis.
    void optimize(std::size_t allowed) {
        for (;;) {
            std::size_t enter = allowed;
            for (std::size_t j = 0; j < allowed; ++j)
                if (obj_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == allowed) return;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < t_.size(); ++i) {
                if (t_[i][enter] <= 0) continue;
                Rational ratio = t_[i][cols_] / t_[i][enter];
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) throw InternalError("simplex objective unbounded on a bounded program");
            pivot(*leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rational p = t_[r][c];
        for (auto& x : t_[r]) x /= p;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == r || t_[i][c] == 0) continue;
            const Rational f = t_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[r][j];
        }
        if (!obj_.empty() && obj_[c] != 0) {
            const Rational f = obj_[c];
            for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    // Artificials left in the basis sit at level zero; swap them for a
    // structural column or drop the (redundant) row.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < t_.size();) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (t_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col < n_) {
                pivot(i, col);
                ++i;
            } else {
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    std::size_t m_, n_, cols_ = 0;
    std::vector<std::vector<Rational>> t_;
    std::vector<Rational> obj_;
    std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Exact feasibility of a system of rows a.x >= b / a.x > b.
///
/// Returns a rational point satisfying every row (strict rows strictly) or
/// nullopt exactly when none exists. With nonneg_vars every variable is
/// additionally constrained to be >= 0.
inline std::optional<std::vector<Rational>> rational_feasible(const LinearSystem& sys, bool nonneg_vars) {
    if (sys.rows.empty()) throw DomainError("empty linear system");
    const std::size_t n = sys.nvars();
    for (const auto& row : sys.rows)
        if (row.coeffs.size() != n) throw DimensionError("rows of a linear system differ in length");

    // Column layout: x (or x+ then x-), one surplus per row, then the strict
    // slack s with its own surplus for s <= 1.
    const std::size_t xcols = nonneg_vars ? n : 2 * n;
    const std::size_t m = sys.rows.size();
    const bool strict = std::any_of(sys.rows.begin(), sys.rows.end(),
                                    [](const LinearRow& r) { return r.rel == Relation::Greater; });
    const std::size_t s_col = xcols + m;
    const std::size_t total = xcols + m + (strict ? 2 : 0);

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = sys.rows[i];
        std::vector<Rational> line(total, Rational(0));
        for (std::size_t j = 0; j < n; ++j) {
            line[j] = row.coeffs[j];
            if (!nonneg_vars) line[n + j] = -row.coeffs[j];
        }
        line[xcols + i] = -1;
        if (row.rel == Relation::Greater) line[s_col] = -1;
        a.push_back(std::move(line));
        b.push_back(row.rhs);
    }
    if (strict) {
        std::vector<Rational> cap(total, Rational(0));
        cap[s_col] = 1;
        cap[s_col + 1] = 1;
        a.push_back(std::move(cap));
        b.push_back(1);
    }

    detail::Simplex lp(std::move(a), std::move(b));
    if (!lp.find_feasible_basis()) return std::nullopt;
    if (strict) {
        std::vector<Rational> c(total, Rational(0));
        c[s_col] = 1;
        if (lp.maximize(c) <= 0) return std::nullopt;
    }
    auto y = lp.solution();
    std::vector<Rational> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = nonneg_vars ? y[j] : Rational(y[j] - y[n + j]);
    if (!sys.satisfied_by(x) ||
        (nonneg_vars && std::any_of(x.begin(), x.end(), [](const Rational& q) { return q < 0; })))
        throw InternalError("simplex returned a point violating its system");
    return x;
}

// ---------------------------------------------------------------------------

namespace detail {

inline std::size_t common_dimension(const std::vector<ZVector>& zs) {
    if (zs.empty()) throw DomainError("need at least one z-vector");
    const std::size_t n = zs.front().size();
    for (const auto& z : zs)
        if (z.size() != n) throw DimensionError("z-vectors differ in length");
    return n;
}

}  // namespace detail

/// Nonnegative integers r with sum_j r_j z^(j) > 0 in every coordinate.
struct Multipliers {
    std::vector<BigInt> r;
};

/// delta in N^n \ {0} with delta . z^(j) <= 0 for every j.
struct FarkasWitness {
    ExponentVector delta;
};

using FeasibilityOutcome = std::variant<Multipliers, FarkasWitness>;

/// sum_j r_j z^(j), computed exactly.
inline std::vector<BigInt> weighted_sum(const std::vector<ZVector>& zs, const std::vector<BigInt>& r) {
    const std::size_t n = detail::common_dimension(zs);
    if (r.size() != zs.size()) throw DimensionError("multiplier count differs from z-vector count");
    std::vector<BigInt> sum(n, BigInt(0));
    for (std::size_t j = 0; j < zs.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) sum[i] += r[j] * zs[j][i];
    return sum;
}

inline bool verify_multipliers(const std::vector<ZVector>& zs, const std::vector<BigInt>& r) {
    if (zs.empty() || r.size() != zs.size()) return false;
    if (std::any_of(r.begin(), r.end(), [](const BigInt& x) { return x < 0; })) return false;
    auto sum = weighted_sum(zs, r);
    return std::all_of(sum.begin(), sum.end(), [](const BigInt& x) { return x > 0; });
}

inline bool verify_farkas(const std::vector<ZVector>& zs, const ExponentVector& delta) {
    if (zs.empty() || delta.size() != zs.front().size() || delta.is_zero()) return false;
    for (const auto& z : zs) {
        BigInt dot = 0;
        for (std::size_t i = 0; i < z.size(); ++i) dot += BigInt(z[i]) * delta[i];
        if (dot > 0) return false;
    }
    return true;
}

/// Decides which side of the alternative holds for zs and returns the
/// exactly verified certificate: either multipliers r in N^m with
/// sum r_j z^(j) > 0, or a bounded-monomial exponent delta.
inline FeasibilityOutcome positive_combination(const std::vector<ZVector>& zs) {
    const std::size_t n = detail::common_dimension(zs);
    const std::size_t m = zs.size();

    // Homogeneous strict system, normalized to sum_j r_j z^(j)_i >= 1.
    LinearSystem primal;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = zs[j][i];
        primal.add(std::move(row), Relation::GreaterEqual, 1);
    }
    if (auto r = rational_feasible(primal, true)) {
        Multipliers out{primitive_integer_vector(*r)};
        if (!verify_multipliers(zs, out.r)) throw InternalError("multiplier certificate failed verification");
        return out;
    }

    // Alternative: delta >= 0, sum delta >= 1, -delta . z^(j) >= 0.
    LinearSystem dual;
    for (const auto& z : zs) {
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = -z[i];
        dual.add(std::move(row), Relation::GreaterEqual, 0);
    }
    dual.add(std::vector<Rational>(n, Rational(1)), Relation::GreaterEqual, 1);
    auto d = rational_feasible(dual, true);
    if (!d) throw InternalError("neither side of the alternative is feasible");
    auto ints = primitive_integer_vector(*d);
    ExponentVector delta(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (ints[i] > std::numeric_limits<ExponentVector::value_type>::max())
            throw DomainError("Farkas witness exponent exceeds 32 bits");
        delta[i] = static_cast<ExponentVector::value_type>(ints[i]);
    }
    if (!verify_farkas(zs, delta)) throw InternalError("Farkas witness failed verification");
    return FarkasWitness{delta};
}

/// Outcome of the bounded-polynomial test on a union of tentacles with
/// directions zs: either only constants are bounded there, or X^delta is a
/// nonconstant bounded monomial.
struct OnlyConstants {
    std::vector<BigInt> r;  // the multipliers proving it
};
struct BoundedMonomial {
    ExponentVector delta;
};
using BoundedOutcome = std::variant<OnlyConstants, BoundedMonomial>;

inline BoundedOutcome bounded_monomials(const std::vector<ZVector>& zs) {
    auto outcome = positive_combination(zs);
    if (auto* m = std::get_if<Multipliers>(&outcome)) return OnlyConstants{std::move(m->r)};
    return BoundedMonomial{std::get<FarkasWitness>(outcome).delta};
}

// ---------------------------------------------------------------------------
// coverings

/// r, t in N^m with sum_j r_j z^(j) >= z and t_j z >= z^(j) componentwise.
struct CoveringCertificate {
    std::vector<std::int64_t> r;
    std::vector<std::int64_t> t;
};

struct CoveringResult {
    enum class Status { Covered, NotCovered, Unknown };
    Status status = Status::Unknown;
    std::optional<CoveringCertificate> certificate;
    std::string reason;
};

inline bool verify_covering(const ZVector& z, const std::vector<ZVector>& zs, const CoveringCertificate& c) {
    if (zs.empty() || c.r.size() != zs.size() || c.t.size() != zs.size()) return false;
    const std::size_t n = z.size();
    for (std::size_t j = 0; j < zs.size(); ++j) {
        if (zs[j].size() != n || c.r[j] < 0 || c.t[j] < 0) return false;
        for (std::size_t i = 0; i < n; ++i)
            if (BigInt(c.t[j]) * z[i] < zs[j][i]) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        BigInt s = 0;
        for (std::size_t j = 0; j < zs.size(); ++j) s += BigInt(c.r[j]) * zs[j][i];
        if (s < z[i]) return false;
    }
    return true;
}

namespace detail {

// Depth-first search over r in {0..bound}^m in lexicographic order, pruning
// a prefix when even the most favourable completion misses some coordinate.
class CoveringSearch {
public:
    CoveringSearch(const ZVector& z, const std::vector<ZVector>& zs, std::int64_t bound)
        : z_(z), zs_(zs), bound_(bound), n_(z.size()), m_(zs.size()), r_(m_, 0), partial_(n_, 0) {
        // best_tail_[j][i]: largest contribution of r_j..r_{m-1} to coordinate i.
        best_tail_.assign(m_ + 1, std::vector<BigInt>(n_, BigInt(0)));
        for (std::size_t j = m_; j-- > 0;)
            for (std::size_t i = 0; i < n_; ++i)
                best_tail_[j][i] = best_tail_[j + 1][i] + BigInt(bound_) * std::max<std::int64_t>(zs_[j][i], 0);
    }

    std::optional<std::vector<std::int64_t>> run() {
        if (descend(0)) return r_;
        return std::nullopt;
    }

private:
    bool descend(std::size_t j) {
        for (std::size_t i = 0; i < n_; ++i)
            if (partial_[i] + best_tail_[j][i] < z_[i]) return false;
        if (j == m_) return true;
        for (std::int64_t v = 0; v <= bound_; ++v) {
            r_[j] = v;
            for (std::size_t i = 0; i < n_; ++i) partial_[i] += BigInt(v) * zs_[j][i];
            const bool found = descend(j + 1);
            for (std::size_t i = 0; i < n_; ++i) partial_[i] -= BigInt(v) * zs_[j][i];
            if (found) return true;
        }
        r_[j] = 0;
        return false;
    }

    const ZVector& z_;
    const std::vector<ZVector>& zs_;
    std::int64_t bound_;
    std::size_t n_, m_;
    std::vector<std::int64_t> r_;
    std::vector<BigInt> partial_;
    std::vector<std::vector<BigInt>> best_tail_;
};

}  // namespace detail

/// Looks for a covering certificate of the z-grading by the z^(j)-gradings
/// with all entries in {0..bound}. NotCovered is only reported when the
/// rational relaxation is already infeasible; an empty bounded search is
/// Unknown. The lexicographically smallest r is returned.
inline CoveringResult covering_check(const ZVector& z, const std::vector<ZVector>& zs, std::int64_t bound) {
    const std::size_t n = detail::common_dimension(zs);
    if (z.size() != n) throw DimensionError("target z-vector differs in length from the family");
    if (bound < 1) throw DomainError("covering bound must be at least 1");
    const std::size_t m = zs.size();

    LinearSystem relax_r;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = zs[j][i];
        relax_r.add(std::move(row), Relation::GreaterEqual, z[i]);
    }
    if (!rational_feasible(relax_r, true))
        return {CoveringResult::Status::NotCovered, std::nullopt,
                "no nonnegative rational r gives sum r_j z^(j) >= z"};

    for (std::size_t j = 0; j < m; ++j) {
        LinearSystem relax_t;
        for (std::size_t i = 0; i < n; ++i) relax_t.add({Rational(z[i])}, Relation::GreaterEqual, zs[j][i]);
        if (!rational_feasible(relax_t, true))
            return {CoveringResult::Status::NotCovered, std::nullopt,
                    "no nonnegative rational t gives t*z >= z^(" + std::to_string(j + 1) + ")"};
    }

    CoveringCertificate cert;
    auto r = detail::CoveringSearch(z, zs, bound).run();
    if (!r) return {CoveringResult::Status::Unknown, std::nullopt, "no integer r within the bound"};
    cert.r = *r;
    for (std::size_t j = 0; j < m; ++j) {
        std::optional<std::int64_t> found;
        for (std::int64_t t = 0; t <= bound && !found; ++t) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) ok = BigInt(t) * z[i] >= zs[j][i];
            if (ok) found = t;
        }
        if (!found)
            return {CoveringResult::Status::Unknown, std::nullopt,
                    "no integer t_" + std::to_string(j + 1) + " within the bound"};
        cert.t.push_back(*found);
    }
    if (!verify_covering(z, zs, cert)) throw InternalError("covering certificate failed verification");
    return {CoveringResult::Status::Covered, std::move(cert), {}};
}

}  // namespace qmstab
