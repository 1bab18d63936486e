#include "gptd/lp.hpp"

#include <gmpxx.h>

#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

namespace gptd {

namespace {

constexpr long kPivotSaturation = std::numeric_limits<long>::max();

// C(total, rows), saturating. Upper bound on the number of distinct bases,
// hence on Bland-rule pivots.
long binomial_saturating(long total, long rows) {
    if (rows < 0 || rows > total) return 0;
    rows = std::min(rows, total - rows);
    mpz_class result = 1;
    const mpz_class cap = kPivotSaturation;
    for (long i = 1; i <= rows; ++i) {
        result *= (total - rows + i);
        result /= i;
        if (result > cap) return kPivotSaturation;
    }
    return static_cast<long>(result.get_si());
}

long pivot_ceiling(long total_cols, long rows) {
    if (const char* env = std::getenv("GPTD_LP_PIVOT_LIMIT")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    const long b = binomial_saturating(total_cols, rows);
    return b > 0 ? b : 1;
}

void validate(const LinearProgram& lp) {
    if (lp.num_vars < 0) throw std::invalid_argument("LinearProgram: negative variable count");
    const auto nv = static_cast<std::size_t>(lp.num_vars);
    if (!lp.objective.empty() && lp.objective.size() != nv) {
        throw std::invalid_argument("LinearProgram: objective length mismatch");
    }
    if (!lp.bounds.empty() && lp.bounds.size() != nv) {
        throw std::invalid_argument("LinearProgram: bounds length mismatch");
    }
    for (const LinearConstraint& c : lp.constraints) {
        if (c.coeffs.size() != nv) {
            throw std::invalid_argument("LinearProgram: constraint coefficient length mismatch");
        }
    }
}

// How each original variable is expressed in nonnegative standard-form
// variables: x = shift + sign * y[pos] (- y[neg] when split).
struct VarMap {
    mpq_class shift;
    int sign = 1;
    int pos = -1;
    int neg = -1;  // >= 0 only for free variables
};

// Dense exact simplex tableau. Rows are constraint rows; two cost rows are
// maintained through phase 1 so phase 2 can start without re-reduction.
class Tableau {
  public:
    Tableau(const LinearProgram& lp, bool need_phase2) {
        build(lp, need_phase2);
    }

    bool trivially_infeasible = false;

    LPStatus run_phase1() {
        phase_ = 1;
        const LPStatus s = iterate(cost1_, num_structural_ + num_slack_ + num_artificial_);
        if (s == LPStatus::Unbounded) {
            // Phase-1 objective is bounded below by zero; unreachable.
            throw std::logic_error("simplex: phase 1 reported unbounded");
        }
        if (cost1_.back() != 0) return LPStatus::Infeasible;
        drive_out_artificials();
        return LPStatus::Optimal;
    }

    LPStatus run_phase2() {
        phase_ = 2;
        return iterate(cost2_, num_structural_ + num_slack_);
    }

    // Values of the original variables at the current basic solution.
    std::vector<Rat> extract() const {
        std::vector<mpq_class> y(static_cast<std::size_t>(num_structural_), 0);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (basis_[r] < num_structural_) {
                y[static_cast<std::size_t>(basis_[r])] = rows_[r].back();
            }
        }
        std::vector<Rat> x;
        x.reserve(vmap_.size());
        for (const VarMap& vm : vmap_) {
            mpq_class v = vm.shift;
            if (vm.pos >= 0) {
                if (vm.sign > 0) {
                    v += y[static_cast<std::size_t>(vm.pos)];
                } else {
                    v -= y[static_cast<std::size_t>(vm.pos)];
                }
            }
            if (vm.neg >= 0) v -= y[static_cast<std::size_t>(vm.neg)];
            x.push_back(Rat(v));
        }
        return x;
    }

    long pivots() const { return pivots_; }

  private:
    void build(const LinearProgram& lp, bool need_phase2) {
        const int n = lp.num_vars;

        // Variable substitutions: everything becomes y >= 0.
        vmap_.resize(static_cast<std::size_t>(n));
        std::vector<std::pair<int, mpq_class>> range_rows;  // (y index, width) for two-sided bounds
        int next = 0;
        for (int i = 0; i < n; ++i) {
            const VariableBounds b =
                lp.bounds.empty() ? VariableBounds{} : lp.bounds[static_cast<std::size_t>(i)];
            VarMap& vm = vmap_[static_cast<std::size_t>(i)];
            if (b.lower && b.upper) {
                if (*b.upper < *b.lower) {
                    trivially_infeasible = true;
                    return;
                }
                vm.shift = b.lower->raw();
                vm.sign = 1;
                vm.pos = next++;
                range_rows.emplace_back(vm.pos, (*b.upper - *b.lower).raw());
            } else if (b.lower) {
                vm.shift = b.lower->raw();
                vm.sign = 1;
                vm.pos = next++;
            } else if (b.upper) {
                vm.shift = b.upper->raw();
                vm.sign = -1;
                vm.pos = next++;
            } else {
                vm.sign = 1;
                vm.pos = next++;
                vm.neg = next++;
            }
        }
        num_structural_ = next;

        // Rewrite constraint rows over the y variables; collect relations.
        struct RawRow {
            std::vector<mpq_class> a;
            Relation rel;
            mpq_class rhs;
        };
        std::vector<RawRow> raw;
        raw.reserve(lp.constraints.size() + range_rows.size());
        for (const LinearConstraint& c : lp.constraints) {
            RawRow row;
            row.a.assign(static_cast<std::size_t>(num_structural_), 0);
            row.rel = c.relation;
            row.rhs = c.rhs.raw();
            for (int i = 0; i < n; ++i) {
                const mpq_class& ci = c.coeffs[static_cast<std::size_t>(i)].raw();
                if (ci == 0) continue;
                const VarMap& vm = vmap_[static_cast<std::size_t>(i)];
                row.rhs -= ci * vm.shift;
                if (vm.sign > 0) {
                    row.a[static_cast<std::size_t>(vm.pos)] += ci;
                } else {
                    row.a[static_cast<std::size_t>(vm.pos)] -= ci;
                }
                if (vm.neg >= 0) row.a[static_cast<std::size_t>(vm.neg)] -= ci;
            }
            raw.push_back(std::move(row));
        }
        for (const auto& [idx, width] : range_rows) {
            RawRow row;
            row.a.assign(static_cast<std::size_t>(num_structural_), 0);
            row.a[static_cast<std::size_t>(idx)] = 1;
            row.rel = Relation::LessEq;
            row.rhs = width;
            raw.push_back(std::move(row));
        }

        // Normalize so every rhs is >= 0, then decide slack vs artificial.
        // A >= row with zero rhs is flipped to <= so its slack can start
        // basic; only equalities and >= rows with positive rhs need an
        // artificial.
        num_slack_ = 0;
        num_artificial_ = 0;
        struct RowPlan {
            int slack = -1;      // slack/surplus column offset within slack block
            int slack_sign = 0;  // +1 slack, -1 surplus
            int artificial = -1;
        };
        std::vector<RowPlan> plan(raw.size());
        for (std::size_t r = 0; r < raw.size(); ++r) {
            RawRow& row = raw[r];
            if (row.rhs < 0) {
                for (mpq_class& v : row.a) v = -v;
                row.rhs = -row.rhs;
                if (row.rel == Relation::LessEq) {
                    row.rel = Relation::GreaterEq;
                } else if (row.rel == Relation::GreaterEq) {
                    row.rel = Relation::LessEq;
                }
            }
            if (row.rel == Relation::GreaterEq && row.rhs == 0) {
                for (mpq_class& v : row.a) v = -v;
                row.rel = Relation::LessEq;
            }
            switch (row.rel) {
                case Relation::LessEq:
                    plan[r].slack = num_slack_++;
                    plan[r].slack_sign = 1;
                    break;
                case Relation::GreaterEq:
                    plan[r].slack = num_slack_++;
                    plan[r].slack_sign = -1;
                    plan[r].artificial = num_artificial_++;
                    break;
                case Relation::Equal:
                    plan[r].artificial = num_artificial_++;
                    break;
            }
        }

        const int total = num_structural_ + num_slack_ + num_artificial_;
        const auto width = static_cast<std::size_t>(total) + 1;  // + rhs
        rows_.assign(raw.size(), std::vector<mpq_class>(width, 0));
        basis_.assign(raw.size(), -1);
        for (std::size_t r = 0; r < raw.size(); ++r) {
            auto& row = rows_[r];
            for (int j = 0; j < num_structural_; ++j) {
                row[static_cast<std::size_t>(j)] = raw[r].a[static_cast<std::size_t>(j)];
            }
            row.back() = raw[r].rhs;
            if (plan[r].slack >= 0) {
                row[static_cast<std::size_t>(num_structural_ + plan[r].slack)] =
                    plan[r].slack_sign;
            }
            if (plan[r].artificial >= 0) {
                const int col = num_structural_ + num_slack_ + plan[r].artificial;
                row[static_cast<std::size_t>(col)] = 1;
                basis_[r] = col;
            } else {
                basis_[r] = num_structural_ + plan[r].slack;
            }
        }

        // Phase-1 cost row: minimize the artificial sum. Reduced form is
        // obtained by subtracting every artificial-basic row.
        cost1_.assign(width, 0);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (basis_[r] >= num_structural_ + num_slack_) {
                for (std::size_t j = 0; j < width; ++j) cost1_[j] -= rows_[r][j];
            }
        }
        for (int a = 0; a < num_artificial_; ++a) {
            cost1_[static_cast<std::size_t>(num_structural_ + num_slack_ + a)] += 1;
        }

        // Phase-2 cost row over the y variables. Initial basics all have
        // zero cost, so no reduction is needed.
        cost2_.assign(width, 0);
        if (need_phase2 && !lp.objective.empty()) {
            for (int i = 0; i < n; ++i) {
                const mpq_class& ci = lp.objective[static_cast<std::size_t>(i)].raw();
                if (ci == 0) continue;
                const VarMap& vm = vmap_[static_cast<std::size_t>(i)];
                if (vm.sign > 0) {
                    cost2_[static_cast<std::size_t>(vm.pos)] += ci;
                } else {
                    cost2_[static_cast<std::size_t>(vm.pos)] -= ci;
                }
                if (vm.neg >= 0) cost2_[static_cast<std::size_t>(vm.neg)] -= ci;
            }
        }

        ceiling_ = pivot_ceiling(total, static_cast<long>(rows_.size()));
    }

    // Bland's rule: entering column is the lowest-index one with negative
    // reduced cost; leaving row minimizes the ratio, ties broken by the
    // smallest basic variable index. Provably cycle-free.
    LPStatus iterate(std::vector<mpq_class>& cost, int allowed_cols) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < allowed_cols; ++j) {
                if (cost[static_cast<std::size_t>(j)] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return LPStatus::Optimal;

            int leave = -1;
            mpq_class best_ratio;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                const mpq_class& a = rows_[r][static_cast<std::size_t>(enter)];
                if (a <= 0) continue;
                mpq_class ratio = rows_[r].back() / a;
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[static_cast<std::size_t>(leave)])) {
                    leave = static_cast<int>(r);
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return LPStatus::Unbounded;

            pivot(static_cast<std::size_t>(leave), enter, cost);
        }
    }

    void pivot(std::size_t r, int col, std::vector<mpq_class>& active_cost) {
        if (++pivots_ > ceiling_) throw PivotLimitExceeded(ceiling_);

        auto& prow = rows_[r];
        const auto c = static_cast<std::size_t>(col);
        const mpq_class inv = 1 / prow[c];
        if (inv != 1) {
            for (mpq_class& v : prow) {
                if (v != 0) v *= inv;
            }
        }
        prow[c] = 1;

        auto eliminate = [&](std::vector<mpq_class>& row) {
            const mpq_class factor = row[c];
            if (factor == 0) return;
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (prow[j] != 0) row[j] -= factor * prow[j];
            }
            row[c] = 0;
        };
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i != r) eliminate(rows_[i]);
        }
        eliminate(active_cost);
        if (phase_ == 1) eliminate(cost2_);  // keep the real cost row reduced through phase 1

        basis_[r] = col;
    }

    // Replace basic artificials left at value zero after phase 1. A row
    // with no usable non-artificial column is linearly dependent on the
    // others and is dropped.
    void drive_out_artificials() {
        const int art_start = num_structural_ + num_slack_;
        for (std::size_t r = 0; r < rows_.size();) {
            if (basis_[r] < art_start) {
                ++r;
                continue;
            }
            int col = -1;
            for (int j = 0; j < art_start; ++j) {
                if (rows_[r][static_cast<std::size_t>(j)] != 0) {
                    col = j;
                    break;
                }
            }
            if (col >= 0) {
                // rhs is zero here, so pivoting on any nonzero entry keeps
                // every basic value unchanged.
                pivot(r, col, cost1_);
                ++r;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
            }
        }
    }

    std::vector<std::vector<mpq_class>> rows_;
    std::vector<mpq_class> cost1_;
    std::vector<mpq_class> cost2_;
    std::vector<int> basis_;
    std::vector<VarMap> vmap_;
    int num_structural_ = 0;
    int num_slack_ = 0;
    int num_artificial_ = 0;
    int phase_ = 1;
    long pivots_ = 0;
    long ceiling_ = 0;
};

}  // namespace

LPResult solve(const LinearProgram& lp) {
    validate(lp);
    Tableau t(lp, /*need_phase2=*/true);
    LPResult result;
    if (t.trivially_infeasible) {
        result.status = LPStatus::Infeasible;
        return result;
    }
    if (t.run_phase1() == LPStatus::Infeasible) {
        result.status = LPStatus::Infeasible;
        result.pivot_count = t.pivots();
        return result;
    }
    result.status = t.run_phase2();
    result.pivot_count = t.pivots();
    if (result.status == LPStatus::Optimal) {
        result.witness = t.extract();
        result.objective_value = objective_at(lp, result.witness);
    }
    return result;
}

std::optional<std::vector<Rat>> feasible_point(const LinearProgram& lp) {
    validate(lp);
    Tableau t(lp, /*need_phase2=*/false);
    if (t.trivially_infeasible) return std::nullopt;
    if (t.run_phase1() == LPStatus::Infeasible) return std::nullopt;
    return t.extract();
}

bool satisfies(const LinearProgram& lp, const std::vector<Rat>& assignment) {
    if (assignment.size() != static_cast<std::size_t>(lp.num_vars)) return false;
    for (const LinearConstraint& c : lp.constraints) {
        Rat lhs;
        for (std::size_t i = 0; i < assignment.size(); ++i) {
            lhs += c.coeffs[i] * assignment[i];
        }
        switch (c.relation) {
            case Relation::LessEq:
                if (!(lhs <= c.rhs)) return false;
                break;
            case Relation::Equal:
                if (lhs != c.rhs) return false;
                break;
            case Relation::GreaterEq:
                if (!(lhs >= c.rhs)) return false;
                break;
        }
    }
    if (!lp.bounds.empty()) {
        for (std::size_t i = 0; i < assignment.size(); ++i) {
            if (lp.bounds[i].lower && assignment[i] < *lp.bounds[i].lower) return false;
            if (lp.bounds[i].upper && assignment[i] > *lp.bounds[i].upper) return false;
        }
    }
    return true;
}

Rat objective_at(const LinearProgram& lp, const std::vector<Rat>& assignment) {
    Rat value;
    if (lp.objective.empty()) return value;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        value += lp.objective[i] * assignment[i];
    }
    return value;
}

}  // namespace gptd
