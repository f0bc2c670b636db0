#include "ddnf/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <stdexcept>

namespace ddnf {

std::string solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Satisfiable: return "SAT";
        case SolveStatus::Unsatisfiable: return "UNSAT";
        case SolveStatus::Timeout: return "TIMEOUT";
        case SolveStatus::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

namespace {

using Lit = int; // 2*(var-1) + (1 if negated)

inline Lit mk_lit(int dimacs) {
    int var = std::abs(dimacs);
    return 2 * (var - 1) + (dimacs < 0 ? 1 : 0);
}
inline Lit neg(Lit l) { return l ^ 1; }
inline int lit_var(Lit l) { return (l >> 1) + 1; }
inline bool lit_sign(Lit l) { return l & 1; } // true = negated

struct InternalClause {
    std::vector<Lit> lits;
    double activity = 0.0;
    bool learnt = false;
};

struct Watcher {
    InternalClause* clause;
    Lit blocker;
};

// value codes: 0 = unassigned, 1 = true, 2 = false (for the variable);
// literal value derived from sign
constexpr std::uint8_t kUndef = 0, kTrue = 1, kFalse = 2;

std::uint64_t luby(std::uint64_t x) {
    // Luby sequence 1,1,2,1,1,2,4,...
    std::uint64_t size = 1, seq = 0;
    while (size < x + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) / 2;
        --seq;
        x %= size;
    }
    return 1ull << seq;
}

class Solver {
public:
    Solver(const CnfFormula& f, const SolveBudget& budget)
        : num_vars_(f.num_vars), budget_(budget) {
        assigns_.assign(num_vars_ + 1, kUndef);
        level_.assign(num_vars_ + 1, 0);
        reason_.assign(num_vars_ + 1, nullptr);
        activity_.assign(num_vars_ + 1, 0.0);
        phase_.assign(num_vars_ + 1, kFalse); // try false first
        in_heap_.assign(num_vars_ + 1, false);
        heap_pos_.assign(num_vars_ + 1, 0);
        watches_.assign(2 * std::max(num_vars_, 1), {});
        for (int v = 1; v <= num_vars_; ++v) heap_insert(v);

        for (const Clause& c : f.clauses) {
            std::vector<Lit> lits;
            lits.reserve(c.size());
            for (int d : c) lits.push_back(mk_lit(d));
            std::sort(lits.begin(), lits.end());
            lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
            if (lits.size() == 1) {
                if (value(lits[0]) == kFalse) { trivially_unsat_ = true; return; }
                if (value(lits[0]) == kUndef) enqueue(lits[0], nullptr);
            } else {
                attach(new_clause(std::move(lits), false));
            }
        }
    }

    SolveOutcome run() {
        SolveOutcome out;
        auto start = std::chrono::steady_clock::now();
        out.status = search();
        out.stats = stats_;
        out.stats.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.status == SolveStatus::Satisfiable) {
            out.model.assign(num_vars_ + 1, false);
            for (int v = 1; v <= num_vars_; ++v) out.model[v] = (assigns_[v] == kTrue);
        }
        return out;
    }

private:
    // --- assignment ----------------------------------------------------
    std::uint8_t var_value(int v) const { return assigns_[v]; }
    std::uint8_t value(Lit l) const {
        std::uint8_t v = assigns_[lit_var(l)];
        if (v == kUndef) return kUndef;
        return (v == kTrue) != lit_sign(l) ? kTrue : kFalse;
    }
    int decision_level() const { return static_cast<int>(trail_lim_.size()); }

    void enqueue(Lit l, InternalClause* from) {
        int v = lit_var(l);
        assigns_[v] = lit_sign(l) ? kFalse : kTrue;
        level_[v] = decision_level();
        reason_[v] = from;
        trail_.push_back(l);
    }

    void backtrack_to(int lvl) {
        if (decision_level() <= lvl) return;
        for (std::size_t i = trail_.size(); i > trail_lim_[lvl];) {
            --i;
            int v = lit_var(trail_[i]);
            phase_[v] = assigns_[v];
            assigns_[v] = kUndef;
            reason_[v] = nullptr;
            if (!in_heap_[v]) heap_insert(v);
        }
        trail_.resize(trail_lim_[lvl]);
        trail_lim_.resize(lvl);
        propagate_head_ = std::min(propagate_head_, trail_.size());
    }

    // --- clause database ------------------------------------------------
    InternalClause* new_clause(std::vector<Lit> lits, bool learnt) {
        auto c = std::make_unique<InternalClause>();
        c->lits = std::move(lits);
        c->learnt = learnt;
        InternalClause* ptr = c.get();
        (learnt ? learnts_ : clauses_).push_back(std::move(c));
        return ptr;
    }

    void attach(InternalClause* c) {
        watches_[neg(c->lits[0])].push_back({c, c->lits[1]});
        watches_[neg(c->lits[1])].push_back({c, c->lits[0]});
    }

    void detach(InternalClause* c) {
        for (Lit w : {neg(c->lits[0]), neg(c->lits[1])}) {
            auto& ws = watches_[w];
            ws.erase(std::remove_if(ws.begin(), ws.end(),
                                    [c](const Watcher& x) { return x.clause == c; }),
                     ws.end());
        }
    }

    InternalClause* propagate() {
        while (propagate_head_ < trail_.size()) {
            Lit p = trail_[propagate_head_++];
            ++stats_.propagations;
            auto& ws = watches_[p];
            std::size_t keep = 0;
            for (std::size_t i = 0; i < ws.size(); ++i) {
                Watcher w = ws[i];
                if (value(w.blocker) == kTrue) { ws[keep++] = w; continue; }
                InternalClause& c = *w.clause;
                // ensure the false literal is lits[1]
                if (c.lits[0] == neg(p)) std::swap(c.lits[0], c.lits[1]);
                if (value(c.lits[0]) == kTrue) {
                    ws[keep++] = {w.clause, c.lits[0]};
                    continue;
                }
                bool moved = false;
                for (std::size_t j = 2; j < c.lits.size(); ++j) {
                    if (value(c.lits[j]) != kFalse) {
                        std::swap(c.lits[1], c.lits[j]);
                        watches_[neg(c.lits[1])].push_back({w.clause, c.lits[0]});
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                // unit or conflicting
                ws[keep++] = {w.clause, c.lits[0]};
                if (value(c.lits[0]) == kFalse) {
                    for (std::size_t j = i + 1; j < ws.size(); ++j) ws[keep++] = ws[j];
                    ws.resize(keep);
                    return w.clause;
                }
                enqueue(c.lits[0], w.clause);
            }
            ws.resize(keep);
        }
        return nullptr;
    }

    // --- conflict analysis (first UIP) -----------------------------------
    void bump_var(int v) {
        if (budget_.order != DecisionOrder::Activity) return;
        activity_[v] += var_inc_;
        if (activity_[v] > 1e100) {
            for (int i = 1; i <= num_vars_; ++i) activity_[i] *= 1e-100;
            var_inc_ *= 1e-100;
        }
        if (in_heap_[v]) heap_up(heap_pos_[v]);
    }

    void analyze(InternalClause* conflict, std::vector<Lit>& learnt, int& bt_level) {
        learnt.clear();
        learnt.push_back(0); // slot for the asserting literal
        std::vector<char> seen(num_vars_ + 1, 0);
        int counter = 0;
        Lit p = -1;
        std::size_t index = trail_.size();
        InternalClause* reason = conflict;

        do {
            for (Lit q : reason->lits) {
                if (p != -1 && q == p) continue;
                int v = lit_var(q);
                if (!seen[v] && level_[v] > 0) {
                    seen[v] = 1;
                    bump_var(v);
                    if (level_[v] >= decision_level()) ++counter;
                    else learnt.push_back(q);
                }
            }
            // next literal on the trail to resolve on
            while (!seen[lit_var(trail_[index - 1])]) --index;
            p = trail_[--index];
            seen[lit_var(p)] = 0;
            reason = reason_[lit_var(p)];
            --counter;
        } while (counter > 0);
        learnt[0] = neg(p);

        if (learnt.size() == 1) {
            bt_level = 0;
        } else {
            // put the literal with the highest level second
            std::size_t max_i = 1;
            for (std::size_t i = 2; i < learnt.size(); ++i)
                if (level_[lit_var(learnt[i])] > level_[lit_var(learnt[max_i])]) max_i = i;
            std::swap(learnt[1], learnt[max_i]);
            bt_level = level_[lit_var(learnt[1])];
        }
    }

    void reduce_learnts() {
        std::stable_sort(learnts_.begin(), learnts_.end(),
                         [](const auto& a, const auto& b) { return a->activity < b->activity; });
        std::size_t removed = 0, target = learnts_.size() / 2;
        std::vector<std::unique_ptr<InternalClause>> kept;
        kept.reserve(learnts_.size());
        for (auto& c : learnts_) {
            bool locked = reason_[lit_var(c->lits[0])] == c.get() &&
                          value(c->lits[0]) == kTrue;
            if (removed < target && !locked && c->lits.size() > 2) {
                detach(c.get());
                ++removed;
            } else {
                kept.push_back(std::move(c));
            }
        }
        learnts_ = std::move(kept);
    }

    // --- decision heap ----------------------------------------------------
    bool heap_less(int a, int b) const {
        if (activity_[a] != activity_[b]) return activity_[a] > activity_[b];
        return a < b;
    }
    void heap_insert(int v) {
        heap_.push_back(v);
        heap_pos_[v] = static_cast<int>(heap_.size()) - 1;
        in_heap_[v] = true;
        heap_up(heap_pos_[v]);
    }
    void heap_up(int i) {
        int v = heap_[i];
        while (i > 0) {
            int parent = (i - 1) / 2;
            if (!heap_less(v, heap_[parent])) break;
            heap_[i] = heap_[parent];
            heap_pos_[heap_[i]] = i;
            i = parent;
        }
        heap_[i] = v;
        heap_pos_[v] = i;
    }
    void heap_down(int i) {
        int v = heap_[i];
        int n = static_cast<int>(heap_.size());
        while (true) {
            int child = 2 * i + 1;
            if (child >= n) break;
            if (child + 1 < n && heap_less(heap_[child + 1], heap_[child])) ++child;
            if (!heap_less(heap_[child], v)) break;
            heap_[i] = heap_[child];
            heap_pos_[heap_[i]] = i;
            i = child;
        }
        heap_[i] = v;
        heap_pos_[v] = i;
    }
    int heap_pop() {
        int v = heap_[0];
        heap_[0] = heap_.back();
        heap_pos_[heap_[0]] = 0;
        heap_.pop_back();
        in_heap_[v] = false;
        if (!heap_.empty()) heap_down(0);
        return v;
    }

    int pick_branch_var() {
        while (!heap_.empty()) {
            int v = heap_pop();
            if (var_value(v) == kUndef) return v;
        }
        return 0;
    }

    // --- main loop ---------------------------------------------------------
    bool out_of_time() const {
        if (budget_.time_limit_seconds <= 0) return false;
        auto elapsed = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start_time_).count();
        return elapsed > budget_.time_limit_seconds;
    }

    SolveStatus search() {
        start_time_ = std::chrono::steady_clock::now();
        if (trivially_unsat_) return SolveStatus::Unsatisfiable;

        std::uint64_t restart_count = 0;
        std::uint64_t conflicts_until_restart = luby(restart_count) * 100;
        std::size_t max_learnts = std::max<std::size_t>(clauses_.size() / 3, 5000);
        std::vector<Lit> learnt;

        while (true) {
            InternalClause* conflict = propagate();
            if (conflict != nullptr) {
                ++stats_.conflicts;
                if (decision_level() == 0) return SolveStatus::Unsatisfiable;

                int bt_level = 0;
                analyze(conflict, learnt, bt_level);
                backtrack_to(bt_level);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], nullptr);
                } else {
                    InternalClause* c = new_clause(learnt, true);
                    c->activity = clause_inc_;
                    attach(c);
                    enqueue(learnt[0], c);
                }
                var_inc_ /= 0.95;
                clause_inc_ /= 0.999;

                if (budget_.conflict_limit && stats_.conflicts >= budget_.conflict_limit)
                    return SolveStatus::Timeout;
                if ((stats_.conflicts & 0xFF) == 0 && out_of_time())
                    return SolveStatus::Timeout;
                if (--conflicts_until_restart == 0) {
                    backtrack_to(0);
                    conflicts_until_restart = luby(++restart_count) * 100;
                    if (learnts_.size() > max_learnts) {
                        reduce_learnts();
                        max_learnts = max_learnts * 11 / 10;
                    }
                }
            } else {
                int v = pick_branch_var();
                if (v == 0) return SolveStatus::Satisfiable;
                ++stats_.decisions;
                if ((stats_.decisions & 0xFFF) == 0 && out_of_time())
                    return SolveStatus::Timeout;
                trail_lim_.push_back(trail_.size());
                enqueue(phase_[v] == kTrue ? 2 * (v - 1) : 2 * (v - 1) + 1, nullptr);
            }
        }
    }

    int num_vars_;
    SolveBudget budget_;
    bool trivially_unsat_ = false;

    std::vector<std::uint8_t> assigns_;
    std::vector<int> level_;
    std::vector<InternalClause*> reason_;
    std::vector<Lit> trail_;
    std::vector<std::size_t> trail_lim_;
    std::size_t propagate_head_ = 0;

    std::vector<std::unique_ptr<InternalClause>> clauses_;
    std::vector<std::unique_ptr<InternalClause>> learnts_;
    std::vector<std::vector<Watcher>> watches_;

    std::vector<double> activity_;
    std::vector<std::uint8_t> phase_;
    std::vector<int> heap_;
    std::vector<int> heap_pos_;
    std::vector<bool> in_heap_;
    double var_inc_ = 1.0;
    double clause_inc_ = 1.0;

    SolveStats stats_;
    std::chrono::steady_clock::time_point start_time_;
};

} // namespace

SolveOutcome solve_embedded(const CnfFormula& f, const SolveBudget& budget) {
    for (const Clause& c : f.clauses)
        if (c.empty()) throw std::invalid_argument("formula contains an empty clause");

    Solver solver(f, budget);
    SolveOutcome out = solver.run();
    if (out.status == SolveStatus::Satisfiable && !f.satisfied_by(out.model))
        throw std::logic_error("internal solver produced a model that fails re-validation");
    return out;
}

} // namespace ddnf
