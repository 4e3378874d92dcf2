#pragma once

// Enumeration of all loops of small order (reduced Latin squares, identity 0)
// and property-filtered search.
//
// The backtracker fills the table row-major with row/column bitmasks. For
// require-properties backed by identities, partially filled tables are pruned
// by rejecting fully determined violated instances: an instance only counts
// as determined when every multiplication it reads is a filled cell and every
// division resolves among filled rows, so any completion of the prefix would
// violate it too. Completed tables are always re-checked in full, so pruning
// affects cost, never soundness. Searches that require conjugacy closure
// additionally prune rows through the translation-conjugation closure that
// CC1 forces: Linv_x L_y L_x must be a row of the finished table.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <thread>

#include "loopkit/properties.hpp"

namespace loopkit {

struct SearchQuery {
    int order = 0;
    std::vector<std::string> require;
    std::vector<std::string> forbid;
    std::optional<int> limit;
    enum class Mode { exhaustive, first } mode = Mode::exhaustive;
};

struct SearchOptions {
    int jobs = 1;
    std::uint64_t seed = 1;  // randomized restarts (orders 9-10, first mode)
    std::uint64_t nodes_per_restart = 4'000'000;
    int max_restarts = 64;
};

struct SearchHit {
    FiniteLoop loop;
    std::vector<PropertyReport> reports;  // require then forbid evaluations
};

namespace search_detail {

constexpr std::uint8_t kEmpty = 0xFF;

// Partially filled reduced table; rows 0..rows_done are complete.
class Partial {
  public:
    explicit Partial(int n) : n_(n) {
        std::memset(cell_.data(), kEmpty, sizeof(cell_));
        for (int c = 0; c < n_; ++c) set(0, c, static_cast<std::uint8_t>(c));
        for (int r = 1; r < n_; ++r) set(r, 0, static_cast<std::uint8_t>(r));
    }

    int order() const { return n_; }

    void set(int r, int c, std::uint8_t v) {
        cell_[r * n_ + c] = v;
        row_used_[r] |= std::uint64_t{1} << v;
        col_used_[c] |= std::uint64_t{1} << v;
    }

    void unset(int r, int c) {
        std::uint8_t v = cell_[r * n_ + c];
        cell_[r * n_ + c] = kEmpty;
        row_used_[r] &= ~(std::uint64_t{1} << v);
        col_used_[c] &= ~(std::uint64_t{1} << v);
    }

    std::uint64_t available(int r, int c) const {
        std::uint64_t full = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        return full & ~(row_used_[r] | col_used_[c]);
    }

    std::uint8_t at(int r, int c) const { return cell_[r * n_ + c]; }
    bool value_in_col(int c, std::uint8_t v) const { return (col_used_[c] >> v) & 1u; }

    // Tri-state partial operations; -1 means not yet determined. Divisions
    // only consult complete rows (0..rows_done inclusive).
    int rows_done = 0;

    int pmul(int x, int y) const {
        std::uint8_t v = cell_[x * n_ + y];
        return v == kEmpty ? -1 : v;
    }
    int pldiv(int x, int y) const {
        if (x > rows_done) return -1;
        const std::uint8_t* row = cell_.data() + x * n_;
        for (int c = 0; c < n_; ++c)
            if (row[c] == y) return c;
        return -1;
    }
    int prdiv(int x, int y) const {  // z with z*y = x
        for (int r = 0; r <= rows_done; ++r)
            if (cell_[r * n_ + y] == x) return r;
        return -1;
    }
    int plin(int x) const { return prdiv(0, x); }
    int prin(int x) const { return pldiv(x, 0); }

    std::vector<std::uint8_t> flat() const {
        return std::vector<std::uint8_t>(cell_.begin(), cell_.begin() + n_ * n_);
    }

  private:
    int n_;
    std::array<std::uint8_t, kMaxOrder * kMaxOrder> cell_;
    std::array<std::uint64_t, kMaxOrder> row_used_{};
    std::array<std::uint64_t, kMaxOrder> col_used_{};
};

inline int run_partial(const detail::Program& prog, const Partial& p, const elem* assignment) {
    std::array<int, 64> stack;
    int sp = 0;
    for (const auto& op : prog) {
        using detail::OpCode;
        switch (op.code) {
            case OpCode::PushVar: stack[sp++] = assignment[op.arg]; break;
            case OpCode::PushE: stack[sp++] = 0; break;
            case OpCode::Mul:
                --sp;
                stack[sp - 1] = stack[sp - 1] < 0 || stack[sp] < 0 ? -1 : p.pmul(stack[sp - 1], stack[sp]);
                break;
            case OpCode::LDiv:
                --sp;
                stack[sp - 1] = stack[sp - 1] < 0 || stack[sp] < 0 ? -1 : p.pldiv(stack[sp - 1], stack[sp]);
                break;
            case OpCode::RDiv:
                --sp;
                stack[sp - 1] = stack[sp - 1] < 0 || stack[sp] < 0 ? -1 : p.prdiv(stack[sp - 1], stack[sp]);
                break;
            case OpCode::Lin: stack[sp - 1] = stack[sp - 1] < 0 ? -1 : p.plin(stack[sp - 1]); break;
            case OpCode::Rin: stack[sp - 1] = stack[sp - 1] < 0 ? -1 : p.prin(stack[sp - 1]); break;
        }
    }
    return stack[0];
}

// Rejects fully determined violated instances of require-identities. Each
// instance is evaluated until it becomes determined, then never again on the
// current path; marks are rolled back per row on backtracking.
class InstancePruner {
  public:
    InstancePruner(const std::vector<const Identity*>& ids, int n) : n_(n) {
        for (const Identity* id : ids) {
            Block b;
            b.id = id;
            b.vars = static_cast<int>(id->vars().size());
            std::uint64_t count = 1;
            for (int i = 0; i < b.vars; ++i) count *= n;
            b.determined.assign(count, false);
            blocks_.push_back(std::move(b));
        }
        undo_.resize(kMaxOrder);
    }

    bool row_ok(const Partial& p, int r) {
        for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
            Block& b = blocks_[bi];
            elem a[8] = {0};
            const std::uint64_t count = b.determined.size();
            for (std::uint64_t ix = 0; ix < count; ++ix) {
                if (!b.determined[ix]) {
                    int lhs = run_partial(b.id->lhs_prog(), p, a);
                    if (lhs >= 0) {
                        int rhs = run_partial(b.id->rhs_prog(), p, a);
                        if (rhs >= 0) {
                            if (lhs != rhs) return false;
                            b.determined[ix] = true;
                            undo_[r].push_back({bi, ix});
                        }
                    }
                }
                for (int i = b.vars - 1; i >= 0; --i) {
                    if (++a[i] < n_) break;
                    a[i] = 0;
                }
            }
        }
        return true;
    }

    void undo_row(int r) {
        for (auto [bi, ix] : undo_[r]) blocks_[bi].determined[ix] = false;
        undo_[r].clear();
    }

  private:
    struct Block {
        const Identity* id;
        int vars;
        std::vector<bool> determined;
    };
    int n_;
    std::vector<Block> blocks_;
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> undo_;
};

// CC1 forces Linv_x L_y L_x to be the row of (x*y)/x. For complete rows x, y
// that composite is fully known, so it must match an existing row or remain
// placeable in the untouched region.
inline bool cc_rows_ok(const Partial& p, int r) {
    const int n = p.order();
    auto check_pair = [&](int x, int y) {
        std::array<std::uint8_t, kMaxOrder> comp;
        for (int z = 0; z < n; ++z) comp[z] = static_cast<std::uint8_t>(p.pmul(x, p.pmul(y, p.pldiv(x, z))));
        const int w = comp[0];
        const int xy = p.pmul(x, y);
        const int s = p.prdiv(xy, x);  // (x*y)/x if resolvable among filled rows
        if (w <= r) {
            if (p.at(w, x) != xy) return false;
            for (int z = 0; z < n; ++z)
                if (p.at(w, z) != comp[z]) return false;
        } else {
            if (s >= 0 && s != w) return false;
            for (int z = 1; z < n; ++z)
                if (p.value_in_col(z, comp[z])) return false;
            if (comp[0] != w) return false;
        }
        return true;
    };
    for (int x = 1; x < r; ++x)
        if (!check_pair(x, r) || !check_pair(r, x)) return false;
    return check_pair(r, r);
}

struct Hooks {
    InstancePruner* instances = nullptr;
    bool cc_closure = false;
};

// Depth-first over rows 1..n-1; visit returns false to stop the whole search.
class Backtracker {
  public:
    Backtracker(int n, Hooks hooks) : n_(n), p_(n), hooks_(hooks) {}

    // Optional fixed first row (subtree restriction) and value-order shuffle.
    void set_first_row(const std::vector<std::uint8_t>* row) { first_row_ = row; }
    void set_value_order(const std::array<std::uint8_t, kMaxOrder>* order) { value_order_ = order; }
    void set_node_budget(std::uint64_t budget) { budget_ = budget; }

    bool exhausted_budget() const { return nodes_ >= budget_; }

    bool run(const std::function<bool(const FiniteLoop&)>& visit) {
        visit_ = &visit;
        if (n_ == 1) return emit();
        return rows(1);
    }

  private:
    bool emit() {
        return (*visit_)(FiniteLoop::validate_flat(n_, p_.flat()));
    }

    bool rows(int r) {
        if (r == n_) return emit();
        p_.rows_done = r;
        if (r == 1 && first_row_) {
            for (int c = 1; c < n_; ++c) p_.set(1, c, (*first_row_)[c]);
            bool cont = row_done(r);
            for (int c = 1; c < n_; ++c) p_.unset(1, c);
            return cont;
        }
        return cells(r, 1);
    }

    bool cells(int r, int c) {
        if (c == n_) return row_done(r);
        std::uint64_t avail = p_.available(r, c);
        if (budget_ && ++nodes_ >= budget_) return false;
        if (value_order_) {
            for (int i = 0; i < n_; ++i) {
                std::uint8_t v = (*value_order_)[i];
                if (!((avail >> v) & 1u)) continue;
                p_.set(r, c, v);
                if (!cells(r, c + 1)) {
                    p_.unset(r, c);
                    return false;
                }
                p_.unset(r, c);
            }
            return true;
        }
        while (avail) {
            std::uint8_t v = static_cast<std::uint8_t>(std::countr_zero(avail));
            avail &= avail - 1;
            p_.set(r, c, v);
            if (!cells(r, c + 1)) {
                p_.unset(r, c);
                return false;
            }
            p_.unset(r, c);
        }
        return true;
    }

    bool row_done(int r) {
        bool ok = true;
        if (hooks_.cc_closure) ok = cc_rows_ok(p_, r);
        if (ok && hooks_.instances) ok = hooks_.instances->row_ok(p_, r);
        bool cont = true;
        if (ok) cont = rows(r + 1);
        if (hooks_.instances) hooks_.instances->undo_row(r);
        p_.rows_done = r;  // restore after descent
        return cont;
    }

    int n_;
    Partial p_;
    Hooks hooks_;
    const std::vector<std::uint8_t>* first_row_ = nullptr;
    const std::array<std::uint8_t, kMaxOrder>* value_order_ = nullptr;
    std::uint64_t budget_ = 0, nodes_ = 0;
    const std::function<bool(const FiniteLoop&)>* visit_ = nullptr;
};

// All valid complete first rows (row 1) in lexicographic order.
inline std::vector<std::vector<std::uint8_t>> first_rows(int n) {
    std::vector<std::vector<std::uint8_t>> out;
    if (n < 2) return out;
    std::vector<std::uint8_t> row(n, 0);
    row[0] = 1;
    std::uint64_t used = 1u << 1;
    auto rec = [&](auto&& self, int c) -> void {
        if (c == n) {
            out.push_back(row);
            return;
        }
        for (std::uint8_t v = 0; v < n; ++v) {
            if ((used >> v) & 1u) continue;
            if (v == c) continue;       // clashes with row 0
            if (c == 0 && v != 1) continue;
            row[c] = v;
            used |= std::uint64_t{1} << v;
            self(self, c + 1);
            used &= ~(std::uint64_t{1} << v);
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace search_detail

// Yields every reduced Latin square of order n exactly once, in lexicographic
// row-major order; visit returns false to stop early.
inline void enumerate_loops(int n, const std::function<bool(const FiniteLoop&)>& visit) {
    if (n < 1 || n > 8)
        throw OrderError("exhaustive enumeration supports orders 1..8, got " + std::to_string(n));
    search_detail::Backtracker bt(n, {});
    bt.run(visit);
}

inline std::vector<FiniteLoop> all_loops(int n) {
    std::vector<FiniteLoop> out;
    enumerate_loops(n, [&](const FiniteLoop& l) {
        out.push_back(l);
        return true;
    });
    return out;
}

namespace search_detail {

// Cost ordering for final filters: few-variable identities first, structural
// checks next, universality sweeps last.
inline int property_cost(const std::string& name) {
    if (name == "universal-osborn" || name == "left-universal-osborn" ||
        name == "right-universal-osborn" || name == "universal-wipl")
        return 100;
    if (name == "power-associative") return 20;
    if (name == "diassociative" || name == "vd") return 30;
    if (name.rfind("autotopism-", 0) == 0 || name.find("-autotopism-") != std::string::npos) return 40;
    if (name == "osborn") return 3;
    if (name == "cc" || name == "extra" || name == "moufang") return 3;
    if (const RegistryEntry* e = find_identity(name)) return static_cast<int>(e->identity.vars().size());
    return 50;
}

inline std::vector<const Identity*> prunable_identities(const std::vector<std::string>& require, int n) {
    std::vector<const Identity*> ids;
    auto consider = [&](const Identity& id) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < id.vars().size(); ++i) count *= n;
        if (count <= 65536) ids.push_back(&id);
    };
    for (const auto& name : require) {
        if (name == "cc" || name == "extra") {
            consider(lookup("CC1").identity);
            consider(lookup("CC2").identity);
        }
        if (name == "moufang" || name == "extra") consider(lookup("moufang").identity);
        if (name == "osborn") consider(lookup("OS1").identity);
        if (const RegistryEntry* e = find_identity(name)) consider(e->identity);
    }
    return ids;
}

}  // namespace search_detail

inline std::vector<SearchHit> run_search(const SearchQuery& q, const SearchOptions& opts = {}) {
    for (const auto& r : q.require)
        for (const auto& f : q.forbid)
            if (r == f) throw UnknownPropertyError("property both required and forbidden: " + r);
    for (const auto& name : q.require)
        if (!is_known_property(name)) throw UnknownPropertyError(name);
    for (const auto& name : q.forbid)
        if (!is_known_property(name)) throw UnknownPropertyError(name);

    const bool first_mode = q.mode == SearchQuery::Mode::first;
    if (q.order < 1 || q.order > (first_mode ? 10 : 8))
        throw OrderError("order " + std::to_string(q.order) +
                         (first_mode ? " out of range 1..10 for first-match search"
                                     : " out of range 1..8 for exhaustive search"));

    std::vector<std::string> require = q.require, forbid = q.forbid;
    auto by_cost = [](const std::string& a, const std::string& b) {
        return search_detail::property_cost(a) < search_detail::property_cost(b);
    };
    std::stable_sort(require.begin(), require.end(), by_cost);
    std::stable_sort(forbid.begin(), forbid.end(), by_cost);

    std::size_t max_hits = static_cast<std::size_t>(
        q.limit ? *q.limit : (first_mode ? 1 : std::numeric_limits<int>::max()));

    auto accept = [&](const FiniteLoop& l, std::vector<SearchHit>& out) {
        std::vector<PropertyReport> reports;
        for (const auto& name : require) {
            reports.push_back(property(l, name));
            if (!reports.back().holds) return true;  // continue search
        }
        for (const auto& name : forbid) {
            reports.push_back(property(l, name));
            if (reports.back().holds) return true;
        }
        out.push_back({l, std::move(reports)});
        return out.size() < max_hits;
    };

    const bool want_cc_closure = [&] {
        for (const auto& name : require)
            if (name == "cc" || name == "extra" || name == "CC1") return true;
        return false;
    }();

    struct PrunerSet {
        std::vector<const Identity*> ids;
        search_detail::InstancePruner pruner;
        search_detail::Hooks hooks;

        PrunerSet(const std::vector<std::string>& req, int n, bool cc)
            : ids(search_detail::prunable_identities(req, n)), pruner(ids, n) {
            hooks.instances = ids.empty() ? nullptr : &pruner;
            hooks.cc_closure = cc;
        }
    };

    // Randomized-restart first-match for the orders beyond the exhaustive cap.
    if (q.order > 8) {
        std::mt19937_64 rng(opts.seed);
        for (int attempt = 0; attempt < opts.max_restarts; ++attempt) {
            PrunerSet ps(require, q.order, want_cc_closure);
            search_detail::Backtracker bt(q.order, ps.hooks);
            std::array<std::uint8_t, kMaxOrder> order{};
            for (int i = 0; i < q.order; ++i) order[i] = static_cast<std::uint8_t>(i);
            std::shuffle(order.begin(), order.begin() + q.order, rng);
            bt.set_value_order(&order);
            bt.set_node_budget(opts.nodes_per_restart);
            std::vector<SearchHit> hits;
            bt.run([&](const FiniteLoop& l) { return accept(l, hits); });
            if (!hits.empty()) return hits;
        }
        return {};
    }

    auto rows = search_detail::first_rows(q.order);
    const int jobs = std::max(1, opts.jobs);
    if (rows.empty() || jobs == 1) {
        PrunerSet ps(require, q.order, want_cc_closure);
        search_detail::Backtracker bt(q.order, ps.hooks);
        std::vector<SearchHit> hits;
        bt.run([&](const FiniteLoop& l) { return accept(l, hits); });
        if (hits.size() > max_hits) hits.erase(hits.begin() + max_hits, hits.end());
        return hits;
    }

    // Subtree per first row; results merge in canonical (row-1) order, so the
    // outcome is independent of the worker count. In first-match mode a hit
    // in an earlier subtree cancels the subtrees after it.
    std::vector<std::vector<SearchHit>> per_task(rows.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> earliest_hit{rows.size()};
    auto worker = [&] {
        while (true) {
            std::size_t t = next.fetch_add(1);
            if (t >= rows.size()) return;
            if (first_mode && t > earliest_hit.load()) continue;
            PrunerSet ps(require, q.order, want_cc_closure);
            search_detail::Backtracker bt(q.order, ps.hooks);
            bt.set_first_row(&rows[t]);
            std::vector<SearchHit> hits;
            bt.run([&](const FiniteLoop& l) { return accept(l, hits); });
            if (first_mode && !hits.empty()) {
                std::size_t cur = earliest_hit.load();
                while (t < cur && !earliest_hit.compare_exchange_weak(cur, t)) {
                }
            }
            per_task[t] = std::move(hits);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::vector<SearchHit> merged;
    for (auto& hits : per_task) {
        for (auto& h : hits) {
            if (merged.size() >= max_hits) break;
            merged.push_back(std::move(h));
        }
        if (merged.size() >= max_hits) break;
    }
    return merged;
}

}  // namespace loopkit
