#pragma once

// Cayley-table representation of finite loops (quasigroups with a two-sided
// identity): multiplication, left/right division, translations, one-sided
// inverses, and structural validation. Everything here is immutable after
// construction and safe to share across threads.

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loopkit {

using elem = int;

// Row and column masks fit in one machine word.
inline constexpr int kMaxOrder = 64;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input table: not square, or entry out of range.
struct TableError final : Error {
    using Error::Error;
};

struct OrderError final : Error {
    using Error::Error;
};

struct NotLatinError final : Error {
    bool in_row;     // true: duplicate within a row, false: within a column
    int line;        // row or column index
    elem duplicate;  // the repeated element

    NotLatinError(bool in_row_, int line_, elem duplicate_)
        : Error(std::string("not a Latin square: ") + (in_row_ ? "row " : "column ") +
                std::to_string(line_) + " repeats " + std::to_string(duplicate_)),
          in_row(in_row_), line(line_), duplicate(duplicate_) {}
};

struct NoIdentityError final : Error {
    NoIdentityError() : Error("table has no two-sided identity element") {}
};

struct WrongIdentityError final : Error {
    elem claimed;
    std::optional<elem> actual;

    WrongIdentityError(elem claimed_, std::optional<elem> actual_)
        : Error("claimed identity " + std::to_string(claimed_) +
                (actual_ ? " but actual identity is " + std::to_string(*actual_)
                         : " is not an identity element")),
          claimed(claimed_), actual(actual_) {}
};

// A bijection on {0..n-1}.
class Perm {
  public:
    Perm() = default;

    static Perm identity(int n) {
        Perm p;
        p.map_.resize(n);
        std::iota(p.map_.begin(), p.map_.end(), std::uint8_t{0});
        return p;
    }

    static Perm from_map(std::vector<std::uint8_t> map) {
        std::uint64_t seen = 0;
        for (auto v : map) {
            if (v >= map.size() || (seen >> v) & 1u)
                throw TableError("permutation map is not a bijection");
            seen |= std::uint64_t{1} << v;
        }
        Perm p;
        p.map_ = std::move(map);
        return p;
    }

    int order() const { return static_cast<int>(map_.size()); }

    elem operator()(elem x) const { return map_[x]; }

    // Left-to-right composition: apply *this first, then q.
    Perm then(const Perm& q) const {
        Perm r;
        r.map_.resize(map_.size());
        for (std::size_t i = 0; i < map_.size(); ++i) r.map_[i] = q.map_[map_[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.map_.resize(map_.size());
        for (std::size_t i = 0; i < map_.size(); ++i) r.map_[map_[i]] = static_cast<std::uint8_t>(i);
        return r;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < map_.size(); ++i)
            if (map_[i] != i) return false;
        return true;
    }

    // Order of the permutation in the symmetric group (lcm of cycle lengths).
    std::int64_t cycle_order() const {
        std::int64_t ord = 1;
        std::uint64_t seen = 0;
        for (std::size_t i = 0; i < map_.size(); ++i) {
            if ((seen >> i) & 1u) continue;
            std::int64_t len = 0;
            std::size_t j = i;
            do {
                seen |= std::uint64_t{1} << j;
                j = map_[j];
                ++len;
            } while (j != i);
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    bool operator==(const Perm&) const = default;

  private:
    std::vector<std::uint8_t> map_;
};

// Single composition convention used throughout: compose(p, q) applies p,
// then q, matching operator strings read left to right.
inline Perm compose(const Perm& p, const Perm& q) { return p.then(q); }

enum class EMapConvention {
    osborn,   // E_x = L_x L_{x^l}
    basarab,  // E_x = R_x R_{x^r}
};

class FiniteLoop {
  public:
    // Validates the Latin square and identity axioms. The identity element is
    // auto-detected when not claimed; the table keeps its input labelling.
    static FiniteLoop validate(const std::vector<std::vector<elem>>& table,
                               std::optional<elem> claimed_identity = std::nullopt) {
        const std::size_t n = table.size();
        if (n == 0) throw TableError("empty table");
        if (n > kMaxOrder) throw OrderError("order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));
        std::vector<std::uint8_t> flat(n * n);
        for (std::size_t r = 0; r < n; ++r) {
            if (table[r].size() != n) throw TableError("table is not square at row " + std::to_string(r));
            for (std::size_t c = 0; c < n; ++c) {
                elem v = table[r][c];
                if (v < 0 || static_cast<std::size_t>(v) >= n)
                    throw TableError("entry " + std::to_string(v) + " out of range at (" +
                                     std::to_string(r) + "," + std::to_string(c) + ")");
                flat[r * n + c] = static_cast<std::uint8_t>(v);
            }
        }
        return validate_flat(static_cast<int>(n), std::move(flat), claimed_identity);
    }

    static FiniteLoop validate_flat(int n, std::vector<std::uint8_t> flat,
                                    std::optional<elem> claimed_identity = std::nullopt) {
        if (n <= 0) throw TableError("empty table");
        if (n > kMaxOrder) throw OrderError("order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));
        for (int r = 0; r < n; ++r) {
            std::uint64_t seen = 0;
            for (int c = 0; c < n; ++c) {
                std::uint8_t v = flat[r * n + c];
                if ((seen >> v) & 1u) throw NotLatinError(true, r, v);
                seen |= std::uint64_t{1} << v;
            }
        }
        for (int c = 0; c < n; ++c) {
            std::uint64_t seen = 0;
            for (int r = 0; r < n; ++r) {
                std::uint8_t v = flat[r * n + c];
                if ((seen >> v) & 1u) throw NotLatinError(false, c, v);
                seen |= std::uint64_t{1} << v;
            }
        }
        std::optional<elem> found;
        for (int e = 0; e < n; ++e) {
            bool ok = true;
            for (int x = 0; x < n && ok; ++x)
                ok = flat[e * n + x] == x && flat[x * n + e] == x;
            if (ok) {
                found = e;
                break;  // a quasigroup has at most one two-sided identity
            }
        }
        if (claimed_identity) {
            if (*claimed_identity < 0 || *claimed_identity >= n)
                throw WrongIdentityError(*claimed_identity, found);
            if (!found || *found != *claimed_identity) throw WrongIdentityError(*claimed_identity, found);
        }
        if (!found) throw NoIdentityError();
        return FiniteLoop(n, *found, std::move(flat));
    }

    int order() const { return n_; }
    elem identity() const { return e_; }

    elem mul(elem x, elem y) const { return table_[x * n_ + y]; }

    // ldiv(x, y) is the unique z with x*z = y; rdiv(x, y) the unique z with z*y = x.
    elem ldiv(elem x, elem y) const { return ldiv_[x * n_ + y]; }
    elem rdiv(elem x, elem y) const { return rdiv_[x * n_ + y]; }

    elem lin(elem x) const { return lin_[x]; }  // x^l, with x^l * x = e
    elem rin(elem x) const { return rin_[x]; }  // x^r, with x * x^r = e

    // y -> x*y
    Perm left_translation(elem x) const {
        std::vector<std::uint8_t> m(table_.begin() + x * n_, table_.begin() + (x + 1) * n_);
        return Perm::from_map(std::move(m));
    }

    // y -> y*x
    Perm right_translation(elem x) const {
        std::vector<std::uint8_t> m(n_);
        for (int y = 0; y < n_; ++y) m[y] = table_[y * n_ + x];
        return Perm::from_map(std::move(m));
    }

    Perm e_map(elem x, EMapConvention convention) const {
        if (convention == EMapConvention::osborn)
            return compose(left_translation(x), left_translation(lin(x)));
        return compose(right_translation(x), right_translation(rin(x)));
    }

    // Isomorphic copy with the identity relabelled to element 0 (labels 0 and
    // identity() are swapped; everything else stays put).
    FiniteLoop normalized() const {
        if (e_ == 0) return *this;
        std::vector<std::uint8_t> flat(n_ * n_);
        auto phi = [this](elem x) -> std::uint8_t {
            if (x == e_) return 0;
            if (x == 0) return static_cast<std::uint8_t>(e_);
            return static_cast<std::uint8_t>(x);
        };
        for (elem x = 0; x < n_; ++x)
            for (elem y = 0; y < n_; ++y) flat[phi(x) * n_ + phi(y)] = phi(mul(x, y));
        return FiniteLoop(n_, 0, std::move(flat));
    }

    const std::vector<std::uint8_t>& table() const { return table_; }

    std::vector<std::vector<elem>> rows() const {
        std::vector<std::vector<elem>> out(n_, std::vector<elem>(n_));
        for (elem x = 0; x < n_; ++x)
            for (elem y = 0; y < n_; ++y) out[x][y] = mul(x, y);
        return out;
    }

    bool operator==(const FiniteLoop& o) const {
        return n_ == o.n_ && e_ == o.e_ && table_ == o.table_;
    }

  private:
    FiniteLoop(int n, elem e, std::vector<std::uint8_t> flat)
        : n_(n), e_(e), table_(std::move(flat)), ldiv_(n * n), rdiv_(n * n), lin_(n), rin_(n) {
        for (elem x = 0; x < n_; ++x)
            for (elem z = 0; z < n_; ++z) {
                ldiv_[x * n_ + table_[x * n_ + z]] = static_cast<std::uint8_t>(z);
                rdiv_[table_[z * n_ + x] * n_ + x] = static_cast<std::uint8_t>(z);
            }
        for (elem x = 0; x < n_; ++x) {
            lin_[x] = rdiv(e_, x);
            rin_[x] = ldiv(x, e_);
        }
    }

    int n_ = 0;
    elem e_ = 0;
    std::vector<std::uint8_t> table_;
    std::vector<std::uint8_t> ldiv_;  // [x*n+y] = z with x*z = y
    std::vector<std::uint8_t> rdiv_;  // [x*n+y] = z with z*y = x
    std::vector<elem> lin_, rin_;
};

}  // namespace loopkit
