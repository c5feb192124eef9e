#pragma once

// Integer homology of normalized chains, via Smith normal form. Unit pivots
// are eliminated sparsely first; whatever is left goes through a dense Smith
// reduction over arbitrary-precision integers.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "sset.hpp"

namespace cubical {

using BigInt = boost::multiprecision::cpp_int;

struct SmithResult {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;  // invariant factors other than 1, ascending
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in elimination");
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in elimination");
    return r;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt to_big(std::int64_t x) { return BigInt(x); }
inline BigInt to_big(const BigInt& x) { return x; }

template <class Int>
bool is_unit(const Int& x) {
    return x == 1 || x == -1;
}

inline SmithResult dense_smith(std::vector<std::vector<BigInt>> a) {
    SmithResult res;
    const std::size_t R = a.size(), C = R ? a[0].size() : 0;
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        auto find_min = [&](std::size_t& pi, std::size_t& pj) {
            bool found = false;
            BigInt best;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (a[i][j] != 0 && (!found || abs(a[i][j]) < best)) {
                        best = abs(a[i][j]);
                        pi = i;
                        pj = j;
                        found = true;
                    }
            return found;
        };
        std::size_t pi = 0, pj = 0;
        if (!find_min(pi, pj)) break;
        for (;;) {
            std::swap(a[t], a[pi]);
            for (auto& row : a) std::swap(row[t], row[pj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i)
                if (a[i][t] != 0) {
                    BigInt q = a[i][t] / a[t][t];
                    for (std::size_t j = t; j < C; ++j) a[i][j] -= q * a[t][j];
                    if (a[i][t] != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < C; ++j)
                if (a[t][j] != 0) {
                    BigInt q = a[t][j] / a[t][t];
                    for (std::size_t i = t; i < R; ++i) a[i][j] -= q * a[i][t];
                    if (a[t][j] != 0) clean = false;
                }
            if (clean) {
                // enforce divisibility so the diagonal is the invariant factor list
                bool divides = true;
                for (std::size_t i = t + 1; i < R && divides; ++i)
                    for (std::size_t j = t + 1; j < C; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (std::size_t k = t; k < C; ++k) a[t][k] += a[i][k];
                            divides = false;
                            break;
                        }
                if (divides) break;
            }
            // new pivot: smallest nonzero entry in row t or column t
            BigInt best = abs(a[t][t]);
            pi = t;
            pj = t;
            for (std::size_t i = t; i < R; ++i)
                if (a[i][t] != 0 && abs(a[i][t]) < best) { best = abs(a[i][t]); pi = i; pj = t; }
            for (std::size_t j = t; j < C; ++j)
                if (a[t][j] != 0 && abs(a[t][j]) < best) { best = abs(a[t][j]); pi = t; pj = j; }
        }
        diag.push_back(abs(a[t][t]));
    }
    res.rank = diag.size();
    for (auto& d : diag)
        if (d != 1) res.torsion.push_back(d);
    std::sort(res.torsion.begin(), res.torsion.end());
    return res;
}

template <class Int>
class SparseEliminator {
public:
    using Col = std::vector<std::pair<int, Int>>;

    SparseEliminator(std::size_t rows, std::vector<Col> cols)
        : cols_(std::move(cols)), row_cols_(rows), row_count_(rows, 0), row_alive_(rows, true), col_alive_(cols_.size(), true), stamp_(cols_.size(), 0) {
        for (std::size_t c = 0; c < cols_.size(); ++c) {
            std::sort(cols_[c].begin(), cols_[c].end(), [](auto& x, auto& y) { return x.first < y.first; });
            for (auto& [r, v] : cols_[c]) {
                row_cols_[static_cast<std::size_t>(r)].push_back(static_cast<int>(c));
                ++row_count_[static_cast<std::size_t>(r)];
            }
            heap_.push({cols_[c].size(), static_cast<int>(c)});
        }
        for (std::size_t r = 0; r < rows; ++r)
            if (row_count_[r] == 1) row_stack_.push_back(static_cast<int>(r));
    }

    SmithResult run() {
        std::size_t rank = 0;
        for (;;) {
            int r = -1, c = -1;
            if (!pick_singleton_row(r, c) && !pick_from_heap(r, c)) break;
            eliminate(r, c);
            ++rank;
        }
        // leftover block without unit entries
        std::vector<int> rows, cs;
        for (std::size_t col = 0; col < cols_.size(); ++col)
            if (col_alive_[col] && !cols_[col].empty()) cs.push_back(static_cast<int>(col));
        std::vector<int> row_pos(row_count_.size(), -1);
        for (int col : cs)
            for (auto& [row, v] : cols_[static_cast<std::size_t>(col)])
                if (row_pos[static_cast<std::size_t>(row)] < 0) {
                    row_pos[static_cast<std::size_t>(row)] = static_cast<int>(rows.size());
                    rows.push_back(row);
                }
        SmithResult res;
        if (!cs.empty()) {
            check_guard(rows.size() * cs.size() <= 4000000, "homology: dense remainder too large");
            std::vector<std::vector<BigInt>> dense(rows.size(), std::vector<BigInt>(cs.size()));
            for (std::size_t j = 0; j < cs.size(); ++j)
                for (auto& [row, v] : cols_[static_cast<std::size_t>(cs[j])]) dense[static_cast<std::size_t>(row_pos[static_cast<std::size_t>(row)])][j] = to_big(v);
            res = dense_smith(std::move(dense));
        }
        res.rank += rank;
        return res;
    }

private:
    const Int* value(int c, int r) const {
        auto& col = cols_[static_cast<std::size_t>(c)];
        auto it = std::lower_bound(col.begin(), col.end(), r, [](auto& e, int key) { return e.first < key; });
        if (it == col.end() || it->first != r) return nullptr;
        return &it->second;
    }

    bool pick_singleton_row(int& r, int& c) {
        while (!row_stack_.empty()) {
            const int row = row_stack_.back();
            row_stack_.pop_back();
            if (!row_alive_[static_cast<std::size_t>(row)] || row_count_[static_cast<std::size_t>(row)] != 1) continue;
            for (int col : row_cols_[static_cast<std::size_t>(row)]) {
                if (!col_alive_[static_cast<std::size_t>(col)]) continue;
                const Int* v = value(col, row);
                if (v && is_unit(*v)) {
                    r = row;
                    c = col;
                    return true;
                }
            }
        }
        return false;
    }

    bool pick_from_heap(int& r, int& c) {
        while (!heap_.empty()) {
            auto [len, col] = heap_.top();
            heap_.pop();
            if (!col_alive_[static_cast<std::size_t>(col)]) continue;
            const auto& entries = cols_[static_cast<std::size_t>(col)];
            if (entries.size() != len) {
                heap_.push({entries.size(), col});
                continue;
            }
            int best = -1;
            std::size_t best_count = 0;
            for (auto& [row, v] : entries)
                if (is_unit(v) && (best < 0 || row_count_[static_cast<std::size_t>(row)] < best_count)) {
                    best = row;
                    best_count = row_count_[static_cast<std::size_t>(row)];
                }
            if (best < 0) continue;  // revisited if an update changes the column
            r = best;
            c = col;
            return true;
        }
        return false;
    }

    void touch_row(int row, int delta, int col) {
        auto& cnt = row_count_[static_cast<std::size_t>(row)];
        cnt = static_cast<std::size_t>(static_cast<long long>(cnt) + delta);
        if (delta > 0) row_cols_[static_cast<std::size_t>(row)].push_back(col);
        if (cnt == 1) row_stack_.push_back(row);
    }

    void eliminate(int r, int c) {
        const Int v = *value(c, r);
        ++cur_stamp_;
        stamp_[static_cast<std::size_t>(c)] = cur_stamp_;
        std::vector<std::pair<int, Int>> targets;
        for (int col : row_cols_[static_cast<std::size_t>(r)]) {
            if (!col_alive_[static_cast<std::size_t>(col)] || stamp_[static_cast<std::size_t>(col)] == cur_stamp_) continue;
            stamp_[static_cast<std::size_t>(col)] = cur_stamp_;
            const Int* w = value(col, r);
            if (w) targets.emplace_back(col, *w);
        }
        const Col& pc = cols_[static_cast<std::size_t>(c)];
        for (auto& [col, w] : targets) {
            const Int m = checked_mul(w, v);  // v is its own inverse
            Col merged;
            auto& tc = cols_[static_cast<std::size_t>(col)];
            merged.reserve(tc.size() + pc.size());
            std::size_t i = 0, j = 0;
            while (i < tc.size() || j < pc.size()) {
                if (j == pc.size() || (i < tc.size() && tc[i].first < pc[j].first)) {
                    merged.push_back(tc[i++]);
                } else if (i == tc.size() || pc[j].first < tc[i].first) {
                    merged.emplace_back(pc[j].first, checked_sub(Int(0), checked_mul(m, pc[j].second)));
                    touch_row(pc[j].first, +1, col);
                    ++j;
                } else {
                    Int x = checked_sub(tc[i].second, checked_mul(m, pc[j].second));
                    if (x != 0) merged.emplace_back(tc[i].first, x);
                    else touch_row(tc[i].first, -1, col);
                    ++i;
                    ++j;
                }
            }
            tc = std::move(merged);
            heap_.push({tc.size(), col});
        }
        for (auto& [row, val] : pc)
            if (row != r) touch_row(row, -1, c);
        col_alive_[static_cast<std::size_t>(c)] = false;
        row_alive_[static_cast<std::size_t>(r)] = false;
        row_count_[static_cast<std::size_t>(r)] = 0;
        cols_[static_cast<std::size_t>(c)].clear();
    }

    std::vector<Col> cols_;
    std::vector<std::vector<int>> row_cols_;
    std::vector<std::size_t> row_count_;
    std::vector<bool> row_alive_, col_alive_;
    std::vector<unsigned> stamp_;
    unsigned cur_stamp_ = 0;
    std::vector<int> row_stack_;
    std::priority_queue<std::pair<std::size_t, int>, std::vector<std::pair<std::size_t, int>>, std::greater<>> heap_;
};

}  // namespace detail

// Smith normal form data (rank and nontrivial invariant factors) of a sparse
// integer matrix given by columns.
inline SmithResult smith(std::size_t rows, const std::vector<std::vector<std::pair<int, std::int64_t>>>& cols) {
    try {
        return detail::SparseEliminator<std::int64_t>(rows, cols).run();
    } catch (const ArithmeticOverflow&) {
        std::vector<std::vector<std::pair<int, BigInt>>> big(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (auto& [r, v] : cols[c]) big[c].emplace_back(r, BigInt(v));
        return detail::SparseEliminator<BigInt>(rows, std::move(big)).run();
    }
}

struct HomologyGroup {
    long long betti = 0;
    std::vector<std::string> torsion;  // orders of cyclic torsion summands
    bool is_zero() const { return betti == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
    std::string str() const {
        std::string s;
        if (betti == 1) s = "Z";
        else if (betti > 1) s = "Z^" + std::to_string(betti);
        for (auto& t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t;
        return s.empty() ? "0" : s;
    }
};

struct HomologyReport {
    std::vector<HomologyGroup> groups;  // degrees 0 .. top-1
    int top = 0;                        // truncation of the input; H_top is not determined
    std::string str() const {
        std::string s;
        for (std::size_t k = 0; k < groups.size(); ++k) s += (k ? ", " : "") + std::string("H") + std::to_string(k) + " = " + groups[k].str();
        return s + (s.empty() ? "" : ", ") + "H" + std::to_string(top) + "+ not computed";
    }
};

// Boundary matrix d_k : C_k -> C_{k-1} on normalized chains.
inline std::vector<std::vector<std::pair<int, std::int64_t>>> boundary_matrix(const TruncSSet& X, int k) {
    std::vector<std::vector<std::pair<int, std::int64_t>>> cols(static_cast<std::size_t>(X.count(k)));
    for (int id = 0; id < X.count(k); ++id) {
        std::map<int, std::int64_t> acc;
        const auto& y = X.simplex(k, id);
        for (int i = 0; i <= k; ++i) {
            const auto& f = y.faces[static_cast<std::size_t>(i)];
            if (f.degenerate()) continue;
            acc[f.base] += (i % 2 == 0) ? 1 : -1;
        }
        for (auto [r, v] : acc)
            if (v != 0) cols[static_cast<std::size_t>(id)].emplace_back(r, v);
    }
    return cols;
}

// Homology in degrees 0 .. top-1; the top degree would need simplices
// beyond the truncation.
inline HomologyReport homology(const TruncSSet& X) {
    long long total = 0;
    for (int k = 0; k <= X.top(); ++k) total += X.count(k);
    check_guard(total <= 5000000, "homology: more than 5e6 nondegenerate simplices");
    std::vector<SmithResult> d(static_cast<std::size_t>(X.top() + 2));
    for (int k = 1; k <= X.top(); ++k) d[static_cast<std::size_t>(k)] = smith(static_cast<std::size_t>(X.count(k - 1)), boundary_matrix(X, k));
    HomologyReport rep;
    rep.top = X.top();
    for (int k = 0; k < X.top(); ++k) {
        HomologyGroup g;
        g.betti = static_cast<long long>(X.count(k)) - static_cast<long long>(d[static_cast<std::size_t>(k)].rank) -
                  static_cast<long long>(d[static_cast<std::size_t>(k + 1)].rank);
        for (auto& t : d[static_cast<std::size_t>(k + 1)].torsion) g.torsion.push_back(t.str());
        rep.groups.push_back(std::move(g));
    }
    return rep;
}

inline bool has_point_homology(const HomologyReport& h) {
    if (h.groups.empty() || !(h.groups[0].betti == 1 && h.groups[0].torsion.empty())) return false;
    for (std::size_t k = 1; k < h.groups.size(); ++k)
        if (!h.groups[k].is_zero()) return false;
    return true;
}

inline bool is_contractible_homologically(const TruncSSet& X) {
    return !X.empty() && X.top() >= 1 && has_point_homology(homology(X));
}

// homology of S^n in every computed degree
inline bool has_sphere_homology(const HomologyReport& h, int n) {
    if (n < 0 || static_cast<std::size_t>(n) >= h.groups.size()) return false;
    for (std::size_t k = 0; k < h.groups.size(); ++k) {
        long long want = 0;
        if (n == 0 && k == 0) want = 2;
        else if (k == 0 || k == static_cast<std::size_t>(n)) want = 1;
        if (h.groups[k].betti != want || !h.groups[k].torsion.empty()) return false;
    }
    return true;
}

inline bool is_sphere_homologically(const TruncSSet& X, int n) { return has_sphere_homology(homology(X), n); }

inline long long euler_characteristic(const TruncSSet& X) {
    long long chi = 0;
    for (int k = 0; k <= X.top(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long long>(X.count(k));
    return chi;
}

inline long long euler_from_homology(const HomologyReport& h) {
    long long chi = 0;
    for (std::size_t k = 0; k < h.groups.size(); ++k) chi += (k % 2 ? -1 : 1) * h.groups[k].betti;
    return chi;
}

}  // namespace cubical
