#pragma once

#include "qjordan/jordan.hpp"
#include "qjordan/partition.hpp"
#include "qjordan/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace qjordan {

// Square of a board in matrix-entry indexing: 1-based (row, col).
struct Square {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Square&, const Square&) = default;
};

// Ferrers board with squares justified upwards and to the right: column j
// holds squares (i, j) for 1 <= i <= h_j, with h_1 <= ... <= h_n.
class FerrersBoard {
public:
    FerrersBoard() = default;

    explicit FerrersBoard(std::vector<int> column_heights)
        : heights_(std::move(column_heights)) {
        for (size_t j = 0; j < heights_.size(); ++j) {
            if (heights_[j] < 0 || (j > 0 && heights_[j] < heights_[j - 1]))
                throw std::invalid_argument("column heights must be nonnegative and nondecreasing");
        }
    }

    // B_n: columns of sizes 0, 1, ..., n-1
    static FerrersBoard staircase(int n) {
        std::vector<int> h(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) h[static_cast<size_t>(j)] = j;
        return FerrersBoard{std::move(h)};
    }

    int num_columns() const { return static_cast<int>(heights_.size()); }
    int height(int j) const { return heights_[static_cast<size_t>(j - 1)]; }  // 1-based
    bool contains(int row, int col) const {
        return col >= 1 && col <= num_columns() && row >= 1 && row <= height(col);
    }
    int area() const {
        int a = 0;
        for (int h : heights_) a += h;
        return a;
    }
    bool is_staircase() const {
        for (int j = 1; j <= num_columns(); ++j)
            if (height(j) != j - 1) return false;
        return true;
    }

    friend bool operator==(const FerrersBoard&, const FerrersBoard&) = default;

private:
    std::vector<int> heights_;
};

// Non-attacking rook placement: at most one rook per row and per column.
class RookPlacement {
public:
    RookPlacement(FerrersBoard board, std::vector<Square> rooks)
        : board_(std::move(board)), rooks_(std::move(rooks)) {
        std::sort(rooks_.begin(), rooks_.end(),
                  [](const Square& a, const Square& b) { return a.col < b.col; });
        for (size_t i = 0; i < rooks_.size(); ++i) {
            if (!board_.contains(rooks_[i].row, rooks_[i].col))
                throw std::invalid_argument("rook off the board");
            for (size_t j = i + 1; j < rooks_.size(); ++j)
                if (rooks_[i].row == rooks_[j].row || rooks_[i].col == rooks_[j].col)
                    throw std::invalid_argument("attacking rooks");
        }
    }

    const FerrersBoard& board() const { return board_; }
    const std::vector<Square>& rooks() const { return rooks_; }  // sorted by column
    int num_rooks() const { return static_cast<int>(rooks_.size()); }

    bool rook_in_row(int row) const {
        for (const auto& r : rooks_)
            if (r.row == row) return true;
        return false;
    }
    // rook row in column j, or 0 if the column is empty
    int rook_row(int col) const {
        for (const auto& r : rooks_)
            if (r.col == col) return r.row;
        return 0;
    }

    friend bool operator==(const RookPlacement&, const RookPlacement&) = default;

private:
    FerrersBoard board_;
    std::vector<Square> rooks_;
};

namespace detail {
inline void placements_rec(const FerrersBoard& board, int k, int col,
                           std::vector<Square>& acc, std::vector<bool>& row_used,
                           std::vector<RookPlacement>& out) {
    const int n = board.num_columns();
    const int remaining = static_cast<int>(acc.size());
    if (col > n) {
        if (remaining == k) out.emplace_back(board, acc);
        return;
    }
    if (remaining < k) {
        for (int row = 1; row <= board.height(col); ++row) {
            if (row_used[static_cast<size_t>(row)]) continue;
            acc.push_back(Square{row, col});
            row_used[static_cast<size_t>(row)] = true;
            placements_rec(board, k, col + 1, acc, row_used, out);
            row_used[static_cast<size_t>(row)] = false;
            acc.pop_back();
        }
    }
    placements_rec(board, k, col + 1, acc, row_used, out);
}
}  // namespace detail

// All placements of k rooks, columns scanned left to right, rows within a
// column top to bottom, the empty column last.
inline std::vector<RookPlacement> enumerate_placements(const FerrersBoard& board, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    std::vector<RookPlacement> out;
    std::vector<Square> acc;
    int max_height = 0;
    for (int j = 1; j <= board.num_columns(); ++j) max_height = std::max(max_height, board.height(j));
    std::vector<bool> row_used(static_cast<size_t>(max_height) + 2, false);
    detail::placements_rec(board, k, 1, acc, row_used, out);
    return out;
}

// Number of board squares lying directly north or directly east of a rook,
// each square counted once.
inline int ne(const RookPlacement& C) {
    int count = 0;
    const auto& board = C.board();
    for (int col = 1; col <= board.num_columns(); ++col) {
        const int rrow = C.rook_row(col);
        for (int row = 1; row <= board.height(col); ++row) {
            const bool north_of_rook = rrow != 0 && row < rrow;
            bool east_of_rook = false;
            for (const auto& r : C.rooks())
                if (r.row == row && r.col < col) east_of_rook = true;
            if (row == rrow) continue;
            if (north_of_rook || east_of_rook) ++count;
        }
    }
    return count;
}

inline int inv(const RookPlacement& C) {
    return C.board().area() - C.num_rooks() - ne(C);
}

// (q-1)^{#rooks in column j} q^{#north-east squares within column j}
inline Poly column_weight(const RookPlacement& C, int j) {
    const auto& board = C.board();
    if (j < 1 || j > board.num_columns()) throw std::invalid_argument("column out of range");
    const int rrow = C.rook_row(j);
    int ne_col = 0;
    for (int row = 1; row <= board.height(j); ++row) {
        if (row == rrow) continue;
        bool counts = rrow != 0 && row < rrow;
        if (!counts)
            for (const auto& r : C.rooks())
                if (r.row == row && r.col < j) counts = true;
        if (counts) ++ne_col;
    }
    Poly w = Poly::q_power(ne_col);
    if (rrow != 0) w *= Poly::q_minus_one();
    return w;
}

// F_C(q) = (q-1)^k q^{ne(C)}, equal to the product of the column weights.
inline Poly placement_weight(const RookPlacement& C) {
    return Poly::q_minus_one().pow(C.num_rooks()) * Poly::q_power(ne(C));
}

// R_{B,k}(q) = sum over placements of q^{inv(C)}
inline Poly q_rook_poly(const FerrersBoard& board, int k) {
    Poly r;
    for (const auto& C : enumerate_placements(board, k)) r += Poly::q_power(inv(C));
    return r;
}

// q-Stirling numbers of the second kind:
//   S_{n,k} = q^{k-1} S_{n-1,k-1} + [k]_q S_{n-1,k},  S_{0,0} = 1.
inline Poly q_stirling(int n, int k) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (k < 0 || k > n) return Poly{};
    if (n == 0) return Poly{Int{1}};
    static std::map<std::pair<int, int>, Poly> cache;
    static std::mutex mtx;
    {
        std::lock_guard lock(mtx);
        if (auto it = cache.find({n, k}); it != cache.end()) return it->second;
    }
    Poly val = Poly::q_power(std::max(k - 1, 0)) * q_stirling(n - 1, k - 1) +
               Poly::q_int(k) * q_stirling(n - 1, k);
    std::lock_guard lock(mtx);
    return cache.emplace(std::make_pair(n, k), std::move(val)).first->second;
}

// Number of n by n matrices of rank k with support inside the board,
// computed both as (q-1)^k q^{area-k} R_{B,k}(1/q) and as the direct sum
// of placement weights; the two routes must agree.
inline Poly p_rank_count(const FerrersBoard& board, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    const Poly rbk = q_rook_poly(board, k);
    Poly via_rook;
    if (!rbk.is_zero())
        via_rook = Poly::q_minus_one().pow(k) * reverse_scaled(rbk, board.area() - k);
    Poly direct;
    for (const auto& C : enumerate_placements(board, k)) direct += placement_weight(C);
    if (via_rook != direct)
        throw std::logic_error("rank-count routes disagree");
    return direct;
}

}  // namespace qjordan
