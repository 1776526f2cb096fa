#pragma once

#include "qjordan/jordan.hpp"
#include "qjordan/partition.hpp"
#include "qjordan/poly.hpp"
#include "qjordan/rook.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qjordan {

// Edge of the multigraph Z: a cover edge of Young's lattice, with the
// non-first-column edges split into one edge per monomial of c_{mu,lambda}.
struct ZEdge {
    Partition source;
    Partition target;
    Poly weight;
    int degree = 0;     // degree of the weight
    bool has_rook = false;  // weight carries a q-1 factor
};

// (degree, has_rook) is the canonical codec shared by the bijections Phi
// and Psi.  The flag is redundant for sequences arising from actual paths
// (the q-1 factor raises the degree past the first-column edge's), but it
// is carried so each side validates the other.
struct FlagStep {
    int degree = 0;
    bool has_rook = false;
    friend bool operator==(const FlagStep&, const FlagStep&) = default;
};

struct ZPath {
    std::vector<ZEdge> edges;  // chained from the empty partition

    const Partition& endpoint() const {
        static const Partition empty{};
        return edges.empty() ? empty : edges.back().target;
    }
    Poly weight() const {
        Poly w{Int{1}};
        for (const auto& e : edges) w *= e.weight;
        return w;
    }
    std::vector<int> degree_sequence() const {
        std::vector<int> d;
        for (const auto& e : edges) d.push_back(e.degree);
        return d;
    }
    std::vector<FlagStep> flag_sequence() const {
        std::vector<FlagStep> s;
        for (const auto& e : edges) s.push_back({e.degree, e.has_rook});
        return s;
    }
};

// The l(mu)+1 edges leaving mu in Z: rook edges of weights
// (q-1)q^{|mu|-1}, ..., (q-1)q^{|mu|-l}, then the first-column edge of
// weight q^{|mu|-l}.  A rook edge of weight (q-1)q^e targets the cover
// adding a box in column j where mu'_j <= |mu|-1-e < mu'_{j-1}.
inline std::vector<ZEdge> z_edges_from(const Partition& mu) {
    std::vector<ZEdge> out;
    const int m = mu.n();
    const int l = mu.length();
    const Partition muc = conjugate(mu);
    for (int e = m - 1; e >= m - l; --e) {
        const int t = m - 1 - e;
        int j = 2;
        while (muc.part(j) > t) ++j;
        auto parts = mu.parts();
        ++parts[static_cast<size_t>(muc.part(j))];  // row mu'_j + 1
        out.push_back(ZEdge{mu, Partition{std::move(parts)},
                            Poly::q_minus_one() * Poly::q_power(e), e + 1, true});
    }
    auto parts = mu.parts();
    parts.push_back(1);
    out.push_back(ZEdge{mu, Partition{std::move(parts)}, Poly::q_power(m - l), m - l, false});
    return out;
}

// Unique path in Z with the given flagged degree sequence.
inline ZPath path_from_flag_sequence(const std::vector<FlagStep>& steps) {
    ZPath path;
    Partition cur;
    for (size_t i = 0; i < steps.size(); ++i) {
        const int m = cur.n();
        const int l = cur.length();
        const auto& s = steps[i];
        const bool ok = s.has_rook ? (m - l + 1 <= s.degree && s.degree <= m)
                                   : (s.degree == m - l);
        if (!ok)
            throw std::invalid_argument("sequence not admissible at index " + std::to_string(i));
        for (auto& e : z_edges_from(cur)) {
            if (e.degree == s.degree && e.has_rook == s.has_rook) {
                cur = e.target;
                path.edges.push_back(std::move(e));
                break;
            }
        }
    }
    return path;
}

// Raw degrees suffice: a degree equal to |mu|-l(mu) can only be the
// first-column edge, anything larger only a rook edge.
inline ZPath path_from_degrees(const std::vector<int>& degrees) {
    std::vector<FlagStep> steps;
    Partition cur;
    for (size_t i = 0; i < degrees.size(); ++i) {
        const int base = cur.n() - cur.length();
        if (degrees[i] < base || degrees[i] > cur.n())
            throw std::invalid_argument("sequence not admissible at index " + std::to_string(i));
        steps.push_back({degrees[i], degrees[i] != base});
        cur = path_from_flag_sequence(steps).endpoint();
    }
    return path_from_flag_sequence(steps);
}

namespace detail {
inline void require_staircase(const RookPlacement& C) {
    if (!C.board().is_staircase())
        throw std::invalid_argument("placement must live on a staircase board");
}
}  // namespace detail

inline std::vector<FlagStep> placement_flag_sequence(const RookPlacement& C) {
    std::vector<FlagStep> steps;
    for (int j = 1; j <= C.board().num_columns(); ++j) {
        const Poly w = column_weight(C, j);
        steps.push_back({*w.degree(), C.rook_row(j) != 0});
    }
    return steps;
}

// Phi: the path whose edge weights are the column weights of C.
inline ZPath phi(const RookPlacement& C) {
    detail::require_staircase(C);
    ZPath path = path_from_flag_sequence(placement_flag_sequence(C));
    for (int j = 1; j <= C.board().num_columns(); ++j)
        if (path.edges[static_cast<size_t>(j - 1)].weight != column_weight(C, j))
            throw std::logic_error("edge weight does not match column weight");
    return path;
}

// Rebuild the unique placement with a given flagged column-degree sequence,
// column by column: a first-column edge appends an empty column; a rook
// edge of weight (q-1)q^{k-1+t} puts the rook in the t-th available square
// counted from the top.
inline RookPlacement placement_from_flag_sequence(const std::vector<FlagStep>& steps) {
    const int n = static_cast<int>(steps.size());
    std::vector<Square> rooks;
    std::vector<bool> row_used(static_cast<size_t>(n) + 1, false);
    int k = 0;
    for (int col = 1; col <= n; ++col) {
        const auto& s = steps[static_cast<size_t>(col - 1)];
        if (!s.has_rook) {
            if (s.degree != k)
                throw std::invalid_argument("sequence not admissible at index " +
                                            std::to_string(col - 1));
            continue;
        }
        const int t = s.degree - 1 - k;  // available-square index, top to bottom
        int row = 0, seen = 0;
        for (int r = 1; r < col; ++r) {
            if (row_used[static_cast<size_t>(r)]) continue;
            if (seen++ == t) {
                row = r;
                break;
            }
        }
        if (row == 0)
            throw std::invalid_argument("sequence not admissible at index " +
                                        std::to_string(col - 1));
        rooks.push_back(Square{row, col});
        row_used[static_cast<size_t>(row)] = true;
        ++k;
    }
    return RookPlacement{FerrersBoard::staircase(n), std::move(rooks)};
}

inline RookPlacement phi_inverse(const ZPath& path) {
    return placement_from_flag_sequence(path.flag_sequence());
}

// Partition type of a placement: the endpoint of Phi(C).
inline Partition partition_type(const RookPlacement& C) { return phi(C).endpoint(); }

// All placements on B_n of type lambda, by filtering C(B_n, n - l(lambda)).
inline std::vector<RookPlacement> placements_of_type(const Partition& lambda) {
    const int n = lambda.n();
    std::vector<RookPlacement> out;
    for (auto& C : enumerate_placements(FerrersBoard::staircase(n), n - lambda.length()))
        if (partition_type(C) == lambda) out.push_back(std::move(C));
    return out;
}

// Set partition of [n]; blocks listed largest first, ties broken by the
// smaller minimum.
class SetPartition {
public:
    explicit SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
        std::vector<int> all;
        for (auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("empty block");
            std::sort(b.begin(), b.end());
            all.insert(all.end(), b.begin(), b.end());
        }
        std::sort(all.begin(), all.end());
        for (size_t i = 0; i < all.size(); ++i)
            if (all[i] != static_cast<int>(i) + 1)
                throw std::invalid_argument("blocks must partition 1..n");
        normalize();
    }

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    int n() const {
        int s = 0;
        for (const auto& b : blocks_) s += static_cast<int>(b.size());
        return s;
    }
    Partition type() const {
        std::vector<int> sizes;
        for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
        std::sort(sizes.rbegin(), sizes.rend());
        return Partition{std::move(sizes)};
    }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    void normalize() {
        std::stable_sort(blocks_.begin(), blocks_.end(),
                         [](const auto& a, const auto& b) {
                             if (a.size() != b.size()) return a.size() > b.size();
                             return a.front() < b.front();
                         });
    }
    std::vector<std::vector<int>> blocks_;
};

// Flagged column-degree sequence of a set partition, from the weights of
// its restricted diagrams S^(1), ..., S^(n).
inline std::vector<FlagStep> set_partition_flag_sequence(const SetPartition& S) {
    const int n = S.n();
    std::vector<FlagStep> steps;
    std::vector<std::vector<int>> rows;  // S^(i-1) in convention order
    for (int i = 1; i <= n; ++i) {
        const std::vector<int>* home = nullptr;
        for (const auto& b : S.blocks())
            if (std::find(b.begin(), b.end(), i) != b.end()) home = &b;
        const int u = home->front();
        if (u == i) {
            steps.push_back({i - 1 - static_cast<int>(rows.size()), false});
            rows.push_back({i});
        } else {
            int r = 0;
            for (size_t j = 0; j < rows.size(); ++j)
                if (rows[j].front() == u) r = static_cast<int>(j) + 1;
            steps.push_back({i - r, true});  // weight (q-1)q^{i-1-r}
            rows[static_cast<size_t>(r - 1)].push_back(i);
        }
        std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a.front() < b.front();
        });
    }
    return steps;
}

// F_S(q): product over i of q^{i-1-l(S^(i-1))} for first-column boxes and
// (q-1)q^{i-1-r} otherwise.
inline Poly set_partition_weight(const SetPartition& S) {
    Poly w{Int{1}};
    for (const auto& s : set_partition_flag_sequence(S)) {
        if (s.has_rook)
            w *= Poly::q_minus_one() * Poly::q_power(s.degree - 1);
        else
            w *= Poly::q_power(s.degree);
    }
    return w;
}

// Build a set partition from a flagged degree sequence: insert i into block
// j = i - d_i of the current diagram (j = l+1 starts a new block).
inline SetPartition set_partition_from_flag_sequence(const std::vector<FlagStep>& steps) {
    std::vector<std::vector<int>> rows;
    for (size_t idx = 0; idx < steps.size(); ++idx) {
        const int i = static_cast<int>(idx) + 1;
        const int j = i - steps[idx].degree;
        const int m = static_cast<int>(rows.size());
        const bool ok = steps[idx].has_rook ? (1 <= j && j <= m) : (j == m + 1);
        if (!ok)
            throw std::invalid_argument("sequence not admissible at index " + std::to_string(idx));
        if (j == m + 1)
            rows.push_back({i});
        else
            rows[static_cast<size_t>(j - 1)].push_back(i);
        std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a.front() < b.front();
        });
    }
    return SetPartition{std::move(rows)};
}

// Psi: insert i into the block selected by the degree of the ith column.
inline SetPartition psi(const RookPlacement& C) {
    detail::require_staircase(C);
    return set_partition_from_flag_sequence(placement_flag_sequence(C));
}

inline RookPlacement psi_inverse(const SetPartition& S) {
    return placement_from_flag_sequence(set_partition_flag_sequence(S));
}

// The classical bijection: i and j share a block iff a rook sits at (i,j).
inline SetPartition classical_bijection(const RookPlacement& C) {
    detail::require_staircase(C);
    const int n = C.board().num_columns();
    std::vector<int> parent(static_cast<size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    for (const auto& r : C.rooks()) parent[static_cast<size_t>(find(r.row))] = find(r.col);
    std::map<int, std::vector<int>> groups;
    for (int i = 1; i <= n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, members] : groups) blocks.push_back(std::move(members));
    return SetPartition{std::move(blocks)};
}

// All set partitions whose Psi-preimage has partition type lambda.
inline std::vector<SetPartition> set_partitions_of_type(const Partition& lambda) {
    std::vector<SetPartition> out;
    for (const auto& C : placements_of_type(lambda)) out.push_back(psi(C));
    return out;
}

}  // namespace qjordan
