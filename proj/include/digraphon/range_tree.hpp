#pragma once

#include <span>
#include <utility>
#include <vector>

namespace digraphon {

// Segment tree over a fixed-size array of doubles supporting range multiply
// and range sum in O(log n) via lazy propagation.
//
// Each logical node covers an inclusive 1-based range [low, high] and stores
//   sum  - exact sum of the values in its range
//   mult - multiplicand applied to this node's sum but not yet pushed to
//          its children (neutral value 1; always 1 on leaves)
// Children split the range at mid = (low + high) / 2. The tree is a complete
// recursive structure of exactly 2n-1 nodes laid out in preorder, so child
// positions are computed from the parent's range instead of being stored.
//
// Single writer only: range_sum pushes pending multiplicands down, so even
// reads are writer-exclusive. A tree may be moved between threads.
class RangeTree {
public:
    // Builds from explicit values. Throws std::invalid_argument("empty array").
    explicit RangeTree(std::span<const double> values);

    // Builds a tree of `n` copies of `fill`.
    RangeTree(int n, double fill);

    int size() const { return n_; }

    // Multiplies every value in [l, r] (1-based, inclusive) by c.
    void lazy_multiply(int l, int r, double c);

    // Sum of values in [l, r]. Mutates pending multiplicands, never values.
    double lazy_sum(int l, int r);

    // Sum over the full range; always current at the root.
    double total() const { return sum_[0]; }

    // Current values, left to right. Pure: pending state is left untouched.
    std::vector<double> to_values() const;

    // Nodes visited by the most recent lazy_multiply/lazy_sum, counting every
    // node at which the recursion ran, including no-op disjoint checks.
    long last_op_visits() const { return visits_; }

    // Ranges of the nodes where the last operation's recursion terminated
    // with full containment.
    const std::vector<std::pair<int, int>>& last_op_terminals() const { return terminals_; }

    // Debug validator: leaf multiplicands are neutral and every node's sum
    // matches the recomputed sum of its leaves within `tol` (relative).
    bool check_invariants(double tol = 1e-12) const;

private:
    void build(std::size_t idx, int lo, int hi, const double* values, double fill);
    void push_down(std::size_t idx, int lo, int hi, int mid);
    void multiply_rec(std::size_t idx, int lo, int hi, int l, int r, double c);
    double sum_rec(std::size_t idx, int lo, int hi, int l, int r);
    void values_rec(std::size_t idx, int lo, int hi, double factor, std::vector<double>& out) const;
    double check_rec(std::size_t idx, int lo, int hi, double factor, double tol, bool& ok) const;
    void require_range(int l, int r) const;

    // Preorder layout: left child of (idx, [lo, hi]) sits at idx + 1 over
    // [lo, mid]; the right child at idx + 2 * (mid - lo + 1) over [mid+1, hi].
    static std::size_t left_of(std::size_t idx) { return idx + 1; }
    static std::size_t right_of(std::size_t idx, int lo, int mid) {
        return idx + 2 * static_cast<std::size_t>(mid - lo + 1);
    }

    int n_ = 0;
    std::vector<double> sum_;
    std::vector<double> mult_;
    long visits_ = 0;
    std::vector<std::pair<int, int>> terminals_;
};

}  // namespace digraphon
