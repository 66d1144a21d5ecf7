#include "digraphon/range_tree.hpp"

#include <cmath>
#include <stdexcept>

namespace digraphon {

RangeTree::RangeTree(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("empty array");
    n_ = static_cast<int>(values.size());
    sum_.resize(2 * static_cast<std::size_t>(n_) - 1);
    mult_.resize(sum_.size());
    build(0, 1, n_, values.data(), 0.0);
}

RangeTree::RangeTree(int n, double fill) {
    if (n < 1) throw std::invalid_argument("empty array");
    n_ = n;
    sum_.resize(2 * static_cast<std::size_t>(n_) - 1);
    mult_.resize(sum_.size());
    build(0, 1, n_, nullptr, fill);
}

void RangeTree::build(std::size_t idx, int lo, int hi, const double* values, double fill) {
    mult_[idx] = 1.0;
    if (lo == hi) {
        sum_[idx] = values ? values[lo - 1] : fill;
        return;
    }
    int mid = (lo + hi) / 2;
    std::size_t l = left_of(idx);
    std::size_t r = right_of(idx, lo, mid);
    build(l, lo, mid, values, fill);
    build(r, mid + 1, hi, values, fill);
    sum_[idx] = sum_[l] + sum_[r];
}

void RangeTree::require_range(int l, int r) const {
    if (l < 1 || r > n_ || l > r) throw std::out_of_range("range out of bounds");
}

void RangeTree::push_down(std::size_t idx, int lo, int hi, int mid) {
    double m = mult_[idx];
    if (m == 1.0) return;
    std::size_t lc = left_of(idx);
    std::size_t rc = right_of(idx, lo, mid);
    sum_[lc] *= m;
    sum_[rc] *= m;
    if (lo != mid) mult_[lc] *= m;        // leaves keep a neutral multiplicand
    if (mid + 1 != hi) mult_[rc] *= m;
    mult_[idx] = 1.0;
}

void RangeTree::lazy_multiply(int l, int r, double c) {
    require_range(l, r);
    if (!std::isfinite(c)) throw std::invalid_argument("multiplicand must be finite");
    visits_ = 0;
    terminals_.clear();
    multiply_rec(0, 1, n_, l, r, c);
}

void RangeTree::multiply_rec(std::size_t idx, int lo, int hi, int l, int r, double c) {
    ++visits_;
    if (lo > r || hi < l) return;
    if (lo >= l && hi <= r) {
        terminals_.emplace_back(lo, hi);
        sum_[idx] *= c;
        if (lo != hi) mult_[idx] *= c;
        return;
    }
    int mid = (lo + hi) / 2;
    push_down(idx, lo, hi, mid);
    std::size_t lc = left_of(idx);
    std::size_t rc = right_of(idx, lo, mid);
    multiply_rec(lc, lo, mid, l, r, c);
    multiply_rec(rc, mid + 1, hi, l, r, c);
    sum_[idx] = sum_[lc] + sum_[rc];
}

double RangeTree::lazy_sum(int l, int r) {
    require_range(l, r);
    visits_ = 0;
    terminals_.clear();
    return sum_rec(0, 1, n_, l, r);
}

double RangeTree::sum_rec(std::size_t idx, int lo, int hi, int l, int r) {
    ++visits_;
    if (lo > r || hi < l) return 0.0;
    if (lo >= l && hi <= r) {
        terminals_.emplace_back(lo, hi);
        return sum_[idx];
    }
    int mid = (lo + hi) / 2;
    push_down(idx, lo, hi, mid);
    return sum_rec(left_of(idx), lo, mid, l, r) + sum_rec(right_of(idx, lo, mid), mid + 1, hi, l, r);
}

std::vector<double> RangeTree::to_values() const {
    std::vector<double> out(static_cast<std::size_t>(n_));
    values_rec(0, 1, n_, 1.0, out);
    return out;
}

void RangeTree::values_rec(std::size_t idx, int lo, int hi, double factor, std::vector<double>& out) const {
    if (lo == hi) {
        out[static_cast<std::size_t>(lo) - 1] = sum_[idx] * factor;
        return;
    }
    int mid = (lo + hi) / 2;
    double f = factor * mult_[idx];
    values_rec(left_of(idx), lo, mid, f, out);
    values_rec(right_of(idx, lo, mid), mid + 1, hi, f, out);
}

bool RangeTree::check_invariants(double tol) const {
    bool ok = true;
    check_rec(0, 1, n_, 1.0, tol, ok);
    return ok;
}

double RangeTree::check_rec(std::size_t idx, int lo, int hi, double factor, double tol, bool& ok) const {
    if (lo == hi) {
        if (mult_[idx] != 1.0) ok = false;
        return sum_[idx] * factor;
    }
    int mid = (lo + hi) / 2;
    double f = factor * mult_[idx];
    double leaves = check_rec(left_of(idx), lo, mid, f, tol, ok) +
                    check_rec(right_of(idx, lo, mid), mid + 1, hi, f, tol, ok);
    double node = sum_[idx] * factor;
    double scale = std::max({std::fabs(leaves), std::fabs(node), 1.0});
    if (std::fabs(leaves - node) > tol * scale) ok = false;
    return leaves;
}

}  // namespace digraphon
