#pragma once

#include <cstddef>
#include <vector>

namespace digraphon {

// Dense row-major matrix of doubles. Deliberately minimal: the library's
// matrices are small (desk-scale digraphs, snapshots, oracles).
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> v;

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, fill) {}

    double& at(int i, int j) { return v[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return v[static_cast<std::size_t>(i) * cols + j]; }

    bool square() const { return rows == cols; }

    double total() const {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.v == b.v;
    }
};

}  // namespace digraphon
