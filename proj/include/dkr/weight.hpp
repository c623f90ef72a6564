#pragma once

#include <string>
#include <vector>

namespace dkr {

// Integral weight written in the fundamental-weight basis Lambda_0..Lambda_r.
// The coefficient c[i] is the pairing <h_i, wt>.
struct Weight {
    std::vector<int> c;

    Weight() = default;
    explicit Weight(std::size_t size) : c(size, 0) {}
    explicit Weight(std::vector<int> coeffs) : c(std::move(coeffs)) {}

    std::size_t size() const { return c.size(); }
    int operator[](std::size_t i) const { return c[i]; }
    int& operator[](std::size_t i) { return c[i]; }

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a);
    friend bool operator==(const Weight&, const Weight&) = default;

    std::string str() const;
};

// Generalized Cartan matrix of D_n^(1), rows/cols indexed 0..n, a[i][j] = <h_i, alpha_j>.
std::vector<std::vector<int>> cartan_d(int n);

// Generalized Cartan matrix of A_{m-1}^(1) (indices 0..m-1), m >= 2.
std::vector<std::vector<int>> cartan_a(int m);

// alpha_j expressed in the Lambda basis: column j of the Cartan matrix.
Weight simple_root(const std::vector<std::vector<int>>& cartan, int j);

// Level of a D_n^(1) weight, the pairing with the canonical central element.
int level_d(const Weight& w);

}  // namespace dkr
