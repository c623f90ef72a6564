#pragma once

// B^{1,s} for D_n^(1) in coordinates (x_1..x_n, xbar_n..xbar_1), and the A-type
// crystals used for soliton labels: one-row Bhat^{1,s} in coordinates and
// rectangular semistandard tableaux over {1..m}.

#include <optional>
#include <string>
#include <vector>

#include "dkr/letter.hpp"
#include "dkr/weight.hpp"

namespace dkr {

// Coordinates: index 0..n-1 hold x_1..x_n, index n..2n-1 hold xbar_n..xbar_1.
using OneRow = std::vector<int>;

class OneRowCrystal {
public:
    using value_type = OneRow;
    OneRowCrystal(int n, int s);
    int rank() const { return n_; }
    int capacity() const { return s_; }
    std::vector<int> indices() const;
    Weight simple_root(int i) const;
    std::optional<OneRow> e(int i, const OneRow& b) const;
    std::optional<OneRow> f(int i, const OneRow& b) const;
    int eps(int i, const OneRow& b) const;
    int phi(int i, const OneRow& b) const;
    Weight wt(const OneRow& b) const;
    std::vector<OneRow> elements() const;
    bool contains(const OneRow& b) const;
    OneRow highest() const;  // (s, 0, ..., 0)

private:
    int n_;
    int s_;
    std::vector<std::vector<int>> cartan_;
};

int& x_of(OneRow& b, int i, int n);       // x_i
int& xbar_of(OneRow& b, int i, int n);    // xbar_i
int x_of(const OneRow& b, int i, int n);
int xbar_of(const OneRow& b, int i, int n);

// The weakly increasing row 1^{x_1} 2^{x_2} ... -1^{xbar_1} and back.
Word one_row_letters(const OneRow& b, int n);
OneRow one_row_from_letters(const Word& w, int n);

std::string format_one_row(const OneRow& b);  // "0,1,1,1,0,1,0,1"
OneRow parse_one_row(const std::string& s);

// Bhat^{1,s} of A_{m-1}^(1): coordinates (x_1..x_m) summing to s.
class AOneRowCrystal {
public:
    using value_type = std::vector<int>;
    AOneRowCrystal(int m, int s);
    int letters() const { return m_; }
    std::vector<int> indices() const;
    Weight simple_root(int i) const;
    std::optional<value_type> e(int i, const value_type& x) const;
    std::optional<value_type> f(int i, const value_type& x) const;
    int eps(int i, const value_type& x) const;
    int phi(int i, const value_type& x) const;
    Weight wt(const value_type& x) const;
    std::vector<value_type> elements() const;

private:
    int m_;
    int s_;
    std::vector<std::vector<int>> cartan_;
};

// Rectangular semistandard tableau over {1..m}, stored row by row (top first).
using ATableau = std::vector<std::vector<int>>;

bool a_valid(const ATableau& t, int m);
std::vector<ATableau> a_rectangles(int r, int s, int m);  // all r x s tableaux
// Middle-Eastern row word: each row right to left, rows top to bottom.
std::vector<int> a_row_word(const ATableau& t);
// Classical operators e_i, f_i (1 <= i < m) through the row word.
std::optional<ATableau> a_e(int i, const ATableau& t);
std::optional<ATableau> a_f(int i, const ATableau& t);
// Coordinate matrix x_{i,j} = number of j's in row i.
std::vector<std::vector<int>> a_coordinates(const ATableau& t, int m);
ATableau a_from_coordinates(const std::vector<std::vector<int>>& x);
std::vector<int> a_one_row_coords(const std::vector<int>& row, int m);

}  // namespace dkr
