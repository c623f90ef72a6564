#pragma once

// The D_n alphabet 1 < 2 < ... < n-1 < {n, -n} < -(n-1) < ... < -1 and the
// crystal B^{1,1} on it. A letter is a nonzero int; -i stands for i-bar.

#include <optional>
#include <string>
#include <vector>

#include "dkr/weight.hpp"

namespace dkr {

using Letter = int;
using Word = std::vector<Letter>;

enum class Order { less, equal, greater, incomparable };

int letter_key(Letter a, int n);
Order compare(Letter a, Letter b, int n);
bool leq(Letter a, Letter b, int n);
bool lt(Letter a, Letter b, int n);
inline Letter bar(Letter a) { return -a; }

// Step a letter one index away from 1 (plus1) or toward 1 (minus1), keeping its bar:
// 3 -> 4, -3 -> -4 and back.
inline Letter plus1(Letter a) { return a > 0 ? a + 1 : a - 1; }
inline Letter minus1(Letter a) { return a > 0 ? a - 1 : a + 1; }

std::vector<Letter> alphabet(int n);
bool is_letter(Letter a, int n);

std::string letter_str(Letter a);            // "3", "-3"
Letter parse_letter(const std::string& s);   // inverse of letter_str

// Crystal operators on single letters, i in 0..n (i = 0 is the B^{1,1} action).
std::optional<Letter> letter_e(int i, Letter b, int n);
std::optional<Letter> letter_f(int i, Letter b, int n);
int letter_eps(int i, Letter b, int n);
int letter_phi(int i, Letter b, int n);
Weight letter_wt(Letter b, int n);  // level-zero affine weight

// Words are tensor products of letters read left to right.
std::optional<Word> word_e(int i, const Word& w, int n);
std::optional<Word> word_f(int i, const Word& w, int n);
int word_eps(int i, const Word& w, int n);
int word_phi(int i, const Word& w, int n);
Weight word_wt(const Word& w, int n);
bool word_is_highest(const Word& w, int n);  // all classical e_i absent

std::string word_str(const Word& w);

// B^{1,1} as a Crystal.
class LetterCrystal {
public:
    using value_type = Letter;
    explicit LetterCrystal(int n);
    int rank() const { return n_; }
    std::vector<int> indices() const;
    Weight simple_root(int i) const;
    std::optional<Letter> e(int i, Letter b) const { return letter_e(i, b, n_); }
    std::optional<Letter> f(int i, Letter b) const { return letter_f(i, b, n_); }
    int eps(int i, Letter b) const { return letter_eps(i, b, n_); }
    int phi(int i, Letter b) const { return letter_phi(i, b, n_); }
    Weight wt(Letter b) const { return letter_wt(b, n_); }
    std::vector<Letter> elements() const { return alphabet(n_); }

private:
    int n_;
    std::vector<std::vector<int>> cartan_;
};

}  // namespace dkr
