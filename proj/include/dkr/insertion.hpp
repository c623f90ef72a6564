#pragma once

// Type D column insertion (with the xi bumping map and pair removal), its
// reverse, the oscillating-tableau recording, and type A row insertion.

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dkr/letter.hpp"
#include "dkr/one_row.hpp"

namespace dkr {

using KNColumn = std::vector<Letter>;   // top to bottom
using KNTableau = std::vector<KNColumn>;  // columns left to right

// Every branch of the xi table that fires on x (x) y (x) z.
std::vector<std::tuple<Letter, Letter, Letter>> xi_branches(Letter x, Letter y, Letter z, int n);
// xi itself: throws DomainError unless the firing branches agree on one image.
std::tuple<Letter, Letter, Letter> xi(Letter x, Letter y, Letter z, int n);

struct ColumnInsertion {
    enum class Kind { append, remove, bump };
    Kind kind;
    KNColumn column;  // the new column (for remove: the letters left over)
    Letter bumped = 0;
    friend bool operator==(const ColumnInsertion&, const ColumnInsertion&) = default;
};

ColumnInsertion insert_column(Letter b, const KNColumn& c, int n);
KNTableau insert(Letter b, const KNTableau& t, int n);
KNTableau insert_word(const Word& w, int n, KNTableau t = {});

// Reverse column insertion: delete the bottom box of column j and push its
// letter back out through columns j-1, ..., 0. Returns the letter ejected.
Letter remove_box(KNTableau& t, std::size_t j, int n);

std::vector<int> shape(const KNTableau& t);          // column heights
std::vector<int> row_lengths(const std::vector<int>& column_heights);
Word kn_reading(const KNTableau& t);                  // columns right to left, top to bottom

struct OscStep {
    std::vector<int> shape;  // column heights
    int flag = 0;            // -1, 0 or +1
    friend bool operator==(const OscStep&, const OscStep&) = default;
};
using OscTableau = std::vector<OscStep>;

int height_n_flag(const KNTableau& t, int n);
std::pair<KNTableau, OscTableau> word_to_pq(const Word& w, int n);
Word hw_word_from_q(const OscTableau& q, int n);
// Inverse of word_to_pq: transports the highest weight word of Q along the
// classical e-path of P. Throws DomainError if (P, Q) is not a valid pair.
Word pq_to_word(const KNTableau& p, const OscTableau& q, int n);

std::string format_kn(const KNTableau& t);

// Type A: ordinary row bumping on tableaux over {1..m} (rows top first).
ATableau a_row_insert(int v, ATableau t);
// Western row word: rows bottom to top, each left to right.
std::vector<int> a_western_word(const ATableau& t);
// row(T) -> T': the western word of T inserted into T'.
ATableau row_insert_a(const ATableau& t, const ATableau& tp);

// Bhat^{r,s} (x) Bhat^{r',s'} -> Bhat^{r',s'} (x) Bhat^{r,s} and its energy.
std::pair<ATableau, ATableau> r_hat(const ATableau& t, const ATableau& tp, int m);
int h_hat(const ATableau& t, const ATableau& tp);

}  // namespace dkr
