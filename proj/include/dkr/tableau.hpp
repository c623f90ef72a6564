#pragma once

// Two-row tableaux: the elements of B^{2,s} = B(0) + B(Lambda_2) + ... + B(s Lambda_2).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dkr/letter.hpp"
#include "dkr/weight.hpp"

namespace dkr {

struct Column {
    Letter top = 0;
    Letter bottom = 0;
    friend auto operator<=>(const Column&, const Column&) = default;
};

std::ostream& operator<<(std::ostream& os, const Column& c);  // "(top,bottom)"

// Columns left to right. The empty tableau is the element "e" of B^{2,s}.
using Tableau = std::vector<Column>;

bool valid_column(const Column& c, int n);
// Membership in B(k Lambda_2) with k = T.size(), and k <= s when s >= 0.
bool validate_b2(const Tableau& t, int n, int s = -1);

// All elements of B(k Lambda_2), lexicographically sorted. Cached per (n, k).
const std::vector<Tableau>& level_elements(int k, int n);
// All elements of B^{2,s}, by increasing level.
std::vector<Tableau> b2s_elements(int n, int s);

// Columns right to left, each top then bottom.
Word reading(const Tableau& t);
Tableau unread(const Word& w);

std::optional<Tableau> classical_e(int i, const Tableau& t, int n);
std::optional<Tableau> classical_f(int i, const Tableau& t, int n);
int classical_eps(int i, const Tableau& t, int n);
int classical_phi(int i, const Tableau& t, int n);
Weight tableau_wt(const Tableau& t, int n);

Tableau u(int k);             // k columns (1,2)
Tableau null_config(int k);   // the energy-neutral filler N_k
Tableau make_tableau(const Word& top, const Word& bottom);

// Text form "12/2-2": top row letters, '/', bottom row letters; "e" is empty.
std::string format_tableau(const Tableau& t);
Tableau parse_tableau(const std::string& s);

}  // namespace dkr
