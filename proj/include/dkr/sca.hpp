#pragma once

// The D_n^(1) soliton cellular automaton on (B^{2,1})^{(x) L}: carrier sweeps
// T_l and T_natural, state energy, soliton detection and labels, the label
// R-matrix with the shifted energy, and the two-soliton scattering experiment.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dkr/crystal.hpp"
#include "dkr/rmatrix.hpp"
#include "dkr/tableau.hpp"

namespace dkr {

struct ScaState {
    int n = 4;
    std::vector<Tableau> cells;
    friend bool operator==(const ScaState&, const ScaState&) = default;
};

// Validates every cell in B^{2,1} and that the last cell is u_1.
ScaState make_state(int n, std::vector<Tableau> cells);
ScaState vacuum(int n, std::size_t length);
bool is_vacuum(const ScaState& p);
// Appends `extra` vacuum cells on the right.
ScaState pad(const ScaState& p, std::size_t extra);

// The memoized R on B^{2,l} (x) B^{2,1} shared by every sweep with carrier l.
B2sB21R carrier_r(int n, int l);

struct Sweep {
    ScaState next;
    int energy = 0;  // E_l of the input state
};

// One step of T_l. Throws BoundaryError if the outgoing carrier is not u_l.
Sweep evolve(const ScaState& p, int l);
// E_l(p). Activity that reaches the right edge is followed into implicit vacuum.
int state_energy(const ScaState& p, int l);

struct NaturalSweep {
    ScaState next;
    Letter emitted = 1;  // b(p)
};
NaturalSweep evolve_natural(const ScaState& p);

// Classical e_i / f_i on a state by the signature rule over its cells.
std::optional<ScaState> state_e(int i, const ScaState& p);
std::optional<ScaState> state_f(int i, const ScaState& p);

// Soliton payloads, in the coordinates used to print labels:
//   top  = (x_1, x_2) in the A_1 crystal Bhat^{1,s} for every n;
//   rest = {y, x}, two A_1 rows (n = 4);
//          the 2 x 4 coordinate matrix of a 2 x s tableau over {1..4} (n = 5);
//          {coordinates of B^{1,s} for D_{n-2}} (n > 5).
struct SolitonPayload {
    std::vector<int> top;
    std::vector<std::vector<int>> rest;
    friend auto operator<=>(const SolitonPayload&, const SolitonPayload&) = default;
};

int payload_length(const SolitonPayload& b);
bool payload_valid(const SolitonPayload& b, int n);
std::string format_payload(const SolitonPayload& b);  // "((3,0),(0,3),(2,1))"

// i_s and its inverse. i_s_inverse throws DomainError unless the cells form a soliton.
std::vector<Tableau> i_s(const SolitonPayload& b, int n);
SolitonPayload i_s_inverse(const std::vector<Tableau>& cells, int n);
// Top row 2's then 1's, bottom letters weakly decreasing and outside {1, 2, 2bar, 1bar}.
bool is_soliton_pattern(const std::vector<Tableau>& cells, int n);

struct Soliton {
    int position = 0;  // number of cells to the left
    SolitonPayload payload;
    int length() const { return payload_length(payload); }
    friend bool operator==(const Soliton&, const Soliton&) = default;
};

struct Detection {
    std::vector<Soliton> solitons;
    bool clean = true;    // every non-vacuum run is a soliton
    std::string problem;  // first offending run when not clean
};
Detection detect_solitons(const ScaState& p);

using Label = Affine<SolitonPayload>;
// z^{min(r, s) t - position}
Label label_of(const Soliton& s, int r, int t);
std::string format_label(const Label& x);

// R on the label crystals (componentwise A-type R, and the one-row D_{n-2} R for
// n > 5). `first` is the image of b2, `second` the image of b1.
struct PayloadImage {
    SolitonPayload first;
    SolitonPayload second;
    int energy = 0;  // H^(b1 (x) b2)
};
PayloadImage r_payload(const SolitonPayload& b1, const SolitonPayload& b2, int n);
// H~ = 2 s_2 + H^ with s_2 the length of b2.
int shifted_energy(const SolitonPayload& b1, const SolitonPayload& b2, int n);
std::pair<Label, Label> r_aff_labels(const Label& x, const Label& y, int n);

struct ScatterReport {
    int n = 4;
    int carrier = 0;
    std::pair<Label, Label> initial;
    std::pair<Label, Label> predicted;
    std::pair<Label, Label> observed;
    int separated_at = -1;  // first t of the two confirming steps is separated_at - 1
    int shift_slow = 0;     // k_2' - k_2
    int shift_fast = 0;     // k_1 - k_1'
    std::vector<ScaState> trace;
    bool matches() const { return predicted == observed && shift_slow == shift_fast; }
};

// Evolves a two-soliton state (longer soliton on the left) under T_r until two
// consecutive steps show the solitons separated in swapped order, with equal
// labels. Throws DomainError for a bad initial state or no separation by t_max,
// and BoundaryError if the activity reaches the right edge.
ScatterReport scatter_experiment(const ScaState& p, int r, int t_max);

// Two lines of space separated letters ("-3" for 3bar). Empty cells print as
// "e" and are accepted on input only when allow_empty is set.
std::string format_state(const ScaState& p);
ScaState parse_state(const std::string& text, int n, bool allow_empty = false);

struct Trace {
    int n = 4;
    int carrier = 1;
    std::vector<ScaState> states;  // t = 0, 1, ...
    std::vector<int> energies;     // E_carrier of each state
};
Trace run_trace(const ScaState& p, int l, int steps);
// {n, L, carrier, steps: [{t, cells: [[top, bottom] or []], energy}]}
std::string trace_to_json(const Trace& tr);
Trace trace_from_json(const std::string& text);

}  // namespace dkr
