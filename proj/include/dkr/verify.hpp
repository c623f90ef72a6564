#pragma once

// Invariant suites shared by the command line tool and the acceptance runner.
// Each suite counts individual checks and failures and keeps the first few
// failure descriptions.

#include <cstddef>
#include <string>
#include <vector>

namespace dkr {

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;

    bool ok() const { return failures == 0 && checks > 0; }
    void check(bool pass, const std::string& what);
    void absorb(const SuiteResult& other);
    std::string summary() const;  // "name: 123 checks, 0 failures"
};

// Exhaustive suites refuse ranks above 6 and capacities above 3.
inline constexpr int kMaxRank = 6;
inline constexpr int kMaxCapacity = 3;
void check_caps(int n, int s);

// The seven crystal axioms with all indices on B^{2,s} and B^{1,s}.
SuiteResult verify_axioms(int n, int s);
// sigma is an involution commuting with e_i (i >= 2); closed-form 0-strings
// agree with iterated e_0/f_0.
SuiteResult verify_sigma(int n, int s);
// (P, Q) round trip, Q invariant under f_i, highest weight words, on all words
// of length at most max_len.
SuiteResult verify_insertion(int n, int max_len);
// Hand-coded R and H on B^{2,s} (x) B^{2,1} and R on B^{1,1} (x) B^{2,1}
// against the brute-force isomorphism and 0-arrow energy propagation.
SuiteResult verify_rmatrix(int n, int s);
// Exhaustive Yang-Baxter on B^{2,s} (x) B^{2,1} (x) B^{2,1} and
// B^{1,1} (x) B^{1,1} (x) B^{1,s}.
SuiteResult verify_yang_baxter(int n, int s);
// E_1 = 1 exactly on one-soliton patterns, over states with at most two
// non-vacuum cells on `length` cells.
SuiteResult verify_soliton_energy(int n, int length);
// A length-3 soliton under T_k (k = 1..5) advances by min(k, 3) per step.
SuiteResult verify_soliton_speed(int n);
// Both of the above.
SuiteResult verify_solitons(int n, int length);
// T_natural T_r = T_r T_natural and commutation of T_r with e_i, f_i
// (i not 0, 2) with E_r preserved, on `samples` random states.
SuiteResult verify_commutation(int n, std::size_t samples, unsigned seed);
// The printed scattering example for n in {4, 5, 6}: trace and outgoing labels.
SuiteResult verify_scattering(int n);

}  // namespace dkr
