#pragma once

// The 0-action on B^{2,s}: iota maps between levels, psi, the *BC duality,
// the automorphism sigma, and e_0/f_0 as sigma-conjugates of e_1/f_1.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "dkr/tableau.hpp"

namespace dkr {

// iota_k^{k+1} on B(k Lambda_2), total.
Tableau iota_up(const Tableau& t, int n);
// iota_{k+1}^k: the preimage under iota_up if it exists, otherwise absent.
std::optional<Tableau> iota_down(const Tableau& t, int n);
// iota_j^k, chaining the one-step maps; levels may be 0.
std::optional<Tableau> iota(int j, int k, const Tableau& t, int n);
// min { j : iota_k^j(T) present } with k = T.size().
int min_level(const Tableau& t, int n);

// psi on B(l Lambda_2), for T at its minimal level with at least one top entry 1.
Tableau psi(const Tableau& t, int n);
// Inverse of psi, looked up in a table over the domain psi is invoked on.
Tableau psi_inverse(const Tableau& t, int n);

Tableau star_bc(const Tableau& t, int n);
Tableau sigma(const Tableau& t, int n, int s);

std::optional<Tableau> e0(const Tableau& t, int n, int s);
std::optional<Tableau> f0(const Tableau& t, int n, int s);
int eps0(const Tableau& t, int n, int s);
int phi0(const Tableau& t, int n, int s);

// The closed-form 0-strings of single columns and of the tableau 1-2bar / 3-1bar.
struct ZeroString {
    std::vector<Tableau> f;  // f_0^j T for j = 1, 2, ... until absent
    std::vector<Tableau> e;  // e_0^j T likewise
};
ZeroString zero_string_closed_form(const Tableau& t, int n, int s);

// B^{2,s} with the full index set {0, ..., n}. Copies share a sigma cache.
class KRCrystal {
public:
    using value_type = Tableau;
    KRCrystal(int n, int s);
    int rank() const { return n_; }
    int capacity() const { return s_; }
    std::vector<int> indices() const;
    Weight simple_root(int i) const;
    std::optional<Tableau> e(int i, const Tableau& t) const;
    std::optional<Tableau> f(int i, const Tableau& t) const;
    int eps(int i, const Tableau& t) const;
    int phi(int i, const Tableau& t) const;
    Weight wt(const Tableau& t) const { return tableau_wt(t, n_); }
    std::vector<Tableau> elements() const { return b2s_elements(n_, s_); }
    bool contains(const Tableau& t) const { return validate_b2(t, n_, s_); }
    const Tableau& sigma_of(const Tableau& t) const;

private:
    struct Cache {
        std::mutex mu;
        std::map<Tableau, Tableau> sigma;
    };
    int n_;
    int s_;
    std::vector<std::vector<int>> cartan_;
    std::shared_ptr<Cache> cache_;
};

}  // namespace dkr
