#pragma once

// Combinatorial R-matrices and energies: B^{2,s} (x) B^{2,1} through highest
// weight tables and insertion, B^{1,1} (x) B^{2,1}, B^{1,s} (x) B^{1,s'} by
// column insertion, the affinized R, and a Yang-Baxter checker.

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "dkr/crystal.hpp"
#include "dkr/insertion.hpp"
#include "dkr/one_row.hpp"
#include "dkr/tableau.hpp"

namespace dkr {

// R(u_k (x) b) for a classical highest weight vector u_k (x) b of B^{2,s} (x) B^{2,1}.
// Throws DomainError if (k, b) is not in the table.
std::pair<Tableau, Tableau> r_b2s_b21_hw(int k, const Tableau& b, int n, int s);
// H(u_k (x) b), normalized by H(u_s (x) u_1) = 0.
int h_b2s_b21_hw(int k, const Tableau& b, int n, int s);

struct RImage {
    Tableau first;   // in B^{2,1}
    Tableau second;  // in B^{2,s}
    int energy = 0;  // H of the argument
    friend bool operator==(const RImage&, const RImage&) = default;
};

// The highest weight vector u_k (x) b in the classical component of T (x) T'.
std::pair<int, Tableau> b2s_b21_highest(const Tableau& t, const Tableau& tp, int n);

// General R on B^{2,s} (x) B^{2,1}: insert, read the highest weight, apply the
// table, rebuild from (P, Q'). Throws DomainError on invalid input.
RImage r_b2s_b21(const Tableau& t, const Tableau& tp, int n, int s);

// Memoized R on B^{2,s} (x) B^{2,1} with an inverse built from the full bijection.
// Copies share the cache.
class B2sB21R {
public:
    B2sB21R(int n, int s);
    int rank() const { return n_; }
    int capacity() const { return s_; }
    const RImage& operator()(const Tableau& t, const Tableau& tp) const;
    // Preimage of T~' (x) T~ in B^{2,1} (x) B^{2,s}; the energy field holds H of the preimage.
    RImage inverse(const Tableau& first, const Tableau& second) const;

private:
    struct Cache {
        std::mutex mu;
        std::map<std::pair<Tableau, Tableau>, RImage> fwd;
        std::map<std::pair<Tableau, Tableau>, std::pair<Tableau, Tableau>> inv;
        bool inverse_built = false;
    };
    int n_;
    int s_;
    std::shared_ptr<Cache> cache_;
};

// B^{1,1} (x) B^{2,1} -> B^{2,1} (x) B^{1,1}.
std::pair<Tableau, Letter> r_b11_b21_hw(const Tableau& t, int n);  // argument 1 (x) t
std::pair<Tableau, Letter> r_b11_b21(Letter b, const Tableau& t, int n);

// B^{1,s} (x) B^{1,s'} -> B^{1,s'} (x) B^{1,s}, and its energy.
struct OneRowImage {
    OneRow first;
    OneRow second;
    int energy = 0;
};
OneRowImage r_one_row(const OneRow& b, const OneRow& bp, int n);

// z^m b (x) z^n b' -> z^{n+H} b~' (x) z^{m-H} b~.
template <class V1, class V2>
std::pair<Affine<V2>, Affine<V1>> r_aff(const Affine<V1>& x, const Affine<V2>& y, const V2& img_first,
                                        const V1& img_second, int h) {
    return {Affine<V2>{y.mode + h, img_first}, Affine<V1>{x.mode - h, img_second}};
}

struct YbeReport {
    std::size_t triples = 0;
    std::size_t violations = 0;
    bool ok() const { return violations == 0; }
};

// (R (x) 1)(1 (x) R)(R (x) 1) = (1 (x) R)(R (x) 1)(1 (x) R) on A (x) B (x) C.
// rab: (a, b) -> (b', a'); rac: (a, c) -> (c', a'); rbc: (b, c) -> (c', b').
template <class VA, class VB, class VC, class RAB, class RAC, class RBC>
YbeReport yang_baxter_check(const std::vector<VA>& as, const std::vector<VB>& bs, const std::vector<VC>& cs,
                            const RAB& rab, const RAC& rac, const RBC& rbc) {
    YbeReport rep;
    for (const auto& a : as)
        for (const auto& b : bs)
            for (const auto& c : cs) {
                ++rep.triples;
                // left side: R_AB, then R_AC, then R_BC
                auto [b1, a1] = rab(a, b);
                auto [c1, a2] = rac(a1, c);
                auto [c2, b2] = rbc(b1, c1);
                // right side: R_BC, then R_AC, then R_AB
                auto [c3, b3] = rbc(b, c);
                auto [c4, a3] = rac(a, c3);
                auto [b4, a4] = rab(a3, b3);
                if (!(c2 == c4 && b2 == b4 && a2 == a4)) ++rep.violations;
            }
    return rep;
}

}  // namespace dkr
