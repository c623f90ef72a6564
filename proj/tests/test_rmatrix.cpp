#include <gtest/gtest.h>

#include "dkr/crystal.hpp"
#include "dkr/rmatrix.hpp"
#include "dkr/zero_action.hpp"

using namespace dkr;

namespace {

Tableau T(const std::string& s) { return parse_tableau(s); }

using Pair = std::pair<Tableau, Tableau>;

bool classically_highest(const Tensor<KRCrystal, KRCrystal>& t, const Pair& x, int n) {
    for (int i = 1; i <= n; ++i)
        if (t.e(i, x)) return false;
    return true;
}

struct Oracle {
    std::map<Pair, Pair> r;
    std::map<Pair, int> h;
};

// Brute-force R and energy on B^{2,s} (x) B^{2,1}, normalized by H(u_s (x) u_1) = 0.
const Oracle& oracle(int n, int s) {
    static std::map<std::pair<int, int>, Oracle> cache;
    auto key = std::make_pair(n, s);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    KRCrystal bs(n, s), b1(n, 1);
    Oracle o;
    o.r = brute_force_r(bs, b1, u(s), u(1));
    o.h = propagate_energy(bs, b1, o.r, {u(s), u(1)}, 0);
    return cache.emplace(key, std::move(o)).first->second;
}

}  // namespace

TEST(r_b2s_b21_hw, tabulated_identities) {
    for (int s = 1; s <= 3; ++s) {
        EXPECT_EQ(r_b2s_b21_hw(s, u(1), 4, s), (Pair{u(1), u(s)}));
        EXPECT_EQ(h_b2s_b21_hw(s, u(1), 4, s), 0);
        for (int k = 0; k <= s - 1; ++k) EXPECT_EQ(r_b2s_b21_hw(k, Tableau{}, 4, s), (Pair{Tableau{}, u(k)}));
        if (s >= 1) EXPECT_EQ(h_b2s_b21_hw(s - 1, u(1), 4, s), -1);
    }
    EXPECT_EQ(h_b2s_b21_hw(1, T("-2/-1"), 4, 2), -2);
    EXPECT_THROW(r_b2s_b21_hw(1, T("2/3"), 4, 2), DomainError);
    EXPECT_THROW(r_b2s_b21_hw(1, T("3/-4"), 5, 2), DomainError);
}

TEST(r_b2s_b21_hw, table_and_energy_match_brute_force) {
    for (auto [n, smax] : {std::pair{4, 3}, std::pair{5, 2}}) {
        for (int s = 1; s <= smax; ++s) {
            const Oracle& o = oracle(n, s);
            KRCrystal bs(n, s), b1(n, 1);
            Tensor<KRCrystal, KRCrystal> t(bs, b1);
            std::size_t rows = 0;
            for (const auto& [x, img] : o.r) {
                if (!classically_highest(t, x, n)) continue;
                // every classical highest weight vector is some u_k (x) b
                ASSERT_EQ(x.first, u(x.first.size())) << format_tableau(x.first);
                const int k = static_cast<int>(x.first.size());
                EXPECT_EQ(r_b2s_b21_hw(k, x.second, n, s), img)
                    << "n=" << n << " s=" << s << " k=" << k << " b=" << format_tableau(x.second);
                EXPECT_EQ(h_b2s_b21_hw(k, x.second, n, s), o.h.at(x))
                    << "n=" << n << " s=" << s << " k=" << k << " b=" << format_tableau(x.second);
                ++rows;
            }
            EXPECT_GT(rows, 0u);
        }
    }
}

TEST(r_b2s_b21, worked_example) {
    auto img = r_b2s_b21(T("-4/4"), T("1/2"), 4, 2);
    EXPECT_EQ(img.first, Tableau{});
    EXPECT_EQ(img.second, T("1-4/24"));
    auto [k, b] = b2s_b21_highest(T("-4/4"), T("1/2"), 4);
    EXPECT_EQ(k, 1);
    EXPECT_EQ(b, u(1));
}

TEST(r_b2s_b21, full_map_equals_brute_force_b22_b21) {
    const Oracle& o = oracle(4, 2);
    B2sB21R r(4, 2);
    EXPECT_EQ(o.r.size(), 329u * 29u);
    for (const auto& [x, img] : o.r) {
        const RImage& got = r(x.first, x.second);
        EXPECT_EQ(got.first, img.first) << format_tableau(x.first) << " (x) " << format_tableau(x.second);
        EXPECT_EQ(got.second, img.second) << format_tableau(x.first) << " (x) " << format_tableau(x.second);
        EXPECT_EQ(got.energy, o.h.at(x)) << format_tableau(x.first) << " (x) " << format_tableau(x.second);
    }
}

TEST(r_b2s_b21, full_map_equals_brute_force_other_sizes) {
    for (auto [n, s] : {std::pair{4, 1}, std::pair{4, 3}, std::pair{5, 1}, std::pair{5, 2}}) {
        const Oracle& o = oracle(n, s);
        B2sB21R r(n, s);
        std::size_t bad = 0;
        for (const auto& [x, img] : o.r) {
            const RImage& got = r(x.first, x.second);
            if (got.first != img.first || got.second != img.second || got.energy != o.h.at(x)) ++bad;
        }
        EXPECT_EQ(bad, 0u) << "n=" << n << " s=" << s;
    }
}

TEST(r_b2s_b21, inverse_round_trip) {
    B2sB21R r(4, 2);
    for (const auto& t : b2s_elements(4, 2))
        for (const auto& tp : b2s_elements(4, 1)) {
            const RImage& img = r(t, tp);
            RImage back = r.inverse(img.first, img.second);
            EXPECT_EQ(back.first, t);
            EXPECT_EQ(back.second, tp);
        }
    EXPECT_THROW(r.inverse(T("12/23"), u(2)), DomainError);
}

TEST(r_b2s_b21, weight_preserved_and_intertwines) {
    const int n = 4, s = 2;
    B2sB21R r(n, s);
    KRCrystal bs(n, s), b1(n, 1);
    Tensor<KRCrystal, KRCrystal> lhs(bs, b1), rhs(b1, bs);
    for (const auto& t : bs.elements())
        for (const auto& tp : b1.elements()) {
            const RImage& img = r(t, tp);
            Pair x{t, tp}, y{img.first, img.second};
            ASSERT_EQ(lhs.wt(x), rhs.wt(y));
            for (int i = 0; i <= n; ++i) {
                auto fx = lhs.f(i, x);
                auto fy = rhs.f(i, y);
                ASSERT_EQ(fx.has_value(), fy.has_value());
                if (fx) {
                    const RImage& g = r(fx->first, fx->second);
                    EXPECT_EQ((Pair{g.first, g.second}), *fy);
                    if (i != 0) EXPECT_EQ(g.energy, img.energy);
                }
            }
        }
}

TEST(r_b11_b21, table_rows) {
    EXPECT_EQ(r_b11_b21_hw(Tableau{}, 4), (std::pair<Tableau, Letter>{u(1), -2}));
    EXPECT_EQ(r_b11_b21_hw(T("2/-2"), 4), (std::pair<Tableau, Letter>{Tableau{}, 1}));
    EXPECT_EQ(r_b11_b21(1, Tableau{}, 4), (std::pair<Tableau, Letter>{u(1), -2}));
    EXPECT_EQ(r_b11_b21(1, T("2/-2"), 4), (std::pair<Tableau, Letter>{Tableau{}, 1}));
    EXPECT_EQ(r_b11_b21(1, u(1), 4), (std::pair<Tableau, Letter>{u(1), 1}));
}

TEST(r_b11_b21, full_map_equals_brute_force) {
    for (int n : {4, 5, 6}) {
        LetterCrystal a(n);
        KRCrystal b(n, 1);
        auto r = brute_force_r(a, b, 1, u(1));
        EXPECT_EQ(r.size(), a.elements().size() * b.elements().size());
        for (const auto& [x, img] : r) {
            auto got = r_b11_b21(x.first, x.second, n);
            EXPECT_EQ(got.first, img.first) << n << " " << x.first << " " << format_tableau(x.second);
            EXPECT_EQ(got.second, img.second) << n << " " << x.first << " " << format_tableau(x.second);
        }
    }
}

TEST(r_one_row, diagonal_is_identity) {
    OneRowCrystal c(4, 2);
    for (const auto& b : c.elements()) {
        auto img = r_one_row(b, b, 4);
        EXPECT_EQ(img.first, b);
        EXPECT_EQ(img.second, b);
    }
}

TEST(r_one_row, equals_brute_force_and_energy_propagation) {
    for (int n : {4, 5})
        for (auto [s, sp] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{1, 1}, std::pair{3, 2}, std::pair{2, 2}}) {
            OneRowCrystal a(n, s), b(n, sp);
            auto r = brute_force_r(a, b, a.highest(), b.highest());
            EXPECT_EQ(r.size(), a.elements().size() * b.elements().size());
            const int h0 = r_one_row(a.highest(), b.highest(), n).energy;
            auto h = propagate_energy(a, b, r, {a.highest(), b.highest()}, h0);
            std::size_t bad = 0;
            for (const auto& [x, img] : r) {
                auto got = r_one_row(x.first, x.second, n);
                if (got.first != img.first || got.second != img.second || got.energy != h.at(x)) ++bad;
            }
            EXPECT_EQ(bad, 0u) << "n=" << n << " s=" << s << " s'=" << sp;
        }
}

TEST(r_one_row, energy_of_highest_pair) {
    // u (x) u in B^{1,2} (x) B^{1,1}: the insertion gives one row of 3 boxes, m = 0
    OneRowCrystal a(4, 2), b(4, 1);
    EXPECT_EQ(r_one_row(a.highest(), b.highest(), 4).energy, 2 * 1 - 0 - 2 * 1);
}

TEST(r_aff, mode_bookkeeping) {
    Affine<int> x{0, 7}, y{0, 9};
    auto [a, b] = r_aff(x, y, 9, 7, 0);
    EXPECT_EQ(a.mode, 0);
    EXPECT_EQ(b.mode, 0);
    auto [c, d] = r_aff(Affine<int>{2, 1}, Affine<int>{-3, 2}, 2, 1, 4);
    EXPECT_EQ(c.mode, 1);
    EXPECT_EQ(d.mode, -2);
}

TEST(yang_baxter, b21_cubed_is_trivial) {
    // R = id on B^{2,1} (x) B^{2,1}: the image b~' (x) b~ equals the argument
    auto id = [](const Tableau& a, const Tableau& b) { return std::make_pair(a, b); };
    const auto el = b2s_elements(4, 1);
    auto rep = yang_baxter_check(el, el, el, id, id, id);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.triples, 29u * 29u * 29u);
}

TEST(yang_baxter, b22_b21_b21) {
    B2sB21R r(4, 2);
    auto rab = [&](const Tableau& a, const Tableau& b) {
        const RImage& i = r(a, b);
        return std::make_pair(i.first, i.second);
    };
    auto rbc = [](const Tableau& b, const Tableau& c) { return std::make_pair(b, c); };
    const auto a = b2s_elements(4, 2), b = b2s_elements(4, 1);
    auto rep = yang_baxter_check(a, b, b, rab, rab, rbc);
    EXPECT_EQ(rep.violations, 0u);
    EXPECT_EQ(rep.triples, 329u * 29u * 29u);
}

TEST(yang_baxter, b11_b11_b12) {
    OneRowCrystal c1(4, 1), c2(4, 2);
    auto rab = [](const OneRow& a, const OneRow& b) { return std::make_pair(a, b); };
    auto r = [](const OneRow& a, const OneRow& b) {
        auto i = r_one_row(a, b, 4);
        return std::make_pair(i.first, i.second);
    };
    auto rep = yang_baxter_check(c1.elements(), c1.elements(), c2.elements(), rab, r, r);
    EXPECT_EQ(rep.violations, 0u);
    EXPECT_EQ(rep.triples, 8u * 8u * c2.elements().size());
}
