#include "dkr/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "dkr/crystal.hpp"
#include "dkr/error.hpp"
#include "dkr/insertion.hpp"
#include "dkr/one_row.hpp"
#include "dkr/rmatrix.hpp"
#include "dkr/sca.hpp"
#include "dkr/scattering_examples.hpp"
#include "dkr/zero_action.hpp"

namespace dkr {

namespace {

constexpr std::size_t kMaxNotes = 8;

template <class C>
void absorb_axioms(SuiteResult& res, const C& c, const std::vector<typename C::value_type>& elems,
                   const std::string& label) {
    AxiomReport rep = check_axioms(c, elems, c.indices());
    res.checks += rep.checks;
    res.failures += rep.violation_count;
    for (const auto& v : rep.violations)
        if (res.notes.size() < kMaxNotes) res.notes.push_back(label + ": " + v);
}

std::vector<Tableau> iterate0(const KRCrystal& c, const Tableau& t, bool up) {
    std::vector<Tableau> out;
    for (auto y = up ? c.e(0, t) : c.f(0, t); y; y = up ? c.e(0, *y) : c.f(0, *y)) out.push_back(*y);
    return out;
}

void for_each_word(int n, int len, const std::function<void(const Word&)>& fn) {
    Word w(len);
    const auto alph = alphabet(n);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == len) {
            fn(w);
            return;
        }
        for (Letter a : alph) {
            w[pos] = a;
            rec(pos + 1);
        }
    };
    rec(0);
}

std::string word_text(const Word& w) {
    std::ostringstream os;
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << w[k];
    return os.str();
}

std::string pair_text(const Tableau& a, const Tableau& b) { return format_tableau(a) + " (x) " + format_tableau(b); }

ScaState cells_at(const std::vector<Tableau>& cells, int n, int pos, std::size_t len) {
    std::vector<Tableau> c(len, u(1));
    for (std::size_t k = 0; k < cells.size(); ++k) c[pos + k] = cells[k];
    return make_state(n, c);
}

// One-soliton pattern on the unique run of non-vacuum cells, if there is exactly one run.
bool one_soliton_state(const std::vector<Tableau>& cells, int n) {
    std::size_t first = cells.size(), last = 0;
    for (std::size_t k = 0; k < cells.size(); ++k)
        if (cells[k] != u(1)) {
            first = std::min(first, k);
            last = k;
        }
    if (first == cells.size()) return false;
    std::vector<Tableau> run(cells.begin() + first, cells.begin() + last + 1);
    if (std::find(run.begin(), run.end(), u(1)) != run.end()) return false;
    return is_soliton_pattern(run, n);
}

}  // namespace

void SuiteResult::check(bool pass, const std::string& what) {
    ++checks;
    if (pass) return;
    ++failures;
    if (notes.size() < kMaxNotes) notes.push_back(what);
}

void SuiteResult::absorb(const SuiteResult& other) {
    checks += other.checks;
    failures += other.failures;
    for (const auto& s : other.notes)
        if (notes.size() < kMaxNotes) notes.push_back(other.name + ": " + s);
}

std::string SuiteResult::summary() const {
    std::ostringstream os;
    os << name << ": " << checks << " checks, " << failures << " failures";
    return os.str();
}

void check_caps(int n, int s) {
    if (n < 4 || n > kMaxRank) throw DomainError("rank must lie in 4.." + std::to_string(kMaxRank));
    if (s < 1 || s > kMaxCapacity) throw DomainError("capacity must lie in 1.." + std::to_string(kMaxCapacity));
}

SuiteResult verify_axioms(int n, int s) {
    check_caps(n, s);
    SuiteResult res{"axioms"};
    KRCrystal kr(n, s);
    absorb_axioms(res, kr, kr.elements(), "B^{2," + std::to_string(s) + "}");
    OneRowCrystal one(n, s);
    absorb_axioms(res, one, one.elements(), "B^{1," + std::to_string(s) + "}");
    return res;
}

SuiteResult verify_sigma(int n, int s) {
    check_caps(n, s);
    SuiteResult res{"sigma"};
    KRCrystal c(n, s);
    for (const auto& t : c.elements()) {
        const Tableau st = sigma(t, n, s);
        res.check(c.contains(st), "sigma leaves the crystal at " + format_tableau(t));
        res.check(sigma(st, n, s) == t, "sigma is not an involution at " + format_tableau(t));
        for (int i = 2; i <= n; ++i) {
            auto a = c.e(i, t);
            auto b = c.e(i, st);
            const bool same = a ? (b && sigma(*a, n, s) == *b) : !b;
            res.check(same, "sigma e_" + std::to_string(i) + " != e_" + std::to_string(i) + " sigma at " +
                                format_tableau(t));
        }
    }
    std::vector<Tableau> domain(level_elements(1, n).begin(), level_elements(1, n).end());
    if (s >= 2) domain.push_back(parse_tableau("1-2/3-1"));
    for (const auto& t : domain) {
        ZeroString z = zero_string_closed_form(t, n, s);
        res.check(z.f == iterate0(c, t, false), "closed-form f_0 string differs at " + format_tableau(t));
        res.check(z.e == iterate0(c, t, true), "closed-form e_0 string differs at " + format_tableau(t));
    }
    if (n == 4 && s == 2) {
        const Tableau t = parse_tableau("12/2-2");
        res.check(sigma(t, 4, 2) == parse_tableau("2/-1"), "sigma(12/2-2) != 2/-1");
        res.check(e0(t, 4, 2) == std::optional<Tableau>(parse_tableau("2/-2")), "e_0(12/2-2) != 2/-2");
    }
    return res;
}

SuiteResult verify_insertion(int n, int max_len) {
    check_caps(n, 1);
    if (max_len < 0 || max_len > 5) throw DomainError("word length must lie in 0..5");
    SuiteResult res{"insertion"};
    for (int len = 0; len <= max_len; ++len)
        for_each_word(n, len, [&](const Word& w) {
            auto [p, q] = word_to_pq(w, n);
            res.check(pq_to_word(p, q, n) == w, "(P, Q) round trip fails on " + word_text(w));
            res.check(word_is_highest(hw_word_from_q(q, n), n), "hw word not highest for " + word_text(w));
            for (int i = 1; i <= n; ++i) {
                auto fw = word_f(i, w, n);
                auto fr = word_f(i, kn_reading(p), n);
                if (!fw) {
                    res.check(!fr, "f_" + std::to_string(i) + " acts on P but not on " + word_text(w));
                    continue;
                }
                auto [fp, fq] = word_to_pq(*fw, n);
                res.check(fq == q, "Q changes under f_" + std::to_string(i) + " on " + word_text(w));
                res.check(fr && kn_reading(fp) == *fr, "P does not follow f_" + std::to_string(i) + " on " +
                                                           word_text(w));
            }
            if (len == 0) return;
            // removing the box added by the last letter recovers the previous tableau
            Word head(w.begin(), w.end() - 1);
            auto t = insert_word(head, n);
            auto h0 = shape(t), h1 = shape(p);
            if (h1.size() < h0.size()) return;
            h0.resize(h1.size(), 0);
            std::size_t col = h1.size();
            int diff = 0;
            for (std::size_t j = 0; j < h1.size(); ++j)
                if (h1[j] != h0[j]) {
                    diff += h1[j] - h0[j];
                    col = j;
                }
            if (diff != 1 || col == h1.size()) return;
            KNTableau back = p;
            const Letter out = remove_box(back, col, n);
            res.check(out == w.back() && back == t, "remove_box does not undo the last letter of " + word_text(w));
        });
    return res;
}

SuiteResult verify_rmatrix(int n, int s) {
    check_caps(n, s);
    SuiteResult res{"rmatrix"};
    KRCrystal bs(n, s), b1(n, 1);
    auto oracle = brute_force_r(bs, b1, u(s), u(1));
    auto h = propagate_energy(bs, b1, oracle, {u(s), u(1)}, 0);
    res.check(oracle.size() == bs.elements().size() * b1.elements().size(), "brute-force R is not total");
    Tensor<KRCrystal, KRCrystal> t(bs, b1);
    B2sB21R r(n, s);
    for (const auto& [x, img] : oracle) {
        const RImage& got = r(x.first, x.second);
        const std::string at = pair_text(x.first, x.second);
        res.check(got.first == img.first && got.second == img.second, "R differs at " + at);
        res.check(got.energy == h.at(x), "H differs at " + at);
        bool highest = true;
        for (int i = 1; i <= n && highest; ++i) highest = !t.e(i, x);
        if (!highest) continue;
        // highest weight table rows
        const int k = static_cast<int>(x.first.size());
        res.check(x.first == u(k), "highest weight vector not of the form u_k (x) b: " + at);
        if (x.first != u(k)) continue;
        res.check(r_b2s_b21_hw(k, x.second, n, s) == img, "table row differs at " + at);
        res.check(h_b2s_b21_hw(k, x.second, n, s) == h.at(x), "table energy differs at " + at);
    }
    LetterCrystal a(n);
    auto r11 = brute_force_r(a, b1, 1, u(1));
    for (const auto& [x, img] : r11) {
        auto got = r_b11_b21(x.first, x.second, n);
        res.check(got == img, "B^{1,1} (x) B^{2,1} R differs at " + std::to_string(x.first) + " (x) " +
                                  format_tableau(x.second));
    }
    return res;
}

SuiteResult verify_yang_baxter(int n, int s) {
    check_caps(n, s);
    SuiteResult res{"yang-baxter"};
    B2sB21R r(n, s);
    auto rab = [&](const Tableau& a, const Tableau& b) {
        const RImage& i = r(a, b);
        return std::make_pair(i.first, i.second);
    };
    auto rbc = [](const Tableau& b, const Tableau& c) { return std::make_pair(b, c); };
    const auto as = b2s_elements(n, s), bs = b2s_elements(n, 1);
    auto rep = yang_baxter_check(as, bs, bs, rab, rab, rbc);
    res.checks += rep.triples;
    res.failures += rep.violations;
    if (rep.violations) res.notes.push_back("B^{2,s} (x) B^{2,1} (x) B^{2,1}: violations");

    OneRowCrystal c1(n, 1), cs(n, s);
    auto id = [](const OneRow& a, const OneRow& b) { return std::make_pair(a, b); };
    auto rr = [n](const OneRow& a, const OneRow& b) {
        auto i = r_one_row(a, b, n);
        return std::make_pair(i.first, i.second);
    };
    auto rep2 = yang_baxter_check(c1.elements(), c1.elements(), cs.elements(), id, rr, rr);
    res.checks += rep2.triples;
    res.failures += rep2.violations;
    if (rep2.violations) res.notes.push_back("B^{1,1} (x) B^{1,1} (x) B^{1,s}: violations");
    return res;
}

SuiteResult verify_soliton_energy(int n, int length) {
    check_caps(n, 1);
    if (length < 2 || length > 12) throw DomainError("length must lie in 2..12");
    SuiteResult res{"soliton energy"};
    std::vector<Tableau> pool;
    for (const auto& t : b2s_elements(n, 1))
        if (t != u(1)) pool.push_back(t);
    const std::size_t len = static_cast<std::size_t>(length);
    auto check = [&](const std::vector<Tableau>& cells) {
        ScaState p{n, cells};  // the last cell may be non-vacuum here
        const bool want = one_soliton_state(cells, n);
        const bool got = state_energy(p, 1) == 1;
        res.check(want == got, "E_1 = 1 disagrees with the one-soliton pattern on\n" + format_state(p));
    };
    std::vector<Tableau> cells(len, u(1));
    check(cells);
    for (std::size_t a = 0; a < len; ++a)
        for (const auto& x : pool) {
            cells[a] = x;
            check(cells);
            for (std::size_t b = a + 1; b < len; ++b)
                for (const auto& y : pool) {
                    cells[b] = y;
                    check(cells);
                    cells[b] = u(1);
                }
            cells[a] = u(1);
        }
    return res;
}

SuiteResult verify_soliton_speed(int n) {
    check_caps(n, 1);
    SuiteResult res{"soliton speed"};
    const std::vector<Tableau> sol{parse_tableau("2/-3"), parse_tableau("1/4"), parse_tableau("1/3")};
    res.check(is_soliton_pattern(sol, n), "speed seed is not a soliton");
    const SolitonPayload b = i_s_inverse(sol, n);
    for (int k = 1; k <= 5; ++k) {
        ScaState p = cells_at(sol, n, 2, 30);
        res.check(state_energy(p, k) == std::min(k, 3), "E_" + std::to_string(k) + " of a length-3 soliton");
        for (int t = 1; t <= 5; ++t) {
            p = evolve(p, k).next;
            Detection d = detect_solitons(p);
            const bool one = d.clean && d.solitons.size() == 1;
            res.check(one && d.solitons[0].position == 2 + t * std::min(k, 3) && d.solitons[0].payload == b,
                      "length-3 soliton under T_" + std::to_string(k) + " at t=" + std::to_string(t));
        }
    }
    return res;
}

SuiteResult verify_solitons(int n, int length) {
    SuiteResult res{"solitons"};
    res.absorb(verify_soliton_energy(n, length));
    res.absorb(verify_soliton_speed(n));
    return res;
}

SuiteResult verify_commutation(int n, std::size_t samples, unsigned seed) {
    check_caps(n, 1);
    SuiteResult res{"commutation"};
    std::mt19937 rng(seed);
    std::vector<Tableau> pool;
    for (const auto& t : level_elements(1, n))
        if (t != u(1)) pool.push_back(t);
    const int r = 3;
    std::size_t valid = 0;
    for (std::size_t attempt = 0; valid < samples && attempt < 20 * samples; ++attempt) {
        std::vector<Tableau> cells(22, u(1));
        const int count = 1 + static_cast<int>(rng() % 5);
        for (int k = 0; k < count; ++k) cells[rng() % 8] = pool[rng() % pool.size()];
        const ScaState p = make_state(n, cells);
        Sweep sp;
        ScaState natural_first;
        try {
            sp = evolve(p, r);
            natural_first = evolve(evolve_natural(p).next, r).next;
        } catch (const BoundaryError&) {
            continue;
        }
        ++valid;
        res.check(evolve_natural(sp.next).next == natural_first,
                  "T_natural T_r != T_r T_natural on\n" + format_state(p));
        for (int i = 1; i <= n; ++i) {
            if (i == 2) continue;
            for (bool raise : {true, false}) {
                auto q = raise ? state_e(i, p) : state_f(i, p);
                auto tq = raise ? state_e(i, sp.next) : state_f(i, sp.next);
                const std::string op = (raise ? "e_" : "f_") + std::to_string(i);
                if (!q) {
                    res.check(!tq, op + " acts on T_r p but not on\n" + format_state(p));
                    continue;
                }
                Sweep sq;
                try {
                    sq = evolve(*q, r);
                } catch (const BoundaryError&) {
                    res.check(false, op + " p leaves the window for\n" + format_state(p));
                    continue;
                }
                res.check(tq && sq.next == *tq, "T_r " + op + " != " + op + " T_r on\n" + format_state(p));
                res.check(sq.energy == sp.energy, op + " changes E_r on\n" + format_state(p));
            }
        }
    }
    res.check(valid >= samples, "only " + std::to_string(valid) + " valid samples");
    return res;
}

SuiteResult verify_scattering(int n) {
    const scattering::Example& ex = scattering::example(n);
    SuiteResult res{"scattering"};
    const auto& rows = *ex.rows;
    ScaState p = parse_state(rows[0], n);
    for (std::size_t t = 1; t < rows.size(); ++t) {
        p = evolve(p, ex.carrier).next;
        res.check(p == parse_state(rows[t], n, true), "trace differs at t=" + std::to_string(t));
    }
    ScatterReport rep = scatter_experiment(pad(parse_state(rows[0], n), 12), ex.carrier, 12);
    res.check(rep.predicted == rep.observed, "outgoing labels differ from the affine R: predicted " +
                                                 format_label(rep.predicted.first) + " " +
                                                 format_label(rep.predicted.second) + ", observed " +
                                                 format_label(rep.observed.first) + " " +
                                                 format_label(rep.observed.second));
    res.check(rep.shift_slow == rep.shift_fast, "phase shifts differ");
    res.check(rep.shift_slow == shifted_energy(rep.initial.first.elem, rep.initial.second.elem, n),
              "phase shift differs from H~");
    res.check(rep.observed.first.mode == ex.slow_mode, "slow soliton mode " +
                                                           std::to_string(rep.observed.first.mode));
    res.check(rep.observed.second.mode == ex.fast_mode, "fast soliton mode " +
                                                            std::to_string(rep.observed.second.mode));
    return res;
}

}  // namespace dkr
