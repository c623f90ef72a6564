// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dkr/error.hpp"
#include "dkr/insertion.hpp"
#include "dkr/rmatrix.hpp"
#include "dkr/scattering_examples.hpp"
#include "dkr/verify.hpp"
#include "dkr/zero_action.hpp"

using namespace dkr;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

// Runs one criterion and prints its line. A time limit of 0 means none.
bool criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = out.pass;
    std::ostringstream timing;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", secs);
    timing << buf << " s";
    if (limit_s > 0) {
        timing << ", limit " << limit_s << " s";
        if (secs > limit_s) {
            pass = false;
            out.detail += (out.detail.empty() ? "" : "; ") + std::string("time limit exceeded");
        }
    }
    std::cout << (pass ? "PASS" : "FAIL") << " " << id << " " << title << " (" << timing.str() << ")";
    if (!out.detail.empty()) std::cout << ": " << out.detail;
    std::cout << std::endl;
    return pass;
}

Outcome from_suites(const std::vector<SuiteResult>& suites) {
    Outcome out{true, ""};
    std::size_t checks = 0, failures = 0;
    for (const auto& s : suites) {
        checks += s.checks;
        failures += s.failures;
        if (!s.ok()) {
            out.pass = false;
            if (!s.notes.empty() && out.detail.empty()) out.detail = s.name + ": " + s.notes.front();
        }
    }
    const std::string counts = std::to_string(checks) + " checks, " + std::to_string(failures) + " failures";
    out.detail = out.detail.empty() ? counts : counts + "; " + out.detail;
    return out;
}

}  // namespace

int main() {
    bool all = true;

    all &= criterion(1, "sigma and e_0 on 12/2-2 (n=4, s=2)", 1.0, [] {
        const Tableau t = parse_tableau("12/2-2");
        const Tableau st = sigma(t, 4, 2);
        const auto e = e0(t, 4, 2);
        Outcome out;
        out.pass = st == parse_tableau("2/-1") && e == std::optional<Tableau>(parse_tableau("2/-2"));
        out.detail = "sigma = " + format_tableau(st) + ", e_0 = " + (e ? format_tableau(*e) : "0");
        return out;
    });

    all &= criterion(2, "insertion of the word 2 4 -4 3 (n=4)", 1.0, [] {
        const KNTableau p = insert_word({2, 4, -4, 3}, 4);
        return Outcome{p == KNTableau{{2, 3, -4}, {4}}, "P = " + format_kn(p)};
    });

    all &= criterion(3, "R and H tables on B^{2,s} (x) B^{2,1} against brute force", 120.0, [] {
        std::vector<SuiteResult> suites;
        for (auto [n, s] : {std::pair{4, 1}, std::pair{4, 2}, std::pair{4, 3}, std::pair{5, 1}, std::pair{5, 2}})
            suites.push_back(verify_rmatrix(n, s));
        return from_suites(suites);
    });

    all &= criterion(4, "worked R example -4/4 (x) 1/2 (n=4, s=2)", 0, [] {
        const RImage img = r_b2s_b21(parse_tableau("-4/4"), parse_tableau("1/2"), 4, 2);
        return Outcome{img.first == Tableau{} && img.second == parse_tableau("1-4/24"),
                       format_tableau(img.first) + " (x) " + format_tableau(img.second)};
    });

    all &= criterion(5, "Yang-Baxter on B22 B21 B21 and B11 B11 B12 (n=4)", 300.0,
                     [] { return from_suites({verify_yang_baxter(4, 2)}); });

    all &= criterion(6, "crystal axioms on B21, B22, B12 (n=4, 5)", 0, [] {
        std::vector<SuiteResult> suites;
        for (int n : {4, 5})
            for (int s : {1, 2}) suites.push_back(verify_axioms(n, s));
        return from_suites(suites);
    });

    all &= criterion(7, "E_1 = 1 exactly on one-soliton states (n=4, L=8)", 0,
                     [] { return from_suites({verify_soliton_energy(4, 8)}); });

    all &= criterion(8, "length-3 soliton speed min(k, 3), k=1..5", 0,
                     [] { return from_suites({verify_soliton_speed(4)}); });

    all &= criterion(9, "scattering examples n=4, 5, 6 (limit 60 s each)", 0, [] {
        constexpr double kLimit = 60.0;
        std::vector<SuiteResult> suites;
        std::string slow;
        for (const auto& ex : scattering::examples()) {
            const auto start = std::chrono::steady_clock::now();
            suites.push_back(verify_scattering(ex.n));
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (secs > kLimit) slow += " n=" + std::to_string(ex.n);
        }
        Outcome out = from_suites(suites);
        if (!slow.empty()) {
            out.pass = false;
            out.detail += "; time limit exceeded for" + slow;
        }
        return out;
    });

    all &= criterion(10, "T_natural and e_i, f_i commute with T_3 (200 states, n=4, 5, 6)", 0, [] {
        std::vector<SuiteResult> suites;
        for (int n : {4, 5, 6}) suites.push_back(verify_commutation(n, 200, 2024 + n));
        return from_suites(suites);
    });

    return all ? 0 : 1;
}
