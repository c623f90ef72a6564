// dkr: run soliton cellular automaton traces, evaluate combinatorial R-matrices
// and run the invariant suites.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
// 3 domain or boundary error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dkr/crystal.hpp"
#include "dkr/error.hpp"
#include "dkr/one_row.hpp"
#include "dkr/rmatrix.hpp"
#include "dkr/sca.hpp"
#include "dkr/scattering_examples.hpp"
#include "dkr/verify.hpp"
#include "dkr/zero_action.hpp"

using namespace dkr;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kDomain = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const char* const kTensor = " ⊗ ";

// A state is either a file holding the two rows, or inline text with ';' between rows.
ScaState read_state(const std::string& arg, int n) {
    std::string text;
    if (std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::string line;
        std::vector<std::string> rows;
        while (std::getline(in, line) && rows.size() < 2)
            if (line.find_first_not_of(" \t\r") != std::string::npos) rows.push_back(line);
        for (const auto& r : rows) text += r + "\n";
    } else {
        text = arg;
        for (char& ch : text)
            if (ch == ';') ch = '\n';
    }
    try {
        return parse_state(text, n);
    } catch (const DomainError& e) {
        throw UsageError(std::string("bad state: ") + e.what());
    }
}

template <class F>
auto parse_arg(const std::string& what, F&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        throw UsageError("bad " + what + ": " + e.what());
    }
}

// A-type rectangles: rows separated by '/', entries by ','; "e" is the empty tableau.
ATableau parse_a(const std::string& s) {
    if (s == "e" || s.empty()) return {};
    ATableau t;
    std::stringstream rows(s);
    std::string row;
    while (std::getline(rows, row, '/')) {
        std::vector<int> r;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) r.push_back(std::stoi(cell));
        t.push_back(r);
    }
    return t;
}

std::string format_a(const ATableau& t) {
    if (t.empty()) return "e";
    std::string out;
    for (std::size_t r = 0; r < t.size(); ++r) {
        if (r) out += "/";
        for (std::size_t c = 0; c < t[r].size(); ++c) out += (c ? "," : "") + std::to_string(t[r][c]);
    }
    return out;
}

int one_row_capacity(const OneRow& b) {
    int s = 0;
    for (int x : b) s += x;
    return s;
}

struct RmatrixArgs {
    std::string family = "b2s_b21";
    int n = 4;
    int s = 1;
    std::string lhs, rhs;
    bool inverse = false;
};

void print_image(const std::string& a, const std::string& b, int h) {
    std::cout << a << kTensor << b << ", H=" << h << "\n";
}

int run_rmatrix(const RmatrixArgs& a) {
    if (a.family == "b2s_b21") {
        check_caps(a.n, a.s);
        const Tableau x = parse_arg("lhs", [&] { return parse_tableau(a.lhs); });
        const Tableau y = parse_arg("rhs", [&] { return parse_tableau(a.rhs); });
        B2sB21R r(a.n, a.s);
        const RImage img = a.inverse ? r.inverse(x, y) : r(x, y);
        print_image(format_tableau(img.first), format_tableau(img.second), img.energy);
        return kOk;
    }
    if (a.family == "b11_b21") {
        check_caps(a.n, 1);
        LetterCrystal lc(a.n);
        KRCrystal b1(a.n, 1);
        auto r = brute_force_r(lc, b1, 1, u(1));
        auto h = propagate_energy(lc, b1, r, {1, u(1)}, 0);
        if (!a.inverse) {
            const Letter x = parse_arg("lhs", [&] { return parse_letter(a.lhs); });
            const Tableau y = parse_arg("rhs", [&] { return parse_tableau(a.rhs); });
            if (x == 0 || std::abs(x) > a.n || !b1.contains(y)) throw DomainError("element not in B^{1,1} (x) B^{2,1}");
            auto img = r_b11_b21(x, y, a.n);
            print_image(format_tableau(img.first), letter_str(img.second), h.at({x, y}));
            return kOk;
        }
        const Tableau x = parse_arg("lhs", [&] { return parse_tableau(a.lhs); });
        const Letter y = parse_arg("rhs", [&] { return parse_letter(a.rhs); });
        for (const auto& [pre, img] : r)
            if (img.first == x && img.second == y) {
                print_image(letter_str(pre.first), format_tableau(pre.second), h.at(pre));
                return kOk;
            }
        throw DomainError("element not in B^{2,1} (x) B^{1,1}");
    }
    if (a.family == "one_row") {
        check_caps(a.n, 1);
        const OneRow x = parse_arg("lhs", [&] { return parse_one_row(a.lhs); });
        const OneRow y = parse_arg("rhs", [&] { return parse_one_row(a.rhs); });
        OneRowCrystal cx(a.n, one_row_capacity(x)), cy(a.n, one_row_capacity(y));
        if (!cx.contains(x) || !cy.contains(y)) throw DomainError("element not in a one-row crystal");
        if (!a.inverse) {
            auto img = r_one_row(x, y, a.n);
            print_image(format_one_row(img.first), format_one_row(img.second), img.energy);
            return kOk;
        }
        for (const auto& p : cy.elements())
            for (const auto& q : cx.elements()) {
                auto img = r_one_row(p, q, a.n);
                if (img.first == x && img.second == y) {
                    print_image(format_one_row(p), format_one_row(q), img.energy);
                    return kOk;
                }
            }
        throw DomainError("no preimage");
    }
    if (a.family == "a_type") {
        // --n is the alphabet size m of the A-type tableaux
        const ATableau x = parse_arg("lhs", [&] { return parse_a(a.lhs); });
        const ATableau y = parse_arg("rhs", [&] { return parse_a(a.rhs); });
        if (a.n < 1 || !a_valid(x, a.n) || !a_valid(y, a.n)) throw DomainError("not a rectangular tableau over 1..m");
        if (!a.inverse) {
            auto [p, q] = r_hat(x, y, a.n);
            print_image(format_a(p), format_a(q), h_hat(x, y));
            return kOk;
        }
        auto shape = [](const ATableau& t) {
            return std::make_pair(static_cast<int>(t.size()), t.empty() ? 0 : static_cast<int>(t[0].size()));
        };
        auto [ry, sy] = shape(y);
        auto [rx, sx] = shape(x);
        for (const auto& p : a_rectangles(ry, sy, a.n))
            for (const auto& q : a_rectangles(rx, sx, a.n))
                if (r_hat(p, q, a.n) == std::make_pair(x, y)) {
                    print_image(format_a(p), format_a(q), h_hat(p, q));
                    return kOk;
                }
        throw DomainError("no preimage");
    }
    throw UsageError("unknown family '" + a.family + "'");
}

struct EvolveArgs {
    int n = 4;
    int carrier = 1;
    int steps = 1;
    std::string state;
    std::string format = "text";
};

int run_evolve(const EvolveArgs& a) {
    if (a.n < 4) throw UsageError("--n must be at least 4");
    if (a.carrier < 1 || a.steps < 0) throw UsageError("--carrier must be positive and --steps nonnegative");
    const ScaState p = read_state(a.state, a.n);
    const Trace tr = run_trace(p, a.carrier, a.steps);
    if (a.format == "json") {
        std::cout << trace_to_json(tr) << "\n";
        return kOk;
    }
    for (std::size_t t = 0; t < tr.states.size(); ++t)
        std::cout << "t=" << t << ":\n" << format_state(tr.states[t]);
    return kOk;
}

struct VerifyArgs {
    std::string suite;
    int n = 4;
    int s = 1;
    int length = 0;
    std::size_t samples = 200;
    unsigned seed = 1;
};

int run_verify(const VerifyArgs& a) {
    try {
        check_caps(a.n, a.s);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    SuiteResult res;
    if (a.suite == "axioms") {
        res = verify_axioms(a.n, a.s);
    } else if (a.suite == "sigma") {
        res = verify_sigma(a.n, a.s);
    } else if (a.suite == "insertion") {
        res = verify_insertion(a.n, a.length ? a.length : 4);
    } else if (a.suite == "rmatrix") {
        res = verify_rmatrix(a.n, a.s);
    } else if (a.suite == "yang-baxter") {
        res = verify_yang_baxter(a.n, a.s);
    } else if (a.suite == "solitons") {
        res = verify_solitons(a.n, a.length ? a.length : 8);
    } else if (a.suite == "commutation") {
        res = verify_commutation(a.n, a.samples, a.seed);
    } else if (a.suite == "scattering") {
        if (a.n > 6) throw UsageError("no scattering example for n = " + std::to_string(a.n));
        res = verify_scattering(a.n);
    } else {
        throw UsageError("unknown suite '" + a.suite + "'");
    }
    std::cout << res.summary() << "\n";
    for (const auto& note : res.notes) std::cout << "  " << note << "\n";
    return res.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"D_n^(1) crystal combinatorics and the B^{2,1} soliton cellular automaton"};
    app.require_subcommand(1);

    EvolveArgs ev;
    auto* evolve_cmd = app.add_subcommand("evolve", "Evolve a state under T_l and print the trace");
    evolve_cmd->add_option("--n", ev.n, "Rank n >= 4")->required();
    evolve_cmd->add_option("--carrier", ev.carrier, "Carrier capacity l")->required();
    evolve_cmd->add_option("--steps", ev.steps, "Number of time steps")->required();
    evolve_cmd->add_option("--state", ev.state, "State file, or inline rows separated by ';'")->required();
    evolve_cmd->add_option("--format", ev.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    RmatrixArgs rm;
    auto* rmatrix_cmd = app.add_subcommand("rmatrix", "Apply a combinatorial R-matrix to lhs (x) rhs");
    rmatrix_cmd->add_option("--family", rm.family, "b2s_b21, b11_b21, one_row or a_type")
        ->check(CLI::IsMember({"b2s_b21", "b11_b21", "one_row", "a_type"}));
    rmatrix_cmd->add_option("--n", rm.n, "Rank n (alphabet size m for a_type)");
    rmatrix_cmd->add_option("--s", rm.s, "Capacity s of B^{2,s} for b2s_b21");
    rmatrix_cmd->add_option("--lhs", rm.lhs, "First tensor factor")->required();
    rmatrix_cmd->add_option("--rhs", rm.rhs, "Second tensor factor")->required();
    rmatrix_cmd->add_flag("--inverse", rm.inverse, "Treat lhs (x) rhs as an image and print its preimage");

    VerifyArgs vf;
    auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
    verify_cmd->add_option("--suite", vf.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(
            {"axioms", "sigma", "insertion", "rmatrix", "yang-baxter", "solitons", "commutation", "scattering"}));
    verify_cmd->add_option("--n", vf.n, "Rank n, at most 6");
    verify_cmd->add_option("--s", vf.s, "Capacity s, at most 3");
    verify_cmd->add_option("--length", vf.length, "Word length (insertion) or state length (solitons)");
    verify_cmd->add_option("--samples", vf.samples, "Sampled states (commutation)");
    verify_cmd->add_option("--seed", vf.seed, "Random seed (commutation)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*evolve_cmd) return run_evolve(ev);
        if (*rmatrix_cmd) return run_rmatrix(rm);
        return run_verify(vf);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const BoundaryError& e) {
        std::cerr << "boundary error: " << e.what() << "\n";
        return kDomain;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerifyFailed;
    }
}
