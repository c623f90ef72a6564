#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "dkr/sca.hpp"
#include "dkr/scattering_examples.hpp"

using namespace dkr;

namespace {

std::string g_binary;

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    const std::string cmd = "\"" + g_binary + "\" " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string inline_state(const std::string& two_lines) {
    std::string s = two_lines;
    if (!s.empty() && s.back() == '\n') s.pop_back();
    for (char& c : s)
        if (c == '\n') c = ';';
    return "\"" + s + "\"";
}

}  // namespace

TEST(cli, evolve_reproduces_the_n4_trace_with_a_large_carrier) {
    const auto& rows = scattering::k_n4;
    CliRun r = run("evolve --n 4 --carrier 6 --steps 7 --state " + inline_state(rows[0]));
    ASSERT_EQ(r.code, 0);
    std::string want;
    for (std::size_t t = 0; t < rows.size(); ++t)
        want += "t=" + std::to_string(t) + ":\n" + format_state(parse_state(rows[t], 4, true));
    EXPECT_EQ(r.out, want);
}

TEST(cli, evolve_reads_a_state_file) {
    const auto path = std::filesystem::temp_directory_path() / "dkr_cli_state.txt";
    {
        std::ofstream f(path);
        f << scattering::k_n5[0];
    }
    CliRun a = run("evolve --n 5 --carrier 4 --steps 4 --state " + path.string());
    CliRun b = run("evolve --n 5 --carrier 4 --steps 4 --state " + inline_state(scattering::k_n5[0]));
    std::filesystem::remove(path);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find(format_state(parse_state(scattering::k_n5[4], 5, true))), std::string::npos);
}

TEST(cli, vacuum_stays_vacuum) {
    CliRun r = run("evolve --n 4 --carrier 2 --steps 3 --state \"1 1 1;2 2 2\"");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "t=0:\n1 1 1\n2 2 2\nt=1:\n1 1 1\n2 2 2\nt=2:\n1 1 1\n2 2 2\nt=3:\n1 1 1\n2 2 2\n");
}

TEST(cli, json_trace_round_trips) {
    CliRun r = run("evolve --n 4 --carrier 3 --steps 7 --format json --state " + inline_state(scattering::k_n4[0]));
    ASSERT_EQ(r.code, 0);
    Trace tr = trace_from_json(r.out);
    EXPECT_EQ(tr.carrier, 3);
    ASSERT_EQ(tr.states.size(), 8u);
    for (std::size_t t = 0; t < tr.states.size(); ++t)
        EXPECT_EQ(tr.states[t], parse_state(scattering::k_n4[t], 4, true)) << t;
    EXPECT_EQ(trace_to_json(tr) + "\n", r.out);
}

TEST(cli, rmatrix_examples) {
    CliRun r = run("rmatrix --family b2s_b21 --n 4 --s 2 --lhs=-4/4 --rhs 1/2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find(',')), "e ⊗ 1-4/24");
    r = run("rmatrix --family b2s_b21 --n 4 --s 3 --lhs 111/222 --rhs 1/2");
    EXPECT_EQ(r.out, "1/2 ⊗ 111/222, H=0\n");
}

TEST(cli, rmatrix_inverse_round_trips) {
    struct Case {
        std::string family, flags, lhs, rhs;
    };
    for (const Case& c : {Case{"b2s_b21", "--n 4 --s 2", "-4/4", "1/2"}, Case{"b2s_b21", "--n 5 --s 2", "1-5/2-3", "3/-1"},
                          Case{"b11_b21", "--n 4", "-2", "3/4"}, Case{"one_row", "--n 4", "1,0,0,0,0,0,1,0", "0,1,0,0,0,0,0,0"},
                          Case{"a_type", "--n 3", "1,1/2,3", "1/3"}}) {
        CliRun fwd = run("rmatrix --family " + c.family + " " + c.flags + " --lhs=" + c.lhs + " --rhs=" + c.rhs);
        ASSERT_EQ(fwd.code, 0) << c.family;
        const auto sep = fwd.out.find(" ⊗ ");
        const auto comma = fwd.out.rfind(", H=");
        const std::string a = fwd.out.substr(0, sep);
        const std::string b = fwd.out.substr(sep + std::string(" ⊗ ").size(), comma - sep - std::string(" ⊗ ").size());
        CliRun back = run("rmatrix --family " + c.family + " " + c.flags + " --inverse --lhs=" + a + " --rhs=" + b);
        ASSERT_EQ(back.code, 0) << c.family;
        EXPECT_EQ(back.out.substr(0, back.out.rfind(", H=")), c.lhs + " ⊗ " + c.rhs) << c.family;
        EXPECT_EQ(back.out.substr(back.out.rfind(", H=")), fwd.out.substr(comma)) << c.family;
    }
}

TEST(cli, exit_codes) {
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("evolve --n 4 --carrier 2 --steps 1 --state \"1 x;2 2\"").code, 2);
    EXPECT_EQ(run("rmatrix --family b2s_b21 --n 4 --s 2 --lhs 12/3 --rhs 1/2").code, 2);
    EXPECT_EQ(run("rmatrix --family b2s_b21 --n 4 --s 2 --lhs 1/1 --rhs 1/2").code, 3);
    EXPECT_EQ(run("verify --suite axioms --n 7 --s 1").code, 2);
    EXPECT_EQ(run("verify --suite rmatrix --n 4 --s 4").code, 2);
    EXPECT_EQ(run("verify --suite nonsense").code, 2);
    // a soliton that runs off the right edge
    EXPECT_EQ(run("evolve --n 4 --carrier 2 --steps 3 --state \"1 2 1;3 3 2\"").code, 3);
}

TEST(cli, verify_suites_pass_and_are_deterministic) {
    for (const std::string suite : {"axioms", "sigma", "scattering", "commutation"}) {
        CliRun a = run("verify --suite " + suite + " --n 4 --s 1");
        CliRun b = run("verify --suite " + suite + " --n 4 --s 1");
        EXPECT_EQ(a.code, 0) << suite << "\n" << a.out;
        EXPECT_EQ(a.out, b.out) << suite;
        EXPECT_NE(a.out.find(" 0 failures"), std::string::npos) << a.out;
    }
}

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path to dkr>\n");
        return 2;
    }
    g_binary = argv[1];
    return RUN_ALL_TESTS();
}
