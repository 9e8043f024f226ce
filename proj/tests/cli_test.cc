#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace
{
    struct Outcome
    {
        std::string out;
        int status;
    };

    /// Runs the CLI through /bin/sh with stderr discarded.
    auto run(const std::string & arguments, const std::string & stdin_text = "") -> Outcome
    {
        std::string command = "printf '%s' '" + stdin_text + "' | '" STRONGDOM_CLI "' " + arguments + " 2>/dev/null";
        auto pipe = popen(command.c_str(), "r");
        if (! pipe)
            return { "", -1 };
        std::string out;
        std::array<char, 4096> buffer;
        while (auto n = std::fread(buffer.data(), 1, buffer.size(), pipe))
            out.append(buffer.data(), n);
        int status = pclose(pipe);
        return { out, WIFEXITED(status) ? WEXITSTATUS(status) : -1 };
    }

    auto line_count(const std::string & s) -> int
    {
        int n = 0;
        for (char c : s)
            n += (c == '\n');
        return n;
    }
}

TEST(Cli, PetersenStrongDomatic)
{
    auto r = run("compute --what dst --format graph6 --input -", "IheA@GUAo\n");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.substr(0, 6), "dst 2\n");
    EXPECT_EQ(line_count(r.out), 3);
}

TEST(Cli, EnumerateCubicOrderEight)
{
    auto r = run("enumerate --order 8 --degree 3");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(line_count(r.out), 6);
    EXPECT_EQ(line_count(run("enumerate --order 8 --degree 3 --connected-only").out), 5);
}

TEST(Cli, FamilyCycleNine)
{
    auto family = run("family cycle 9");
    EXPECT_EQ(family.status, 0);
    EXPECT_EQ(family.out, "HhCGGE@\n");
    auto r = run("compute --what dst", family.out);
    EXPECT_EQ(r.out.substr(0, 6), "dst 3\n");
}

TEST(Cli, OtherInvariants)
{
    EXPECT_EQ(run("compute --what gst --witness", "Ch\n").out, "gst 2\nset 0 2\n");
    EXPECT_EQ(run("compute --what gamma", "C~\n").out, "gamma 1\n");
    EXPECT_EQ(run("compute --what gammaw", "Cs\n").out.substr(0, 7), "gammaw ");
    EXPECT_EQ(run("compute --what domatic", "C~\n").out, "domatic 4\n");
}

TEST(Cli, EdgeListInput)
{
    auto r = run("compute --format edges --what gst", "4\n0 1\n1 2\n2 3\n");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "gst 2\n");
}

TEST(Cli, FamilyEdgeOutput)
{
    EXPECT_EQ(run("family path 3 --format edges").out, "3\n0 1\n1 2\n");
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("compute --bogus").status, 2);
    EXPECT_EQ(run("compute --what nothing").status, 2);
    EXPECT_EQ(run("family wheel 5").status, 2);
    EXPECT_EQ(run("family cycle").status, 2);
    EXPECT_EQ(run("enumerate --order 5 --degree 3").status, 2);
    EXPECT_EQ(run("verify-claims --max-n 3").status, 2);
    EXPECT_EQ(run("verify-claims --json --csv").status, 2);
}

TEST(Cli, ComputationFailuresExitOne)
{
    EXPECT_EQ(run("compute", "A\n").status, 1);
    EXPECT_EQ(run("compute --input /nonexistent/file").status, 1);
    EXPECT_EQ(run("compute --node-budget 3", "IheA@GUAo\n").status, 1);
    EXPECT_EQ(run("compute", "?\n").status, 1);
}

TEST(Cli, HelpExitsZero)
{
    EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, OracleCheck)
{
    auto r = run("oracle-check --count 30 --max-n 7");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "checked 30 graphs, 0 mismatches\n");
    EXPECT_EQ(run("oracle-check --max-n 13").status, 2);
}

TEST(Cli, VerifyClaimsCsvHeader)
{
    auto r = run("verify-claims --max-n 6 --csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "id,params,expected,computed,status,ms");
}
