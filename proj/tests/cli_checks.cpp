// End-to-end checks of the command-line tool: exit codes, formats, and
// determinism of the machine output.

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& cmd) {
    std::string full = cmd + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

int failures = 0;

void check(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    if (!ok) {
        ++failures;
        if (!detail.empty()) std::cout << detail << "\n";
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_checks <path-to-cli>\n";
        return 2;
    }
    std::string cli = argv[1];

    {
        auto r = run(cli + " essential --algebra A1 --weight 3 --format lines");
        check("essential A1 weight 3: four rows, exit 0",
              r.exit_code == 0 && contains(r.output, "SIG hw=3 p=3") &&
                  contains(r.output, "SIG hw=3 p=0"),
              r.output);
        int rows = 0;
        for (size_t pos = 0; (pos = r.output.find("SIG", pos)) != std::string::npos; ++pos) ++rows;
        check("essential A1 weight 3: row count", rows == 4, r.output);
    }
    {
        auto r = run(cli + " essential --algebra B3 --weight 0,0,1 --format lines");
        int rows = 0;
        for (size_t pos = 0; (pos = r.output.find("SIG", pos)) != std::string::npos; ++pos) ++rows;
        check("essential B3 spin module: eight rows", r.exit_code == 0 && rows == 8, r.output);
    }
    {
        auto r = run(cli + " branch --pair G2:A2 --weight 0,1 --format lines");
        check("branch G2:A2 adjoint: three rows with the printed signatures",
              r.exit_code == 0 && contains(r.output, "SIG hw=0,1 p=0,0,1,0,0,0 sub=1,0") &&
                  contains(r.output, "SIG hw=0,1 p=0,0,0,1,0,0 sub=0,1") &&
                  contains(r.output, "SIG hw=0,1 p=0,0,0,0,0,0 sub=1,1"),
              r.output);
    }
    {
        auto r = run(cli + " branch --pair B3:G2 --weight 1,0,0 --format lines");
        check("branch B3:G2 vector module: irreducible restriction",
              r.exit_code == 0 && contains(r.output, "sub=1,0"), r.output);
    }
    {
        auto r = run(cli + " branch --pair G2:A2 --weight 0,0 --format lines");
        check("branch at zero weight: single row", r.exit_code == 0, r.output);
    }
    {
        auto r1 = run(cli + " discover --pair G2:A2 --format lines");
        auto r2 = run(cli + " discover --pair G2:A2 --format lines");
        check("discover G2:A2: certified, exit 0", r1.exit_code == 0, r1.output);
        check("machine output is deterministic", r1.output == r2.output);
    }
    {
        auto r = run(cli + " relations --pair G2:A2 --format lines");
        check("relations G2:A2: the single collapse",
              r.exit_code == 0 && contains(r.output, "REL 0,1,0,0,1,0 = 0,0,1,1,0,0"), r.output);
    }
    {
        auto r = run(cli + " discover --pair B3:G2 --initial \"1,0,0;0,1,0;0,0,1\" "
                           "--iteration-cap 1 --format lines");
        check("discover with iteration cap 1 on B3:G2: cap-exhausted exit 3", r.exit_code == 3,
              r.output);
    }
    {
        auto r = run(cli + " essential --algebra Q9 --weight 1");
        check("unknown algebra: usage exit 1", r.exit_code == 1, r.output);
    }
    {
        auto r = run(cli + " essential --algebra B3 --weight 2,2,2 --dim-cap 50");
        check("dimension cap exceeded: budget exit 3", r.exit_code == 3, r.output);
    }
    {
        auto r = run(cli + " essential --algebra G2 --weight 1,0 --order g2-default --format lines");
        int rows = 0;
        for (size_t pos = 0; (pos = r.output.find("SIG", pos)) != std::string::npos; ++pos) ++rows;
        check("essential G2 with the shipped order: seven rows", r.exit_code == 0 && rows == 7,
              r.output);
    }
    {
        auto cache = std::string("/tmp/sigbranch-cache-test");
        run("rm -rf " + cache);
        auto r1 = run(cli + " branch --pair G2:A2 --weight 0,1 --format lines --cache-dir " + cache);
        auto r2 = run(cli + " branch --pair G2:A2 --weight 0,1 --format lines --cache-dir " + cache);
        check("module cache: identical output on a warm run",
              r1.exit_code == 0 && r2.exit_code == 0 && r1.output == r2.output,
              r1.output + "----\n" + r2.output);
        auto ls = run("ls " + cache);
        check("module cache: entry written", contains(ls.output, ".mod"), ls.output);
    }
    {
        run("printf '[branch]\\npair=G2:A2\\nweight=0,1\\nformat=lines\\n' > /tmp/sigbranch.cfg");
        auto r = run(cli + " --config /tmp/sigbranch.cfg branch");
        check("config file supplies the flags",
              r.exit_code == 0 && contains(r.output, "SIG hw=0,1"), r.output);
    }
    {
        auto r1 = run(cli + " discover --pair B3:G2 --format lines --threads 2");
        auto r2 = run(cli + " discover --pair B3:G2 --format lines");
        check("threaded certificate: identical results", r1.exit_code == 0 && r1.output == r2.output);
    }
    {
        auto r = run(cli + " verify g2-a2");
        check("verify g2-a2: PASS", r.exit_code == 0 && contains(r.output, "PASS (4 checks)"),
              r.output);
    }

    std::cout << (failures == 0 ? "CLI CHECKS PASS" : "CLI CHECKS FAIL") << "\n";
    return failures == 0 ? 0 : 1;
}
