// Drives the installed CLI binary end to end: exit codes, exact text for
// the stable commands, determinism for the generated ones. The binary path
// arrives as argv[1].
#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>

#include "cdzp/cdzp.hpp"

namespace {

std::string g_cli;
int g_failures = 0;

struct Result {
    int code = -1;
    std::string out;
};

// Runs the CLI with the given arguments, merging stderr into the capture.
Result run(const std::string& args) {
    Result r;
    std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

void check(bool ok, const std::string& name, const std::string& detail = "") {
    if (ok) {
        std::cout << "ok - " << name << "\n";
    } else {
        ++g_failures;
        std::cout << "FAIL - " << name;
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
    }
}

void check_exact(const std::string& args, int code, const std::string& expect,
                 const std::string& name) {
    Result r = run(args);
    check(r.code == code && r.out == expect, name,
          "exit " + std::to_string(r.code) + ", output:\n" + r.out);
}

void check_error(const std::string& args, int code, const std::string& needle,
                 const std::string& name) {
    Result r = run(args);
    check(r.code == code && r.out.find(needle) != std::string::npos, name,
          "exit " + std::to_string(r.code) + ", output:\n" + r.out);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-cdzp>\n";
        return 2;
    }
    g_cli = argv[1];

    {
        Result r = run("--help");
        check(r.code == 0 && r.out.find("classify") != std::string::npos &&
                  r.out.find("encrypt") != std::string::npos,
              "--help lists the subcommands");
    }
    {
        Result r = run("");
        check(r.code == 2, "a missing subcommand is a usage error");
    }
    check_error("classify --p 5 --t 2", 2, "--elem",
                "a missing required option is a usage error");
    check_error("frobnicate", 2, "", "an unknown subcommand is a usage error");

    check_exact("classify --p 5 --t 2 --elem 2,1,1,1", 0,
                "element: 2+i+j+k\n"
                "algebra: p=5 t=2 dim=4\n"
                "class: k-potent\n"
                "k: 25\n"
                "s: 24\n"
                "route: scan-pure-imaginary\n"
                "trace: 4\n"
                "norm: 2\n"
                "witnesses: m=3 M=4 tau=4\n",
                "classify prints the structured report");

    check_exact("classify --p 7 --t 2 --elem 2,1,1,1 --json", 0,
                "{\n"
                "  \"element\": \"2,1,1,1\",\n"
                "  \"display\": \"2+i+j+k\",\n"
                "  \"p\": 7,\n"
                "  \"t\": 2,\n"
                "  \"report\": {\n"
                "    \"class\": \"k-potent\",\n"
                "    \"k\": 4,\n"
                "    \"s\": null,\n"
                "    \"route\": \"trace-order\",\n"
                "    \"witnesses\": {\n"
                "      \"theta\": 3\n"
                "    },\n"
                "    \"trace\": 4,\n"
                "    \"norm\": 0\n"
                "  }\n"
                "}\n",
                "classify --json matches the schema");

    check_error("classify --p 30 --t 2 --elem 1,0,0,0", 1, "not an odd prime",
                "a composite modulus is a domain error");
    check_error("classify --p 5 --t 2 --elem 1,x,3,4", 2, "",
                "a malformed element is a usage error");

    {
        Result r = run("enumerate --p 3 --t 2");
        bool ok = r.code == 0 &&
                  r.out.find("census p=3 t=2\n") != std::string::npos &&
                  r.out.find("total: 81\n") != std::string::npos &&
                  r.out.find("nilpotent: 8\n") != std::string::npos &&
                  r.out.find("  k=2: 13\n") != std::string::npos &&
                  r.out.find("unclassified: 0\n") != std::string::npos;
        check(ok, "enumerate reports the census", r.out);
    }
    check_error("enumerate --p 13 --t 4", 1, "exceeds",
                "an oversized space is refused");

    check_exact("order --p 5 --a 2", 0, "4\n", "order of 2 mod 5");
    check_error("order --p 5 --a 0", 1, "", "order of 0 is a domain error");
    check_exact("two-squares --p 7 --a 3", 0, "3 = 1^2 + 3^2 (mod 7)\n",
                "two-square split of 3 mod 7");
    check_exact("pisano --p 3", 0, "8\n", "pisano period of 3");
    check_exact("pisano --p 2", 0, "3\n", "pisano period of 2");

    {
        Result a = run("fib-ring --p 3");
        Result b = run("fib-ring --p 3");
        bool ok = a.code == 0 && a.out == b.out &&
                  a.out.find("p=3 pisano=8 distinct=8") != std::string::npos &&
                  a.out.find("F6 = 2+i+k") != std::string::npos &&
                  a.out.find("norm identity: ok") != std::string::npos &&
                  a.out.find("closure: closed") != std::string::npos &&
                  a.out.find("multiplication table:") != std::string::npos;
        check(ok, "fib-ring prints the full study deterministically", a.out);
    }
    check_error("fib-ring --p 5", 1, "not closed",
                "closure failure is reported as a domain error");

    {
        Result a = run("keygen --p 29 --t 2 --seed 7");
        Result b = run("keygen --p 29 --t 2 --seed 7");
        Result c = run("keygen --p 29 --t 2 --seed 8");
        bool ok = a.code == 0 && a.out == b.out && a.out != c.out &&
                  a.out.rfind("29,2:", 0) == 0;
        if (ok) {
            std::string line = a.out.substr(0, a.out.find('\n'));
            try {
                cdzp::CipherKey key = cdzp::CipherKey::parse(line);
                ok = key.q().norm().value() != 0;
            } catch (const cdzp::Error&) {
                ok = false;
            }
        }
        check(ok, "keygen is deterministic per seed and yields a usable key",
              a.out + c.out);
    }

    check_exact("encrypt --key '29,2:18,8,13,4' --text MATHEMATICS", 0,
                ",YHHQCG,K,BF\n", "worked encryption");
    check_exact("decrypt --key '29,2:18,8,13,4' --text ',YHHQCG,K,BF'", 0,
                "MATHEMATICSA\n", "worked decryption");
    check_error("decrypt --key '29,2:18,8,13,4' --text ABC", 1,
                "not a multiple of the block size",
                "a ragged ciphertext is a domain error");
    check_error("encrypt --key '29,2:18,8,13,4' --text mathematics", 1,
                "not in the alphabet", "unknown symbols are domain errors");
    check_error("encrypt --key '29,2:18,8,13' --text MATH", 2, "",
                "a malformed key is a usage error");
    check_error("encrypt --key '29,4:" + std::string(
                    "1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0") + "' --text MATH",
                1, "not supported", "a level-four key is refused");

    check_exact("tables --p 3 --t 1", 0,
                "basis products p=3 t=1 deltas=2\n"
                "  | 1 i\n"
                "1 | 1 i\n"
                "i | i 2\n",
                "basis table of the two-dimensional algebra");

    std::cout << (g_failures == 0 ? "all cli checks passed\n"
                                  : "cli checks FAILED\n");
    return g_failures == 0 ? 0 : 1;
}
