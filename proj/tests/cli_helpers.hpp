#pragma once

// Drives the installed CLI binary through popen. The binary path comes
// from the TCC_CLI environment variable (set by ctest), with a build-tree
// fallback for manual runs.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace cli {

inline std::string binary_path() {
    const char *env = std::getenv("TCC_CLI");
    return env ? env : "./tools/tcc";
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

inline RunResult run(const std::string &args) {
    std::string cmd = binary_path() + " " + args + " 2>/dev/null";
    RunResult res;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

inline std::string write_temp(const std::string &name, const std::string &content) {
    std::string path = std::string("cli_tmp_") + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

} // namespace cli
