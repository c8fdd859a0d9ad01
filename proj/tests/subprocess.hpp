#pragma once

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace subprocess {

struct Result {
    int exit_code = -1;
    std::string output;  // stdout only
};

inline Result run(const std::string& command) {
    Result r;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed: " + command);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Path of the pcv binary: $PCV_CLI, with fallbacks for in-tree runs.
inline std::string cli_path() {
    if (const char* env = std::getenv("PCV_CLI")) return env;
    for (const char* guess : {"./build/tools/pcv", "../tools/pcv", "tools/pcv"}) {
        if (FILE* f = std::fopen(guess, "r")) {
            std::fclose(f);
            return guess;
        }
    }
    throw std::runtime_error("pcv binary not found; set PCV_CLI");
}

}  // namespace subprocess
