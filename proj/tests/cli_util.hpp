#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace testing_helpers {

struct CliResult {
    int exit_code = -1;
    std::string output;

    std::vector<std::string> lines() const {
        std::vector<std::string> out;
        size_t start = 0;
        while (start < output.size()) {
            size_t end = output.find('\n', start);
            if (end == std::string::npos) end = output.size();
            if (end > start) out.push_back(output.substr(start, end - start));
            start = end + 1;
        }
        return out;
    }
};

// Runs `command` through the shell, capturing stdout (+ stderr if merged).
inline CliResult run_cli(const std::string& command, bool merge_stderr = false) {
    std::string full = command + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) throw std::runtime_error("failed to spawn: " + full);
    CliResult result;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace testing_helpers
