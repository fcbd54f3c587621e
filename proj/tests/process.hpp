/* Copyright 2026 The bchcoeff Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Drives the bchtool binary as a subprocess.

#ifndef BCH_TESTS_PROCESS_HPP
#define BCH_TESTS_PROCESS_HPP

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace bch::testing {

struct ProcessResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline ProcessResult run_tool(const std::string& args) {
    const auto err_path = std::filesystem::temp_directory_path() /
                          ("bchtool_stderr_" + std::to_string(::getpid()) + ".txt");
    const std::string command = std::string(BCHTOOL_PATH) + " " + args + " 2>" + err_path.string();
    ProcessResult result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), n);
    }
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(err_path);
    std::ostringstream text;
    text << err.rdbuf();
    result.err = text.str();
    std::filesystem::remove(err_path);
    return result;
}

}  // namespace bch::testing

#endif  // BCH_TESTS_PROCESS_HPP
