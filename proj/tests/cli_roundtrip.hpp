#pragma once

// Runs the CLI as a subprocess: `after` on (T, q) must print the same
// document as `list` on the edited text.

#include <array>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"

namespace mups::testing {

struct CommandResult {
    int status = -1;
    std::string out;
};

inline CommandResult run_command(const std::string& cmd) {
    CommandResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    r.status = ::pclose(pipe);
    return r;
}

struct RoundTripReport {
    int trials = 0;
    int failures = 0;
    std::string first_failure;
};

// Texts use lowercase letters only, so they need no shell quoting.
inline RoundTripReport cli_round_trip(const std::string& cli, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RoundTripReport rep;
    const int sigmas[] = {2, 3, 4, 26};
    for (int k = 0; k < trials; ++k) {
        const int sigma = sigmas[k % 4];
        const int n = std::uniform_int_distribution<int>(1, 60)(rng);
        std::string t(static_cast<std::size_t>(n), 'a');
        for (auto& ch : t) ch = static_cast<char>('a' + std::uniform_int_distribution<int>(0, sigma - 1)(rng));
        const int pos = std::uniform_int_distribution<int>(1, n)(rng);
        char to = t[static_cast<std::size_t>(pos - 1)];
        while (to == t[static_cast<std::size_t>(pos - 1)])
            to = static_cast<char>('a' + std::uniform_int_distribution<int>(0, std::min(sigma, 25))(rng));
        std::string edited = t;
        edited[static_cast<std::size_t>(pos - 1)] = to;

        ++rep.trials;
        const std::string query = " --text " + t + " --pos " + std::to_string(pos) + " --to " + std::string(1, to);
        bool ok = true;
        for (const std::string fmt : {"", " --json"}) {
            const CommandResult after = run_command(cli + " after" + query + fmt);
            const CommandResult list = run_command(cli + " list --text " + edited + fmt);
            ok = ok && after.status == 0 && list.status == 0 && after.out == list.out;
            if (ok && !fmt.empty())
                ok = nlohmann::json::parse(after.out) == nlohmann::json::parse(list.out);
        }
        if (!ok) {
            ++rep.failures;
            if (rep.first_failure.empty()) rep.first_failure = "after" + query;
        }
    }
    return rep;
}

}  // namespace mups::testing
