// ricbound command line front end.
//
//   ricbound report <config>
//   ricbound sweep  <config>
//   ricbound verify <config> [--seed N]
//
// Exit codes: 0 success, 1 config error, 2 numerical failure,
// 3 verification failure.

#include "ricbound/runner.hpp"

#include <charconv>
#include <cstring>
#include <iostream>
#include <string>

namespace {

void usage(std::ostream& out) {
    out << "usage: ricbound report <config>\n"
           "       ricbound sweep  <config>\n"
           "       ricbound verify <config> [--seed N]\n";
}

} // namespace

int main(int argc, char** argv) {
    using namespace ricbound;
    if (argc < 3) {
        usage(std::cerr);
        return 1;
    }
    const std::string cmd = argv[1];
    const std::string config_path = argv[2];
    unsigned seed = 1;
    for (int i = 3; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            const std::string tok = argv[++i];
            const auto [ptr, ec] =
                std::from_chars(tok.data(), tok.data() + tok.size(), seed);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                std::cerr << "error: bad seed '" << tok << "'\n";
                return 1;
            }
        } else {
            std::cerr << "error: unknown argument '" << argv[i] << "'\n";
            usage(std::cerr);
            return 1;
        }
    }

    RunConfig cfg;
    try {
        cfg = parse_config_file(config_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    cfg.seed = seed;

    try {
        if (cmd == "report") {
            std::cout << render_report(cfg);
            return 0;
        }
        if (cmd == "sweep") {
            std::cout << render_sweep(cfg);
            return 0;
        }
        if (cmd == "verify") {
            const VerifyResult res = run_verify(cfg);
            std::cout << res.summary();
            return res.all_passed() ? 0 : 3;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: unknown command '" << cmd << "'\n";
    usage(std::cerr);
    return 1;
}
