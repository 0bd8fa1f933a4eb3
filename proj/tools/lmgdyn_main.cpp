#include <iostream>
#include <vector>

#include "lmg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const lmg::CliParse parsed = lmg::parse_command_line(args);
        if (parsed.exit_code >= 0) {
            (parsed.exit_code == 0 ? std::cout : std::cerr) << parsed.message << "\n";
            return parsed.exit_code;
        }

        const lmg::RunResult result = lmg::run(parsed.config);
        if (parsed.config.mode == lmg::Mode::validate) {
            for (const auto& suite : result.suites) {
                std::cout << "suite " << suite.name << ": " << suite.passed << " passed, "
                          << suite.failed << " failed\n";
            }
            std::cout << "all validation suites passed\n";
        } else {
            std::cout << "wrote " << result.csv_path << " and " << result.meta_path << "\n";
        }
        return 0;
    } catch (const lmg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const lmg::NumericalError& e) {
        std::cerr << "numerical invariant violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
