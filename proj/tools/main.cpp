#include "cli_commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const auto result = expsolve::cli::run(std::vector<std::string>(argv + 1, argv + argc));
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
