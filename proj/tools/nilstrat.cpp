#include <iostream>
#include <string>
#include <vector>

#include <nilstrat/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nilstrat::cli::run(args, std::cin, std::cout, std::cerr);
}
