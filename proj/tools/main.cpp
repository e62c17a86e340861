#include <string>
#include <vector>

#include "conespan/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return conespan::run_command(args);
}
