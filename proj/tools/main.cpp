#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string out, err;
    int code = pkahler::cli::run(args, out, err);
    if (!out.empty()) std::cout << out << std::endl;
    if (!err.empty()) std::cerr << err << std::endl;
    return code;
}
