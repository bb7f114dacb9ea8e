#include "cli.hpp"

namespace pkahler::cli {

int run(const std::vector<std::string>& args, std::string& out, std::string& err) {
    (void)args;
    out = "{}";
    err = "pkahler: not wired up yet";
    return 1;
}

}  // namespace pkahler::cli
