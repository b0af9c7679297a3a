// Runs the ten acceptance criteria and prints one line per criterion.

#include <iostream>

#include "tamellc/selftest.hpp"

int main() {
    int failed = 0;
    for (int id = 1; id <= 10; ++id) {
        auto r = tamellc::run_criterion(id);
        std::cout << tamellc::format_result(r) << std::endl;
        failed += !r.pass;
    }
    std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
    return failed ? 1 : 0;
}
