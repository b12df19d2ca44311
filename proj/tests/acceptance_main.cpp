// Runs the acceptance criteria and prints one line per criterion.
//   hypmix_acceptance_tests [id ...]
#include <hypmix/acceptance/suite.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    hypmix::acceptance::SuiteOptions options;
    for (int i = 1; i < argc; ++i) options.only.push_back(std::atoi(argv[i]));
    bool ok = true;
    for (const auto& r : hypmix::acceptance::run_suite(options)) {
        std::cout << hypmix::acceptance::format_line(r) << std::endl;
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}
