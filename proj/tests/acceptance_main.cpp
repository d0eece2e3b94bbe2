// Acceptance suite: runs every verification check at its stated tolerance
// and prints one PASS/FAIL line per check. Exit status is nonzero if any
// check fails.

#include <cstring>
#include <iostream>

#include "qinv/verify.hpp"

#ifndef QINV_DATA_DIR
#define QINV_DATA_DIR "data"
#endif

int main(int argc, char** argv) {
    qinv::VerifyOptions opt;
    opt.data_dir = QINV_DATA_DIR;
    for (int t = 1; t < argc; ++t) {
        if (std::strcmp(argv[t], "--quick") == 0) opt.quick = true;
        if (std::strcmp(argv[t], "--data") == 0 && t + 1 < argc) opt.data_dir = argv[++t];
    }
    const auto results = qinv::run_verification(opt);
    qinv::print_report(results, std::cout);
    return qinv::all_passed(results) ? 0 : 1;
}
