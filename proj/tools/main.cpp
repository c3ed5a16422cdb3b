// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return intdec::cli::run(args, std::cin, std::cout, std::cerr);
}
