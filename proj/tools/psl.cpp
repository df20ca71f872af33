// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include <psl/cli/app.hpp>


int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return psl::cli::run(args, std::cout, std::cerr);
}
