// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>


namespace psl::cli {


enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_ingestion = 2,
    exit_breakdown = 3,
    exit_runtime = 4,
};


/**
 * Runs one command line. `args` excludes the program name.
 *
 * The report goes to `out` (or the --out file) only once it is complete;
 * diagnostics go to `err` as a single line.
 */
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);


}  // namespace psl::cli
