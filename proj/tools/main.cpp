// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return mwmcds::cli::run_cli(argc, argv, std::cout, std::cerr); }
