// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "conedepth/cli.hpp"

int main(int argc, char** argv) { return conedepth::cli::run(argc, argv, std::cout, std::cerr); }
