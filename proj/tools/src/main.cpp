// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#include <cstdlib>
#include <iostream>

#include "limbscrew_cli/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return limbscrew::cli::run(argc, argv, std::cin, std::cout, std::cerr,
                             std::getenv("LIMB_THREADS"));
}
