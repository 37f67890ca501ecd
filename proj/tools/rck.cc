/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "cli/cli.hh"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::ios::sync_with_stdio(false);
    return rck::cli::main_with_streams(argc, argv, std::cin, std::cout, std::cerr);
}
