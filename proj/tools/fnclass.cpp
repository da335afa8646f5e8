#include <iostream>

#include "fnclass/cli.hpp"

int main( int argc, char** argv )
{
  return fnclass::run_cli( argc, argv, std::cout, std::cerr );
}
